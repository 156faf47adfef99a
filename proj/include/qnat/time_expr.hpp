#pragma once

#include "qnat/series.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qnat {

/// Time-domain building blocks. Rates are stored through beta = a^alpha,
/// which is the only form any transform formula consumes; this keeps
/// negative rates rational instead of forcing fractional roots.
enum class AtomKind { power, exp, cap_exp, cos, sin };

inline const char* atom_kind_name(AtomKind k) {
    switch (k) {
        case AtomKind::power: return "power";
        case AtomKind::exp: return "exp";
        case AtomKind::cap_exp: return "cap_exp";
        case AtomKind::cos: return "cos";
        case AtomKind::sin: return "sin";
    }
    return "?";
}

struct TimeAtom {
    AtomKind kind = AtomKind::power;
    int n = 0;      // power atoms: t^(alpha*n)
    Scalar beta;    // all other kinds

    static TimeAtom power(int n) {
        if (n < 0) throw domain_error("TimeAtom: negative power");
        TimeAtom a;
        a.kind = AtomKind::power;
        a.n = n;
        return a;
    }
    static TimeAtom exp(Scalar beta) { return make(AtomKind::exp, std::move(beta)); }
    static TimeAtom cap_exp(Scalar beta) { return make(AtomKind::cap_exp, std::move(beta)); }
    static TimeAtom cos(Scalar beta) { return make(AtomKind::cos, std::move(beta)); }
    static TimeAtom sin(Scalar beta) { return make(AtomKind::sin, std::move(beta)); }

    friend bool operator==(const TimeAtom& a, const TimeAtom& b) {
        if (a.kind != b.kind) return false;
        return a.kind == AtomKind::power ? a.n == b.n : a.beta == b.beta;
    }

private:
    static TimeAtom make(AtomKind k, Scalar beta) {
        TimeAtom a;
        a.kind = k;
        a.beta = std::move(beta);
        return a;
    }
};

struct TimeTerm {
    Scalar coef;
    TimeAtom atom;
};

/// Linear combination of time atoms, kept normalized: terms are merged
/// by atom, zero coefficients dropped, and ordering is canonical.
class TimeExpr {
public:
    TimeExpr() = default;

    static TimeExpr zero() { return TimeExpr(); }

    static TimeExpr single(Scalar coef, TimeAtom atom) {
        TimeExpr e;
        e.add_term(std::move(coef), std::move(atom));
        return e;
    }

    static TimeExpr constant(Scalar c) { return single(std::move(c), TimeAtom::power(0)); }

    void add_term(Scalar coef, TimeAtom atom) {
        if (coef.is_zero()) return;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            if (it->atom == atom) {
                it->coef += coef;
                if (it->coef.is_zero()) terms_.erase(it);
                return;
            }
        }
        terms_.push_back({std::move(coef), std::move(atom)});
        sort_terms();
    }

    void add(const TimeExpr& other) {
        for (const auto& t : other.terms_) add_term(t.coef, t.atom);
        inexact_ = inexact_ || other.inexact_;
    }

    const std::vector<TimeTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Set when a coefficient had to leave exact arithmetic
    /// (e.g. an irrational square root during inversion).
    bool inexact() const { return inexact_; }
    void mark_inexact() { inexact_ = true; }

    friend bool operator==(const TimeExpr& a, const TimeExpr& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].atom == b.terms_[i].atom) || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }

private:
    static int kind_rank(AtomKind k) { return static_cast<int>(k); }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [](const TimeTerm& x, const TimeTerm& y) {
            if (x.atom.kind != y.atom.kind) return kind_rank(x.atom.kind) < kind_rank(y.atom.kind);
            if (x.atom.kind == AtomKind::power) return x.atom.n < y.atom.n;
            return less_for_ordering(x.atom.beta, y.atom.beta);
        });
    }

    std::vector<TimeTerm> terms_;
    bool inexact_ = false;
};

/// Series expansion of a single atom. Atoms carrying float scalars are
/// expanded with explicitly converted parameters.
inline AlphaSeries expand_atom(const TimeAtom& atom, int order, const QParams& p) {
    Mode m = atom.kind == AtomKind::power ? p.mode() : atom.beta.mode();
    if (m == Mode::floating && p.mode() == Mode::exact) {
        QParams pf = QParams::floating(p.q().value(), p.alpha_value());
        return expand_atom(atom, order, pf);
    }
    switch (atom.kind) {
        case AtomKind::power: {
            auto s = AlphaSeries::zero(p, std::max(order, atom.n));
            s.set_coeff(atom.n, p.scalar(1));
            return s;
        }
        case AtomKind::exp: return make_exp_series(atom.beta, order, p);
        case AtomKind::cap_exp: return make_cap_exp_series(atom.beta, order, p);
        case AtomKind::cos: return make_cos_series(atom.beta, order, p);
        case AtomKind::sin: return make_sin_series(atom.beta, order, p);
    }
    throw domain_error("expand_atom: unknown atom kind");
}

/// Expands the whole expression to one series of the given order.
/// Mixed exact/float terms force a float-mode result.
inline AlphaSeries expand(const TimeExpr& expr, int order, const QParams& p) {
    bool any_float = p.mode() == Mode::floating;
    for (const auto& t : expr.terms())
        any_float = any_float || t.coef.mode() == Mode::floating ||
                    (t.atom.kind != AtomKind::power && t.atom.beta.mode() == Mode::floating);
    QParams pe = any_float && p.mode() == Mode::exact
                     ? QParams::floating(p.q().value(), p.alpha_value())
                     : p;
    auto acc = AlphaSeries::zero(pe, order);
    for (const auto& t : expr.terms()) {
        auto part = expand_atom(t.atom, order, pe);
        acc = series_add(acc, series_scale(t.coef.to_mode(pe.mode()), part));
    }
    return acc;
}

/// Atom-wise numeric evaluation (each atom through its own series).
inline EvalReport eval_time_expr(const TimeExpr& expr, double t, const QParams& p,
                                 int order = kDefaultOrder, double tol = 1e-12) {
    EvalReport total;
    total.converged = true;
    for (const auto& term : expr.terms()) {
        auto r = series_eval(expand_atom(term.atom, order, p), t, tol);
        total.value += term.coef.value() * r.value;
        total.tail += std::fabs(term.coef.value()) * r.tail;
        total.converged = total.converged && r.converged;
        total.terms += r.terms;
    }
    return total;
}

} // namespace qnat
