#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qnat {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact and floating values were mixed in one computation, or an exact
/// operation was requested that the active mode cannot express.
class mode_error : public error {
public:
    using error::error;
};

/// An argument lies outside an operation's domain.
class domain_error : public error {
public:
    using error::error;
};

/// A truncated sum or product failed to meet its tolerance.
class convergence_error : public error {
public:
    using error::error;
};

/// The input is structurally outside the supported class
/// (unfactorable denominator, repeated pole, improper fraction, ...).
class unsupported_error : public error {
public:
    using error::error;
};

/// Malformed textual or JSON input.
class parse_error : public error {
public:
    using error::error;
};

enum class Mode { exact, floating };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

/// A number tagged as either an exact rational or a double.
///
/// Arithmetic is closed within a mode; combining values of different
/// modes throws mode_error. Conversions are explicit via to_mode().
class Scalar {
public:
    Scalar() : mode_(Mode::exact), rat_(0), flt_(0.0) {}

    static Scalar exact(Rational v) {
        Scalar s;
        s.mode_ = Mode::exact;
        s.rat_ = std::move(v);
        return s;
    }

    static Scalar floating(double v) {
        Scalar s;
        s.mode_ = Mode::floating;
        s.flt_ = v;
        return s;
    }

    /// Integer literal in the requested mode.
    static Scalar integer(long long v, Mode m) {
        return m == Mode::exact ? exact(Rational(v)) : floating(static_cast<double>(v));
    }

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::exact; }

    const Rational& rat() const {
        if (mode_ != Mode::exact) throw mode_error("Scalar: rational view of a float value");
        return rat_;
    }

    /// Double view, valid in either mode.
    double value() const {
        return mode_ == Mode::exact ? rat_.convert_to<double>() : flt_;
    }

    bool is_zero() const { return mode_ == Mode::exact ? rat_.is_zero() : flt_ == 0.0; }

    int sign() const {
        if (mode_ == Mode::exact) return rat_.sign();
        return flt_ > 0 ? 1 : (flt_ < 0 ? -1 : 0);
    }

    Scalar to_mode(Mode m) const {
        if (m == mode_) return *this;
        if (m == Mode::floating) return floating(value());
        throw mode_error("Scalar: implicit float -> exact conversion is not defined");
    }

    Scalar operator-() const {
        return mode_ == Mode::exact ? exact(-rat_) : floating(-flt_);
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "+");
        return a.is_exact() ? exact(a.rat_ + b.rat_) : floating(a.flt_ + b.flt_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "-");
        return a.is_exact() ? exact(a.rat_ - b.rat_) : floating(a.flt_ - b.flt_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "*");
        return a.is_exact() ? exact(a.rat_ * b.rat_) : floating(a.flt_ * b.flt_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "/");
        if (b.is_zero()) throw domain_error("Scalar: division by zero");
        return a.is_exact() ? exact(a.rat_ / b.rat_) : floating(a.flt_ / b.flt_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Values of different modes compare unequal rather than throwing,
    /// so mixed collections can still be deduplicated.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.mode_ != b.mode_) return false;
        return a.is_exact() ? a.rat_ == b.rat_ : a.flt_ == b.flt_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used for canonical term ordering: by numeric value,
    /// exact values before floats on ties.
    friend bool less_for_ordering(const Scalar& a, const Scalar& b) {
        double av = a.value(), bv = b.value();
        if (av != bv) return av < bv;
        if (a.mode_ != b.mode_) return a.mode_ == Mode::exact;
        if (a.is_exact()) return a.rat_ < b.rat_;
        return false;
    }

    std::string str() const {
        if (mode_ == Mode::floating) {
            std::string s = std::to_string(flt_);
            return s;
        }
        std::string s = numerator(rat_).str();
        if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
        return s;
    }

private:
    static void check_modes(const Scalar& a, const Scalar& b, const char* op) {
        if (a.mode_ != b.mode_)
            throw mode_error(std::string("Scalar: mixed ") + mode_name(a.mode_) + "/" +
                             mode_name(b.mode_) + " operands for '" + op + "'");
    }

    Mode mode_;
    Rational rat_;
    double flt_;
};

/// base^e with integer exponent; negative exponents invert.
inline Scalar pow_int(const Scalar& base, long long e) {
    if (e == 0) return Scalar::integer(1, base.mode());
    if (e < 0) return Scalar::integer(1, base.mode()) / pow_int(base, -e);
    Scalar acc = Scalar::integer(1, base.mode());
    Scalar b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ull) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline Rational pow_rat(const Rational& base, long long e) {
    if (e < 0) {
        if (base.is_zero()) throw domain_error("pow_rat: zero to a negative power");
        return Rational(1) / pow_rat(base, -e);
    }
    Rational acc(1), b = base;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ull) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Parses "p/q", "p", or "-p/q" (arbitrary precision).
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den.is_zero()) throw parse_error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational literal '" + text + "': " + e.what());
    }
}

/// Parses a scalar literal for the given mode. Exact mode accepts only
/// integer and p/q forms; float mode additionally accepts decimals.
inline Scalar parse_scalar(const std::string& text, Mode mode) {
    bool rational_form = text.find('.') == std::string::npos &&
                         text.find('e') == std::string::npos &&
                         text.find('E') == std::string::npos;
    if (mode == Mode::exact) {
        if (!rational_form) throw parse_error("exact mode requires p/q literals, got '" + text + "'");
        return Scalar::exact(parse_rational(text));
    }
    if (rational_form) return Scalar::floating(parse_rational(text).convert_to<double>());
    try {
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) throw parse_error("trailing characters in number '" + text + "'");
        return Scalar::floating(v);
    } catch (const std::logic_error&) {
        throw parse_error("bad numeric literal '" + text + "'");
    }
}

/// True when v = (p/q)^2 for rationals; on success root receives the
/// nonnegative exact square root.
inline bool exact_sqrt(const Rational& v, Rational& root) {
    if (v.sign() < 0) return false;
    BigInt n = numerator(v), d = denominator(v);
    BigInt rn = boost::multiprecision::sqrt(n);
    BigInt rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    root = Rational(rn, rd);
    return true;
}

} // namespace qnat
