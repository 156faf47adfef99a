#pragma once

// Exact arithmetic and deformation parameters
#include "qnat/scalar.hpp"
#include "qnat/params.hpp"
#include "qnat/qcore.hpp"

// Series, special functions, time-domain expressions
#include "qnat/series.hpp"
#include "qnat/time_expr.hpp"
#include "qnat/qcalculus.hpp"

// Transform domain
#include "qnat/polynomial.hpp"
#include "qnat/rational_fn.hpp"
#include "qnat/transform.hpp"
#include "qnat/inverse.hpp"

// Solver and numeric cross-checks
#include "qnat/ode.hpp"
#include "qnat/oracle.hpp"

// Serialization and self-checks
#include "qnat/json_io.hpp"
#include "qnat/checks.hpp"
