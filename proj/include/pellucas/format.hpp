#pragma once

#include <gmpxx.h>

#include <string>

namespace pellucas {

/// Shortest decimal string that round-trips to the same double. Non-finite
/// values print as "inf", "-inf" or "nan".
std::string format_double(double x);

/// Full decimal, "p/q" when the denominator is not one.
std::string format_rational(const mpq_class& q);

/// The double nearest to q (ties to even).
double nearest_double(const mpq_class& q);

}  // namespace pellucas
