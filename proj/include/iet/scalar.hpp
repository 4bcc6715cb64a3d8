#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace iet {

/// Exact rational. GMP keeps results canonical (reduced, positive denominator)
/// only if the operands are; mpq_class(p, q) does not reduce, so every public
/// entry point passes its inputs through canonical().
using Scalar = mpq_class;

/// Floating mirror used only for parameter grids and diagnostic summaries.
using ApproxScalar = double;

/// Parses "p/q", an integer, or a finite decimal literal ("-0.25", "1e-3").
/// Decimals are converted exactly as written, not through binary floating point.
Scalar parse_scalar(std::string_view text);

/// Comma separated list of scalars, e.g. "1,1597/987".
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Exact value of a finite double. Throws InvalidInput for NaN or infinity.
Scalar from_double(ApproxScalar value);

ApproxScalar to_double(const Scalar& value);

/// Always "p/q", including integers ("2/1"), so serialized output has one shape.
std::string to_string(const Scalar& value);

Scalar sum(std::span<const Scalar> values);

Scalar canonical(Scalar value);
std::vector<Scalar> canonical(std::vector<Scalar> values);

}  // namespace iet
