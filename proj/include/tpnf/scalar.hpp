#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tpnf {

/// Exact rational scalar. gmpxx keeps every value in lowest terms with a
/// positive denominator as long as it is built through parse_scalar or
/// arithmetic on canonical operands.
using Scalar = mpq_class;

/// Coordinate vector; position p holds the coefficient of e_{p+1}.
using Vector = std::vector<Scalar>;

/// Parses `-?[0-9]+(/[1-9][0-9]*)?`. Throws InputError otherwise.
Scalar parse_scalar(std::string_view text);

/// Lowest-terms rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& value);

Vector zero_vector(int dim);
/// e_i in dimension dim (1-based i).
Vector basis_vector(int dim, int i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

}  // namespace tpnf
