#include "tpnf/scalar.hpp"

#include <cctype>

#include "tpnf/errors.hpp"

namespace tpnf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  bool ok = all_digits(num);
  if (ok && slash != std::string_view::npos) {
    std::string_view den = body.substr(slash + 1);
    ok = all_digits(den) && den.front() != '0';
  }
  if (!ok) throw InputError("invalid rational '" + std::string(text) + "'");
  Scalar value(std::string(text), 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(int dim) { return Vector(static_cast<std::size_t>(dim)); }

Vector basis_vector(int dim, int i) {
  if (i < 1 || i > dim) throw InputError("basis index " + std::to_string(i) + " out of range");
  Vector v = zero_vector(dim);
  v[i - 1] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] + b[p];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  Vector r(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) r[p] = a[p] - b[p];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t p = 0; p < v.size(); ++p) r[p] = s * v[p];
  return r;
}

}  // namespace tpnf
