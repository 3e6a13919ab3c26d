#include "tpnf/polynomial.hpp"

#include <algorithm>

#include "tpnf/errors.hpp"

namespace tpnf {

Polynomial Polynomial::constant(const Scalar& c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(int index) {
  if (index < 1) throw InputError("variable indices start at 1");
  Polynomial p;
  p.add_term({index}, 1);
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

int Polynomial::max_variable() const {
  int v = 0;
  for (const auto& [m, c] : terms_) {
    if (!m.empty()) v = std::max(v, m.back());
  }
  return v;
}

void Polynomial::add_term(Monomial m, const Scalar& c) {
  if (sgn(c) == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Scalar Polynomial::evaluate(const Vector& point) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (int var : m) {
      if (var > static_cast<int>(point.size())) throw InputError("point has too few coordinates");
      v *= point[var - 1];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(c);
    for (int var : m) {
      if (var > static_cast<int>(images.size())) throw InputError("missing substitution image");
      term = term * images[var - 1];
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Scalar inv = 1 / terms_.begin()->second;
  return inv * *this;
}

Matrix Polynomial::quadratic_form(int vars) const {
  Matrix m(vars, vars);
  for (const auto& [mono, c] : terms_) {
    if (mono.size() != 2) throw InputError("not a homogeneous quadratic");
    int a = mono[0];
    int b = mono[1];
    if (a > vars || b > vars) throw InputError("variable index exceeds form size");
    if (a == b) {
      m(a, a) += c;
    } else {
      Scalar half = c / 2;
      m(a, b) += half;
      m(b, a) += half;
    }
  }
  return m;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t p = 0; p < m.size();) {
      std::size_t q = p;
      while (q < m.size() && m[q] == m[p]) ++q;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(m[p]);
      if (q - p > 1) mono += "^" + std::to_string(q - p);
      p = q;
    }
    if (mono.empty()) {
      out += tpnf::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += tpnf::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& s, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
  return out;
}

}  // namespace tpnf
