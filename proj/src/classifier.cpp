#include "tpnf/classifier.hpp"

#include <stdexcept>

#include "tpnf/errors.hpp"

namespace tpnf {

AlphaParams transform_params(const AlphaParams& alpha, const AutomorphismParams& a) {
  if (alpha.has_nonzero_alpha1()) throw InputError("cannot transform parameters with alpha_1 != 0");
  const int n = alpha.n();
  if (a.size() != n) throw InputError("automorphism parameter count does not match n");
  const Matrix phi = automorphism_matrix(a, n);

  Vector out = zero_vector(n - 1);
  for (int t = 2; t <= n; ++t) {
    // sum_{j=2}^{t} sum_{i=1}^{t-j+1} (t - 2i - j + 3) A_i (sum_{k1+k2=t-i-j+3} A_k1 A_k2) alpha_j
    Scalar rhs = 0;
    for (int j = 2; j <= t; ++j) {
      if (sgn(alpha[j]) == 0) continue;
      for (int i = 1; i <= t - j + 1; ++i) {
        const int weight = t - 2 * i - j + 3;
        if (weight == 0 || sgn(a[i]) == 0) continue;
        Scalar pairs = composition_sum(a, 2, t - i - j + 3);
        if (sgn(pairs) == 0) continue;
        rhs += Scalar(weight) * a[i] * pairs * alpha[j];
      }
    }
    // Left side: sum_{i=2}^{t} (compositions of t into i parts) alpha'_i.
    for (int i = 2; i < t; ++i) rhs -= phi(t, i) * out[i - 2];
    out[t - 2] = rhs / phi(t, t);
  }
  return AlphaParams(n, std::move(out));
}

std::optional<int> first_nonzero(const AlphaParams& alpha) {
  for (int t = 2; t <= alpha.n(); ++t) {
    if (sgn(alpha[t]) != 0) return t;
  }
  return std::nullopt;
}

bool ReductionTranscript::replays_from(const AlphaParams& start) const {
  AlphaParams current = start;
  for (const auto& step : steps) {
    current = transform_params(current, step.automorphism);
    if (!(current == step.result)) return false;
  }
  return true;
}

Matrix ReductionTranscript::composite(int n) const {
  Matrix m = Matrix::identity(n);
  for (const auto& step : steps) m = m * automorphism_matrix(step.automorphism, n);
  return m;
}

std::pair<AlphaParams, ReductionTranscript> shift_reduce(const AlphaParams& alpha) {
  auto s = first_nonzero(alpha);
  if (!s) throw InputError("shift_reduce needs a nonzero parameter vector");
  const int n = alpha.n();
  AlphaParams current(n, alpha.values());
  ReductionTranscript transcript;

  for (int t = *s + 1; t <= n; ++t) {
    if (sgn(current[t]) == 0) continue;
    const int k = t - *s + 1;
    auto target = [&](const Scalar& x) {
      return transform_params(current, AutomorphismParams::shift(n, k, x))[t];
    };
    const Scalar f0 = current[t];
    const Scalar slope = target(1) - f0;
    if (target(2) - f0 != 2 * slope) {
      throw std::logic_error("elimination target is not affine in the shift parameter");
    }
    if (sgn(slope) == 0) continue;
    const Scalar x = -f0 / slope;
    AutomorphismParams step = AutomorphismParams::shift(n, k, x);
    current = transform_params(current, step);
    if (sgn(current[t]) != 0) throw std::logic_error("elimination step left a nonzero target");
    transcript.steps.push_back(ReductionStep{step, current});
  }

  for (int t = *s + 1; t <= n; ++t) {
    const bool may_survive = *s >= 4 && t == 2 * *s - 3;
    if (!may_survive && sgn(current[t]) != 0) {
      throw std::logic_error("shift reduction left alpha_" + std::to_string(t) + " nonzero");
    }
  }
  return {current, transcript};
}

std::string to_string(CanonicalForm::Tag tag) {
  switch (tag) {
    case CanonicalForm::Tag::trivial: return "Trivial";
    case CanonicalForm::Tag::s2: return "S2";
    case CanonicalForm::Tag::s3: return "S3";
    case CanonicalForm::Tag::s: return "S";
  }
  return "?";
}

std::pair<CanonicalForm, ReductionTranscript> classify(const AlphaParams& alpha) {
  if (alpha.has_nonzero_alpha1()) throw InputError("classification requires alpha_1 = 0");
  const int n = alpha.n();
  auto s = first_nonzero(alpha);
  if (!s) return {CanonicalForm{}, ReductionTranscript{}};

  auto [reduced, transcript] = shift_reduce(alpha);
  CanonicalForm form;
  form.s = *s;
  if (*s == 2) {
    form.tag = CanonicalForm::Tag::s2;
    AutomorphismParams scale = AutomorphismParams::scaling(n, 1 / reduced[2]);
    transcript.steps.push_back(ReductionStep{scale, transform_params(reduced, scale)});
  } else if (*s == 3) {
    form.tag = CanonicalForm::Tag::s3;
    form.modulus = reduced[3];
  } else {
    form.tag = CanonicalForm::Tag::s;
    const int partner = 2 * *s - 3;
    if (partner <= n) {
      form.modulus = reduced[partner] / (reduced[*s] * reduced[*s]);
      transcript.note = "alpha_" + std::to_string(*s) +
                        " = 1 needs e_i -> alpha_s^(i/(s-3)) e_i, generally irrational; "
                        "modulus is the scaling invariant alpha_" +
                        std::to_string(partner) + " / alpha_" + std::to_string(*s) + "^2";
    } else {
      transcript.note = "alpha_" + std::to_string(*s) +
                        " = 1 needs e_i -> alpha_s^(i/(s-3)) e_i, generally irrational; "
                        "no modulus survives";
    }
  }
  return {form, transcript};
}

CanonicalForm canonical_form(const AlphaParams& alpha) { return classify(alpha).first; }

std::optional<Scalar> rational_root(const Scalar& x, int k) {
  if (k < 1) throw InputError("root degree must be positive");
  if (sgn(x) == 0) return Scalar(0);
  if (sgn(x) < 0 && k % 2 == 0) return std::nullopt;
  mpz_class num = abs(x.get_num());
  mpz_class den = x.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  Scalar r(rn, rd);
  r.canonicalize();
  if (sgn(x) < 0) r = -r;
  return r;
}

IsomorphismResult are_isomorphic(const AlphaParams& a, const AlphaParams& b) {
  if (a.n() != b.n()) throw InputError("cannot compare parameters of different dimensions");
  const int n = a.n();
  const CanonicalForm fa = canonical_form(a);
  const CanonicalForm fb = canonical_form(b);
  if (!(fa == fb)) return {false, std::nullopt};
  if (fa.tag == CanonicalForm::Tag::trivial) return {true, AutomorphismParams::identity(n)};

  auto [ra, ta] = shift_reduce(a);
  auto [rb, tb] = shift_reduce(b);
  const int s = fa.s;
  Scalar c = 1;
  if (fa.tag == CanonicalForm::Tag::s2) {
    c = rb[2] / ra[2];
  } else if (fa.tag == CanonicalForm::Tag::s) {
    // alpha_s scales by c^(3-s).
    auto root = rational_root(ra[s] / rb[s], s - 3);
    if (!root) return {true, std::nullopt};
    c = *root;
  }
  auto back = tb.composite(n).inverse();
  if (!back) throw std::logic_error("reduction transcript is not invertible");
  Matrix w = ta.composite(n) * automorphism_matrix(AutomorphismParams::scaling(n, c), n) * *back;
  AutomorphismParams witness = params_of(w);
  if (!(transform_params(a, witness) == b)) {
    throw std::logic_error("assembled isomorphism witness does not map a to b");
  }
  return {true, witness};
}

namespace {

std::string label(int n, const std::vector<std::pair<int, std::string>>& slots) {
  std::vector<std::string> parts(static_cast<std::size_t>(n - 1), "0");
  for (const auto& [t, text] : slots) parts[t - 2] = text;
  std::string out = "TP(";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (p) out += ",";
    out += parts[p];
  }
  return out + ")";
}

}  // namespace

std::vector<Family> classification_table(int n) {
  if (n < 2 || n > kMaxDim) throw InputError("classification needs 2 <= n <= " + std::to_string(kMaxDim));
  using Tag = CanonicalForm::Tag;
  std::vector<Family> out;
  out.push_back(Family{Tag::trivial, 0, false, label(n, {})});
  out.push_back(Family{Tag::s2, 2, false, label(n, {{2, "1"}})});
  if (n >= 3) out.push_back(Family{Tag::s3, 3, true, label(n, {{3, "α"}})});
  for (int s = 4; s <= n; ++s) {
    const bool modulus = 2 * s - 3 <= n;
    std::vector<std::pair<int, std::string>> slots{{s, "1"}};
    if (modulus) slots.emplace_back(2 * s - 3, "α");
    out.push_back(Family{Tag::s, s, modulus, label(n, slots)});
  }
  return out;
}

}  // namespace tpnf
