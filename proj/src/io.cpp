#include "tpnf/io.hpp"

#include <string>

#include "tpnf/errors.hpp"

namespace tpnf {

using nlohmann::json;

namespace {

int read_int(const json& node, const std::string& where) {
  if (!node.is_number_integer()) throw InputError(where + ": expected an integer");
  return node.get<int>();
}

Scalar read_rational(const json& node, const std::string& where) {
  if (!node.is_string()) throw InputError(where + ": expected a rational string");
  try {
    return parse_scalar(node.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Entry> read_entries(const json& list, int dim, const std::string& name) {
  if (!list.is_array()) throw InputError(name + ": expected an array");
  std::vector<Entry> out;
  for (std::size_t p = 0; p < list.size(); ++p) {
    const std::string where = name + "[" + std::to_string(p) + "]";
    const json& item = list[p];
    if (!item.is_object()) throw InputError(where + ": expected an object");
    Entry e;
    int* slots[3] = {&e.i, &e.j, &e.k};
    const char* keys[3] = {"i", "j", "k"};
    for (int q = 0; q < 3; ++q) {
      if (!item.contains(keys[q])) throw InputError(where + ": missing '" + keys[q] + "'");
      *slots[q] = read_int(item[keys[q]], where + "." + keys[q]);
      if (*slots[q] < 1 || *slots[q] > dim) {
        throw InputError(where + "." + keys[q] + ": index " + std::to_string(*slots[q]) +
                         " outside 1.." + std::to_string(dim));
      }
    }
    if (!item.contains("c")) throw InputError(where + ": missing 'c'");
    e.c = read_rational(item["c"], where + ".c");
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

BilinearMap AlgebraDocument::dot_map() const { return make_bilinear_map(dim, dot); }

BilinearMap AlgebraDocument::bracket_map() const {
  if (!bracket) return BilinearMap(dim);
  return make_bilinear_map(dim, *bracket);
}

AlgebraDocument parse_algebra(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("document: expected an object");
  if (!root.contains("dim")) throw InputError("document: missing 'dim'");
  AlgebraDocument doc;
  doc.dim = read_int(root["dim"], "dim");
  if (doc.dim < 1 || doc.dim > kMaxDim) {
    throw InputError("dim: " + std::to_string(doc.dim) + " outside 1.." + std::to_string(kMaxDim));
  }
  doc.dot = root.contains("dot") ? read_entries(root["dot"], doc.dim, "dot") : std::vector<Entry>{};
  if (root.contains("bracket") && !root["bracket"].is_null()) {
    doc.bracket = read_entries(root["bracket"], doc.dim, "bracket");
  }
  if (root.contains("meta")) doc.meta = root["meta"];
  return doc;
}

json to_json(const Scalar& value) { return to_string(value); }

json to_json(const Vector& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

json to_json(const std::vector<Entry>& entries) {
  json out = json::array();
  for (const auto& e : entries) out.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"c", to_string(e.c)}});
  return out;
}

json to_json(const AlgebraDocument& doc) {
  json out;
  out["dim"] = doc.dim;
  out["dot"] = to_json(doc.dot_map().entries());
  if (doc.bracket) out["bracket"] = to_json(doc.bracket_map().entries());
  if (!doc.meta.is_null()) out["meta"] = doc.meta;
  return out;
}

std::string emit(const AlgebraDocument& doc) { return to_json(doc).dump(); }

AlgebraDocument make_document(const BilinearMap& dot, const std::optional<BilinearMap>& bracket,
                              json meta) {
  if (bracket && bracket->dim() != dot.dim()) throw InputError("product and bracket dimensions differ");
  AlgebraDocument doc;
  doc.dim = dot.dim();
  doc.dot = dot.entries();
  if (bracket) doc.bracket = bracket->entries();
  doc.meta = std::move(meta);
  return doc;
}

json to_json(const IdentityReport& report) {
  json out = json::object();
  for (Identity id : {Identity::commutative, Identity::associative, Identity::antisymmetric,
                      Identity::jacobi, Identity::leibniz, Identity::transposed_leibniz,
                      Identity::mixed_trivial}) {
    if (auto flag = report.flag(id)) out[to_string(id)] = *flag;
  }
  json witnesses = json::array();
  for (const auto& w : report.witnesses) {
    json triple = json::array();
    for (int t : w.triple) {
      if (t != 0) triple.push_back(t);
    }
    witnesses.push_back({{"identity", to_string(w.identity)},
                         {"triple", triple},
                         {"residual", to_json(w.residual)}});
  }
  out["witnesses"] = witnesses;
  return out;
}

json to_json(const CanonicalForm& form) {
  json out;
  out["tag"] = to_string(form.tag);
  if (form.tag == CanonicalForm::Tag::s) out["s"] = form.s;
  if (form.modulus) out["modulus"] = to_string(*form.modulus);
  return out;
}

json to_json(const AlphaParams& alpha) { return to_json(alpha.values()); }

json to_json(const ReductionTranscript& transcript) {
  json steps = json::array();
  for (const auto& step : transcript.steps) {
    steps.push_back({{"A", to_json(step.automorphism.values())}, {"alpha", to_json(step.result)}});
  }
  json out;
  out["steps"] = steps;
  if (!transcript.note.empty()) out["note"] = transcript.note;
  return out;
}

json to_json(const SolutionSpace& space) {
  json basis = json::array();
  for (const auto& b : space.basis) basis.push_back(to_json(b.entries()));
  json constraints = json::array();
  for (const auto& p : space.residual_constraints) constraints.push_back(p.to_string());
  json out;
  out["n"] = space.n;
  out["mode"] = space.mode == BracketMode::transposed ? "transposed" : "poisson";
  out["dimension"] = space.dimension();
  out["basis"] = basis;
  out["residual_constraints"] = constraints;
  return out;
}

json to_json(const Family& family) {
  json out;
  out["tag"] = to_string(family.tag);
  if (family.tag == CanonicalForm::Tag::s) out["s"] = family.s;
  out["modulus"] = family.has_modulus;
  out["label"] = family.label;
  return out;
}

json to_json(const IsomorphismResult& result) {
  json out;
  out["isomorphic"] = result.isomorphic;
  out["witness"] = result.witness ? to_json(result.witness->values()) : json(nullptr);
  return out;
}

AlphaParams parse_alpha_list(int n, std::string_view text) {
  if (n < 2) throw InputError("--alpha needs --dim >= 2");
  Vector values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(parse_scalar(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(values.size()) != n - 1) {
    throw InputError("--alpha expects " + std::to_string(n - 1) + " values (alpha_2..alpha_" +
                     std::to_string(n) + "), got " + std::to_string(values.size()));
  }
  return AlphaParams(n, std::move(values));
}

}  // namespace tpnf
