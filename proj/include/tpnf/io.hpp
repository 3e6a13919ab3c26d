#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "tpnf/classifier.hpp"
#include "tpnf/identities.hpp"

namespace tpnf {

/// Wire form of an algebra: 1-based structure constants with exact rational
/// strings.
struct AlgebraDocument {
  int dim = 0;
  std::vector<Entry> dot;
  std::optional<std::vector<Entry>> bracket;
  nlohmann::json meta;  ///< null when absent

  BilinearMap dot_map() const;
  /// Zero bracket when absent.
  BilinearMap bracket_map() const;
};

/// Throws InputError naming the offending location, e.g. "dot[2].c".
AlgebraDocument parse_algebra(std::string_view text);
/// Compact JSON with sorted keys; entries merged, sorted and zero-free.
std::string emit(const AlgebraDocument& doc);
nlohmann::json to_json(const AlgebraDocument& doc);

AlgebraDocument make_document(const BilinearMap& dot, const std::optional<BilinearMap>& bracket,
                              nlohmann::json meta = nullptr);

nlohmann::json to_json(const Scalar& value);
nlohmann::json to_json(const Vector& values);
nlohmann::json to_json(const std::vector<Entry>& entries);
nlohmann::json to_json(const IdentityReport& report);
nlohmann::json to_json(const CanonicalForm& form);
nlohmann::json to_json(const ReductionTranscript& transcript);
nlohmann::json to_json(const SolutionSpace& space);
nlohmann::json to_json(const Family& family);
nlohmann::json to_json(const IsomorphismResult& result);
nlohmann::json to_json(const AlphaParams& alpha);

/// Comma list of rationals for alpha_2..alpha_n; exactly n - 1 entries.
AlphaParams parse_alpha_list(int n, std::string_view text);

}  // namespace tpnf
