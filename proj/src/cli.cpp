#include "tpnf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tpnf/errors.hpp"
#include "tpnf/io.hpp"

namespace tpnf {

using nlohmann::json;

namespace {

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read input file '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transposed Poisson structures on null-filiform associative algebras"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("--output", output_path, "Write the JSON result to this file");

  int dim = 0;
  std::string alpha, alpha_a, alpha_b, input, expect, mode;

  auto* mu0 = app.add_subcommand("mu0", "Emit the product of mu_0^n");
  mu0->add_option("--dim", dim, "Dimension n")->required();

  auto* tp = app.add_subcommand("tp", "Emit mu_0^n with the bracket TP(alpha_2..alpha_n)");
  tp->add_option("--dim", dim, "Dimension n")->required();
  tp->add_option("--alpha", alpha, "alpha_2,...,alpha_n")->required();

  auto* verify = app.add_subcommand("verify", "Check identities of an algebra document");
  verify->add_option("--input", input, "Algebra document path, or - for stdin")->required();
  verify->add_option("--expect", expect, "Structure the pair must satisfy")
      ->check(CLI::IsMember({"poisson", "transposed"}));

  auto* solve = app.add_subcommand("solve", "Solve for all compatible brackets on mu_0^n");
  solve->add_option("--dim", dim, "Dimension n (2..10)")->required();
  solve->add_option("--mode", mode, "transposed or poisson")
      ->required()
      ->check(CLI::IsMember({"poisson", "transposed"}));

  auto* classify_cmd = app.add_subcommand("classify", "Canonical form of TP(alpha)");
  classify_cmd->add_option("--dim", dim, "Dimension n")->required();
  classify_cmd->add_option("--alpha", alpha, "alpha_2,...,alpha_n")->required();

  auto* iso = app.add_subcommand("isomorphic", "Decide whether TP(a) and TP(b) are isomorphic");
  iso->add_option("--dim", dim, "Dimension n")->required();
  iso->add_option("--alpha-a", alpha_a, "alpha_2,...,alpha_n of a")->required();
  iso->add_option("--alpha-b", alpha_b, "alpha_2,...,alpha_n of b")->required();

  auto* table = app.add_subcommand("table", "List the isomorphism families for mu_0^n");
  table->add_option("--dim", dim, "Dimension n")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "input", e.what());
    return kExitInputError;
  }

  try {
    json result;
    int code = kExitOk;
    if (*mu0) {
      result = to_json(make_document(build_mu0(dim), std::nullopt, json{{"family", "mu0"}}));
    } else if (*tp) {
      AlphaParams params = parse_alpha_list(dim, alpha);
      result = to_json(make_document(build_mu0(dim), build_tp_bracket(params),
                                     json{{"family", "TP"}, {"alpha", to_json(params)}}));
    } else if (*verify) {
      AlgebraDocument doc = parse_algebra(read_input(input));
      AlgebraPair pair{doc.dot_map(), doc.bracket_map()};
      IdentityReport report = check_all(pair);
      result["checks"] = to_json(report);
      result["poisson"] = is_poisson(report);
      result["transposed_poisson"] = is_transposed_poisson(report);
      if (expect == "poisson" && !is_poisson(report)) code = kExitCheckFailed;
      if (expect == "transposed" && !is_transposed_poisson(report)) code = kExitCheckFailed;
    } else if (*solve) {
      BracketMode m = mode == "poisson" ? BracketMode::poisson : BracketMode::transposed;
      SolutionSpace space = solve_bracket_space(dim, m);
      result = to_json(space);
      auto locus = jacobi_locus(space);
      result["jacobi_locus_dimension"] = locus ? json(locus->size()) : json(nullptr);
    } else if (*classify_cmd) {
      auto [form, transcript] = classify(parse_alpha_list(dim, alpha));
      result["canonical"] = to_json(form);
      result["transcript"] = to_json(transcript);
    } else if (*iso) {
      result = to_json(are_isomorphic(parse_alpha_list(dim, alpha_a), parse_alpha_list(dim, alpha_b)));
    } else if (*table) {
      json families = json::array();
      for (const auto& f : classification_table(dim)) families.push_back(to_json(f));
      result = {{"n", dim}, {"families", families}};
    }

    const std::string text = result.dump() + "\n";
    if (output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(output_path);
      if (!file) throw InputError("cannot write output file '" + output_path + "'");
      file << text;
    }
    return code;
  } catch (const InputError& e) {
    write_error(err, "input", e.what());
    return kExitInputError;
  } catch (const NotInFamilyError& e) {
    write_error(err, "not-in-family", e.what());
    return kExitInputError;
  }
}

}  // namespace tpnf
