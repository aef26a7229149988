#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parcom/reports.hpp"

namespace {

using parcom::io::json;

// Human-readable summary: scalar fields in full, matrices elided to their
// shape. The JSON report (--json/--out) is the machine artifact.
void print_tree(const json& j, const std::string& prefix) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    if (v.is_object()) {
      print_tree(v, prefix + it.key() + ".");
    } else if (v.is_array()) {
      const bool nested = !v.empty() && v[0].is_array();
      std::cout << "  " << prefix << it.key() << " = ["
                << (nested ? std::to_string(v.size()) + " rows"
                           : std::to_string(v.size()) + " entries")
                << "]\n";
    } else {
      std::cout << "  " << prefix << it.key() << " = " << v.dump() << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for partial comodules over finite-dimensional coalgebras"};
  app.require_subcommand(1);

  bool as_json = false;
  unsigned seed = 1;
  std::string out_path;
  std::string input_path;
  std::string example_name;
  std::vector<std::size_t> dims;
  std::size_t trunc_n = 0;
  bool mutate = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "print the JSON report on stdout");
    sub->add_option("--seed", seed, "seed for any randomized content")->capture_default_str();
    sub->add_option("--out", out_path, "also write the JSON report to this file");
    return sub;
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input_path, "input JSON file")->required();
    return sub;
  };

  CLI::App* v_validate = add_input(add_common(
      app.add_subcommand("validate", "check coalgebra/algebra/bialgebra/Hopf axioms and the dual")));
  CLI::App* v_gpc = add_input(add_common(
      app.add_subcommand("check-gpc", "verify a partial-comodule datum along both routes")));
  CLI::App* v_glob = add_input(add_common(
      app.add_subcommand("globalize", "globalize a datum and emit the certificate")));
  CLI::App* v_induce = add_input(add_common(
      app.add_subcommand("induce", "induce a datum from a counital partial coaction")));
  CLI::App* v_dilate = add_input(add_common(
      app.add_subcommand("dilate", "dilate a partial module and cross-check the globalization")));
  CLI::App* v_parrep = add_input(add_common(
      app.add_subcommand("parrep", "check a partial group representation, S = Z, dilation")));
  CLI::App* v_apc = add_input(add_common(
      app.add_subcommand("apc", "check an algebraic partial comodule and globalize it")));
  CLI::App* v_hopf = add_input(add_common(
      app.add_subcommand("hopf", "check a Hopf partial comodule or a fundamental pair")));
  CLI::App* v_example =
      add_common(app.add_subcommand("example", "run a named built-in example"));
  v_example
      ->add_option("name", example_name,
                   "c2-partial-module | sweedler-trunc | two-dim-coalgebra")
      ->required();
  v_example->add_option("--dims", dims, "family dimensions d-1,d0,d1")->delimiter(',');
  v_example->add_option("--N", trunc_n, "truncation order");
  CLI::App* v_selftest =
      add_common(app.add_subcommand("selftest", "run the deterministic built-in battery"));
  v_selftest->add_flag("--mutate", mutate,
                       "inject a single structure-constant mutation and report the failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    parcom::reports::VerbResult r;
    if (app.got_subcommand(v_validate))
      r = parcom::reports::run_validate(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_gpc))
      r = parcom::reports::run_check_gpc(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_glob))
      r = parcom::reports::run_globalize(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_induce))
      r = parcom::reports::run_induce(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_dilate))
      r = parcom::reports::run_dilate(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_parrep))
      r = parcom::reports::run_parrep(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_apc))
      r = parcom::reports::run_apc(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_hopf))
      r = parcom::reports::run_hopf(parcom::io::load_file(input_path));
    else if (app.got_subcommand(v_example))
      r = parcom::reports::run_example(example_name, dims, trunc_n, seed);
    else
      r = parcom::reports::run_selftest(seed, mutate);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();

    if (!out_path.empty()) parcom::io::save_file(out_path, r.report);
    if (as_json) {
      // byte-identical per (input, seed): no timing or environment fields
      std::cout << r.report.dump(2) << "\n";
    } else {
      std::cout << (r.green ? "ok" : "FAILED") << "  ("
                << r.report.value("verb", std::string("?")) << ", " << ms << " ms)\n";
      print_tree(r.report, "");
    }
    return r.green ? 0 : 1;
  } catch (const parcom::io::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
