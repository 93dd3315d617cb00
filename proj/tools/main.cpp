#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "modrep/cli.hpp"

namespace {

using modrep::cli::CommandRequest;

void common(CLI::App* sub, CommandRequest& req, bool system_positional) {
  if (system_positional) {
    sub->add_option("system", req.system, "root system, e.g. C4")->required();
    sub->add_option("weight", req.weight, "weight as digits (0001) or comma separated (0,0,0,1)");
  }
  sub->add_option("--format", req.format, "json, tsv or text")->check(CLI::IsMember({"json", "tsv", "text"}));
  sub->add_option("--cap", req.cap, "largest Weyl module dimension to construct");
  sub->add_option("--cache-dir", req.cache_dir, "summary cache directory (default $MODREP_CACHE_DIR)");
  sub->add_flag("--no-cache", req.no_cache, "bypass the summary cache");
  sub->add_flag("--verify-cache", req.verify_cache, "recompute and compare against cached entries");
}

const std::map<std::string, std::string> descriptions = {
    {"roots", "positive roots with coefficients, heights and norms"},
    {"weyl-dim", "dimension of V(lambda) by Weyl's formula"},
    {"weyl-char", "weight multiplicities of V(lambda)"},
    {"simple", "dimension and weights of L(lambda) over F_p"},
    {"decompose", "composition factors [V(lambda) : L(mu)]"},
    {"jantzen", "Jantzen sum formula as Euler characters"},
    {"stabilizer", "exponent vector of the stabilizer of the highest weight line"},
    {"lattice", "character lattice of a standard parabolic subgroup scheme"},
    {"very-ample", "very ampleness of a line bundle on G/P"},
    {"incidence", "cohomology of L(a, b) on the incidence variety in P^n x P^n"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular representations of split reductive groups: Weyl modules, simple modules mod p, "
               "stabilizer exponents and line bundles on an incidence variety"};
  app.require_subcommand(1);
  CommandRequest req;
  long long p = 0;

  for (const auto& name : modrep::cli::subcommands()) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    sub->callback([&req, name] { req.subcommand = name; });
    if (name == "incidence") {
      common(sub, req, false);
      sub->add_option("--n", req.n, "ambient P^n x P^n")->default_val(2);
      sub->add_option("-p,--p", p, "prime")->required();
      sub->add_option("--r", req.r, "Frobenius exponent, q = p^r")->default_val(1);
      sub->add_option("--a", req.a, "first degree")->required();
      sub->add_option("--b", req.b, "second degree")->required();
      sub->add_flag("--oracle", req.oracle, "compute every piece by linear algebra and check h0 by brute force");
      sub->add_flag("--swap", req.swap, "factor-swapped section sum x_i y_i^q");
      continue;
    }
    common(sub, req, true);
    if (name != "roots" && name != "weyl-dim" && name != "weyl-char") sub->add_option("-p,--p", p, "prime");
    if (name == "simple") sub->add_flag("--dump-action", req.dump_action, "print e_i and f_i on L mod p");
    if (name == "jantzen") sub->add_flag("--expand", req.expand, "compare with Gram determinant valuations");
    if (name == "stabilizer")
      sub->add_option("--check-paper-table", req.check_paper_table, "compare with an embedded reference table");
    if (name == "lattice" || name == "very-ample")
      sub->add_option("--exponents", req.exponents, "simple exponents, e.g. 0,inf,1");
    if (name == "very-ample") sub->add_option("--chi", req.chi, "character to test")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (p != 0 || req.subcommand == "incidence") req.p = p;

  try {
    const auto env = modrep::cli::run(req);
    modrep::cli::write_output(std::cout, env, req.format);
    if (req.format == "tsv")
      for (const auto& w : env.warnings) std::cerr << "warning: " << w << "\n";
    return env.exit_code;
  } catch (const modrep::Error& e) {
    if (req.format == "json") std::cout << modrep::cli::error_json(e).dump(2) << "\n";
    std::cerr << "error [" << e.code_name() << "]: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error [internal]: " << e.what() << "\n";
    return 5;
  }
}
