#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gk1/suites.hpp"

namespace {

void add_family_options(CLI::App* app, gk1::RunConfig& c) {
  app->add_option("--family", c.family, "taft | liu | dmx | dihedral")->required();
  app->add_option("--n", c.n, "Taft / Liu: order of the root");
  app->add_option("--v", c.v, "Taft: exponent v, 0 <= v < n");
  app->add_option("--omega", c.omega, "Liu: omega");
  app->add_option("--m", c.m, "D: m");
  app->add_option("--d", c.d, "D: d");
  app->add_option("--xi", c.xi, "root of unity as zetaN^t");
  app->add_option("--field", c.field, "order of the working cyclotomic field");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const nlohmann::json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw gk1::UsageError("cannot write " + out);
  f << text;
}

void summarize(const std::vector<gk1::Report>& reports, std::ostream& os) {
  for (const auto& r : reports)
    os << r.suite << " [" << r.family << "] " << r.status() << "  " << r.cases_total - r.cases_failed << "/"
       << r.cases_total << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the Hopf algebra families taft, liu, dmx and dihedral"};
  app.require_subcommand(1);

  gk1::RunConfig cfg;
  std::string suites_arg, out;
  bool no_timing = false;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites on one family");
  add_family_options(verify, cfg);
  verify->add_option("--suites", suites_arg, "comma separated suite ids (default: all)");
  verify->add_option("--l-max", cfg.l_max, "Taft basis bound for hopf-axioms");
  verify->add_option("--j-max", cfg.j_max, "Liu / D basis bound for hopf-axioms");
  verify->add_option("--dual-bound", cfg.dual_bound, "basis bound for dual-lemmas and theta");
  verify->add_option("--pair-bound", cfg.pair_bound, "basis bound for coproduct grids");
  verify->add_option("--word-length", cfg.word_length, "theta word length");
  verify->add_option("--s-max", cfg.s_max, "F2 degree of sampled words");
  verify->add_option("--N", cfg.gram_n, "Gram truncation");
  verify->add_option("--r", cfg.r, "proof-matrix ideal exponent");
  verify->add_option("--lambda", cfg.lambdas, "scalar samples, e.g. 2, 1/2, zeta3^1, 2*zeta6^1")->delimiter(',');
  verify->add_option("--alpha", cfg.alpha, "proof-matrix alpha");
  verify->add_option("--beta", cfg.beta, "proof-matrix beta (Liu)");
  verify->add_option("--out", out, "write the JSON report here instead of stdout");
  verify->add_flag("--no-timing", no_timing, "omit timing fields so reports are byte-identical apart from the timestamp");

  CLI::App* gram = app.add_subcommand("gram", "rank of the truncated pairing matrix");
  add_family_options(gram, cfg);
  gram->add_option("--N", cfg.gram_n, "Gram truncation");
  gram->add_option("--out", out, "write the JSON report here instead of stdout");
  gram->add_flag("--no-timing", no_timing, "omit timing fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.timing = !no_timing;

  try {
    if (gram->parsed()) cfg.suites = {"gram"};
    else cfg.suites = suites_arg.empty() ? gk1::suite_ids() : split_list(suites_arg);
    for (const auto& s : cfg.suites)
      if (!gk1::is_suite_id(s)) throw gk1::UsageError("unknown suite: " + s);

    gk1::FamilySetup setup = gk1::build_family(cfg);
    std::vector<gk1::Report> reports;
    for (const auto& s : cfg.suites) {
      auto rs = gk1::run_suite(s, setup, cfg);
      reports.insert(reports.end(), rs.begin(), rs.end());
    }
    nlohmann::json doc = gk1::make_document(cfg, reports);
    if (gram->parsed()) {
      const auto& d = reports.front().extra;
      doc["full_rank"] = d.value("full_rank", false);
      doc["rank"] = d.value("rank", 0);
    }
    emit(doc, out);
    summarize(reports, out.empty() ? std::cerr : std::cout);
    return doc["status"] == "pass" ? 0 : 1;
  } catch (const gk1::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const gk1::ParamError& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
  } catch (const gk1::ScalarError& e) {
    std::cerr << "invalid scalar: " << e.what() << "\n";
  }
  return 2;
}
