// Command-line surface for the Hecke workbench: root datum inspection,
// admissible sets, Hecke products, verification suites and table export.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wb/cache.hpp"
#include "wb/verify.hpp"

namespace {

using namespace wb;

std::vector<Int> parse_primes(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!piece.empty()) out.push_back(std::stoll(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw error("empty prime list");
  return out;
}

int run_verify(const std::string& suite, const std::string& group, Int height,
               const std::string& primes_text, bool no_cache, bool allow_p2,
               bool as_json) {
  AffineWeyl W(build_datum(group));
  VerifyOptions opts;
  opts.height = height;
  opts.primes = parse_primes(primes_text);
  opts.allow_p2 = allow_p2;
  for (Int p : opts.primes)
    PrimeField probe(p, 0, allow_p2);  // rejects p = 2 without the override

  std::filesystem::path cache_dir = WordCache::default_dir();
  if (!no_cache) {
    WordCache cache = WordCache::load(cache_dir, W);
    cache.seed(W);
  }

  std::vector<VerificationReport> reports;
  if (suite == "central") {
    reports.push_back(verify_central(W, opts));
  } else if (suite == "bernstein") {
    reports.push_back(verify_bernstein(W, opts));
  } else if (suite == "monoidal") {
    reports.push_back(verify_monoidal(W, opts));
  } else if (suite == "coxeter") {
    reports.push_back(verify_coxeter(W));
  } else if (suite == "oracles") {
    reports.push_back(verify_oracles(W, opts));
  } else if (suite == "all") {
    reports = verify_all(W, opts);
  } else {
    throw error("unknown suite '" + suite +
                "'; expected central|bernstein|monoidal|coxeter|oracles|all");
  }

  if (!no_cache) {
    WordCache cache = WordCache::load(cache_dir, W);
    cache.absorb(W);
    cache.save(cache_dir);
  }

  bool all_pass = true;
  if (as_json) {
    Json arr = Json::array();
    for (const VerificationReport& r : reports) {
      arr.push_back(r.to_json());
      all_pass = all_pass && r.passed();
    }
    std::cout << arr.dump(1) << "\n";
  } else {
    for (const VerificationReport& r : reports) {
      std::cout << r.to_text();
      all_pass = all_pass && r.passed();
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hecke workbench: extended affine Weyl groups and mod-p Iwahori-Hecke "
      "algebras for split reductive root data.\n"
      "Convention: Iwahori-Matsumoto presentation with T_s^2 = q + (q-1)T_s; "
      "the mod-p specialization sends q to 0 (q is a power of p, p odd). "
      "The affine reflection s0 is t_{-theta_vee} s_theta, so translation "
      "lengths satisfy l(t_mu) = <2rho, mu> on dominants."};
  app.require_subcommand(1);

  // datum
  auto* datum = app.add_subcommand("datum", "list presets or describe one");
  datum->require_subcommand(1);
  auto* datum_list = datum->add_subcommand("list", "list supported group labels");
  datum_list->callback([]() {
    for (const std::string& name : wb::preset_names()) std::cout << name << "\n";
  });
  std::string describe_group;
  auto* datum_describe = datum->add_subcommand("describe", "print a root datum as JSON");
  datum_describe->add_option("--group", describe_group, "group label")->required();
  datum_describe->callback([&]() {
    std::cout << wb::datum_to_json(wb::build_datum(describe_group)).dump(2) << "\n";
  });

  // adm
  std::string adm_group, adm_mu;
  bool adm_report = false;
  auto* adm = app.add_subcommand("adm", "mu-admissible set of the extended affine Weyl group");
  adm->add_option("--group", adm_group, "group label")->required();
  adm->add_option("--mu", adm_mu, "dominant cocharacter, e.g. 1,0")->required();
  adm->add_flag("--report", adm_report, "print the (element, length) strata table");
  adm->callback([&]() {
    wb::AffineWeyl W(wb::build_datum(adm_group));
    wb::Vec mu = wb::parse_cochar(adm_mu);
    auto rows = W.a_mu_report(mu);
    std::cout << "|Adm(" << wb::cochar_to_string(mu) << ")| = " << rows.size()
              << ", max length = " << (rows.empty() ? 0 : rows.back().second) << "\n";
    if (adm_report) {
      std::cout << "element,length\n";
      for (const auto& [w, len] : rows)
        std::cout << wb::element_to_string(W, w) << "," << len << "\n";
    } else {
      for (const auto& [w, len] : rows)
        std::cout << wb::element_to_string(W, w) << "\n";
    }
  });

  // mul
  std::string mul_group, mul_lhs, mul_rhs;
  Int mul_p = 0, mul_q = 0;
  bool mul_json = false, mul_allow_p2 = false;
  auto* mul = app.add_subcommand("mul", "multiply two Hecke elements");
  mul->add_option("--group", mul_group, "group label")->required();
  mul->add_option("--p", mul_p, "odd prime; omit for generic Z[q] coefficients");
  mul->add_option("--q", mul_q, "image of q in F_p (default 0)");
  mul->add_option("--lhs", mul_lhs, "left factor, e.g. 'T[s0 s1] + (q-1)*T[s0]'")->required();
  mul->add_option("--rhs", mul_rhs, "right factor")->required();
  mul->add_flag("--json", mul_json, "print the product as JSON");
  mul->add_flag("--allow-p2", mul_allow_p2, "permit p = 2 (outside the p > 2 hypothesis)");
  mul->callback([&]() {
    wb::AffineWeyl W(wb::build_datum(mul_group));
    if (mul_p == 0) {
      wb::HeckeAlgebra<wb::GenericQ> H(W, wb::GenericQ{});
      auto prod = H.mul(wb::parse_hecke(H, mul_lhs), wb::parse_hecke(H, mul_rhs));
      if (mul_json)
        std::cout << wb::hecke_to_json(H, prod).dump(1) << "\n";
      else
        std::cout << wb::hecke_to_string(H, prod) << "\n";
    } else {
      wb::PrimeField ring(mul_p, mul_q, mul_allow_p2);
      wb::HeckeAlgebra<wb::PrimeField> H(W, ring);
      auto prod = H.mul(wb::parse_hecke(H, mul_lhs), wb::parse_hecke(H, mul_rhs));
      if (mul_json)
        std::cout << wb::hecke_to_json(H, prod).dump(1) << "\n";
      else
        std::cout << wb::hecke_to_string(H, prod) << "\n";
    }
  });

  // verify
  std::string verify_suite, verify_group, verify_primes = "3,5";
  Int verify_height = 6;
  bool verify_no_cache = false, verify_allow_p2 = false, verify_json = false;
  int verify_exit = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite (exit 0 iff all pass)");
  verify->add_option("suite", verify_suite,
                     "central|bernstein|monoidal|coxeter|oracles|all")->required();
  verify->add_option("--group", verify_group, "group label")->required();
  verify->add_option("--height", verify_height, "bound on <2rho, mu> (default 6)");
  verify->add_option("--primes", verify_primes, "comma-separated odd primes (default 3,5)");
  verify->add_flag("--no-cache", verify_no_cache, "do not read or write the word cache");
  verify->add_flag("--allow-p2", verify_allow_p2, "permit p = 2 (outside the p > 2 hypothesis)");
  verify->add_flag("--json", verify_json, "print reports as JSON");
  verify->callback([&]() {
    verify_exit = run_verify(verify_suite, verify_group, verify_height, verify_primes,
                             verify_no_cache, verify_allow_p2, verify_json);
  });

  // export
  std::string exp_table, exp_format = "csv", exp_group, exp_mu, exp_out;
  Int exp_height = 6;
  auto* exp = app.add_subcommand("export", "write a deterministic table (csv or json)");
  exp->add_option("--table", exp_table, "adm-sizes|strata|matrix")->required();
  exp->add_option("--format", exp_format, "csv|json (default csv)");
  exp->add_option("--group", exp_group, "group label")->required();
  exp->add_option("--height", exp_height, "grid bound for adm-sizes and matrix");
  exp->add_option("--mu", exp_mu, "cocharacter for the strata table");
  exp->add_option("--out", exp_out, "output file (default stdout)");
  exp->callback([&]() {
    wb::AffineWeyl W(wb::build_datum(exp_group));
    std::optional<wb::Vec> mu;
    if (!exp_mu.empty()) mu = wb::parse_cochar(exp_mu);
    std::string text = wb::export_table(W, exp_table, exp_format, exp_height,
                                        mu ? &*mu : nullptr);
    if (exp_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(exp_out);
      if (!out) throw wb::error("cannot open output file " + exp_out);
      out << text;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return verify_exit;
}
