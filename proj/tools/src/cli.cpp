#include "cyclothue/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "cyclothue/equation.hpp"
#include "cyclothue/errors.hpp"
#include "cyclothue/groupring.hpp"
#include "cyclothue/modular.hpp"
#include "cyclothue/numtheory.hpp"
#include "cyclothue/stickelberger.hpp"
#include "cyclothue/verify_suites.hpp"

namespace cyclothue::cli {

namespace {

using json = nlohmann::ordered_json;
using nt::i64;

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int prime_arg(i64 n) {
  if (n < 3 || n > 100000 || !nt::is_prime(static_cast<nt::u64>(n))) {
    throw PreconditionError("--n must be an odd prime below 100000");
  }
  return static_cast<int>(n);
}

json solution_json(const SolutionRecord& r) {
  const bool known = r.B == 17 && r.n == 3 && r.X == 18 && r.Z == 7;
  return json{{"b", r.B},
              {"n", r.n},
              {"x", r.X},
              {"z", r.Z},
              {"trivial", r.trivial},
              {"kind", r.trivial ? "trivial" : (known ? "known_exception" : "solution")}};
}

struct VerifyArgs {
  i64 n = 0;
  std::string suite = "all";
  int max_order = 0;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const int n = prime_arg(a.n);
  const int max_order = a.max_order > 0 ? a.max_order : std::min(6, n - 1);
  std::vector<SuiteCheck> checks;
  if (a.suite == "stickelberger" || a.suite == "all") {
    auto s = stickelberger_suite(n);
    checks.insert(checks.end(), s.begin(), s.end());
  }
  if (a.suite == "cyclotomic" || a.suite == "all") {
    auto s = cyclotomic_suite(n, max_order);
    checks.insert(checks.end(), s.begin(), s.end());
  }
  bool all = true;
  for (const auto& c : checks) {
    json j{{"kind", "verify"}, {"n", n},          {"suite", c.suite},       {"check", c.check},
           {"cases", c.cases}, {"failures", c.failures}, {"skipped", c.skipped}, {"passed", c.passed()}};
    if (!c.passed()) j["first_failure"] = c.first_failure;
    emit(out, j);
    all = all && c.passed();
  }
  return all ? ok : failure;
}

struct ScanArgs {
  i64 b_min = 2;
  i64 b_max = 0;
  std::vector<i64> n_list;
  i64 x_max = 0;
  bool require_nosplit = false;
  bool include_trivial = false;
  unsigned threads = 1;
  std::string out_path;
};

int do_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  ScanParams p;
  p.b_min = a.b_min;
  p.b_max = a.b_max;
  p.n_values = a.n_list;
  p.x_max = a.x_max;
  p.require_nosplit = a.require_nosplit;
  p.threads = a.threads;
  const auto records = scan(p);

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw PreconditionError("cannot open output file " + a.out_path);
  }
  std::ostream& sink = a.out_path.empty() ? out : file;
  std::size_t nontrivial = 0;
  bool unexpected = false;
  for (const auto& r : records) {
    if (!r.trivial) {
      ++nontrivial;
      if (!(r.B == 17 && r.n == 3 && r.X == 18 && r.Z == 7)) unexpected = true;
    }
    if (r.trivial && !a.include_trivial) continue;
    emit(sink, solution_json(r));
  }
  err << "scan: " << records.size() << " records, " << nontrivial << " nontrivial\n";
  return unexpected ? failure : ok;
}

int do_criteria(i64 x, i64 z, i64 b, i64 n, std::ostream& out) {
  const auto rep = criteria_report(x, mpz_class(z), b, prime_arg(n));
  json battery = json::array();
  for (const auto& w : rep.battery) battery.push_back(json{{"r", w.r}, {"holds", w.holds}});
  emit(out, json{{"kind", "criteria"},
                 {"x", x},
                 {"z", z},
                 {"b", b},
                 {"n", n},
                 {"part_a", rep.part_a},
                 {"part_b", rep.part_b},
                 {"part_c", rep.part_c},
                 {"wieferich", battery},
                 {"known_exception", rep.known_exception},
                 {"excluded", rep.excluded()}});
  return ok;
}

int do_classify(i64 b, i64 n, std::ostream& out) {
  const auto c = classify_exponent(b, n);
  json j{{"kind", "classify"}, {"b", b}, {"n", n}, {"class", to_string(c.kind)}, {"m", c.m}};
  if (c.p != 0) j["p"] = c.p;
  j["nosplit"] = nosplit_holds(b, n);
  emit(out, j);
  return ok;
}

int do_bounds(i64 n, i64 u, std::ostream& out) {
  if (n < 17 || !nt::is_prime(static_cast<nt::u64>(n))) throw PreconditionError("--n must be a prime >= 17");
  const auto bc = bounds(static_cast<int>(n), u);
  emit(out, json{{"kind", "bounds"},
                 {"n", n},
                 {"u", nt::mod(u, n)},
                 {"case", to_string(bc.kind)},
                 {"E", bc.E.get_str()},
                 {"c_bound", bc.C_bound}});
  return ok;
}

int do_cf(i64 p_max, std::ostream& out) {
  if (p_max < 3) throw PreconditionError("--p-max must be at least 3");
  if (p_max > 1000000) throw PreconditionError("--p-max must be at most 1000000");
  bool all = true;
  for (const i64 p : nt::primes_in(3, p_max)) {
    const auto r = cf_report(p);
    emit(out, json{{"kind", "cf"},
                   {"p", p},
                   {"irregular_indices", r.irregular_indices},
                   {"i_r", r.index_of_irregularity},
                   {"eichler_ok", r.eichler_ok},
                   {"vandiver_checked", r.vandiver_checked},
                   {"confirmed", r.confirmed_by_second_base}});
    all = all && r.eichler_ok && r.confirmed_by_second_base;
  }
  return all ? ok : failure;
}

int do_theta_search(i64 n_arg, std::ostream& out) {
  const int n = prime_arg(n_arg);
  if (n < 5) throw PreconditionError("theta-search needs n >= 5");
  const auto found = lemma_simple_search(n);
  json j{{"kind", "theta_search"}, {"n", n}, {"found", found.has_value()}};
  if (found) {
    const auto& t = found->theta;
    j["theta"] = t.to_string();
    j["coefficients"] = std::vector<i64>(t.coefficients().begin(), t.coefficients().end());
    j["u"] = found->u;
    j["v"] = found->v;
    j["w"] = found->w;
    j["z"] = found->z;
    j["path"] = found->path == SimpleTheta::Path::closed_form ? "closed_form" : "exhaustive";
    j["phi"] = moment(t, 1).value;
    j["phi_minus_one"] = moment(t, -1).value;
  }
  emit(out, j);
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for the equation X^n - 1 = B Z^n", "cyclothue"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run identity suites for one prime");
  verify->add_option("--n", va.n, "Odd prime")->required();
  verify->add_option("--suite", va.suite, "Suite to run")->check(CLI::IsMember({"stickelberger", "cyclotomic", "all"}));
  verify->add_option("--max-order", va.max_order, "Largest series order")->check(CLI::PositiveNumber);

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "Search X^n - 1 = B Z^n over a box");
  scan_cmd->add_option("--b-min", sa.b_min, "Smallest B")->check(CLI::Range(i64{2}, i64{1} << 40));
  scan_cmd->add_option("--b-max", sa.b_max, "Largest B")->required()->check(CLI::Range(i64{2}, i64{1} << 40));
  scan_cmd->add_option("--n-list", sa.n_list, "Comma-separated exponents")->required()->delimiter(',');
  scan_cmd->add_option("--x-max", sa.x_max, "Largest |X|")->required()->check(CLI::Range(i64{2}, i64{1} << 31));
  scan_cmd->add_flag("--require-nosplit", sa.require_nosplit, "Skip (B, n) violating nosplit");
  scan_cmd->add_flag("--include-trivial", sa.include_trivial, "Also print solutions with |Z| <= 1");
  scan_cmd->add_option("--threads", sa.threads, "Worker threads")->check(CLI::Range(1U, 1024U));
  scan_cmd->add_option("--out", sa.out_path, "Write JSON lines to this file");

  i64 cx = 0, cz = 0, cb = 0, cn = 0;
  auto* criteria = app.add_subcommand("criteria", "Necessary criteria for a solution");
  criteria->add_option("--x", cx)->required();
  criteria->add_option("--z", cz)->required();
  criteria->add_option("--b", cb)->required();
  criteria->add_option("--n", cn)->required();

  i64 kb = 0, kn = 0;
  auto* classify = app.add_subcommand("classify", "Classify an exponent");
  classify->add_option("--b", kb)->required()->check(CLI::Range(i64{2}, i64{1} << 62));
  classify->add_option("--n", kn)->required()->check(CLI::Range(i64{2}, i64{1} << 62));

  i64 bn = 0, bu = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Size bound on |X| for a residue class");
  bounds_cmd->add_option("--n", bn)->required();
  bounds_cmd->add_option("--u", bu)->required();

  i64 p_max = 0;
  auto* cf = app.add_subcommand("cf", "Irregularity report per prime");
  cf->add_option("--p-max", p_max)->required();

  i64 tn = 0;
  auto* theta = app.add_subcommand("theta-search", "Search a weight-two theta with prescribed moments");
  theta->add_option("--n", tn)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*verify) return do_verify(va, out);
    if (*scan_cmd) return do_scan(sa, out, err);
    if (*criteria) return do_criteria(cx, cz, cb, cn, out);
    if (*classify) return do_classify(kb, kn, out);
    if (*bounds_cmd) return do_bounds(bn, bu, out);
    if (*cf) return do_cf(p_max, out);
    if (*theta) return do_theta_search(tn, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const ResourceBoundError& e) {
    err << "resource bound exceeded: " << e.what() << '\n';
    return resource;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return failure;
  }
  return usage;
}

}  // namespace cyclothue::cli
