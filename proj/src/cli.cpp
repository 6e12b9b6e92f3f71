#include "ldcell/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ldcell/construct.hpp"
#include "ldcell/error.hpp"
#include "ldcell/io.hpp"
#include "ldcell/rates.hpp"
#include "ldcell/search.hpp"

namespace ldcell::cli {

namespace {

struct ParamFlags {
  int n1 = 0, n2 = 0, n3 = 0, n4 = 0, nm = 0, nd = 0;
  std::optional<int> q;
  std::string model = "imac";

  void attach(CLI::App& app, bool with_model) {
    app.add_option("--n1", n1, "direct gain Tx1 (cell 1, strong)")->required();
    app.add_option("--n2", n2, "direct gain Tx2 (cell 1, weak)")->required();
    app.add_option("--n3", n3, "direct gain Tx3 (cell 2, strong)")->required();
    app.add_option("--n4", n4, "direct gain Tx4 (cell 2, weak)")->required();
    app.add_option("--nm", nm, "cross gain from cell 1 into cell 2")->required();
    app.add_option("--nd", nd, "cross gain from cell 2 into cell 1")->required();
    app.add_option("--q", q, "ambient vector length (default: largest gain)");
    if (with_model) app.add_option("--model", model, "imac or ibc")->check(CLI::IsMember({"imac", "ibc"}));
  }

  CellParams params() const {
    CellParams p{n1, n2, n3, n4, nm, nd, 0};
    p.q = q.value_or(std::max(0, p.max_gain()));
    p.validate();
    return p;
  }
};

std::string describe(const CellParams& p) {
  std::ostringstream os;
  os << "n1=" << p.n1 << " n2=" << p.n2 << " n3=" << p.n3 << " n4=" << p.n4 << " nM=" << p.nM << " nD=" << p.nD
     << " q=" << p.q;
  return os.str();
}

std::string show(const Rate& r) { return r.fraction() + " (" + r.decimal() + ")"; }

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "rx  desired_bits  rank(D)  rank(N)  rank([D|N])  result\n";
  for (const auto& rc : cert.receivers) {
    out << std::setw(2) << rc.receiver << "  " << std::setw(12) << rc.desired_bits << "  " << std::setw(7)
        << rc.desired_rank << "  " << std::setw(7) << rc.nuisance_rank << "  " << std::setw(11) << rc.joint_rank
        << "  " << (rc.pass ? "pass" : "FAIL") << '\n';
  }
  out << "overall: " << (cert.pass ? "PASS" : "FAIL") << ", " << cert.total_bits << " bits, certified rate "
      << cert.certified_rate.fraction() << '\n';
}

int cmd_bound(const ParamFlags& flags, std::optional<long long> k, bool force, std::ostream& out, std::ostream& err) {
  const CellParams p = flags.params();
  const Regime regime = classify_regime(p);
  out << "params: " << describe(p) << '\n';
  out << "regime: " << to_string(regime.tag) << '\n';
  if (regime.tag == RegimeTag::VeryWeakSubA) {
    out << "achievable: " << show(achievable_sum(p)) << '\n';
    const auto [r1, r2] = subsystem_rates(p);
    out << "subsystems: " << r1.fraction() << " + " << r2.fraction() << '\n';
  } else if (force) {
    out << "achievable (formula only): " << show(achievable_sum(p, true)) << '\n';
  }
  if (!regime.very_weak()) {
    err << "regime error: the sum-rate bounds need nM + nD <= min(n1, n3)\n";
    return kFailed;
  }
  const Rate bound = upper_bound_sum(p, parse_model(flags.model));
  out << "bound: " << show(bound) << '\n';
  if (k) out << "bound_k" << *k << ": " << show(upper_bound_ktx(p, *k)) << '\n';
  return kOk;
}

int cmd_construct(const ParamFlags& flags, const std::string& path, std::ostream& out, std::ostream& err) {
  const CellParams p = flags.params();
  const Regime regime = classify_regime(p);
  if (regime.tag != RegimeTag::VeryWeakSubA) {
    err << "regime error: construction needs sub-case A of the very weak regime (regime " << to_string(regime.tag)
        << ")\n";
    return kFailed;
  }
  LinearScheme s;
  try {
    s = construct_imac(p);
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kFailed;
  }
  const Certificate cert = verify(s);
  write_scheme_file(path, s);
  const Rate target = achievable_sum(p);
  const Rate bound = upper_bound_sum(p);
  out << "params: " << describe(p) << '\n';
  out << "certified rate: " << cert.certified_rate.fraction() << '\n';
  out << "alignment target " << target.fraction() << ": " << (cert.certified_rate >= target ? "met" : "missed")
      << '\n';
  out << "upper bound " << bound.fraction() << ": " << (cert.certified_rate == bound ? "reached" : "not reached")
      << '\n';
  out << "wrote " << path << '\n';
  return cert.pass ? kOk : kFailed;
}

int cmd_verify(const std::string& path, bool exhaustive, std::ostream& out, std::ostream& err) {
  const LinearScheme s = read_scheme_file(path);
  out << "model: " << to_string(s.model) << ", params: " << describe(s.params) << '\n';
  const Certificate cert = verify(s);
  print_certificate(out, cert);
  bool ok = cert.pass;
  if (exhaustive) {
    try {
      const Certificate brute = verify_exhaustive(s);
      out << "exhaustive: " << (brute.pass ? "PASS" : "FAIL") << '\n';
      if (brute.pass != cert.pass) {
        err << "rank test and exhaustive check disagree\n";
        ok = false;
      }
    } catch (const CapacityError& e) {
      err << "exhaustive check skipped: " << e.what() << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_dualize(const std::string& path, const std::string& out_path, bool check, std::ostream& out,
                std::ostream& err) {
  const LinearScheme s = read_scheme_file(path);
  if (s.model != Model::Imac) {
    err << "dualize expects an imac scheme\n";
    return kBadInput;
  }
  const LinearScheme dual = dualize(s);
  write_scheme_file(out_path, dual);
  out << "dual params: " << describe(dual.params) << '\n';
  out << "wrote " << out_path << " (" << dual.total_bits() << " bits)\n";
  if (!check) return kOk;
  const Certificate before = verify(s);
  const Certificate after = verify(dual);
  print_certificate(out, after);
  const bool preserved = after.pass && after.certified_rate == before.certified_rate;
  out << "rate preserved: " << (preserved ? "yes" : "no") << " (" << before.certified_rate.fraction() << " -> "
      << after.certified_rate.fraction() << ")\n";
  return preserved ? kOk : kFailed;
}

int cmd_wcurve(int n1, int delta, const std::string& path, std::ostream& out) {
  const WCurveSweep sweep = wcurve_sweep(n1, delta, wcurve_alphas(n1));
  {
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw Error("cannot write " + path);
    write_wcurve_csv(csv, sweep);
  }
  std::optional<Rate> max_gap;
  std::string zeros;
  for (const auto& pt : sweep.points) {
    if (pt.regime != RegimeTag::VeryWeakSubA || pt.no_shift) continue;
    if (!max_gap || pt.gap > *max_gap) max_gap = pt.gap;
    if (pt.gap == Rate(0)) zeros += (zeros.empty() ? "" : " ") + pt.alpha.fraction();
  }
  out << "points: " << sweep.points.size() << '\n';
  out << "max gap (SubA): " << (max_gap ? max_gap->fraction() : std::string("n/a")) << '\n';
  out << "gap = 0 at alpha: " << (zeros.empty() ? std::string("none") : zeros) << '\n';
  for (const auto& d : sweep.diagnostics) out << "skipped: " << d << '\n';
  out << "wrote " << path << '\n';
  return kOk;
}

int cmd_oracle(const ParamFlags& flags, int weight, std::uint64_t budget, const std::string& path, std::ostream& out,
               std::ostream& err) {
  const CellParams p = flags.params();
  const Model model = parse_model(flags.model);
  SearchResult result;
  bool exhausted = false;
  try {
    result = search_best(p, weight, kSearchMaxQ, budget, model);
  } catch (const SearchBudgetError& e) {
    err << e.what() << '\n';
    result = e.partial();
    exhausted = true;
  }
  out << "params: " << describe(p) << " (" << to_string(model) << ")\n";
  out << "best verified rate: " << result.rate.fraction() << (exhausted ? " (partial)" : "") << '\n';
  out << "steps: " << result.steps << '\n';
  bool converse_ok = true;
  const Regime regime = classify_regime(p);
  if (regime.very_weak()) {
    const Rate bound = upper_bound_sum(p, model);
    converse_ok = result.rate <= Rate(bound.floor());
    out << "floor(bound): " << bound.floor() << " -> " << (converse_ok ? "respected" : "EXCEEDED") << '\n';
  } else {
    out << "floor(bound): n/a (regime " << to_string(regime.tag) << ")\n";
  }
  if (regime.tag == RegimeTag::VeryWeakSubA) out << "alignment formula: " << achievable_sum(p).fraction() << '\n';
  if (!path.empty()) {
    write_scheme_file(path, result.scheme);
    out << "wrote " << path << '\n';
  }
  return exhausted || !converse_ok ? kFailed : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rates, bounds and linear schemes for two-cell linear deterministic channels", "ldcell"};
  app.require_subcommand(1);

  ParamFlags bound_flags;
  std::optional<long long> k;
  bool force = false;
  auto* bound = app.add_subcommand("bound", "regime, alignment rate and sum-rate bounds");
  bound_flags.attach(*bound, true);
  bound->add_option("--k", k, "also evaluate the bound for k transmitters per cell")->check(CLI::PositiveNumber);
  bound->add_flag("--force", force, "print the alignment formula outside sub-case A");

  ParamFlags construct_flags;
  std::string construct_out;
  auto* construct = app.add_subcommand("construct", "build and certify the alignment scheme");
  construct_flags.attach(*construct, false);
  construct->add_option("--out", construct_out, "scheme JSON to write")->required();

  std::string verify_path;
  bool exhaustive = false;
  auto* verify_cmd = app.add_subcommand("verify", "certify a scheme file");
  verify_cmd->add_option("scheme", verify_path, "scheme JSON")->required();
  verify_cmd->add_flag("--exhaustive", exhaustive, "cross-check by enumerating all messages (<= 16 bits)");

  std::string dual_in, dual_out;
  bool dual_check = false;
  auto* dual = app.add_subcommand("dualize", "turn a MAC scheme into a BC scheme");
  dual->add_option("scheme", dual_in, "imac scheme JSON")->required();
  dual->add_option("--out", dual_out, "BC scheme JSON to write")->required();
  dual->add_flag("--verify", dual_check, "certify the result and compare rates");

  int w_n1 = 0, w_delta = 0;
  std::string w_out;
  auto* wcurve = app.add_subcommand("wcurve", "symmetric sweep over the interference ratio");
  wcurve->add_option("--n1", w_n1, "direct gain of the strong users")->required()->check(CLI::Range(0, 64));
  wcurve->add_option("--delta", w_delta, "power shift inside each cell")->required()->check(CLI::NonNegativeNumber);
  wcurve->add_option("--out", w_out, "CSV to write")->required();

  ParamFlags oracle_flags;
  int weight = 1;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string oracle_out;
  auto* oracle = app.add_subcommand("oracle", "exhaustive search for the best small linear scheme");
  oracle_flags.attach(*oracle, true);
  oracle->add_option("--weight", weight, "maximum generator column weight")->check(CLI::Range(1, 2));
  oracle->add_option("--budget", budget, "maximum search steps");
  oracle->add_option("--out", oracle_out, "scheme JSON to write");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (*bound) return cmd_bound(bound_flags, k, force, out, err);
    if (*construct) return cmd_construct(construct_flags, construct_out, out, err);
    if (*verify_cmd) return cmd_verify(verify_path, exhaustive, out, err);
    if (*dual) return cmd_dualize(dual_in, dual_out, dual_check, out, err);
    if (*wcurve) {
      if (w_delta > w_n1) {
        err << "delta must not exceed n1\n";
        return kBadInput;
      }
      return cmd_wcurve(w_n1, w_delta, w_out, out);
    }
    if (*oracle) return cmd_oracle(oracle_flags, weight, budget, oracle_out, out, err);
  } catch (const ParameterError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kBadInput;
}

}  // namespace ldcell::cli
