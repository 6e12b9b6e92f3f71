#include "ldcell/rates.hpp"

#include "ldcell/error.hpp"

namespace ldcell {

std::int64_t floor_ratio(std::int64_t p, std::int64_t q) {
  if (q == 0) return 0;
  return p / q;
}

std::int64_t phi(std::int64_t p, std::int64_t q) {
  const std::int64_t l = floor_ratio(p, q);
  if (l % 2 == 0) return q + l * q / 2;
  return p - (l - 1) * q / 2;
}

std::pair<SubsystemParams, SubsystemParams> subsystem_params(const CellParams& p) {
  SubsystemParams first{p.n1 - p.nD, p.n2 - p.nD, p.nM, p.n2 - p.nM - p.nD, p.delta1()};
  SubsystemParams second{p.n3 - p.nM, p.n4 - p.nM, p.nD, p.n4 - p.nM - p.nD, p.delta2()};
  return {first, second};
}

namespace {

void require_sub_a(const CellParams& p, bool force, const char* what) {
  if (force) return;
  const Regime r = classify_regime(p);
  if (r.tag != RegimeTag::VeryWeakSubA) {
    throw RegimeError(std::string(what) + " holds in sub-case A of the very weak regime only (regime " +
                      std::string(to_string(r.tag)) + ")");
  }
}

void require_very_weak(const CellParams& p, const char* what) {
  if (!classify_regime(p).very_weak()) {
    throw RegimeError(std::string(what) + " requires nM + nD <= min(n1, n3)");
  }
}

Rate subsystem_value(const SubsystemParams& s) { return Rate(s.window + s.zeta + phi(s.window, s.delta)); }

// Converse right-hand side without the regime check. The two models reach
// the same value through different entropy splits; each branch adds up its
// own terms.
Rate bound_formula(const CellParams& p, Model model) {
  const std::int64_t d1 = p.delta1();
  const std::int64_t d2 = p.delta2();
  std::int64_t twice = 0;
  if (model == Model::Imac) {
    // Rx1: lower part (n2 - nM) twice, Delta1 twice, upper window nM once;
    // Rx2 likewise with (n4 - nD), Delta2 and nD.
    twice = 2 * (p.n2 - p.nM) + 2 * d1 + p.nM + 2 * (p.n4 - p.nD) + 2 * d2 + p.nD;
  } else {
    // Both BC cells: the (n - cross) parts twice, then the shifts twice and
    // the two cross gains once.
    twice = 2 * (p.n2 - p.nM) + 2 * (p.n4 - p.nD) + 2 * d1 + p.nM + p.nD + 2 * d2;
  }
  return Rate(twice, 2);
}

}  // namespace

std::pair<Rate, Rate> subsystem_rates(const CellParams& p, bool force) {
  p.validate();
  require_sub_a(p, force, "the alignment rate");
  const auto [first, second] = subsystem_params(p);
  return {subsystem_value(first), subsystem_value(second)};
}

Rate achievable_sum(const CellParams& p, bool force) {
  p.validate();
  require_sub_a(p, force, "the alignment rate");
  return Rate(p.n2 + p.n4 - p.nM - p.nD + phi(p.nM, p.delta1()) + phi(p.nD, p.delta2()));
}

Rate upper_bound_sum(const CellParams& p, Model model) {
  p.validate();
  require_very_weak(p, "the sum-rate bound");
  return bound_formula(p, model);
}

Rate upper_bound_ktx(const CellParams& p, std::int64_t k) {
  if (k <= 0) throw ParameterError("k must be at least 1");
  p.validate();
  require_very_weak(p, "the k-transmitter bound");
  return Rate(k * (p.n1 - p.nD + p.n3 - p.nM) + (k - 1) * (p.nD + p.nM), k);
}

double WCurvePoint::achievable_per_link() const {
  return params.n1 == 0 ? 0.0 : achievable.to_double() / (2.0 * params.n1);
}

double WCurvePoint::bound_per_link() const { return params.n1 == 0 ? 0.0 : bound.to_double() / (2.0 * params.n1); }

std::string WCurvePoint::regime_label() const {
  if (no_shift) return "no-shift";
  return std::string(to_string(regime));
}

WCurveSweep wcurve_sweep(int n1, int delta, const std::vector<Rate>& alphas) {
  if (n1 < 0 || delta < 0 || delta > n1) throw ParameterError("w-curve needs 0 <= delta <= n1");
  if (n1 > 64) throw ParameterError("w-curve needs n1 <= 64");
  WCurveSweep sweep;
  for (const Rate& alpha : alphas) {
    const Rate ni_exact = alpha * Rate(n1);
    if (!ni_exact.is_integer() || ni_exact.num() < 0 || ni_exact.num() > n1) {
      sweep.diagnostics.push_back("alpha " + alpha.fraction() + " gives ni = " + ni_exact.fraction() +
                                  ", skipped");
      continue;
    }
    const int ni = static_cast<int>(ni_exact.num());
    WCurvePoint pt;
    pt.alpha = alpha;
    pt.ni = ni;
    pt.params = CellParams::make(n1, n1 - delta, n1, n1 - delta, ni, ni);
    pt.regime = classify_regime(pt.params).tag;
    pt.no_shift = delta == 0;
    pt.achievable = achievable_sum(pt.params, /*force=*/true);
    pt.bound = bound_formula(pt.params, Model::Imac);
    pt.gap = pt.bound - pt.achievable;
    sweep.points.push_back(pt);
  }
  return sweep;
}

std::vector<Rate> wcurve_alphas(int n1) {
  std::vector<Rate> out;
  if (n1 <= 0) return {Rate(0)};
  for (int ni = 0; 2 * ni <= n1; ++ni) out.emplace_back(ni, n1);
  return out;
}

}  // namespace ldcell
