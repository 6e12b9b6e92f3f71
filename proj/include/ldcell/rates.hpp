#pragma once

// Closed-form sum rates for the two-cell channels in the very weak
// interference regime: the alignment-based achievable rate, the sum-rate
// upper bounds for two and k transmitters per cell, and the symmetric
// w-curve sweep built from them.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ldcell/channel.hpp"
#include "ldcell/rate.hpp"

namespace ldcell {

// floor(p / q), and 0 when q == 0.
std::int64_t floor_ratio(std::int64_t p, std::int64_t q);

// Extra levels obtainable from a p-level interference window when the two
// in-cell signals are offset by q levels. Always an integer.
std::int64_t phi(std::int64_t p, std::int64_t q);

// One of the two independent sub-systems the two-cell channel splits into:
// the MAC of one cell (window = its cross gain, shift = its power shift)
// facing the other cell's receiver.
struct SubsystemParams {
  int strong_gain = 0;  // direct gains after removing the levels used by
  int weak_gain = 0;    // the other sub-system
  int window = 0;       // cross gain of this cell
  int zeta = 0;         // levels of the weak signal below both windows; < 0 outside case A
  int delta = 0;        // power shift of this cell
};

std::pair<SubsystemParams, SubsystemParams> subsystem_params(const CellParams& p);

// Sub-system rates window + zeta + phi(window, delta). Throws RegimeError
// outside VeryWeakSubA unless `force` is set, in which case the formula is
// evaluated without any achievability claim.
std::pair<Rate, Rate> subsystem_rates(const CellParams& p, bool force = false);

// n2 + n4 - nM - nD + phi(nM, delta1) + phi(nD, delta2); same preconditions
// as subsystem_rates. The value does not depend on the model.
Rate achievable_sum(const CellParams& p, bool force = false);

// n1 + n3 - nM/2 - nD/2 for either model, evaluated from the model's own
// converse. Throws RegimeError outside the very weak regime.
Rate upper_bound_sum(const CellParams& p, Model model = Model::Imac);

// n1 - nD + n3 - nM + (k-1) nD / k + (k-1) nM / k for k transmitters per
// cell. Throws ParameterError for k == 0 and RegimeError outside the very
// weak regime.
Rate upper_bound_ktx(const CellParams& p, std::int64_t k);

struct WCurvePoint {
  Rate alpha;
  int ni = 0;
  CellParams params;
  Rate achievable;
  Rate bound;
  Rate gap;
  RegimeTag regime = RegimeTag::VeryWeakSubA;
  bool no_shift = false;  // delta == 0: the alignment formula degenerates

  // Sum rate per cell and per link (normalised by n1).
  double achievable_per_cell() const { return achievable.to_double() / 2.0; }
  double achievable_per_link() const;
  double bound_per_link() const;

  // "SubA", "SubB", "Mixed", "Out" or "no-shift".
  std::string regime_label() const;
};

struct WCurveSweep {
  std::vector<WCurvePoint> points;
  std::vector<std::string> diagnostics;  // one line per skipped alpha
};

// Symmetric cells: n3 = n1, n2 = n4 = n1 - delta, nM = nD = alpha * n1.
// Alphas that do not give an integer ni, or give ni > n1, are skipped with a
// diagnostic. Throws ParameterError if delta > n1 or n1 > 64.
WCurveSweep wcurve_sweep(int n1, int delta, const std::vector<Rate>& alphas);

// alpha = ni / n1 for ni = 0 .. floor(n1 / 2), the symmetric very weak range.
std::vector<Rate> wcurve_alphas(int n1);

}  // namespace ldcell
