#include "ldcell/construct.hpp"

#include <algorithm>

#include "ldcell/rates.hpp"
#include "ldcell/search.hpp"

namespace ldcell {

SubsystemLayout layout_subsystem(int strong, int weak, int window, int delta) {
  if (weak < window || strong - weak != delta || delta < 0) {
    throw ParameterError("sub-system layout needs weak >= window and strong - weak == delta >= 0");
  }
  SubsystemLayout out;
  const int blocks = static_cast<int>(floor_ratio(window, delta));
  const int full = blocks * delta;  // window levels covered by whole blocks

  auto block_levels = [&](int k, std::vector<int>& into) {
    for (int j = (k - 1) * delta + 1; j <= k * delta; ++j) into.push_back(j);
  };
  // Window level j lands at peer height window - j + 1.
  auto block_heights = [&](int k) {
    for (int j = (k - 1) * delta + 1; j <= k * delta; ++j) out.peer_heights.push_back(window - j + 1);
  };

  for (int k = 1; k <= blocks; k += 2) {
    block_levels(k, out.strong_levels);
    block_levels(k, out.weak_levels);
  }
  for (int k = 2; k <= blocks; k += 2) block_heights(k);
  for (int j = full + 1; j <= window; ++j) out.peer_heights.push_back(window - j + 1);

  // With an odd block count the weak user's last block sits one block below
  // the window at its own receiver, so the strong user's private levels
  // start after it.
  const int private_from = blocks % 2 == 0 ? window + 1 : (blocks + 1) * delta + 1;
  for (int j = private_from; j <= strong; ++j) out.strong_levels.push_back(j);

  std::sort(out.peer_heights.begin(), out.peer_heights.end());
  return out;
}

namespace {

LinearScheme alignment_scheme(const CellParams& p) {
  const auto [first, second] = subsystem_params(p);
  const SubsystemLayout cell1 = layout_subsystem(first.strong_gain, first.weak_gain, first.window, first.delta);
  const SubsystemLayout cell2 = layout_subsystem(second.strong_gain, second.weak_gain, second.window, second.delta);

  std::vector<int> x1 = cell1.strong_levels;
  std::vector<int> x2 = cell1.weak_levels;
  std::vector<int> x3 = cell2.strong_levels;
  std::vector<int> x4 = cell2.weak_levels;
  // Peer heights are counted from the bottom of the other cell's receiver;
  // the strong transmitter of that cell reaches height h with level n - h + 1.
  for (int h : cell1.peer_heights) x3.push_back(p.n3 - h + 1);
  for (int h : cell2.peer_heights) x1.push_back(p.n1 - h + 1);

  LinearScheme s = LinearScheme::empty(Model::Imac, p);
  const std::pair<const char*, std::vector<int>*> per_tx[] = {{"m1", &x1}, {"m2", &x2}, {"m3", &x3}, {"m4", &x4}};
  for (const auto& [name, levels] : per_tx) {
    std::sort(levels->begin(), levels->end());
    for (int level : *levels) s.add_bit(name, {level});
  }
  return s;
}

}  // namespace

LinearScheme construct_imac(const CellParams& p) {
  p.validate();
  const Rate target = achievable_sum(p);  // throws RegimeError outside SubA

  std::optional<LinearScheme> best;
  Rate best_rate(0);
  LinearScheme layout = alignment_scheme(p);
  const Certificate cert = verify(layout);
  if (cert.pass) {
    if (cert.certified_rate >= target) return layout;
    best = layout;
    best_rate = cert.certified_rate;
  }

  if (p.q <= kSearchMaxQ) {
    try {
      SearchResult found = search_best(p, 2);
      if (found.rate >= target) return found.scheme;
      if (found.rate > best_rate) best = std::move(found.scheme);
    } catch (const SearchBudgetError& e) {
      if (e.partial().rate > best_rate) best = e.partial().scheme;
    }
  }
  throw ConstructionError("no verified scheme reaches the target rate " + target.fraction(), std::move(best));
}

}  // namespace ldcell
