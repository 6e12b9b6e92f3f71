#include "ldcell/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

namespace ldcell {

namespace {

// Vectors of GF(2)^q with q <= 6 fit in a byte: bit i is level i + 1. A
// subspace is stored as the 64-bit set of its members, so two subspaces meet
// only at zero iff their member sets share nothing but bit 0.
using Vec = std::uint8_t;
using Members = std::uint64_t;

constexpr Members kZeroOnly = 1;

Members translate(Members set, Vec by) {
  Members out = 0;
  while (set != 0) {
    const int x = std::countr_zero(set);
    set &= set - 1;
    out |= Members{1} << (x ^ by);
  }
  return out;
}

Members add_vector(Members span, Vec v) { return span | translate(span, v); }

int dim_of(Members span) { return std::countr_zero(static_cast<unsigned>(std::popcount(span))); }

struct Subspace {
  std::vector<int> basis;  // indices into the sorted candidate-column table
  Members members = kZeroOnly;
  int dim = 0;
};

class Enumerator {
 public:
  Enumerator(int q, int max_weight) : q_(q) {
    for (int v = 1; v < (1 << q); ++v) {
      if (std::popcount(static_cast<unsigned>(v)) <= max_weight) columns_.push_back(static_cast<Vec>(v));
    }
    // Order columns by their ascending level lists.
    std::sort(columns_.begin(), columns_.end(), [](Vec a, Vec b) { return levels(a) < levels(b); });
    Subspace root;
    walk(root, 0);
    for (auto& [members, sub] : by_members_) subspaces_.push_back(std::move(sub));
    std::sort(subspaces_.begin(), subspaces_.end(),
              [](const Subspace& a, const Subspace& b) { return a.basis < b.basis; });
  }

  static std::vector<int> levels(Vec v) {
    std::vector<int> out;
    for (int i = 0; i < 8; ++i) {
      if ((v >> i) & 1) out.push_back(i + 1);
    }
    return out;
  }

  Vec column(int index) const { return columns_[static_cast<std::size_t>(index)]; }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  int q() const { return q_; }

 private:
  // Pre-order walk over increasing index sequences visits bases in
  // lexicographic order, so the first basis recorded for a span is the
  // smallest one.
  void walk(Subspace& current, std::size_t from) {
    by_members_.try_emplace(current.members, current);
    for (std::size_t i = from; i < columns_.size(); ++i) {
      const Vec c = columns_[i];
      if ((current.members >> c) & 1) continue;
      Subspace next = current;
      next.basis.push_back(static_cast<int>(i));
      next.members = add_vector(current.members, c);
      next.dim = current.dim + 1;
      walk(next, i + 1);
    }
  }

  int q_;
  std::vector<Vec> columns_;
  std::map<Members, Subspace> by_members_;
  std::vector<Subspace> subspaces_;
};

struct CellCandidate {
  int rate = 0;
  std::size_t strong = 0;  // subspace index of the cell's first transmitter
  std::size_t weak = 0;    // and of its second
  Members desired = kZeroOnly;       // received span at the own receiver
  Members interference = kZeroOnly;  // span leaked to the other receiver
};

class Search {
 public:
  Search(const CellParams& p, const Enumerator& e, std::uint64_t budget) : p_(p), e_(e), budget_(budget) {}

  SearchResult run() {
    const auto cell1 = cell_candidates(p_.n1, p_.n2, p_.nM);
    const auto cell2 = cell_candidates(p_.n3, p_.n4, p_.nD);
    const int max2 = cell2.empty() ? 0 : cell2.front().rate;

    const CellCandidate* best1 = nullptr;
    const CellCandidate* best2 = nullptr;
    int best_rate = -1;
    bool complete = true;

    for (const auto& c1 : cell1) {
      if (c1.rate + max2 < best_rate) break;
      for (const auto& c2 : cell2) {
        const int total = c1.rate + c2.rate;
        if (total < best_rate) break;
        if (total == best_rate && !encoding_less(c1, *best1)) break;
        if (!spend()) {
          complete = false;
          break;
        }
        if ((c1.desired & c2.interference) != kZeroOnly) continue;
        if ((c2.desired & c1.interference) != kZeroOnly) continue;
        best1 = &c1;
        best2 = &c2;
        best_rate = total;
        break;
      }
      if (!complete) break;
    }

    SearchResult result;
    result.complete = complete;
    result.steps = steps_;
    result.scheme = LinearScheme::empty(Model::Imac, p_);
    if (best1 != nullptr) {
      emit(result.scheme, "m1", best1->strong);
      emit(result.scheme, "m2", best1->weak);
      emit(result.scheme, "m3", best2->strong);
      emit(result.scheme, "m4", best2->weak);
    }
    result.rate = Rate(best_rate < 0 ? 0 : best_rate);
    return result;
  }

  std::uint64_t steps() const { return steps_; }

 private:
  bool spend() { return ++steps_ <= budget_; }

  Vec through(Vec v, int gain) const {
    const int q = e_.q();
    const unsigned full = (1U << q) - 1U;
    return static_cast<Vec>((static_cast<unsigned>(v) << (q - gain)) & full);
  }

  struct Image {
    Members members = kZeroOnly;
    int dim = 0;
  };

  Image image(const Subspace& s, int gain) const {
    Image img;
    for (int idx : s.basis) img.members = add_vector(img.members, through(e_.column(idx), gain));
    img.dim = dim_of(img.members);
    return img;
  }

  // Pairs of subspaces the own receiver separates, sorted by rate (high
  // first) and then encoding.
  std::vector<CellCandidate> cell_candidates(int strong_gain, int weak_gain, int cross_gain) {
    const auto& subs = e_.subspaces();
    std::vector<Image> strong_img, weak_img, cross_img;
    for (const auto& s : subs) {
      strong_img.push_back(image(s, strong_gain));
      weak_img.push_back(image(s, weak_gain));
      cross_img.push_back(image(s, cross_gain));
    }
    std::vector<CellCandidate> out;
    for (std::size_t a = 0; a < subs.size(); ++a) {
      if (strong_img[a].dim != subs[a].dim) continue;
      for (std::size_t b = 0; b < subs.size(); ++b) {
        if (weak_img[b].dim != subs[b].dim) continue;
        if ((strong_img[a].members & weak_img[b].members) != kZeroOnly) continue;
        CellCandidate c;
        c.rate = subs[a].dim + subs[b].dim;
        c.strong = a;
        c.weak = b;
        c.desired = strong_img[a].members;
        for (int idx : subs[b].basis) c.desired = add_vector(c.desired, through(e_.column(idx), weak_gain));
        c.interference = cross_img[a].members;
        for (int idx : subs[b].basis) c.interference = add_vector(c.interference, through(e_.column(idx), cross_gain));
        out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end(), [&](const CellCandidate& x, const CellCandidate& y) {
      if (x.rate != y.rate) return x.rate > y.rate;
      return encoding_less(x, y);
    });
    return out;
  }

  bool encoding_less(const CellCandidate& x, const CellCandidate& y) const {
    const auto& subs = e_.subspaces();
    if (subs[x.strong].basis != subs[y.strong].basis) return subs[x.strong].basis < subs[y.strong].basis;
    return subs[x.weak].basis < subs[y.weak].basis;
  }

  void emit(LinearScheme& s, const std::string& name, std::size_t subspace) const {
    for (int idx : e_.subspaces()[subspace].basis) s.add_bit(name, Enumerator::levels(e_.column(idx)));
  }

  const CellParams& p_;
  const Enumerator& e_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

SearchResult search_mac(const CellParams& p, int max_col_weight, std::uint64_t budget) {
  const Enumerator enumerator(p.q, max_col_weight);
  Search search(p, enumerator, budget);
  SearchResult result = search.run();
  const Certificate cert = verify(result.scheme);
  if (!cert.pass || cert.certified_rate != result.rate) {
    throw std::logic_error("search produced a scheme that does not verify");
  }
  return result;
}

}  // namespace

SearchResult search_best(const CellParams& params, int max_col_weight, int max_q, std::uint64_t budget,
                         Model model) {
  params.validate();
  if (max_col_weight < 1 || max_col_weight > 2) throw ParameterError("column weight must be 1 or 2");
  if (max_q > kSearchMaxQ) throw ParameterError("search supports q <= " + std::to_string(kSearchMaxQ));
  if (params.q > max_q) {
    throw ParameterError("q = " + std::to_string(params.q) + " exceeds the search limit " + std::to_string(max_q));
  }

  const CellParams mac_params = model == Model::Imac ? params : params.reciprocal();
  SearchResult result = search_mac(mac_params, max_col_weight, budget);
  if (model == Model::Ibc) {
    result.scheme = dualize(result.scheme);
    if (verify(result.scheme).certified_rate != result.rate) {
      throw std::logic_error("dual of a verified search result does not verify");
    }
  }
  if (!result.complete) {
    throw SearchBudgetError("search budget of " + std::to_string(budget) + " steps exhausted; best rate so far " +
                                result.rate.fraction(),
                            result);
  }
  return result;
}

}  // namespace ldcell
