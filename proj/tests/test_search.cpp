#include <random>

#include "doctest.h"
#include "ldcell/error.hpp"
#include "ldcell/rates.hpp"
#include "ldcell/search.hpp"
#include "oracle.hpp"

using namespace ldcell;

namespace {

// Best total over all assignments of unit columns (weight 1) to the four
// messages, by brute force: every transmitter picks a subset of levels.
int brute_force_unit(const CellParams& p) {
  const int q = p.q;
  const int subsets = 1 << q;
  int best = 0;
  for (int a = 0; a < subsets; ++a)
    for (int b = 0; b < subsets; ++b)
      for (int c = 0; c < subsets; ++c)
        for (int d = 0; d < subsets; ++d) {
          const int total = std::popcount(unsigned(a)) + std::popcount(unsigned(b)) + std::popcount(unsigned(c)) +
                            std::popcount(unsigned(d));
          if (total <= best) continue;
          auto s = LinearScheme::empty(Model::Imac, p);
          const int masks[4] = {a, b, c, d};
          for (int m = 0; m < 4; ++m)
            for (int l = 0; l < q; ++l)
              if ((masks[m] >> l) & 1) s.add_bit(s.messages[m].name, {l + 1});
          if (oracle::decodable(s)) best = total;
        }
  return best;
}

}  // namespace

TEST_CASE("search examples") {
  const auto r = search_best(CellParams::make(2, 2, 2, 2, 1, 1, 2), 1);
  CHECK(r.rate <= Rate(3));
  CHECK(r.complete);
  CHECK(search_best(CellParams::make(2, 2, 2, 2, 0, 0, 2), 1).rate == Rate(4));
  CHECK_THROWS_AS(search_best(CellParams::make(7, 7, 7, 7, 0, 0, 7), 1), ParameterError);
  CHECK_THROWS_AS(search_best(CellParams::make(2, 2, 2, 2, 0, 0, 2), 3), ParameterError);
}

TEST_CASE("search result matches brute force with unit columns") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 25; ++t) {
    CellParams p;
    p.q = 1 + static_cast<int>(rng() % 3);
    auto draw = [&](int hi) { return static_cast<int>(rng() % static_cast<std::uint64_t>(hi + 1)); };
    p.n1 = draw(p.q);
    p.n2 = draw(p.n1);
    p.n3 = draw(p.q);
    p.n4 = draw(p.n3);
    p.nM = draw(p.q);
    p.nD = draw(p.q);
    const auto r = search_best(p, 1);
    CHECK(r.rate == Rate(brute_force_unit(p)));
    CHECK(oracle::decodable(r.scheme));
    CHECK(verify(r.scheme).certified_rate == r.rate);
  }
}

TEST_CASE("search winners decode and respect the bound") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (int m = 0; m <= 2; ++m)
        for (int d = 0; d <= 2; ++d) {
          const auto p = CellParams::make(n1, n2, 3, 2, m, d, 3);
          const auto r = search_best(p, 2);
          CHECK(verify_exhaustive(r.scheme).pass);
          CHECK(oracle::decodable(r.scheme));
          if (classify_regime(p).very_weak()) CHECK(r.rate <= Rate(upper_bound_sum(p).floor()));
        }
}

TEST_CASE("copy-bit columns beat unit columns") {
  const auto p = CellParams::make(4, 3, 4, 3, 4, 4, 4);
  CHECK(search_best(p, 1).rate == Rate(4));
  const auto r = search_best(p, 2);
  CHECK(r.rate == Rate(5));
  CHECK(oracle::decodable(r.scheme));
  // with every gain equal both receivers see the same sum
  CHECK(search_best(CellParams::make(4, 4, 4, 4, 4, 4, 4), 2).rate == Rate(4));
}

TEST_CASE("ibc search goes through the reciprocal mac") {
  const auto p = CellParams::make(3, 2, 3, 1, 1, 2, 3);
  const auto r = search_best(p, 1, kSearchMaxQ, kDefaultSearchBudget, Model::Ibc);
  CHECK(r.scheme.model == Model::Ibc);
  CHECK(r.scheme.params == p);
  CHECK(verify(r.scheme).certified_rate == r.rate);
  CHECK(r.rate == search_best(p.reciprocal(), 1).rate);
}

TEST_CASE("budget exhaustion keeps the partial result") {
  try {
    search_best(CellParams::make(5, 4, 5, 4, 1, 1, 5), 2, kSearchMaxQ, 10);
    FAIL("expected the budget to run out");
  } catch (const SearchBudgetError& e) {
    CHECK_FALSE(e.partial().complete);
    CHECK(verify(e.partial().scheme).certified_rate == e.partial().rate);
  }
}
