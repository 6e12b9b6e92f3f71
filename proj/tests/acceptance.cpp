// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ldcell/construct.hpp"
#include "ldcell/error.hpp"
#include "ldcell/rates.hpp"
#include "ldcell/scheme.hpp"
#include "ldcell/search.hpp"
#include "oracle.hpp"

using namespace ldcell;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_seconds;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %d. %s: %s (%.2fs, limit %.0fs%s)\n", pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              limit_seconds, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

// Every very-weak tuple with n1, n3 <= 12.
template <class F>
void for_very_weak_grid(F&& f) {
  for (int n1 = 0; n1 <= 12; ++n1)
    for (int n2 = 0; n2 <= n1; ++n2)
      for (int n3 = 0; n3 <= 12; ++n3)
        for (int n4 = 0; n4 <= n3; ++n4)
          for (int m = 0; m <= std::min(n1, n3); ++m)
            for (int d = 0; m + d <= std::min(n1, n3); ++d) f(CellParams::make(n1, n2, n3, n4, m, d));
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

}  // namespace

int main() {
  const auto fig2 = CellParams::make(8, 7, 9, 7, 2, 4);

  criterion(1, "alignment scheme at (8,7,9,7,2,4)", 5, [&] {
    const auto s = construct_imac(fig2);
    const auto c = verify(s);
    const bool brute = verify_exhaustive(s).pass;
    const Rate bound = upper_bound_sum(fig2);
    return Outcome{c.pass && brute && c.certified_rate == Rate(14) && bound == Rate(14),
                   "rate " + c.certified_rate.fraction() + ", exhaustive " + (brute ? "pass" : "fail") + ", bound " +
                       bound.fraction()};
  });

  criterion(2, "dual broadcast scheme at (8,7,9,7,2,4)", 5, [&] {
    const auto dual = dualize(construct_imac(fig2));
    const auto c = verify(dual);
    const bool brute = verify_exhaustive(dual).pass;
    return Outcome{dual.model == Model::Ibc && c.pass && brute && c.certified_rate == Rate(14),
                   "ibc rate " + c.certified_rate.fraction()};
  });

  criterion(3, "bound duality on the n1,n3<=12 grid", 10, [&] {
    long tuples = 0, bad = 0;
    for_very_weak_grid([&](const CellParams& p) {
      ++tuples;
      const Rate mac = upper_bound_sum(p, Model::Imac);
      if (mac != upper_bound_sum(p, Model::Ibc) || mac != upper_bound_ktx(p, 2)) ++bad;
    });
    return Outcome{bad == 0 && tuples > 0, fmt("%ld tuples, %ld mismatches", tuples, bad)};
  });

  criterion(4, "construction meets the alignment formula", 120, [&] {
    long tuples = 0, bad = 0, over = 0, dual_bad = 0;
    for_very_weak_grid([&](const CellParams& p) {
      if (p.delta1() < 1 || p.delta2() < 1 || classify_regime(p).tag != RegimeTag::VeryWeakSubA) return;
      ++tuples;
      const auto s = construct_imac(p);
      const auto c = verify(s);
      if (!c.pass || c.certified_rate != achievable_sum(p)) ++bad;
      if (c.certified_rate > upper_bound_sum(p)) ++over;
      if (!verify(dualize(s)).pass) ++dual_bad;
    });
    return Outcome{tuples > 0 && bad == 0 && over == 0 && dual_bad == 0,
                   fmt("%ld tuples, %ld off-formula, %ld above bound, %ld failing duals", tuples, bad, over,
                       dual_bad)};
  });

  criterion(5, "no linear scheme beats the converse", 600, [&] {
    long tuples = 0, bad = 0;
    auto check = [&](const CellParams& p) {
      ++tuples;
      const auto r = search_best(p, 1);
      if (!r.complete || r.rate > Rate(upper_bound_sum(p).floor())) ++bad;
    };
    for (int n1 = 1; n1 <= 4; ++n1)
      for (int n2 = 0; n2 <= n1; ++n2)
        for (int n3 = 1; n3 <= 4; ++n3)
          for (int n4 = 0; n4 <= n3; ++n4)
            for (int m = 0; m <= 4; ++m)
              for (int d = 0; d <= 4; ++d) {
                const auto p = CellParams::make(n1, n2, n3, n4, m, d);
                if (classify_regime(p).very_weak()) check(p);
              }
    const long small = tuples;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> g(0, 5);
    int sampled = 0;
    while (sampled < 150) {
      const int n1 = g(rng), n3 = g(rng);
      if (std::max(n1, n3) != 5) continue;
      const auto p = CellParams::make(n1, g(rng) % (n1 + 1), n3, g(rng) % (n3 + 1), g(rng), g(rng), 5);
      if (!classify_regime(p).very_weak()) continue;
      check(p);
      ++sampled;
    }
    return Outcome{bad == 0, fmt("%ld tuples at q<=4, %d sampled at q=5, %ld violations", small, sampled, bad)};
  });

  criterion(6, "w-curve gap law", 10, [&] {
    std::ostringstream detail;
    bool ok = true;
    for (int delta : {4, 8}) {
      const auto sweep = wcurve_sweep(64, delta, wcurve_alphas(64));
      Rate max_gap(0);
      int points = 0;
      for (const auto& pt : sweep.points) {
        if (pt.regime != RegimeTag::VeryWeakSubA) continue;
        ++points;
        const bool zero_expected = pt.ni % delta == 0 && (pt.ni / delta) % 2 == 0;
        ok = ok && pt.gap >= Rate(0) && pt.gap <= Rate(delta) && (pt.gap == Rate(0)) == zero_expected;
        if (pt.ni % delta == 0 && (pt.ni / delta) % 2 == 1) ok = ok && pt.gap == Rate(delta);
        if (pt.gap > max_gap) max_gap = pt.gap;
      }
      ok = ok && points > 0 && max_gap == Rate(delta);
      detail << "delta " << delta << ": " << points << " points, max gap " << max_gap.fraction() << "; ";
    }
    return Outcome{ok, detail.str()};
  });

  criterion(7, "multi-user gain at (4,4,4,4,4,4)", 300, [&] {
    const auto r = search_best(CellParams::make(4, 4, 4, 4, 4, 4, 4), 2);
    const bool certified = verify(r.scheme).certified_rate == r.rate;
    return Outcome{certified && r.rate >= Rate(5),
                   "best certified rate " + r.rate.fraction() + " (need >= 5), search " +
                       (r.complete ? "complete" : "partial")};
  });

  criterion(8, "k-transmitter limit", 5, [&] {
    long checks = 0, bad = 0;
    for_very_weak_grid([&](const CellParams& p) {
      for (int k = 1; k <= 64; ++k) {
        ++checks;
        if (abs(upper_bound_ktx(p, k) - Rate(p.n1 + p.n3)) != Rate(p.nM + p.nD, k)) ++bad;
      }
    });
    return Outcome{bad == 0, fmt("%ld evaluations, %ld mismatches", checks, bad)};
  });

  criterion(9, "rank test equals enumeration", 120, [&] {
    std::mt19937_64 rng(99);
    int agree = 0, passes = 0;
    for (int t = 0; t < 1000; ++t) {
      const auto s = oracle::random_scheme(rng, t % 2 == 0 ? Model::Imac : Model::Ibc, 6, 8, 2);
      const bool fast = verify(s).pass;
      agree += fast == verify_exhaustive(s).pass;
      passes += fast;
    }
    return Outcome{agree == 1000, fmt("%d/1000 agree (%d passing schemes)", agree, passes)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
