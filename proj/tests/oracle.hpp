#pragma once

// Slow, dense reference implementations used only by the tests. They share
// no code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ldcell/gf2.hpp"
#include "ldcell/scheme.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;  // row-major 0/1

inline Dense dense(const ldcell::BitMatrix& m) {
  Dense d(m.rows(), std::vector<int>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.get(r, c) ? 1 : 0;
  return d;
}

inline Dense multiply(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
  Dense out(a.size(), std::vector<int>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      int acc = 0;
      for (std::size_t k = 0; k < inner; ++k) acc ^= a[i][k] & b[k][j];
      out[i][j] = acc;
    }
  return out;
}

// Rank as log2 of the number of distinct vectors in the column span.
inline std::size_t span_rank(const Dense& m, std::size_t cols) {
  std::set<std::vector<int>> span;
  const std::size_t rows = m.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
    std::vector<int> v(rows, 0);
    for (std::size_t c = 0; c < cols; ++c)
      if ((mask >> c) & 1U)
        for (std::size_t r = 0; r < rows; ++r) v[r] ^= m[r][c];
    span.insert(v);
  }
  std::size_t k = 0;
  while ((std::size_t{1} << k) < span.size()) ++k;
  return k;
}

// Shift by the textbook definition: level i (1-based, 1 = top) of the
// input reaches level i + q - n of the output when that is still <= q.
inline std::vector<int> shift(int q, int n, const std::vector<int>& x) {
  std::vector<int> y(q, 0);
  for (int i = 1; i <= q; ++i) {
    const int to = i + q - n;
    if (to <= q) y[to - 1] = x[i - 1];
  }
  return y;
}

inline std::vector<int> bits(const ldcell::BitVector& v) {
  std::vector<int> b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = v.get(i) ? 1 : 0;
  return b;
}

inline ldcell::BitVector random_vector(std::mt19937_64& rng, std::size_t n) {
  ldcell::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, (rng() & 1U) != 0);
  return v;
}

inline ldcell::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  ldcell::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng() & 1U) != 0);
  return m;
}

// phi evaluated straight from its case definition, in doubled units to stay
// integral: returns 2 * phi(p, q).
inline std::int64_t twice_phi(std::int64_t p, std::int64_t q) {
  const std::int64_t l = q == 0 ? 0 : p / q;
  if (l % 2 == 0) return 2 * q + l * q;
  return 2 * p - (l - 1) * q;
}

// Random scheme with weight <= max_weight columns and at most max_bits bits.
inline ldcell::LinearScheme random_scheme(std::mt19937_64& rng, ldcell::Model model, int max_q, int max_bits,
                                          int max_weight) {
  std::uniform_int_distribution<int> qd(1, max_q);
  const int q = qd(rng);
  auto gain = [&](int hi) { return std::uniform_int_distribution<int>(0, hi)(rng); };
  ldcell::CellParams p;
  p.q = q;
  p.n1 = gain(q);
  p.n2 = gain(p.n1);
  p.n3 = gain(q);
  p.n4 = gain(p.n3);
  p.nM = gain(q);
  p.nD = gain(q);
  auto s = ldcell::LinearScheme::empty(model, p);
  const int total = std::uniform_int_distribution<int>(0, max_bits)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, s.messages.size() - 1);
  for (int b = 0; b < total; ++b) {
    const int w = std::uniform_int_distribution<int>(1, std::min(max_weight, q))(rng);
    std::vector<int> levels;
    while (static_cast<int>(levels.size()) < w) {
      const int l = std::uniform_int_distribution<int>(1, q)(rng);
      if (std::find(levels.begin(), levels.end(), l) == levels.end()) levels.push_back(l);
    }
    std::sort(levels.begin(), levels.end());
    s.add_bit(s.messages[pick(rng)].name, levels);
  }
  return s;
}

// Gain from transmitter tx to receiver rx, written out from the channel
// equations (1-based ids).
inline int gain(const ldcell::LinearScheme& s, int tx, int rx) {
  const auto& p = s.params;
  if (s.model == ldcell::Model::Imac) {
    const int table[2][4] = {{p.n1, p.n2, p.nD, p.nD}, {p.nM, p.nM, p.n3, p.n4}};
    return table[rx - 1][tx - 1];
  }
  const int table[4][2] = {{p.n1, p.nD}, {p.n2, p.nD}, {p.nM, p.n3}, {p.nM, p.n4}};
  return table[rx - 1][tx - 1];
}

// Zero-error decodability by enumeration of every message assignment: each
// receiver's desired bits must be a function of what it observes.
inline bool decodable(const ldcell::LinearScheme& s) {
  struct Bit {
    int owner;
    std::vector<int> decoders;
    std::vector<int> column;
  };
  std::vector<Bit> all;
  for (const auto& m : s.messages)
    for (std::size_t c = 0; c < m.kbits(); ++c) all.push_back({m.owner, m.decoders, bits(m.generator.column(c))});
  const int q = s.params.q;
  const int txs = s.model == ldcell::Model::Imac ? 4 : 2;
  const int rxs = s.model == ldcell::Model::Imac ? 2 : 4;
  const std::size_t n = all.size();
  for (int rx = 1; rx <= rxs; ++rx) {
    std::vector<std::pair<std::vector<int>, std::uint64_t>> table;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      std::vector<std::vector<int>> x(txs + 1, std::vector<int>(q, 0));
      std::uint64_t want = 0;
      for (std::size_t b = 0; b < n; ++b) {
        const bool on = (a >> b) & 1U;
        if (std::find(all[b].decoders.begin(), all[b].decoders.end(), rx) != all[b].decoders.end() && on)
          want |= std::uint64_t{1} << b;
        if (on)
          for (int l = 0; l < q; ++l) x[all[b].owner][l] ^= all[b].column[l];
      }
      std::vector<int> y(q, 0);
      for (int tx = 1; tx <= txs; ++tx) {
        const auto part = shift(q, gain(s, tx, rx), x[tx]);
        for (int l = 0; l < q; ++l) y[l] ^= part[l];
      }
      table.emplace_back(std::move(y), want);
    }
    std::sort(table.begin(), table.end());
    for (std::size_t i = 1; i < table.size(); ++i)
      if (table[i].first == table[i - 1].first && table[i].second != table[i - 1].second) return false;
  }
  return true;
}

}  // namespace oracle
