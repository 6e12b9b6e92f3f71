#include "ldcell/channel.hpp"

#include <algorithm>

#include "ldcell/error.hpp"

namespace ldcell {

std::string_view to_string(Model m) { return m == Model::Imac ? "imac" : "ibc"; }

Model parse_model(std::string_view s) {
  if (s == "imac") return Model::Imac;
  if (s == "ibc") return Model::Ibc;
  throw ParameterError("unknown model '" + std::string(s) + "' (expected imac or ibc)");
}

int CellParams::max_gain() const { return std::max({n1, n2, n3, n4, nM, nD}); }

Rate CellParams::alpha() const { return n1 == 0 ? Rate(0) : Rate(nM, n1); }

void CellParams::validate() const {
  const std::pair<const char*, int> fields[] = {{"n1", n1}, {"n2", n2}, {"n3", n3}, {"n4", n4},
                                                {"nM", nM}, {"nD", nD}, {"q", q}};
  for (const auto& [name, value] : fields) {
    if (value < 0) throw ParameterError(std::string(name) + " must be non-negative");
  }
  if (n1 < n2) throw ParameterError("n1 must be at least n2");
  if (n3 < n4) throw ParameterError("n3 must be at least n4");
  if (q < max_gain()) throw ParameterError("q must be at least the largest gain");
  if (q > 64) throw ParameterError("q above 64 is not supported");
}

CellParams CellParams::make(int n1, int n2, int n3, int n4, int nM, int nD) {
  CellParams p{n1, n2, n3, n4, nM, nD, 0};
  p.q = std::max(0, p.max_gain());
  p.validate();
  return p;
}

CellParams CellParams::make(int n1, int n2, int n3, int n4, int nM, int nD, int q) {
  CellParams p{n1, n2, n3, n4, nM, nD, q};
  p.validate();
  return p;
}

CellParams CellParams::reciprocal() const {
  CellParams r = *this;
  std::swap(r.nM, r.nD);
  return r;
}

std::string_view to_string(RegimeTag t) {
  switch (t) {
    case RegimeTag::VeryWeakSubA:
      return "SubA";
    case RegimeTag::VeryWeakSubB:
      return "SubB";
    case RegimeTag::VeryWeakMixed:
      return "Mixed";
    case RegimeTag::OutOfVeryWeak:
      return "Out";
  }
  return "Out";
}

Regime classify_regime(const CellParams& p) {
  const int s = p.nM + p.nD;
  Regime r;
  r.cell1_a = s <= p.n2;
  r.cell1_b = p.n2 <= s && s <= p.n1;
  r.cell2_a = s <= p.n4;
  r.cell2_b = p.n4 <= s && s <= p.n3;
  if (s > std::min(p.n1, p.n3)) {
    r.tag = RegimeTag::OutOfVeryWeak;
  } else if (r.cell1_a && r.cell2_a) {
    r.tag = RegimeTag::VeryWeakSubA;
  } else if (r.cell1_b && r.cell2_b) {
    r.tag = RegimeTag::VeryWeakSubB;
  } else {
    r.tag = RegimeTag::VeryWeakMixed;
  }
  return r;
}

namespace {

void check_length(const CellParams& p, const BitVector& x) {
  if (x.size() != static_cast<std::size_t>(p.q)) {
    throw ShapeError("input length " + std::to_string(x.size()) + " differs from q = " + std::to_string(p.q));
  }
}

BitVector through(const CellParams& p, int gain, const BitVector& x) {
  return shift_apply(static_cast<std::size_t>(p.q), static_cast<std::size_t>(gain), x);
}

}  // namespace

std::pair<BitVector, BitVector> imac_output(const CellParams& p, const BitVector& x1, const BitVector& x2,
                                            const BitVector& x3, const BitVector& x4) {
  for (const auto* x : {&x1, &x2, &x3, &x4}) check_length(p, *x);
  BitVector y1 = through(p, p.n1, x1) ^ through(p, p.n2, x2) ^ through(p, p.nD, x3) ^ through(p, p.nD, x4);
  BitVector y2 = through(p, p.nM, x1) ^ through(p, p.nM, x2) ^ through(p, p.n3, x3) ^ through(p, p.n4, x4);
  return {std::move(y1), std::move(y2)};
}

std::array<BitVector, 4> ibc_output(const CellParams& p, const BitVector& x1, const BitVector& x2) {
  check_length(p, x1);
  check_length(p, x2);
  const BitVector from2 = through(p, p.nD, x2);
  const BitVector from1 = through(p, p.nM, x1);
  return {through(p, p.n1, x1) ^ from2, through(p, p.n2, x1) ^ from2, through(p, p.n3, x2) ^ from1,
          through(p, p.n4, x2) ^ from1};
}

int transmitter_count(Model m) { return m == Model::Imac ? 4 : 2; }
int receiver_count(Model m) { return m == Model::Imac ? 2 : 4; }

int link_gain(Model m, const CellParams& p, int tx, int rx) {
  if (tx < 1 || tx > transmitter_count(m)) throw ParameterError("unknown transmitter " + std::to_string(tx));
  if (rx < 1 || rx > receiver_count(m)) throw ParameterError("unknown receiver " + std::to_string(rx));
  if (m == Model::Imac) {
    const int own_cell = tx <= 2 ? 1 : 2;
    if (rx != own_cell) return own_cell == 1 ? p.nM : p.nD;
    const int direct[] = {0, p.n1, p.n2, p.n3, p.n4};
    return direct[tx];
  }
  const int own_cell = rx <= 2 ? 1 : 2;
  if (tx != own_cell) return tx == 1 ? p.nM : p.nD;
  const int direct[] = {0, p.n1, p.n2, p.n3, p.n4};
  return direct[rx];
}

}  // namespace ldcell
