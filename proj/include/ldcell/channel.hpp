#pragma once

// Two-cell linear deterministic channels: the interfering MAC (four
// transmitters, two receivers) and its dual, the interfering BC (two
// transmitters, four receivers).

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "ldcell/gf2.hpp"
#include "ldcell/rate.hpp"

namespace ldcell {

enum class Model { Imac, Ibc };

std::string_view to_string(Model m);
// Throws ParameterError for anything other than "imac" / "ibc".
Model parse_model(std::string_view s);

// Gains of both cells. Cell 1 has direct gains n1 >= n2, cell 2 has
// n3 >= n4; nM is the cross gain from cell 1 into cell 2 and nD the cross
// gain from cell 2 into cell 1.
struct CellParams {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;
  int nM = 0;
  int nD = 0;
  int q = 0;

  int delta1() const { return n1 - n2; }
  int delta2() const { return n3 - n4; }
  int max_gain() const;
  // nM / n1, zero when n1 == 0.
  Rate alpha() const;

  // Throws ParameterError naming the first violated constraint.
  void validate() const;

  // Fills q with the largest gain and validates.
  static CellParams make(int n1, int n2, int n3, int n4, int nM, int nD);
  static CellParams make(int n1, int n2, int n3, int n4, int nM, int nD, int q);

  // Parameters of the network with every link reversed, written in the
  // labelling of the other model: the two cross gains trade places.
  CellParams reciprocal() const;

  bool operator==(const CellParams&) const = default;
};

enum class RegimeTag { VeryWeakSubA, VeryWeakSubB, VeryWeakMixed, OutOfVeryWeak };

std::string_view to_string(RegimeTag t);

struct Regime {
  RegimeTag tag = RegimeTag::OutOfVeryWeak;
  // Per-cell sub-case: interference sum at or below the weaker direct gain
  // (case A) / between the weaker and the stronger direct gain (case B).
  // At equality with the weaker gain both flags of that cell are set.
  bool cell1_a = false;
  bool cell1_b = false;
  bool cell2_a = false;
  bool cell2_b = false;

  bool very_weak() const { return tag != RegimeTag::OutOfVeryWeak; }
};

Regime classify_regime(const CellParams& p);

// One channel use of the interfering MAC; every input must have length q.
std::pair<BitVector, BitVector> imac_output(const CellParams& p, const BitVector& x1, const BitVector& x2,
                                            const BitVector& x3, const BitVector& x4);

// One channel use of the interfering BC; outputs at receivers 1..4.
std::array<BitVector, 4> ibc_output(const CellParams& p, const BitVector& x1, const BitVector& x2);

// Number of transmitters / receivers of a model and the gain of the link
// between them (1-based ids). Throws ParameterError for unknown ids.
int transmitter_count(Model m);
int receiver_count(Model m);
int link_gain(Model m, const CellParams& p, int tx, int rx);

}  // namespace ldcell
