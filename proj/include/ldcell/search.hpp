#pragma once

// Bounded exhaustive search over small linear schemes.

#include <cstdint>
#include <optional>

#include "ldcell/error.hpp"
#include "ldcell/rate.hpp"
#include "ldcell/scheme.hpp"

namespace ldcell {

inline constexpr int kSearchMaxQ = 6;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchResult {
  LinearScheme scheme;
  Rate rate;
  bool complete = true;       // false when the budget ran out first
  std::uint64_t steps = 0;    // candidate pairs examined
};

// Raised when the budget is exhausted; carries the best verified scheme seen
// so far.
class SearchBudgetError : public CapacityError {
 public:
  SearchBudgetError(const std::string& what, SearchResult partial)
      : CapacityError(what), partial_(std::move(partial)) {}
  const SearchResult& partial() const { return partial_; }

 private:
  SearchResult partial_;
};

// Maximum-rate MAC scheme whose generator columns have weight at most
// `max_col_weight` (1 or 2). Each transmitter's columns are independent, so
// the search runs over the subspaces they span; every subspace is
// represented by its lexicographically smallest admissible basis and ties
// between maximal schemes go to the lexicographically smallest encoding
// (columns as level lists, transmitters in order). The winner is certified
// with verify before it is returned.
//
// For a BC parameter set the reversed MAC network is searched and the
// winner dualized; the weight limit then applies to the MAC side.
//
// Requires params.q <= max_q <= 6. Throws ParameterError on bad arguments and
// SearchBudgetError when more than `budget` steps would be needed.
SearchResult search_best(const CellParams& params, int max_col_weight, int max_q = kSearchMaxQ,
                         std::uint64_t budget = kDefaultSearchBudget, Model model = Model::Imac);

}  // namespace ldcell
