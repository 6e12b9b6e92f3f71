#pragma once

// Alignment construction for the interfering MAC in sub-case A of the very
// weak regime.

#include <optional>
#include <vector>

#include "ldcell/error.hpp"
#include "ldcell/scheme.hpp"

namespace ldcell {

// Level usage of one sub-system: a MAC with gains strong >= weak whose top
// `window` levels leak into a peer receiver, and the peer link that uses the
// window heights left free by the leak.
struct SubsystemLayout {
  std::vector<int> strong_levels;  // 1-based transmit levels of the strong user
  std::vector<int> weak_levels;    // 1-based transmit levels of the weak user
  std::vector<int> peer_heights;   // 1-based heights (1 = bottom) inside the window at the peer receiver

  std::size_t rate() const { return strong_levels.size() + weak_levels.size() + peer_heights.size(); }
};

// The window is cut into blocks of `delta` levels. Both users send on the odd
// blocks, which coincide at the peer receiver and interleave at their own
// receiver; the peer takes the even blocks and any remainder below the last
// full block. The strong user fills the levels under the window that the
// weak user's shifted blocks leave free. Requires weak >= window and
// strong - weak == delta.
SubsystemLayout layout_subsystem(int strong, int weak, int window, int delta);

class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, std::optional<LinearScheme> best)
      : Error(what), best_(std::move(best)) {}
  // Best verified scheme found, if any.
  const std::optional<LinearScheme>& best() const { return best_; }

 private:
  std::optional<LinearScheme> best_;
};

// Unit-weight MAC scheme reaching achievable_sum(p), certified with verify.
// Throws RegimeError outside VeryWeakSubA. If the layout ever fails to verify
// or falls short, a bounded search (q <= 6) is tried before giving up with
// ConstructionError.
LinearScheme construct_imac(const CellParams& p);

}  // namespace ldcell
