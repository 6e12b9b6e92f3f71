#pragma once

// Single-shot linear schemes over GF(2) and their zero-error certification.

#include <cstddef>
#include <string>
#include <vector>

#include "ldcell/channel.hpp"
#include "ldcell/gf2.hpp"
#include "ldcell/rate.hpp"

namespace ldcell {

struct MessageEntry {
  std::string name;
  int owner = 0;               // transmitter id, 1-based
  std::vector<int> decoders;   // receiver ids, sorted
  BitMatrix generator;         // q x kbits; column j is the codeword of bit j

  std::size_t kbits() const { return generator.cols(); }
  bool decoded_by(int rx) const;
};

struct LinearScheme {
  Model model = Model::Imac;
  CellParams params;
  std::vector<MessageEntry> messages;

  // Message set with zero bits each: m1..m4 for the MAC, m12 m1 m2 m34 m3 m4
  // for the BC.
  static LinearScheme empty(Model model, const CellParams& params);

  std::size_t total_bits() const;

  // Throws ParameterError on dimension or ownership violations. Each MAC
  // transmitter carries at most one message, decoded by its own cell's
  // receiver; each BC message is decoded by a non-empty subset of its cell's
  // receivers and no two messages of a transmitter share that subset.
  void validate() const;

  MessageEntry& message(const std::string& name);
  const MessageEntry& message(const std::string& name) const;

  // Appends one bit to `name` whose generator column has the given 1-based
  // levels set.
  void add_bit(const std::string& name, const std::vector<int>& levels);
};

struct ReceiverBlocks {
  BitMatrix desired;   // images of bits the receiver must decode
  BitMatrix nuisance;  // images of every other bit reaching it
};

// Throws ParameterError for an unknown receiver id.
ReceiverBlocks receiver_blocks(const LinearScheme& s, int rx);

struct ReceiverCertificate {
  int receiver = 0;
  std::size_t desired_bits = 0;
  std::size_t desired_rank = 0;
  std::size_t nuisance_rank = 0;
  std::size_t joint_rank = 0;
  bool pass = false;
};

struct Certificate {
  std::vector<ReceiverCertificate> receivers;
  bool pass = false;
  std::size_t total_bits = 0;
  Rate certified_rate;  // total_bits when every receiver passes, else 0
};

// Rank test: a receiver passes iff its desired images are independent and
// meet the nuisance span only at zero.
Certificate verify(const LinearScheme& s);

inline constexpr std::size_t kExhaustiveBitLimit = 16;

// Enumerates every assignment of message bits, runs the channel and checks
// that the desired bits are a function of each receiver's output. Ranks are
// recovered as log2 of the number of distinct outputs. Throws CapacityError
// when the scheme carries more than `bit_limit` bits.
Certificate verify_exhaustive(const LinearScheme& s, std::size_t bit_limit = kExhaustiveBitLimit);

// MAC scheme to BC scheme on the reversed network (params.reciprocal()).
// Every MAC bit becomes a private BC bit for the receiver sitting where its
// transmitter was. Its BC codeword is the upside-down zero-forcing row the
// MAC receiver decodes it with; when a bit lands alone on one level that row
// is its received image, so the BC signal of a cell is the merged received
// MAC signal turned upside down. Bits whose receiver cannot separate them
// fall back to the upside-down received image. Common messages are present
// with zero bits. The result is not verified here. Throws ParameterError for
// a BC input.
LinearScheme dualize(const LinearScheme& s);

}  // namespace ldcell
