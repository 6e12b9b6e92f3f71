#include "ldcell/scheme.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ldcell/error.hpp"

namespace ldcell {

bool MessageEntry::decoded_by(int rx) const {
  return std::find(decoders.begin(), decoders.end(), rx) != decoders.end();
}

LinearScheme LinearScheme::empty(Model model, const CellParams& params) {
  LinearScheme s;
  s.model = model;
  s.params = params;
  const auto q = static_cast<std::size_t>(params.q);
  auto add = [&](std::string name, int owner, std::vector<int> decoders) {
    s.messages.push_back(MessageEntry{std::move(name), owner, std::move(decoders), BitMatrix(q, 0)});
  };
  if (model == Model::Imac) {
    add("m1", 1, {1});
    add("m2", 2, {1});
    add("m3", 3, {2});
    add("m4", 4, {2});
  } else {
    add("m12", 1, {1, 2});
    add("m1", 1, {1});
    add("m2", 1, {2});
    add("m34", 2, {3, 4});
    add("m3", 2, {3});
    add("m4", 2, {4});
  }
  return s;
}

std::size_t LinearScheme::total_bits() const {
  std::size_t n = 0;
  for (const auto& m : messages) n += m.kbits();
  return n;
}

void LinearScheme::validate() const {
  params.validate();
  const auto q = static_cast<std::size_t>(params.q);
  std::set<std::string> names;
  std::set<std::pair<int, std::vector<int>>> slots;
  for (const auto& m : messages) {
    if (!names.insert(m.name).second) throw ParameterError("duplicate message name '" + m.name + "'");
    if (m.owner < 1 || m.owner > transmitter_count(model)) {
      throw ParameterError("message '" + m.name + "' has unknown owner " + std::to_string(m.owner));
    }
    if (m.generator.rows() != q && m.generator.cols() != 0) {
      throw ParameterError("generator of '" + m.name + "' has " + std::to_string(m.generator.rows()) +
                           " rows, expected q = " + std::to_string(q));
    }
    if (m.decoders.empty()) throw ParameterError("message '" + m.name + "' has no decoder");
    if (!std::is_sorted(m.decoders.begin(), m.decoders.end()) ||
        std::adjacent_find(m.decoders.begin(), m.decoders.end()) != m.decoders.end()) {
      throw ParameterError("decoders of '" + m.name + "' must be sorted and distinct");
    }
    if (model == Model::Imac) {
      const int cell = m.owner <= 2 ? 1 : 2;
      if (m.decoders != std::vector<int>{cell}) {
        throw ParameterError("MAC message '" + m.name + "' must be decoded by receiver " + std::to_string(cell));
      }
      if (!slots.insert({m.owner, {}}).second) {
        throw ParameterError("transmitter " + std::to_string(m.owner) + " carries more than one message");
      }
    } else {
      const int lo = m.owner == 1 ? 1 : 3;
      for (int rx : m.decoders) {
        if (rx < lo || rx > lo + 1) {
          throw ParameterError("BC message '" + m.name + "' decoded outside its cell");
        }
      }
      if (!slots.insert({m.owner, m.decoders}).second) {
        throw ParameterError("transmitter " + std::to_string(m.owner) + " has two messages for the same receivers");
      }
    }
  }
}

MessageEntry& LinearScheme::message(const std::string& name) {
  for (auto& m : messages) {
    if (m.name == name) return m;
  }
  throw ParameterError("no message named '" + name + "'");
}

const MessageEntry& LinearScheme::message(const std::string& name) const {
  return const_cast<LinearScheme*>(this)->message(name);
}

void LinearScheme::add_bit(const std::string& name, const std::vector<int>& levels) {
  const auto q = static_cast<std::size_t>(params.q);
  BitVector column(q);
  for (int level : levels) {
    if (level < 1 || static_cast<std::size_t>(level) > q) {
      throw ParameterError("level " + std::to_string(level) + " outside 1.." + std::to_string(q));
    }
    column.flip(static_cast<std::size_t>(level - 1));
  }
  MessageEntry& m = message(name);
  auto cols = m.generator.cols() == 0 ? std::vector<BitVector>{} : m.generator.columns();
  cols.push_back(std::move(column));
  m.generator = BitMatrix::from_columns(q, cols);
}

ReceiverBlocks receiver_blocks(const LinearScheme& s, int rx) {
  if (rx < 1 || rx > receiver_count(s.model)) throw ParameterError("unknown receiver " + std::to_string(rx));
  const auto q = static_cast<std::size_t>(s.params.q);
  ReceiverBlocks blocks{BitMatrix(q, 0), BitMatrix(q, 0)};
  for (const auto& m : s.messages) {
    if (m.kbits() == 0) continue;
    const int gain = link_gain(s.model, s.params, m.owner, rx);
    BitMatrix image = shift_apply(q, static_cast<std::size_t>(gain), m.generator);
    auto& block = m.decoded_by(rx) ? blocks.desired : blocks.nuisance;
    block = hconcat(block, image);
  }
  return blocks;
}

Certificate verify(const LinearScheme& s) {
  s.validate();
  Certificate cert;
  cert.total_bits = s.total_bits();
  cert.pass = true;
  for (int rx = 1; rx <= receiver_count(s.model); ++rx) {
    const ReceiverBlocks b = receiver_blocks(s, rx);
    ReceiverCertificate rc;
    rc.receiver = rx;
    rc.desired_bits = b.desired.cols();
    rc.desired_rank = rank(b.desired);
    rc.nuisance_rank = rank(b.nuisance);
    rc.joint_rank = rank(hconcat(b.desired, b.nuisance));
    rc.pass = rc.desired_rank == rc.desired_bits && rc.joint_rank == rc.desired_rank + rc.nuisance_rank;
    cert.pass = cert.pass && rc.pass;
    cert.receivers.push_back(rc);
  }
  cert.certified_rate = cert.pass ? Rate(static_cast<std::int64_t>(cert.total_bits)) : Rate(0);
  return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

struct BitRef {
  std::size_t message;
  BitVector column;
};

std::uint64_t key_of(const BitVector& v) { return v.words().empty() ? 0 : v.words().front(); }

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

}  // namespace

Certificate verify_exhaustive(const LinearScheme& s, std::size_t bit_limit) {
  s.validate();
  const std::size_t total = s.total_bits();
  if (total > bit_limit || total > 30) {
    throw CapacityError("exhaustive check limited to " + std::to_string(bit_limit) + " bits, scheme has " +
                        std::to_string(total));
  }
  const auto q = static_cast<std::size_t>(s.params.q);
  const int ntx = transmitter_count(s.model);
  const int nrx = receiver_count(s.model);

  std::vector<BitRef> bits;
  for (std::size_t mi = 0; mi < s.messages.size(); ++mi) {
    for (std::size_t c = 0; c < s.messages[mi].kbits(); ++c) bits.push_back({mi, s.messages[mi].generator.column(c)});
  }

  auto outputs = [&](std::uint32_t assignment) {
    std::vector<BitVector> x(static_cast<std::size_t>(ntx), BitVector(q));
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if ((assignment >> b) & 1U) x[static_cast<std::size_t>(s.messages[bits[b].message].owner - 1)] ^= bits[b].column;
    }
    std::vector<BitVector> y;
    if (s.model == Model::Imac) {
      auto [y1, y2] = imac_output(s.params, x[0], x[1], x[2], x[3]);
      y = {std::move(y1), std::move(y2)};
    } else {
      auto ys = ibc_output(s.params, x[0], x[1]);
      y.assign(ys.begin(), ys.end());
    }
    return y;
  };

  // Per-receiver masks of desired / nuisance bit positions.
  std::vector<std::uint32_t> desired_mask(static_cast<std::size_t>(nrx), 0);
  for (int rx = 1; rx <= nrx; ++rx) {
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if (s.messages[bits[b].message].decoded_by(rx)) desired_mask[static_cast<std::size_t>(rx - 1)] |= 1U << b;
    }
  }

  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> decoded(static_cast<std::size_t>(nrx));
  std::vector<std::unordered_set<std::uint64_t>> desired_images(static_cast<std::size_t>(nrx));
  std::vector<std::unordered_set<std::uint64_t>> nuisance_images(static_cast<std::size_t>(nrx));
  std::vector<bool> ok(static_cast<std::size_t>(nrx), true);

  for (std::uint64_t a = 0; a < (std::uint64_t{1} << total); ++a) {
    const auto assignment = static_cast<std::uint32_t>(a);
    const auto y = outputs(assignment);
    for (std::size_t r = 0; r < static_cast<std::size_t>(nrx); ++r) {
      const std::uint64_t key = key_of(y[r]);
      const std::uint32_t wanted = assignment & desired_mask[r];
      auto [it, inserted] = decoded[r].emplace(key, wanted);
      if (!inserted && it->second != wanted) ok[r] = false;
      if ((assignment & ~desired_mask[r]) == 0) desired_images[r].insert(key);
      if ((assignment & desired_mask[r]) == 0) nuisance_images[r].insert(key);
    }
  }

  Certificate cert;
  cert.total_bits = total;
  cert.pass = true;
  for (int rx = 1; rx <= nrx; ++rx) {
    const auto r = static_cast<std::size_t>(rx - 1);
    ReceiverCertificate rc;
    rc.receiver = rx;
    rc.desired_bits = static_cast<std::size_t>(std::popcount(desired_mask[r]));
    rc.desired_rank = log2_exact(desired_images[r].size());
    rc.nuisance_rank = log2_exact(nuisance_images[r].size());
    rc.joint_rank = log2_exact(decoded[r].size());
    rc.pass = ok[r];
    cert.pass = cert.pass && rc.pass;
    cert.receivers.push_back(rc);
  }
  cert.certified_rate = cert.pass ? Rate(static_cast<std::int64_t>(total)) : Rate(0);
  return cert;
}

// ---------------------------------------------------------------------------
// Duality

namespace {

// Row vector u (as a length-q column) with u . columns[j] = [j == target] for
// every j, preferring zeros on free coordinates. Empty optional if none.
std::optional<BitVector> zero_forcing_row(const std::vector<BitVector>& columns, std::size_t target, std::size_t q) {
  // Augmented system: one equation per column, unknowns u_0..u_{q-1}.
  struct Equation {
    BitVector coeffs;
    bool rhs;
  };
  std::vector<Equation> eqs;
  eqs.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) eqs.push_back({columns[j], j == target});

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < q && row < eqs.size(); ++c) {
    std::size_t p = row;
    while (p < eqs.size() && !eqs[p].coeffs.get(c)) ++p;
    if (p == eqs.size()) continue;
    std::swap(eqs[p], eqs[row]);
    for (std::size_t k = 0; k < eqs.size(); ++k) {
      if (k != row && eqs[k].coeffs.get(c)) {
        eqs[k].coeffs ^= eqs[row].coeffs;
        eqs[k].rhs = eqs[k].rhs != eqs[row].rhs;
      }
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t k = row; k < eqs.size(); ++k) {
    if (eqs[k].rhs) return std::nullopt;
  }
  BitVector u(q);
  for (std::size_t k = 0; k < row; ++k) {
    if (eqs[k].rhs) u.set(pivot_col[k], true);
  }
  return u;
}

}  // namespace

LinearScheme dualize(const LinearScheme& s) {
  if (s.model != Model::Imac) throw ParameterError("dualize expects a MAC scheme");
  s.validate();
  const auto q = static_cast<std::size_t>(s.params.q);
  LinearScheme dual = LinearScheme::empty(Model::Ibc, s.params.reciprocal());

  for (int rx = 1; rx <= 2; ++rx) {
    // Column order at this receiver: desired streams first, then nuisance,
    // matching receiver_blocks.
    const ReceiverBlocks blocks = receiver_blocks(s, rx);
    std::vector<BitVector> columns = blocks.desired.cols() == 0 ? std::vector<BitVector>{} : blocks.desired.columns();
    if (blocks.nuisance.cols() != 0) {
      for (auto& c : blocks.nuisance.columns()) columns.push_back(std::move(c));
    }

    std::size_t stream = 0;
    for (const auto& m : s.messages) {
      if (!m.decoded_by(rx)) continue;
      const std::string dual_name = "m" + std::to_string(m.owner);
      for (std::size_t b = 0; b < m.kbits(); ++b, ++stream) {
        const auto row = zero_forcing_row(columns, stream, q);
        const BitVector codeword = reverse_levels(row ? *row : columns[stream]);
        std::vector<int> levels;
        for (std::size_t i = 0; i < q; ++i) {
          if (codeword.get(i)) levels.push_back(static_cast<int>(i) + 1);
        }
        dual.add_bit(dual_name, levels);
      }
    }
  }
  return dual;
}

}  // namespace ldcell
