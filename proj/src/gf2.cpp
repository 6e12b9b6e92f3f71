#include "ldcell/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "ldcell/error.hpp"

namespace ldcell {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

std::uint64_t bit_mask(std::size_t i) { return std::uint64_t{1} << (i % kWordBits); }

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length) : size_(length), words_(word_count(length), 0) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
  std::size_t i = 0;
  for (int b : bits) set(i++, (b & 1) != 0);
}

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, (bits[i] & 1) != 0);
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= size_) throw ShapeError("bit index " + std::to_string(i) + " out of range");
  return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= size_) throw ShapeError("bit index " + std::to_string(i) + " out of range");
  if (value) {
    words_[i / kWordBits] |= bit_mask(i);
  } else {
    words_[i / kWordBits] &= ~bit_mask(i);
  }
}

void BitVector::flip(std::size_t i) { set(i, !get(i)); }

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

BitVector BitVector::shifted_down(std::size_t k) const {
  BitVector out(size_);
  if (k >= size_) return out;
  // Index i moves to i + k; indices grow towards the least significant level.
  const std::size_t word_shift = k / kWordBits;
  const std::size_t bit_shift = k % kWordBits;
  for (std::size_t w = words_.size(); w-- > word_shift;) {
    std::uint64_t value = words_[w - word_shift] << bit_shift;
    if (bit_shift != 0 && w > word_shift) value |= words_[w - word_shift - 1] >> (kWordBits - bit_shift);
    out.words_[w] = value;
  }
  if (size_ % kWordBits != 0) out.words_.back() &= (std::uint64_t{1} << (size_ % kWordBits)) - 1;
  return out;
}

BitVector BitVector::reversed() const {
  BitVector out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.set(size_ - 1 - i, true);
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) {
    throw ShapeError("xor of vectors with lengths " + std::to_string(size_) + " and " +
                     std::to_string(other.size_));
  }
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::operator<(const BitVector& other) const {
  if (size_ != other.size_) return size_ < other.size_;
  return words_ < other.words_;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
  return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(word_count(cols)), data_(rows * word_count(cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rows[r][c] & 1) != 0);
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].get(r)) m.set(r, c, true);
    }
  }
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  return (row_ptr(r)[c / kWordBits] & bit_mask(c)) != 0;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  auto& word = row_ptr(r)[c / kWordBits];
  if (value) {
    word |= bit_mask(c);
  } else {
    word &= ~bit_mask(c);
  }
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r, true);
  }
  return v;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (get(r, c)) v.set(c, true);
  }
  return v;
}

std::vector<BitVector> BitMatrix::columns() const {
  std::vector<BitVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::string BitMatrix::to_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

// ---------------------------------------------------------------------------
// Free functions

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  BitMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::uint64_t* dst = out.row_ptr(i);
    for (std::size_t t = 0; t < a.cols_; ++t) {
      if (!a.get(i, t)) continue;
      const std::uint64_t* src = b.row_ptr(t);
      for (std::size_t w = 0; w < out.stride_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector shape mismatch");
  BitVector out(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!x.get(c)) continue;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a.get(r, c)) out.flip(r);
    }
  }
  return out;
}

BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw ShapeError("hconcat row-count mismatch");
  BitMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) out.set(r, c, true);
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  if (m.empty()) return 0;
  std::vector<std::uint64_t> work = m.data_;
  const std::size_t stride = m.stride_;
  auto row = [&](std::size_t r) { return work.data() + r * stride; };

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols_ && pivot_row < m.rows_; ++c) {
    const std::size_t w = c / kWordBits;
    const std::uint64_t bit = bit_mask(c);
    std::size_t r = pivot_row;
    while (r < m.rows_ && (row(r)[w] & bit) == 0) ++r;
    if (r == m.rows_) continue;
    if (r != pivot_row) std::swap_ranges(row(r), row(r) + stride, row(pivot_row));
    for (std::size_t k = pivot_row + 1; k < m.rows_; ++k) {
      if ((row(k)[w] & bit) == 0) continue;
      for (std::size_t x = w; x < stride; ++x) row(k)[x] ^= row(pivot_row)[x];
    }
    ++pivot_row;
  }
  return pivot_row;
}

BitMatrix shift_matrix(std::size_t q, std::size_t power) {
  BitMatrix s(q, q);
  for (std::size_t c = 0; c + power < q; ++c) s.set(c + power, c, true);
  return s;
}

BitVector shift_apply(std::size_t q, std::size_t n, const BitVector& x) {
  if (n > q) {
    throw ParameterError("gain " + std::to_string(n) + " exceeds ambient length " + std::to_string(q));
  }
  if (x.size() != q) {
    throw ShapeError("vector length " + std::to_string(x.size()) + " differs from q = " + std::to_string(q));
  }
  return x.shifted_down(q - n);
}

BitMatrix shift_apply(std::size_t q, std::size_t n, const BitMatrix& m) {
  if (n > q) {
    throw ParameterError("gain " + std::to_string(n) + " exceeds ambient length " + std::to_string(q));
  }
  if (m.rows() != q) throw ShapeError("matrix row count differs from q");
  const std::size_t k = q - n;
  BitMatrix out(q, m.cols());
  for (std::size_t r = 0; r + k < q; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) out.set(r + k, c, true);
    }
  }
  return out;
}

BitMatrix reverse_levels(const BitMatrix& m) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) out.set(m.rows() - 1 - r, c, true);
    }
  }
  return out;
}

BitVector reverse_levels(const BitVector& v) { return v.reversed(); }

}  // namespace ldcell
