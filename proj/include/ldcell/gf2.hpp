#pragma once

// Exact linear algebra over GF(2).
//
// Level convention used throughout the project: index 0 of a vector (row 0
// of a matrix) is level 1, the most significant bit level. A channel gain of
// n keeps the n most significant levels of the input and delivers them to the
// n least significant positions of the output.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ldcell {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);
  BitVector(std::initializer_list<int> bits);

  static BitVector from_bits(const std::vector<int>& bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const;
  void set(std::size_t i, bool value);
  void flip(std::size_t i);

  std::size_t weight() const;
  bool is_zero() const;

  // Moves every level k positions towards the least significant end; the k
  // bottom levels fall off and k zeros enter at the top.
  BitVector shifted_down(std::size_t k) const;
  BitVector reversed() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  bool operator==(const BitVector& other) const = default;
  bool operator<(const BitVector& other) const;

  // Packed storage, bit (i % 64) of word (i / 64) holds index i.
  const std::vector<std::uint64_t>& words() const { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool value);

  BitVector column(std::size_t c) const;
  BitVector row(std::size_t r) const;
  std::vector<BitVector> columns() const;

  BitMatrix transposed() const;

  bool operator==(const BitMatrix& other) const = default;

  std::string to_string() const;

 private:
  friend BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
  friend std::size_t rank(const BitMatrix& m);

  const std::uint64_t* row_ptr(std::size_t r) const { return data_.data() + r * stride_; }
  std::uint64_t* row_ptr(std::size_t r) { return data_.data() + r * stride_; }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

// Throws ShapeError unless a.cols() == b.rows().
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVector mat_vec(const BitMatrix& a, const BitVector& x);

// [a | b]; throws ShapeError on a row-count mismatch. An operand with zero
// columns contributes nothing, whatever its row count.
BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);

// Gaussian elimination; 0 for an empty matrix.
std::size_t rank(const BitMatrix& m);

// The q x q down-shift matrix raised to `power` (zero once power >= q).
BitMatrix shift_matrix(std::size_t q, std::size_t power);

// Channel with gain n on a length-q vector: S^{q-n} x.
BitVector shift_apply(std::size_t q, std::size_t n, const BitVector& x);
// Same map applied to every column of m (m has q rows).
BitMatrix shift_apply(std::size_t q, std::size_t n, const BitMatrix& m);

// Row i of the result is row (rows - 1 - i) of the input.
BitMatrix reverse_levels(const BitMatrix& m);
BitVector reverse_levels(const BitVector& v);

}  // namespace ldcell
