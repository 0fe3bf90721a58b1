// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabwire {

using Word = std::uint64_t;

/// Fixed-length bit vector over F2.
///
/// Bit i lives in word i/64 at position 63-(i%64), so comparing the word
/// arrays as integers is the same as comparing bit strings with index 0
/// first. All canonical orderings in this library rely on that.
class Bits {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), w_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    return (w_[i >> 6] >> (63 - (i & 63))) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    Word m = Word(1) << (63 - (i & 63));
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= Word(1) << (63 - (i & 63)); }

  bool none() const {
    for (Word w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  std::size_t count() const;

  /// Index of the first set bit, or npos.
  std::size_t first_set() const;

  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend Bits operator^(Bits a, const Bits& b) {
    a ^= b;
    return a;
  }

  /// Parity of popcount(a & b).
  static bool and_parity(const Bits& a, const Bits& b);

  /// Bits [from, from+len) as a new vector.
  Bits slice(std::size_t from, std::size_t len) const;

  /// Copy `src` into bits [from, from+src.size()).
  void paste(std::size_t from, const Bits& src);

  bool operator==(const Bits& o) const = default;
  bool operator<(const Bits& o) const { return w_ < o.w_; }

  const std::vector<Word>& words() const { return w_; }

 private:
  std::size_t size_ = 0;
  std::vector<Word> w_;
};

/// An n-qubit Pauli operator modulo phase: a point of F2^{2n}.
/// Coordinate i of the x half is the X exponent on qubit i, likewise z.
struct PauliVector {
  std::size_t n = 0;
  Bits x, z;

  PauliVector() = default;
  explicit PauliVector(std::size_t n_) : n(n_), x(n_), z(n_) {}

  /// Parse a string over {I,X,Y,Z}, qubit 0 leftmost. Y sets both bits.
  static PauliVector from_string(std::string_view s);
  std::string to_string() const;

  bool identity() const { return x.none() && z.none(); }

  PauliVector& operator*=(const PauliVector& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
  friend PauliVector operator*(PauliVector a, const PauliVector& b) {
    a *= b;
    return a;
  }

  bool operator==(const PauliVector& o) const = default;
  bool operator<(const PauliVector& o) const {
    return x < o.x || (x == o.x && z < o.z);
  }
};

/// omega(a, b) = sum_i a_i^X b_i^Z + a_i^Z b_i^X mod 2.
/// Zero exactly when the Paulis commute.
int symplectic_form(const PauliVector& a, const PauliVector& b);

/// Row-major bit matrix over F2.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows, Bits(cols)) {}

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix from_rows(std::vector<Bits> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { row_[r].set(c, v); }

  const Bits& row(std::size_t r) const { return row_[r]; }
  void set_row(std::size_t r, Bits b) { row_[r] = std::move(b); }
  void append_row(Bits b);

  void xor_rows(std::size_t dst, std::size_t src) { row_[dst] ^= row_[src]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(row_[a], row_[b]); }

  BinaryMatrix transpose() const;

  /// Reduced row echelon form; same shape, zero rows at the bottom.
  BinaryMatrix rref() const;
  /// Reduced column echelon form: transpose(rref(transpose(M))).
  BinaryMatrix rcef() const;

  std::size_t rank() const;

  /// rref() with zero rows dropped.
  BinaryMatrix row_basis() const;

  /// Coefficients c with c^T M = v, if v is in the row space.
  std::optional<Bits> solve(const Bits& v) const;

  /// Basis (in rref) of {c : c^T M = 0}.
  BinaryMatrix left_kernel() const;

  /// Basis of {x in F2^{2n} : omega(x, g) = 0 for every row g}, where
  /// rows are packed as [x-block | z-block] with n = cols/2.
  BinaryMatrix symplectic_complement() const;

  /// Rows of this matrix followed by rows of `o`.
  BinaryMatrix stack(const BinaryMatrix& o) const;

  bool operator==(const BinaryMatrix& o) const = default;
  bool operator<(const BinaryMatrix& o) const { return row_ < o.row_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Bits> row_;
};

/// Pack an n-qubit Pauli as a 2n-bit row [x-block | z-block].
Bits pack_pauli(const PauliVector& p);
PauliVector unpack_pauli(const Bits& row, std::size_t n);

/// Symplectic form between two packed 2n-bit rows.
int symplectic_form_packed(const Bits& a, const Bits& b, std::size_t n);

}  // namespace stabwire
