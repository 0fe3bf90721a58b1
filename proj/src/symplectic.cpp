// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/symplectic.hpp"

#include <bit>
#include <stdexcept>

namespace stabwire {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (Word w : w_) c += std::popcount(w);
  return c;
}

std::size_t Bits::first_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return i * 64 + std::countl_zero(w_[i]);
  return npos;
}

bool Bits::and_parity(const Bits& a, const Bits& b) {
  Word acc = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
  return std::popcount(acc) & 1;
}

Bits Bits::slice(std::size_t from, std::size_t len) const {
  Bits out(len);
  for (std::size_t i = 0; i < len; ++i)
    if (get(from + i)) out.set(i);
  return out;
}

void Bits::paste(std::size_t from, const Bits& src) {
  for (std::size_t i = 0; i < src.size(); ++i) set(from + i, src.get(i));
}

PauliVector PauliVector::from_string(std::string_view s) {
  PauliVector p(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i);
        break;
      case 'Y':
        p.x.set(i);
        p.z.set(i);
        break;
      case 'Z':
        p.z.set(i);
        break;
      default:
        throw std::invalid_argument("Pauli string may only contain I,X,Y,Z");
    }
  }
  return p;
}

std::string PauliVector::to_string() const {
  std::string s(n, 'I');
  for (std::size_t i = 0; i < n; ++i) {
    bool xb = x.get(i), zb = z.get(i);
    if (xb && zb)
      s[i] = 'Y';
    else if (xb)
      s[i] = 'X';
    else if (zb)
      s[i] = 'Z';
  }
  return s;
}

int symplectic_form(const PauliVector& a, const PauliVector& b) {
  if (a.n != b.n)
    throw std::invalid_argument("symplectic_form: qubit count mismatch");
  return Bits::and_parity(a.x, b.z) ^ Bits::and_parity(a.z, b.x);
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<Bits> rows, std::size_t cols) {
  BinaryMatrix m;
  m.rows_ = rows.size();
  m.cols_ = cols;
  for (auto& r : rows)
    if (r.size() != cols)
      throw std::invalid_argument("from_rows: column count mismatch");
  m.row_ = std::move(rows);
  return m;
}

void BinaryMatrix::append_row(Bits b) {
  if (b.size() != cols_ && rows_ > 0)
    throw std::invalid_argument("append_row: column count mismatch");
  if (rows_ == 0) cols_ = b.size();
  row_.push_back(std::move(b));
  ++rows_;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BinaryMatrix BinaryMatrix::rref() const {
  BinaryMatrix m = *this;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t piv = Bits::npos;
    for (std::size_t r = lead; r < rows_; ++r)
      if (m.get(r, c)) {
        piv = r;
        break;
      }
    if (piv == Bits::npos) continue;
    m.swap_rows(lead, piv);
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != lead && m.get(r, c)) m.xor_rows(r, lead);
    ++lead;
  }
  return m;
}

BinaryMatrix BinaryMatrix::rcef() const { return transpose().rref().transpose(); }

std::size_t BinaryMatrix::rank() const {
  BinaryMatrix m = rref();
  std::size_t r = 0;
  while (r < rows_ && m.row(r).any()) ++r;
  return r;
}

BinaryMatrix BinaryMatrix::row_basis() const {
  BinaryMatrix m = rref();
  BinaryMatrix out(0, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (m.row(r).any()) out.append_row(m.row(r));
  return out;
}

std::optional<Bits> BinaryMatrix::solve(const Bits& v) const {
  if (v.size() != cols_) throw std::invalid_argument("solve: length mismatch");
  // Eliminate while tracking row combinations.
  std::vector<Bits> m, comb;
  for (std::size_t r = 0; r < rows_; ++r) {
    m.push_back(row_[r]);
    Bits c(rows_);
    c.set(r);
    comb.push_back(std::move(c));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < m.size(); ++c) {
    std::size_t piv = Bits::npos;
    for (std::size_t r = lead; r < m.size(); ++r)
      if (m[r].get(c)) {
        piv = r;
        break;
      }
    if (piv == Bits::npos) continue;
    std::swap(m[lead], m[piv]);
    std::swap(comb[lead], comb[piv]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != lead && m[r].get(c)) {
        m[r] ^= m[lead];
        comb[r] ^= comb[lead];
      }
    pivot_col.push_back(c);
    ++lead;
  }
  Bits residual = v;
  Bits coeff(rows_);
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    if (residual.get(pivot_col[i])) {
      residual ^= m[i];
      coeff ^= comb[i];
    }
  if (residual.any()) return std::nullopt;
  return coeff;
}

BinaryMatrix BinaryMatrix::left_kernel() const {
  std::vector<Bits> m, comb;
  for (std::size_t r = 0; r < rows_; ++r) {
    m.push_back(row_[r]);
    Bits c(rows_);
    c.set(r);
    comb.push_back(std::move(c));
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < m.size(); ++c) {
    std::size_t piv = Bits::npos;
    for (std::size_t r = lead; r < m.size(); ++r)
      if (m[r].get(c)) {
        piv = r;
        break;
      }
    if (piv == Bits::npos) continue;
    std::swap(m[lead], m[piv]);
    std::swap(comb[lead], comb[piv]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != lead && m[r].get(c)) {
        m[r] ^= m[lead];
        comb[r] ^= comb[lead];
      }
    ++lead;
  }
  BinaryMatrix out(0, rows_);
  for (std::size_t r = lead; r < m.size(); ++r) out.append_row(comb[r]);
  return out.row_basis();
}

BinaryMatrix BinaryMatrix::symplectic_complement() const {
  if (cols_ % 2 != 0)
    throw std::invalid_argument("symplectic_complement: odd column count");
  std::size_t n = cols_ / 2;
  // omega(x, g) = x . swap_halves(g), so the complement is the right
  // nullspace of the half-swapped matrix.
  BinaryMatrix swapped(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Bits b(cols_);
    b.paste(0, row_[r].slice(n, n));
    b.paste(n, row_[r].slice(0, n));
    swapped.set_row(r, std::move(b));
  }
  return swapped.transpose().left_kernel();
}

BinaryMatrix BinaryMatrix::stack(const BinaryMatrix& o) const {
  BinaryMatrix out = *this;
  if (out.rows_ == 0) out.cols_ = o.cols_;
  for (std::size_t r = 0; r < o.rows_; ++r) out.append_row(o.row(r));
  return out;
}

Bits pack_pauli(const PauliVector& p) {
  Bits b(2 * p.n);
  b.paste(0, p.x);
  b.paste(p.n, p.z);
  return b;
}

PauliVector unpack_pauli(const Bits& row, std::size_t n) {
  PauliVector p(n);
  p.x = row.slice(0, n);
  p.z = row.slice(n, n);
  return p;
}

int symplectic_form_packed(const Bits& a, const Bits& b, std::size_t n) {
  return Bits::and_parity(a.slice(0, n), b.slice(n, n)) ^
         Bits::and_parity(a.slice(n, n), b.slice(0, n));
}

}  // namespace stabwire
