// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <complex>
#include <random>
#include <vector>

#include "stabwire/symplectic.hpp"

using namespace stabwire;

namespace {

// Independent elimination oracle: plain integer Gaussian elimination
// over F2, no bit packing.
int naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Dense 4x4 commutator oracle for two-qubit Paulis.
using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;
M2 pauli_matrix(char c) {
  switch (c) {
    case 'I': return {{{C(1), C(0)}, {C(0), C(1)}}};
    case 'X': return {{{C(0), C(1)}, {C(1), C(0)}}};
    case 'Y': return {{{C(0), C(0, -1)}, {C(0, 1), C(0)}}};
    default: return {{{C(1), C(0)}, {C(0), C(-1)}}};
  }
}
std::vector<std::vector<C>> kron2(const M2& a, const M2& b) {
  std::vector<std::vector<C>> m(4, std::vector<C>(4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return m;
}
bool dense_commute(const std::string& p, const std::string& q) {
  auto a = kron2(pauli_matrix(p[0]), pauli_matrix(p[1]));
  auto b = kron2(pauli_matrix(q[0]), pauli_matrix(q[1]));
  double diff = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      C ab{}, ba{};
      for (int k = 0; k < 4; ++k) {
        ab += a[i][k] * b[k][j];
        ba += b[i][k] * a[k][j];
      }
      diff += std::abs(ab - ba);
    }
  return diff < 1e-12;
}

BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                           std::size_t cols) {
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c);
  return m;
}

std::vector<std::vector<int>> to_naive(const BinaryMatrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

}  // namespace

TEST_CASE("symplectic form basics") {
  auto X = PauliVector::from_string("X");
  auto Z = PauliVector::from_string("Z");
  CHECK(symplectic_form(X, Z) == 1);
  CHECK(symplectic_form(X, X) == 0);
  CHECK(symplectic_form(Z, Z) == 0);

  // Bell-pair generators commute; verified against the dense commutator.
  auto XX = PauliVector::from_string("XX");
  auto ZZ = PauliVector::from_string("ZZ");
  REQUIRE(dense_commute("XX", "ZZ"));
  CHECK(symplectic_form(XX, ZZ) == 0);

  // The symplectic form must agree with the dense commutator on every
  // pair of 2-qubit Paulis.
  const std::string letters = "IXYZ";
  for (char a0 : letters)
    for (char a1 : letters)
      for (char b0 : letters)
        for (char b1 : letters) {
          std::string p{a0, a1}, q{b0, b1};
          auto pv = PauliVector::from_string(p);
          auto qv = PauliVector::from_string(q);
          CHECK(symplectic_form(pv, qv) == (dense_commute(p, q) ? 0 : 1));
        }
}

TEST_CASE("symplectic form is alternating and symmetric") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 8;
    PauliVector a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() & 1) a.x.set(i);
      if (rng() & 1) a.z.set(i);
      if (rng() & 1) b.x.set(i);
      if (rng() & 1) b.z.set(i);
    }
    CHECK(symplectic_form(a, a) == 0);
    CHECK(symplectic_form(a, b) == symplectic_form(b, a));
  }
}

TEST_CASE("pauli string round trip") {
  auto p = PauliVector::from_string("IXYZI");
  CHECK(p.n == 5);
  CHECK(p.x.get(1));
  CHECK(p.x.get(2));
  CHECK(p.z.get(2));
  CHECK(p.z.get(3));
  CHECK(p.to_string() == "IXYZI");
  CHECK_THROWS(PauliVector::from_string("AB"));
}

TEST_CASE("rref") {
  CHECK(BinaryMatrix::identity(4).rref() == BinaryMatrix::identity(4));

  BinaryMatrix m(2, 2);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 0);
  m.set(1, 1);
  BinaryMatrix expect(2, 2);
  expect.set(0, 0);
  expect.set(0, 1);
  CHECK(m.rref() == expect);

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMatrix r = random_matrix(rng, 10, 10);
    CHECK(static_cast<int>(r.rank()) == naive_rank(to_naive(r)));
    CHECK(r.rref().rref() == r.rref());
    CHECK(r.rref().row_basis() == r.row_basis());
  }
}

TEST_CASE("rcef") {
  CHECK(BinaryMatrix::identity(3).rcef() == BinaryMatrix::identity(3));

  BinaryMatrix m(2, 2);  // duplicated column
  m.set(0, 0);
  m.set(0, 1);
  BinaryMatrix expect(2, 2);
  expect.set(0, 0);
  CHECK(m.rcef() == expect);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMatrix r = random_matrix(rng, 6, 9);
    CHECK(r.rcef().rank() == r.rank());
    CHECK(r.rcef().rcef() == r.rcef());
  }
}

TEST_CASE("rank of ring generator family") {
  CHECK(BinaryMatrix(4, 7).rank() == 0);
  CHECK(BinaryMatrix::identity(5).rank() == 5);

  // {Z_i} and {X_{i-1} X_i X_{i+1}} on a ring of 6 sites.
  std::size_t n = 6;
  BinaryMatrix m(0, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    PauliVector z(n);
    z.z.set(i);
    m.append_row(pack_pauli(z));
  }
  for (std::size_t i = 0; i < n; ++i) {
    PauliVector x(n);
    x.x.set((i + n - 1) % n);
    x.x.set(i);
    x.x.set((i + 1) % n);
    m.append_row(pack_pauli(x));
  }
  CHECK(m.rank() == 10);
}

TEST_CASE("solve") {
  std::mt19937_64 rng(2024);
  BinaryMatrix m = random_matrix(rng, 5, 8);

  auto c0 = m.solve(Bits(8));
  REQUIRE(c0.has_value());
  CHECK(c0->none());

  auto c3 = m.solve(m.row(3));
  REQUIRE(c3.has_value());
  Bits back(8);
  for (std::size_t i = 0; i < 5; ++i)
    if (c3->get(i)) back ^= m.row(i);
  CHECK(back == m.row(3));

  for (int trial = 0; trial < 100; ++trial) {
    BinaryMatrix r = random_matrix(rng, 4 + rng() % 5, 6 + rng() % 6);
    Bits v(r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (rng() & 1) v ^= r.row(i);
    auto c = r.solve(v);
    REQUIRE(c.has_value());
    Bits prod(r.cols());
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (c->get(i)) prod ^= r.row(i);
    CHECK(prod == v);

    // Random vector: solvable exactly when stacking does not raise rank.
    Bits w(r.cols());
    for (std::size_t k = 0; k < r.cols(); ++k)
      if (rng() & 1) w.set(k);
    BinaryMatrix stacked = r;
    stacked.append_row(w);
    bool solvable = r.solve(w).has_value();
    CHECK(solvable == (stacked.rank() == r.rank()));
  }
}

TEST_CASE("symplectic complement") {
  // No constraints: the full space.
  CHECK(BinaryMatrix(0, 4).symplectic_complement().rank() == 4);

  // G = {Z_1} on n=2: brute force over all 16 vectors.
  PauliVector z1(2);
  z1.z.set(0);
  BinaryMatrix g(0, 4);
  g.append_row(pack_pauli(z1));
  BinaryMatrix comp = g.symplectic_complement();
  CHECK(comp.rank() == 3);
  std::vector<PauliVector> expect;
  for (unsigned v = 0; v < 16; ++v) {
    PauliVector p(2);
    if (v & 8) p.x.set(0);
    if (v & 4) p.x.set(1);
    if (v & 2) p.z.set(0);
    if (v & 1) p.z.set(1);
    if (symplectic_form(p, z1) == 0 && !p.identity()) expect.push_back(p);
  }
  CHECK(expect.size() == 7);  // span{Z1, Z2, X2} minus identity
  for (const auto& p : expect)
    CHECK(comp.solve(pack_pauli(p)).has_value());

  // A Lagrangian is its own complement.
  BinaryMatrix lag(0, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    PauliVector p(3);
    p.z.set(i);
    lag.append_row(pack_pauli(p));
  }
  CHECK(lag.symplectic_complement().row_basis() == lag.row_basis());

  // dim(complement) + rank = 2n.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng() % 8;
    BinaryMatrix r = random_matrix(rng, 1 + rng() % (2 * n), 2 * n);
    CHECK(r.symplectic_complement().rank() + r.rank() == 2 * n);
  }
}
