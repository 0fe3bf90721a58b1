// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stabwire/stabgroup.hpp"

namespace stabwire {

/// A [5,1] stabilizer tensor: a Lagrangian of F2^10 with the fixed leg
/// order (u, d, l, r, phys) = qubits (0, 1, 2, 3, 4). Leg order is part
/// of the identity; permuting legs gives a different tensor.
struct StabilizerTensor {
  StabilizerGroup group;

  StabilizerTensor() : group(5) {}
  explicit StabilizerTensor(StabilizerGroup g);

  bool operator==(const StabilizerTensor& o) const = default;
};

/// A tensor packed into one word: 5 rref rows of 10 bits, row 0 in the
/// highest-order bits, column c of a row at bit 9-c. Numeric order on
/// keys equals lexicographic order on the rref generator matrices.
using TensorKey = std::uint64_t;

TensorKey tensor_key(const StabilizerTensor& t);
StabilizerTensor tensor_from_key(TensorKey k);

/// Every maximally isotropic subspace of F2^{2n}, one rref basis each,
/// sorted lexicographically. Count is the product of (2^k + 1) over
/// k = 1..n.
std::vector<BinaryMatrix> enumerate_lagrangians(std::size_t n);

/// The n = 5 enumeration as sorted keys; ordinal = index.
std::vector<TensorKey> enumerate_tensors();

/// 2x2 matrix over F2 acting on the (x, z) bits of one leg:
/// x' = a x + b z, z' = c x + d z.
struct Mat2 {
  std::uint8_t a = 1, b = 0, c = 0, d = 1;
  bool operator==(const Mat2& o) const = default;
};

/// The 6 invertible 2x2 matrices over F2 (single-qubit Cliffords modulo
/// Paulis).
const std::array<Mat2, 6>& gl2_all();

/// The unique GL(2,F2) element s* such that m on one bond end and s* on
/// the other preserve the Bell bond group <XX, ZZ>. Found by search
/// rather than fixed by convention.
Mat2 bond_dual(const Mat2& m);

/// A virtual-leg gauge transformation: s_v acts on leg u with its
/// bond-preserving dual on leg d, s_h on leg l with dual on leg r. The
/// physical leg is untouched.
struct GaugeElement {
  Mat2 s_v, s_v_dual, s_h, s_h_dual;
};

/// All 36 gauge elements: GL(2,F2) x GL(2,F2).
const std::vector<GaugeElement>& gauge_group();

TensorKey apply_gauge(const GaugeElement& g, TensorKey t);

/// The orbit {g.t} as a sorted, deduplicated key list.
std::vector<TensorKey> gauge_orbit(TensorKey t);

/// Lexicographically minimal orbit member. Idempotent, constant on
/// orbits.
TensorKey canonical_representative(TensorKey t);

/// Full enumeration plus the orbit map.
struct OrbitTable {
  std::vector<TensorKey> keys;           // sorted; ordinal = index
  std::vector<std::uint32_t> canonical;  // ordinal -> canonical ordinal

  std::size_t orbit_count() const;
  /// Ordinals that are their own canonical, ascending.
  std::vector<std::uint32_t> representatives() const;
  std::uint32_t ordinal_of(TensorKey k) const;
};

OrbitTable compute_orbits();

/// Tensor file format: header `stabtensor v1 legs=u,d,l,r,phys`, then 5
/// Pauli strings of length 5.
std::string tensor_to_file(const StabilizerTensor& t);
StabilizerTensor tensor_from_file(const std::string& text);

/// On-disk cache: lagrangians.txt (keys, one per line) and orbits.csv
/// (`ordinal,canonical_ordinal`), each carrying a checksum line. load
/// returns nullopt when files are missing or fail validation.
bool write_cache(const OrbitTable& t, const std::filesystem::path& dir);
std::optional<OrbitTable> load_cache(const std::filesystem::path& dir);

/// The cluster / GHZ / toric named representatives, discovered from the
/// orbit table by their capacity signatures over n,d <= 6 (C = n, C = 1
/// and C = n-1 respectively). GHZ is additionally pinned structurally:
/// its orbit must contain <X^5, Z_i Z_{i+1}>. Throws std::runtime_error
/// when a signature is absent.
struct Fixtures {
  StabilizerTensor cluster, ghz, toric;
};
Fixtures find_fixtures(const OrbitTable& t);

}  // namespace stabwire
