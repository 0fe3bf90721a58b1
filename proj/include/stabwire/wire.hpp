// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabwire/tensor.hpp"

namespace stabwire {

/// The stabilizer group of one contracted layer (or stack of layers) on
/// a ring of circumference n. Qubits 0..n-1 are the left-edge l legs,
/// n..2n-1 the right-edge r legs, site-ordered.
struct LayerGroup {
  std::size_t n = 0;
  StabilizerGroup group{0};
};

/// One measured layer: n copies of A on a ring, vertical bonds
/// contracted, physical legs projected onto |+>.
LayerGroup ring_group(const StabilizerTensor& A, std::size_t n);

/// The full n x d cylinder: vertical bonds periodic per column,
/// horizontal bonds between adjacent columns, every physical leg
/// projected. Output lives on the two open edges.
LayerGroup cylinder_group(const StabilizerTensor& A, std::size_t n,
                          std::size_t d);

/// Canonical bipartite form of the single layer across the edge cut.
CanonicalBipartiteForm phi1(const StabilizerTensor& A, std::size_t n);

/// The update rule induced by one measured layer. Defined exactly on
/// the centralizer of Z_L, i.e. the span of {a_i, g_k^L, gbar_k^L}.
struct UpdateRule {
  std::size_t n = 0;
  std::vector<PauliVector> a;       // domain commutation test
  BinaryMatrix domain;              // rows: a_i, then g_k^L, gbar_k^L
  std::vector<PauliVector> images;  // b_i, then g_k^R, gbar_k^R
};

UpdateRule make_update_rule(const CanonicalBipartiteForm& phi);

/// T(x), or absent when x anticommutes with some a_i or lies outside
/// the span of the domain generators. Absence terminates a chain.
std::optional<PauliVector> apply_T(const UpdateRule& rule,
                                   const PauliVector& x);

/// Per-depth chain fronts recorded by the capacity computation.
struct CapacityTrace {
  std::vector<std::vector<PauliVector>> fronts;  // fronts[k] = depth k+1
};

/// C(A,n,d) for d = 1..d_max in one chain pass: T_R is pooled from the
/// chains T(a_i), T^2(a_i), ... and C(d) = n - rank of the pool at
/// depth d.
std::vector<std::size_t> capacity_profile(const StabilizerTensor& A,
                                          std::size_t n, std::size_t d_max,
                                          CapacityTrace* trace = nullptr);

/// Same, reusing an already computed layer canonical form.
std::vector<std::size_t> capacity_profile(const CanonicalBipartiteForm& phi,
                                          std::size_t d_max,
                                          CapacityTrace* trace = nullptr);

std::size_t capacity(const StabilizerTensor& A, std::size_t n, std::size_t d);

/// Stacking obstruction of one layer on the next: anticommutation
/// between the left-edge canonical generators (rows a_i, then g_k^L,
/// gbar_k^L) and the right-edge ones (columns b_j, then g_k^R,
/// gbar_k^R), evaluated on the glued ring.
struct OmegaMatrix {
  std::size_t n = 0, p = 0;
  BinaryMatrix m;  // (n-p) + 2p rows and columns
  bool standard = false;

  bool operator==(const OmegaMatrix& o) const = default;
};

OmegaMatrix omega1(const StabilizerTensor& A, std::size_t n);

/// Same, from an already computed layer canonical form.
OmegaMatrix omega_of(const CanonicalBipartiteForm& phi, std::size_t n);

/// Canonical form under the generator changes that preserve Phi_1: GL
/// moves on the a rows and on the b columns, additions of a rows into
/// pair rows and of b columns into pair columns, and any symplectic
/// change of the hyperbolic pair basis, which acts on pair rows and
/// pair columns simultaneously. The result is rebuilt from the
/// invariants of that action: rank of the a/b block, the residual row
/// space U and column space V of the pair sector together with the
/// symplectic form on U + V, and the quotient rank of the pair-pair
/// block. Idempotent and invariant under the moves above.
OmegaMatrix omega_standard_form(const OmegaMatrix& m);

/// Text record `n,p,rowbits,rowbits,...`.
std::string omega_serialize(const OmegaMatrix& m);

/// Local form of the single-tensor symmetry group after measuring the
/// physical leg, across the horizontal/vertical leg cut: (i) no
/// crossing pair, (ii) one crossing pair whose vertical halves can be
/// matched on u and d, (iii) one crossing pair that localizes onto a
/// single vertical leg, (iv) two crossing pairs.
struct LocalFormLabel {
  enum class Case { i, ii, iii, iv };
  Case form = Case::i;
  std::size_t p = 0;               // pairs across the {H,V} cut
  std::optional<std::size_t> q;    // 0 when the crossing localizes, if p == 1
  std::optional<bool> gamma_equal; // matched vertical halves exist, if q == 1
};

LocalFormLabel local_form(const StabilizerTensor& A);

/// Phi class letter from the p(n) = rank(S_L(A,n,1)) - n signature over
/// n = 1..6. Throws std::runtime_error when no letter matches.
struct PhiClassLabel {
  char letter = '?';
  std::array<std::size_t, 6> p_signature{};
};

PhiClassLabel phi_class(const StabilizerTensor& A);

/// Letter for a precomputed p(n) signature; throws when none matches.
char phi_letter(const std::array<std::size_t, 6>& signature);

/// rank(S_L(A,n,1)): the left restriction of the layer group.
std::size_t left_rank(const StabilizerTensor& A, std::size_t n);

}  // namespace stabwire
