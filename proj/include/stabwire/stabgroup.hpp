// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "stabwire/symplectic.hpp"

namespace stabwire {

/// A sign-free stabilizer group: the row space of `gens` is isotropic
/// under the symplectic form. Generators are kept as a full-rank rref
/// basis, so equal groups compare equal.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::size_t n) : n_(n), gens_(0, 2 * n) {}

  /// Validates pairwise commutation and reduces to a row basis.
  static StabilizerGroup from_generators(std::size_t n,
                                         const std::vector<PauliVector>& gens);

  /// Rows are packed 2n-bit vectors; validated and reduced as above.
  static StabilizerGroup from_packed(std::size_t n, const BinaryMatrix& gens);

  std::size_t n() const { return n_; }
  std::size_t rank() const { return gens_.rows(); }
  const BinaryMatrix& gens() const { return gens_; }
  std::vector<PauliVector> generators() const;

  bool contains(const PauliVector& p) const;

  bool operator==(const StabilizerGroup& o) const = default;

 private:
  std::size_t n_;
  BinaryMatrix gens_;
};

/// Parse the group text form: one Pauli string per line, blank line or
/// end of input terminates. All lines must have equal length.
StabilizerGroup parse_group(const std::string& text);
std::string group_to_string(const StabilizerGroup& s);

/// The Fattal-style bipartite canonical form of a two-sided stabilizer
/// group: left-only generators a_i, right-only generators b_j, and p
/// locally anticommuting pairs split across the cut.
struct CanonicalBipartiteForm {
  std::size_t n_left = 0, n_right = 0;
  std::size_t p = 0;
  std::vector<PauliVector> a;  // n_left-qubit, act trivially on the right
  std::vector<PauliVector> b;  // n_right-qubit, act trivially on the left
  struct Pair {
    PauliVector gl, gl_bar;  // anticommute on the left
    PauliVector gr, gr_bar;  // anticommute on the right
  };
  std::vector<Pair> pairs;
};

/// Basis of the subspace of rowspace(gens) commuting with every
/// generator. The input list need not be abelian or independent.
BinaryMatrix center(const std::vector<PauliVector>& gens);

/// Decompose an abelian group across the cut: qubits [0, cut) are the
/// left side. Throws if the row space admits no such decomposition
/// (possible only for groups of less than full rank).
CanonicalBipartiteForm canonical_bipartite_form(const StabilizerGroup& s,
                                                std::size_t cut);

/// Extend an isotropic subspace zl (packed rows, 2n cols) to the full
/// centralizer: returns a symplectic basis of complement(zl)/zl as
/// hyperbolic pairs.
std::vector<std::pair<PauliVector, PauliVector>> pair_completion(
    const BinaryMatrix& zl, std::size_t n);

/// Sign-free postselection of the +1 outcome of X on qubit q, then
/// deletion of qubit q. Result acts on n-1 qubits.
StabilizerGroup project_plus(const StabilizerGroup& s, std::size_t q);

/// Sign-free postselection of the Bell stabilizers X_q1 X_q2 and
/// Z_q1 Z_q2, then deletion of both qubits. Equals tensor-network leg
/// contraction with the |I> = sum_i |ii> bond.
StabilizerGroup contract_bond(const StabilizerGroup& s, std::size_t q1,
                              std::size_t q2);

/// Relabel qubits: new qubit i is old qubit old_of_new[i].
StabilizerGroup permute_qubits(const StabilizerGroup& s,
                               const std::vector<std::size_t>& old_of_new);

}  // namespace stabwire
