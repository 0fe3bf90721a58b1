// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "stabwire/tensor.hpp"

namespace stabwire {

/// Dense ground truth for small cylinders. Shares no code with the
/// symplectic stack: states are explicit amplitude arrays and all
/// contractions are complex arithmetic.

/// Amplitudes of the 5-qubit state fixed by the tensor's stabilizer
/// generators, indexed (u,d,l,r,phys) with u the most significant bit.
struct DenseTensor {
  Eigen::VectorXcd amp;  // 32 entries, normalized
};

DenseTensor densify(const StabilizerTensor& A);

/// Hermitian matrix of a Pauli operator (x = z = 1 is Y), qubit 0 the
/// most significant bit.
Eigen::MatrixXcd pauli_dense(const PauliVector& p);

/// Edge amplitudes of the contracted n x d cylinder: rows index the
/// left-edge configuration l (site 0 most significant), columns the
/// right edge.
struct EdgeState {
  Eigen::MatrixXcd amp;  // 2^n x 2^n
};

/// Contract column transfer operators left to right with <+| on every
/// physical leg. A column whose product with the accumulated state
/// vanishes is retried with physical-leg sign flips in (flip count,
/// site order) order; a nonzero branch always exists.
EdgeState contract_cylinder(const StabilizerTensor& A, std::size_t n,
                            std::size_t d);

/// Singular values of the edge amplitude matrix, descending.
std::vector<double> schmidt_spectrum(const EdgeState& s);

/// log2 of the numerical rank (threshold 1e-9 relative). Throws when
/// the rank is not a power of two.
std::size_t schmidt_qubits(const EdgeState& s, std::size_t n);

}  // namespace stabwire
