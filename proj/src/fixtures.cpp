// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>

#include "stabwire/wire.hpp"

namespace stabwire {

namespace {

bool grid_matches(const StabilizerTensor& A, int offset) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto profile = capacity_profile(A, n, 6);
    std::size_t want = static_cast<std::size_t>(
        std::max(0, static_cast<int>(n) + offset));
    for (std::size_t d = 1; d <= 6; ++d)
      if (profile[d - 1] != want) return false;
  }
  return true;
}

bool grid_constant(const StabilizerTensor& A, std::size_t value) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto profile = capacity_profile(A, n, 6);
    for (std::size_t d = 1; d <= 6; ++d)
      if (profile[d - 1] != value) return false;
  }
  return true;
}

}  // namespace

Fixtures find_fixtures(const OrbitTable& t) {
  Fixtures out;

  // GHZ is pinned to the orbit of <X^5, Z_i Z_{i+1}>, then checked
  // against its C = 1 signature.
  std::vector<PauliVector> ghz_gens = {
      PauliVector::from_string("XXXXX"), PauliVector::from_string("ZZIII"),
      PauliVector::from_string("IZZII"), PauliVector::from_string("IIZZI"),
      PauliVector::from_string("IIIZZ")};
  StabilizerTensor ghz{StabilizerGroup::from_generators(5, ghz_gens)};
  out.ghz = tensor_from_key(canonical_representative(tensor_key(ghz)));
  if (!grid_constant(out.ghz, 1))
    throw std::runtime_error("GHZ representative is not a perfect 1-qubit wire");

  bool have_cluster = false, have_toric = false;
  for (std::uint32_t r : t.representatives()) {
    if (have_cluster && have_toric) break;
    auto A = tensor_from_key(t.keys[r]);
    // Cheap filter before the full grid scan.
    std::size_t c21 = capacity(A, 2, 1);
    if (!have_cluster && c21 == 2 && grid_matches(A, 0)) {
      out.cluster = A;
      have_cluster = true;
    }
    if (!have_toric && c21 == 1 && grid_matches(A, -1)) {
      out.toric = A;
      have_toric = true;
    }
  }
  if (!have_cluster)
    throw std::runtime_error("no representative with C(n,d) = n");
  if (!have_toric)
    throw std::runtime_error("no representative with C(n,d) = n-1");
  return out;
}

}  // namespace stabwire
