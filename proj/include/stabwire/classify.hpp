// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "stabwire/wire.hpp"

namespace stabwire {

/// The transmission behavior of one tensor: C(A,n,d) over the base
/// grid. Entry (n,d) is grid[n-1][d-1].
struct ClassSignature {
  std::array<std::array<std::uint8_t, 6>, 6> grid{};

  bool operator==(const ClassSignature& o) const = default;
  bool operator<(const ClassSignature& o) const { return grid < o.grid; }
  std::size_t total() const;
  static ClassSignature constant(std::size_t value);
  static ClassSignature linear(int offset);  // C(n,d) = n + offset, floored at 0
};

struct TensorRecord {
  std::uint32_t canonical_ordinal = 0;
  ClassSignature sig;
  int transmission_class = -1;
  char phi_class = '?';
  int omega_class = -1;
};

struct ClassificationReport {
  std::size_t n_max = 6, d_max = 6;
  std::vector<TensorRecord> records;  // representative ordinal ascending
  /// Signature of each transmission class, indexed by class id.
  std::vector<ClassSignature> class_signatures;
  /// Serialized omega vector of each omega class, indexed by class id.
  std::vector<std::string> omega_vectors;

  std::map<int, std::size_t> census() const;
  std::map<char, std::set<int>> phi_crosstab() const;
  std::map<int, std::set<int>> omega_crosstab() const;
};

/// Classify every representative of the orbit table. Class ids: 0 is
/// the all-zero signature, the top id is C(n,d) = n, the rest are
/// numbered by ascending (capacity sum, grid). Omega class ids are
/// assigned by sorted omega vector. Throws std::runtime_error with a
/// signature dump when the distinct-signature count is not 13.
ClassificationReport sweep(const OrbitTable& table, std::size_t n_max = 6,
                           std::size_t d_max = 6, std::size_t workers = 1);

/// Phi letter -> transmission classes. Throws when the partition shape
/// is not {1,2,3,2,2,2,1} with 'a' on the trivial class and 'g' on the
/// full-capacity class.
std::map<char, std::set<int>> phi_transmission_crosstab(
    const ClassificationReport& report);

/// One verdict per standard local generator family: whether some
/// representative's Z_L(A,n,1) matches the family's row space for
/// n = 4,5,6, up to a uniform single-qubit GL(2,F2) relabeling.
struct ZlVerdict {
  std::string family;
  bool matched = false;
  std::uint32_t witness_ordinal = 0;
};
std::vector<ZlVerdict> zl_table_check(const OrbitTable& table);

/// Same-signature representatives agree on the extended grid. The
/// verdict carries every witness of disagreement (expected none).
struct StabilityWitness {
  std::uint32_t ordinal_a = 0, ordinal_b = 0;
  std::size_t n = 0, d = 0;
  std::size_t capacity_a = 0, capacity_b = 0;
};
std::vector<StabilityWitness> proposition1_check(const OrbitTable& table,
                                                 const ClassificationReport& report,
                                                 std::size_t n_ext = 9,
                                                 std::size_t d_ext = 9,
                                                 std::uint64_t seed = 1,
                                                 std::size_t random_pairs = 100,
                                                 std::size_t workers = 1);

/// Versioned CSV serializations.
std::string report_csv(const ClassificationReport& report);
std::string census_csv(const ClassificationReport& report);

}  // namespace stabwire
