// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "stabwire/tensor.hpp"

using namespace stabwire;

namespace {

const OrbitTable& table() {
  static const OrbitTable t = compute_orbits();
  return t;
}

bool is_lagrangian(const BinaryMatrix& m, std::size_t n) {
  if (m.rows() != n || m.rank() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (symplectic_form_packed(m.row(i), m.row(j), n)) return false;
  return true;
}

}  // namespace

TEST_CASE("lagrangian counts") {
  // Product of (2^k + 1), checked directly for small n.
  CHECK(enumerate_lagrangians(1).size() == 3);
  CHECK(enumerate_lagrangians(2).size() == 15);
  CHECK(table().keys.size() == 75735);
}

TEST_CASE("n=2 enumeration against brute force") {
  // All 2-dimensional isotropic subspaces of F2^4, counted by row
  // space, independent of the enumerator's search order.
  std::set<std::set<unsigned>> spaces;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b) {
      if (b == (a ^ b) || a == (a ^ b)) continue;
      auto omega = [](unsigned u, unsigned v) {
        unsigned t = ((u >> 2) & v & 3) ^ (u & (v >> 2) & 3);
        return std::popcount(t) & 1;
      };
      if (omega(a, b)) continue;
      spaces.insert({a, b, a ^ b});
    }
  CHECK(spaces.size() == 15);

  auto enumerated = enumerate_lagrangians(2);
  REQUIRE(enumerated.size() == 15);
  std::set<BinaryMatrix> distinct;
  for (const auto& m : enumerated) {
    CHECK(is_lagrangian(m, 2));
    CHECK(m.rref() == m);
    distinct.insert(m);
  }
  CHECK(distinct.size() == 15);
}

TEST_CASE("n=5 entries are distinct sorted lagrangians") {
  const auto& keys = table().keys;
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    TensorKey k = keys[rng() % keys.size()];
    auto t = tensor_from_key(k);
    CHECK(is_lagrangian(t.group.gens(), 5));
    CHECK(tensor_key(t) == k);
  }
}

TEST_CASE("gl2 and bond dual") {
  CHECK(gl2_all().size() == 6);
  for (const Mat2& m : gl2_all()) {
    Mat2 d = bond_dual(m);
    // The dual of the dual is the original.
    CHECK(bond_dual(d) == m);
  }
  CHECK(gauge_group().size() == 36);
}

TEST_CASE("gauge action is a group action on lagrangians") {
  std::mt19937_64 rng(23);
  const auto& keys = table().keys;
  for (int trial = 0; trial < 100; ++trial) {
    TensorKey k = keys[rng() % keys.size()];
    const auto& g = gauge_group()[rng() % 36];
    TensorKey gk = apply_gauge(g, k);
    CHECK(is_lagrangian(tensor_from_key(gk).group.gens(), 5));
    // Identity element fixes everything.
    CHECK(apply_gauge(GaugeElement{}, k) == k);
    // Same canonical representative across the orbit.
    CHECK(canonical_representative(gk) == canonical_representative(k));
    CHECK(canonical_representative(canonical_representative(k)) ==
          canonical_representative(k));
  }
}

TEST_CASE("orbit structure") {
  const auto& t = table();
  CHECK(t.orbit_count() == 2649);
  CHECK(t.representatives().size() == 2649);

  // Orbit sizes divide the group order and sum to the enumeration.
  std::map<std::uint32_t, std::size_t> sizes;
  for (std::uint32_t c : t.canonical) ++sizes[c];
  std::size_t total = 0;
  for (const auto& [rep, size] : sizes) {
    CHECK(36 % size == 0);
    CHECK(t.canonical[rep] == rep);
    total += size;
  }
  CHECK(total == 75735);

  // The GHZ tensor's orbit contains itself.
  auto ghz = StabilizerTensor(parse_group("XXXXX\nZZIII\nIZZII\nIIZZI\nIIIZZ"));
  TensorKey gk = tensor_key(ghz);
  auto orbit = gauge_orbit(gk);
  CHECK(std::find(orbit.begin(), orbit.end(), gk) != orbit.end());
  CHECK(36 % orbit.size() == 0);
}

TEST_CASE("tensor file round trip") {
  auto ghz = StabilizerTensor(parse_group("XXXXX\nZZIII\nIZZII\nIIZZI\nIIIZZ"));
  auto text = tensor_to_file(ghz);
  CHECK(text.rfind("stabtensor v1 legs=u,d,l,r,phys\n", 0) == 0);
  CHECK(tensor_from_file(text) == ghz);
  CHECK_THROWS(tensor_from_file("bogus\nXXXXX\n"));
  CHECK_THROWS(tensor_from_file("stabtensor v1 legs=u,d,l,r,phys\nXX\n"));
}

TEST_CASE("cache round trip and corruption detection") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "stabwire_cache_test";
  fs::remove_all(dir);
  const auto& t = table();
  REQUIRE(write_cache(t, dir));
  auto loaded = load_cache(dir);
  REQUIRE(loaded.has_value());
  CHECK(loaded->keys == t.keys);
  CHECK(loaded->canonical == t.canonical);

  // Flip one byte in the body; the checksum must catch it.
  fs::path f = dir / "orbits.csv";
  std::string text;
  {
    std::ifstream in(f);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  text[text.size() / 2] = text[text.size() / 2] == '1' ? '2' : '1';
  {
    std::ofstream out(f);
    out << text;
  }
  CHECK(!load_cache(dir).has_value());
  fs::remove_all(dir);
}
