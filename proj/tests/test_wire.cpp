// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stabwire/wire.hpp"

using namespace stabwire;

namespace {

StabilizerTensor from_strings(const std::vector<std::string>& gens) {
  std::vector<PauliVector> g;
  for (const auto& s : gens) g.push_back(PauliVector::from_string(s));
  return StabilizerTensor{StabilizerGroup::from_generators(5, g)};
}

// Legs are (u, d, l, r, phys).
StabilizerTensor ghz_tensor() {
  return from_strings({"XXXXX", "ZZIII", "IZZII", "IIZZI", "IIIZZ"});
}

StabilizerTensor product_tensor() {
  return from_strings({"ZIIII", "IZIII", "IIZII", "IIIZI", "IIIIX"});
}

StabilizerTensor random_tensor(std::mt19937_64& rng,
                               const std::vector<TensorKey>& keys) {
  return tensor_from_key(keys[rng() % keys.size()]);
}

PauliVector random_pauli(std::mt19937_64& rng, std::size_t n) {
  PauliVector p(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() & 1) p.x.set(i);
    if (rng() & 1) p.z.set(i);
  }
  return p;
}

}  // namespace

TEST_CASE("ghz layer has one crossing pair") {
  auto phi = phi1(ghz_tensor(), 2);
  CHECK(phi.p == 1);
  CHECK(phi.a.size() + phi.b.size() + 2 == 4);
}

TEST_CASE("single-site ring rank is at most two") {
  std::mt19937_64 rng(11);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 30; ++t) {
    auto A = random_tensor(rng, keys);
    auto r = left_rank(A, 1);
    CHECK(r >= 1);
    CHECK(r <= 2);
  }
}

TEST_CASE("left rank splits as n plus p") {
  std::mt19937_64 rng(12);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 20; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 1; n <= 4; ++n)
      CHECK(left_rank(A, n) == n + phi1(A, n).p);
  }
}

TEST_CASE("depth-one cylinder equals a single ring") {
  std::mt19937_64 rng(13);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 15; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 1; n <= 4; ++n)
      CHECK(cylinder_group(A, n, 1).group == ring_group(A, n).group);
  }
}

TEST_CASE("update rule maps the canonical generators") {
  std::mt19937_64 rng(14);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 15; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto phi = phi1(A, n);
      auto rule = make_update_rule(phi);
      for (std::size_t i = 0; i < phi.a.size(); ++i) {
        auto img = apply_T(rule, phi.a[i]);
        REQUIRE(img.has_value());
        CHECK(*img == phi.b[i]);
      }
      for (std::size_t k = 0; k < phi.p; ++k) {
        auto img = apply_T(rule, phi.pairs[k].gl);
        REQUIRE(img.has_value());
        CHECK(*img == phi.pairs[k].gr);
      }
    }
  }
}

TEST_CASE("update rule rejects operators outside its domain") {
  auto phi = phi1(ghz_tensor(), 3);
  auto rule = make_update_rule(phi);
  REQUIRE(!phi.a.empty());
  // An operator anticommuting with a_0 terminates a chain.
  PauliVector x(3);
  bool found = false;
  std::mt19937_64 rng(15);
  while (!found) {
    x = random_pauli(rng, 3);
    found = symplectic_form(x, phi.a[0]) == 1;
  }
  CHECK(!apply_T(rule, x).has_value());
}

TEST_CASE("update rule preserves commutation on its domain") {
  std::mt19937_64 rng(16);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 10; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto phi = phi1(A, n);
      auto rule = make_update_rule(phi);
      std::vector<PauliVector> domain = phi.a;
      for (const auto& pr : phi.pairs) {
        domain.push_back(pr.gl);
        domain.push_back(pr.gl_bar);
      }
      if (domain.size() < 2) continue;
      for (int s = 0; s < 10; ++s) {
        // Random products of domain generators stay in the domain.
        PauliVector x(n), y(n);
        for (const auto& g : domain) {
          if (rng() & 1) x *= g;
          if (rng() & 1) y *= g;
        }
        auto tx = apply_T(rule, x);
        auto ty = apply_T(rule, y);
        REQUIRE(tx.has_value());
        REQUIRE(ty.has_value());
        CHECK(symplectic_form(*tx, *ty) == symplectic_form(x, y));
      }
    }
  }
}

TEST_CASE("ghz transmits exactly one qubit at every size and depth") {
  auto ghz = ghz_tensor();
  for (std::size_t n = 1; n <= 4; ++n) {
    auto prof = capacity_profile(ghz, n, 4);
    for (std::size_t d = 1; d <= 4; ++d) CHECK(prof[d - 1] == 1);
  }
}

TEST_CASE("capacity profile starts at p and never increases") {
  std::mt19937_64 rng(17);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 25; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto phi = phi1(A, n);
      CapacityTrace trace;
      auto prof = capacity_profile(phi, 5, &trace);
      CHECK(prof[0] == phi.p);
      for (std::size_t d = 1; d < prof.size(); ++d)
        CHECK(prof[d] <= prof[d - 1]);
      CHECK(trace.fronts.size() == 5);
    }
  }
}

TEST_CASE("chain capacity equals the direct cylinder computation") {
  std::mt19937_64 rng(18);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 12; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto prof = capacity_profile(A, n, 3);
      for (std::size_t d = 1; d <= 3; ++d) {
        auto f = canonical_bipartite_form(cylinder_group(A, n, d).group, n);
        CHECK(f.p == prof[d - 1]);
      }
    }
  }
}

TEST_CASE("the chain maps whole subgroups, not generators one by one") {
  // Every b_i here anticommutes with some a_i at n = 4, but products of
  // the b_i commute and must still be pushed through T. A front that
  // only chains individual generators stalls at C = 1 from depth 2 on.
  auto A = from_strings({"XIIIZ", "IXIIZ", "IIXIZ", "IIIYZ", "ZZZZX"});
  auto p2 = capacity_profile(A, 2, 4);
  auto p4 = capacity_profile(A, 4, 4);
  CHECK(p2 == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(p4 == std::vector<std::size_t>{1, 0, 0, 0});
  for (std::size_t d = 1; d <= 2; ++d) {
    auto f = canonical_bipartite_form(cylinder_group(A, 4, d).group, 4);
    CHECK(f.p == p4[d - 1]);
  }
}

TEST_CASE("ghz omega standard forms are stable") {
  auto ghz = ghz_tensor();
  CHECK(omega_serialize(omega_standard_form(omega1(ghz, 1))) == "1,1,10,01");
  CHECK(omega_serialize(omega_standard_form(omega1(ghz, 2))) ==
        "2,1,000,010,001");
  CHECK(omega_serialize(omega_standard_form(omega1(ghz, 3))) ==
        "3,1,0000,0000,0010,0001");
}

TEST_CASE("omega standard form is idempotent") {
  std::mt19937_64 rng(19);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 20; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 1; n <= 4; ++n) {
      auto std1 = omega_standard_form(omega1(A, n));
      auto std2 = omega_standard_form(std1);
      CHECK(std1.m == std2.m);
    }
  }
}

namespace {

// One random generator change that preserves the layer canonical form.
void random_omega_move(std::mt19937_64& rng, OmegaMatrix& om) {
  std::size_t p = om.p;
  std::size_t m = om.m.rows() - 2 * p;
  switch (rng() % 5) {
    case 0: {  // a-row addition
      if (m < 2) return;
      std::size_t i = rng() % m, j = rng() % m;
      if (i != j) om.m.xor_rows(i, j);
      return;
    }
    case 1: {  // b-column addition
      if (m < 2) return;
      std::size_t i = rng() % m, j = rng() % m;
      if (i == j) return;
      for (std::size_t r = 0; r < om.m.rows(); ++r)
        if (om.m.get(r, j)) om.m.set(r, i, !om.m.get(r, i));
      return;
    }
    case 2: {  // a-row into a pair row
      if (m == 0 || p == 0) return;
      om.m.xor_rows(m + rng() % (2 * p), rng() % m);
      return;
    }
    case 3: {  // b-column into a pair column
      if (m == 0 || p == 0) return;
      std::size_t i = m + rng() % (2 * p), j = rng() % m;
      for (std::size_t r = 0; r < om.m.rows(); ++r)
        if (om.m.get(r, j)) om.m.set(r, i, !om.m.get(r, i));
      return;
    }
    default: {  // symplectic transvection on the pair sector
      if (p == 0) return;
      Bits v(2 * p);
      for (std::size_t i = 0; i < 2 * p; ++i)
        if (rng() & 1) v.set(i);
      if (v.none()) return;
      Bits jv(2 * p);  // hyperbolic partner of v
      for (std::size_t t = 0; t < p; ++t) {
        if (v.get(2 * t + 1)) jv.set(2 * t);
        if (v.get(2 * t)) jv.set(2 * t + 1);
      }
      // Basis change g_k -> g_k + omega(g_k, v) v applied to pair rows,
      // then the same matrix to pair columns.
      BinaryMatrix next = om.m;
      Bits srow(next.cols());
      for (std::size_t l = 0; l < 2 * p; ++l)
        if (v.get(l)) srow ^= om.m.row(m + l);
      for (std::size_t k = 0; k < 2 * p; ++k)
        if (jv.get(k)) next.set_row(m + k, next.row(m + k) ^ srow);
      Bits scol(next.rows());
      for (std::size_t r = 0; r < next.rows(); ++r) {
        bool bit = false;
        for (std::size_t l = 0; l < 2 * p; ++l)
          bit ^= v.get(l) && next.get(r, m + l);
        scol.set(r, bit);
      }
      for (std::size_t k = 0; k < 2 * p; ++k)
        if (jv.get(k))
          for (std::size_t r = 0; r < next.rows(); ++r)
            if (scol.get(r)) next.set(r, m + k, !next.get(r, m + k));
      om.m = next;
      return;
    }
  }
}

}  // namespace

TEST_CASE("omega standard form is invariant under legal moves") {
  std::mt19937_64 rng(20);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 10; ++t) {
    auto A = random_tensor(rng, keys);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto om = omega1(A, n);
      std::string want = omega_serialize(omega_standard_form(om));
      for (int mv = 0; mv < 100; ++mv) {
        random_omega_move(rng, om);
        CHECK(omega_serialize(omega_standard_form(om)) == want);
      }
    }
  }
}

TEST_CASE("local form cases") {
  auto lp = local_form(product_tensor());
  CHECK(lp.form == LocalFormLabel::Case::i);
  CHECK(lp.p == 0);

  auto lg = local_form(ghz_tensor());
  CHECK(lg.form == LocalFormLabel::Case::ii);
  CHECK(lg.p == 1);
  REQUIRE(lg.q.has_value());
  CHECK(*lg.q == 1);
  REQUIRE(lg.gamma_equal.has_value());
  CHECK(*lg.gamma_equal);

  // One bond from l to u: the crossing localizes onto leg u.
  auto hook = from_strings({"XIXII", "ZIZII", "IZIII", "IIIXI", "IIIIX"});
  auto lh = local_form(hook);
  CHECK(lh.form == LocalFormLabel::Case::iii);
  REQUIRE(lh.q.has_value());
  CHECK(*lh.q == 0);

  // Two bonds crossing the horizontal/vertical cut.
  auto cross = from_strings({"XIXII", "ZIZII", "IXIXI", "IZIZI", "IIIIX"});
  CHECK(local_form(cross).form == LocalFormLabel::Case::iv);
}

TEST_CASE("local form is consistent with its crossing count") {
  std::mt19937_64 rng(21);
  auto keys = enumerate_tensors();
  bool seen[4] = {false, false, false, false};
  for (int t = 0; t < 400; ++t) {
    auto A = random_tensor(rng, keys);
    auto lf = local_form(A);
    seen[static_cast<int>(lf.form)] = true;
    if (lf.p == 0) CHECK(lf.form == LocalFormLabel::Case::i);
    if (lf.p == 2) CHECK(lf.form == LocalFormLabel::Case::iv);
    if (lf.p == 1) {
      REQUIRE(lf.q.has_value());
      CHECK(lf.form == (*lf.q == 0 ? LocalFormLabel::Case::iii
                                   : LocalFormLabel::Case::ii));
    }
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("phi class letters") {
  auto pg = phi_class(ghz_tensor());
  CHECK(pg.letter == 'b');
  for (std::size_t i = 0; i < 6; ++i) CHECK(pg.p_signature[i] == 1);
  CHECK(phi_class(product_tensor()).letter == 'a');
}

TEST_CASE("layer invariants are gauge invariant") {
  std::mt19937_64 rng(22);
  auto keys = enumerate_tensors();
  for (int t = 0; t < 8; ++t) {
    auto A = random_tensor(rng, keys);
    auto key = tensor_key(A);
    auto prof = capacity_profile(A, 3, 3);
    auto letter = phi_class(A).letter;
    auto om = omega_serialize(omega_standard_form(omega1(A, 3)));
    auto lf = local_form(A);
    for (const auto& g : gauge_group()) {
      auto B = tensor_from_key(apply_gauge(g, key));
      CHECK(capacity_profile(B, 3, 3) == prof);
      CHECK(phi_class(B).letter == letter);
      CHECK(omega_serialize(omega_standard_form(omega1(B, 3))) == om);
      CHECK(local_form(B).form == lf.form);
    }
  }
}
