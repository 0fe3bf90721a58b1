// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/wire.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace stabwire {

namespace {

// Tracks qubit indices through contractions and projections by original
// label: copy k of the tensor owns labels 5k + (u,d,l,r,phys).
struct Assembly {
  StabilizerGroup s;
  std::vector<std::size_t> live;

  Assembly(const StabilizerTensor& A, std::size_t copies)
      : s(5 * copies) {
    std::size_t n5 = 5 * copies;
    BinaryMatrix rows(0, 2 * n5);
    for (std::size_t k = 0; k < copies; ++k)
      for (const auto& g : A.group.generators()) {
        Bits row(2 * n5);
        for (std::size_t q = 0; q < 5; ++q) {
          if (g.x.get(q)) row.set(5 * k + q);
          if (g.z.get(q)) row.set(n5 + 5 * k + q);
        }
        rows.append_row(std::move(row));
      }
    s = StabilizerGroup::from_packed(n5, rows);
    live.resize(n5);
    for (std::size_t i = 0; i < n5; ++i) live[i] = i;
  }

  std::size_t index(std::size_t label) const {
    auto it = std::find(live.begin(), live.end(), label);
    return static_cast<std::size_t>(it - live.begin());
  }

  void contract(std::size_t l1, std::size_t l2) {
    s = contract_bond(s, index(l1), index(l2));
    live.erase(std::remove_if(live.begin(), live.end(),
                              [&](std::size_t l) { return l == l1 || l == l2; }),
               live.end());
  }

  void project(std::size_t l) {
    s = project_plus(s, index(l));
    live.erase(std::find(live.begin(), live.end(), l));
  }

  // Reorder the surviving qubits to the given label sequence.
  StabilizerGroup finish(const std::vector<std::size_t>& labels) {
    std::vector<std::size_t> old_of_new;
    for (std::size_t l : labels) old_of_new.push_back(index(l));
    return permute_qubits(s, old_of_new);
  }
};

constexpr std::size_t kU = 0, kD = 1, kL = 2, kR = 3, kPhys = 4;

}  // namespace

LayerGroup ring_group(const StabilizerTensor& A, std::size_t n) {
  if (n < 1) throw std::invalid_argument("circumference must be positive");
  Assembly asmb(A, n);
  for (std::size_t i = 0; i < n; ++i)
    asmb.contract(5 * i + kD, 5 * ((i + 1) % n) + kU);
  for (std::size_t i = 0; i < n; ++i) asmb.project(5 * i + kPhys);
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) order.push_back(5 * i + kL);
  for (std::size_t i = 0; i < n; ++i) order.push_back(5 * i + kR);
  return LayerGroup{n, asmb.finish(order)};
}

LayerGroup cylinder_group(const StabilizerTensor& A, std::size_t n,
                          std::size_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("grid bounds must be positive");
  Assembly asmb(A, n * d);
  auto base = [&](std::size_t col, std::size_t site) {
    return 5 * (col * n + site);
  };
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t s = 0; s < n; ++s)
      asmb.contract(base(c, s) + kD, base(c, (s + 1) % n) + kU);
  for (std::size_t c = 0; c + 1 < d; ++c)
    for (std::size_t s = 0; s < n; ++s)
      asmb.contract(base(c, s) + kR, base(c + 1, s) + kL);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t s = 0; s < n; ++s) asmb.project(base(c, s) + kPhys);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) order.push_back(base(0, s) + kL);
  for (std::size_t s = 0; s < n; ++s) order.push_back(base(d - 1, s) + kR);
  return LayerGroup{n, asmb.finish(order)};
}

CanonicalBipartiteForm phi1(const StabilizerTensor& A, std::size_t n) {
  return canonical_bipartite_form(ring_group(A, n).group, n);
}

UpdateRule make_update_rule(const CanonicalBipartiteForm& phi) {
  if (phi.n_left != phi.n_right)
    throw std::invalid_argument("update rule needs a symmetric cut");
  UpdateRule rule;
  rule.n = phi.n_left;
  rule.a = phi.a;
  rule.domain = BinaryMatrix(0, 2 * rule.n);
  for (std::size_t i = 0; i < phi.a.size(); ++i) {
    rule.domain.append_row(pack_pauli(phi.a[i]));
    rule.images.push_back(phi.b[i]);
  }
  for (const auto& pr : phi.pairs) {
    rule.domain.append_row(pack_pauli(pr.gl));
    rule.images.push_back(pr.gr);
    rule.domain.append_row(pack_pauli(pr.gl_bar));
    rule.images.push_back(pr.gr_bar);
  }
  return rule;
}

std::optional<PauliVector> apply_T(const UpdateRule& rule,
                                   const PauliVector& x) {
  if (x.n != rule.n) throw std::invalid_argument("wrong qubit count");
  for (const auto& ai : rule.a)
    if (symplectic_form(x, ai)) return std::nullopt;
  auto coeffs = rule.domain.solve(pack_pauli(x));
  if (!coeffs) return std::nullopt;
  PauliVector out(rule.n);
  for (std::size_t i = 0; i < rule.images.size(); ++i)
    if (coeffs->get(i)) out *= rule.images[i];
  return out;
}

std::vector<std::size_t> capacity_profile(const StabilizerTensor& A,
                                          std::size_t n, std::size_t d_max,
                                          CapacityTrace* trace) {
  return capacity_profile(phi1(A, n), d_max, trace);
}

std::vector<std::size_t> capacity_profile(const CanonicalBipartiteForm& phi,
                                          std::size_t d_max,
                                          CapacityTrace* trace) {
  std::size_t n = phi.n_left;
  auto rule = make_update_rule(phi);
  BinaryMatrix pool(0, 2 * n);
  for (const auto& b : phi.b) pool.append_row(pack_pauli(b));
  if (trace) trace->fronts.push_back(phi.b);
  std::vector<std::size_t> out;
  out.push_back(n - pool.rank());
  for (std::size_t depth = 2; depth <= d_max; ++depth) {
    // T acts on the whole group generated so far, not its generators
    // one by one: a product can commute with every a_i even when no
    // factor does. Map a basis of that subgroup forward.
    BinaryMatrix basis = pool.row_basis();
    BinaryMatrix gram(basis.rows(), rule.a.size());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      PauliVector v = unpack_pauli(basis.row(r), n);
      for (std::size_t i = 0; i < rule.a.size(); ++i)
        gram.set(r, i, symplectic_form(v, rule.a[i]));
    }
    std::vector<PauliVector> front;
    BinaryMatrix kernel = gram.left_kernel();
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      Bits row(2 * n);
      for (std::size_t r = 0; r < basis.rows(); ++r)
        if (kernel.get(k, r)) row ^= basis.row(r);
      if (auto t = apply_T(rule, unpack_pauli(row, n))) {
        front.push_back(*t);
        pool.append_row(pack_pauli(*t));
      }
    }
    if (trace) trace->fronts.push_back(front);
    out.push_back(n - pool.rank());
  }
  return out;
}

std::size_t capacity(const StabilizerTensor& A, std::size_t n, std::size_t d) {
  return capacity_profile(A, n, d).back();
}

OmegaMatrix omega1(const StabilizerTensor& A, std::size_t n) {
  return omega_of(phi1(A, n), n);
}

OmegaMatrix omega_of(const CanonicalBipartiteForm& phi, std::size_t n) {
  OmegaMatrix om;
  om.n = n;
  om.p = phi.p;
  std::size_t m = phi.a.size(), p = phi.p;
  std::vector<PauliVector> rows = phi.a, cols = phi.b;
  for (const auto& pr : phi.pairs) {
    rows.push_back(pr.gl);
    rows.push_back(pr.gl_bar);
  }
  for (const auto& pr : phi.pairs) {
    cols.push_back(pr.gr);
    cols.push_back(pr.gr_bar);
  }
  om.m = BinaryMatrix(m + 2 * p, m + 2 * p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (symplectic_form(rows[i], cols[j])) om.m.set(i, j);
  return om;
}

namespace {

// Hyperbolic form on pair coordinates: pair t owns columns 2t, 2t+1.
bool pair_form(const Bits& a, const Bits& b, std::size_t p) {
  bool v = false;
  for (std::size_t t = 0; t < p; ++t)
    v ^= (a.get(2 * t) && b.get(2 * t + 1)) ^
         (a.get(2 * t + 1) && b.get(2 * t));
  return v;
}

std::string matrix_bits(const BinaryMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
  return s;
}

struct OmegaInvariants {
  std::size_t m = 0, p = 0, r = 0, w = 0, rho = 0;
  BinaryMatrix gram;  // w x w, form on U + V
  BinaryMatrix u, v;  // rref coordinate bases of U, V inside U + V
};

// All invertible w x w bit matrices, rows packed as w-bit ints.
const std::vector<std::vector<std::uint32_t>>& gl_matrices(std::size_t w) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<std::uint32_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::uint32_t>> all;
  std::uint64_t total = std::uint64_t(1) << (w * w);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::uint32_t> rows(w);
    for (std::size_t i = 0; i < w; ++i)
      rows[i] = (bits >> (w * i)) & ((1u << w) - 1);
    auto work = rows;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < w; ++c) {
      std::uint32_t m = 1u << c;
      std::size_t piv = w;
      for (std::size_t i = rank; i < w; ++i)
        if (work[i] & m) {
          piv = i;
          break;
        }
      if (piv == w) continue;
      std::swap(work[rank], work[piv]);
      for (std::size_t i = 0; i < w; ++i)
        if (i != rank && (work[i] & m)) work[i] ^= work[rank];
      ++rank;
    }
    if (rank == w) all.push_back(std::move(rows));
  }
  return cache.emplace(w, std::move(all)).first->second;
}

std::optional<std::vector<std::uint32_t>> invert_packed(
    const std::vector<std::uint32_t>& m, std::size_t w) {
  auto work = m;
  std::vector<std::uint32_t> inv(w);
  for (std::size_t i = 0; i < w; ++i) inv[i] = 1u << i;
  for (std::size_t c = 0; c < w; ++c) {
    std::size_t piv = w;
    for (std::size_t i = c; i < w; ++i)
      if ((work[i] >> c) & 1) {
        piv = i;
        break;
      }
    if (piv == w) return std::nullopt;
    std::swap(work[c], work[piv]);
    std::swap(inv[c], inv[piv]);
    for (std::size_t i = 0; i < w; ++i)
      if (i != c && ((work[i] >> c) & 1)) {
        work[i] ^= work[c];
        inv[i] ^= inv[c];
      }
  }
  return inv;
}

BinaryMatrix apply_packed(const BinaryMatrix& coords,
                          const std::vector<std::uint32_t>& n, std::size_t w) {
  // Right-multiply coordinate rows by the basis-change matrix: new
  // coordinates of row x are x * n (bit j of the result is <x, col j>).
  BinaryMatrix out(coords.rows(), w);
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < w; ++j) {
      bool bit = false;
      for (std::size_t k = 0; k < w; ++k)
        bit ^= coords.get(i, k) && ((n[k] >> j) & 1);
      out.set(i, j, bit);
    }
  return out;
}

// Lexicographically minimal (gram, u, v) over every change of basis of
// the ambient space U + V. The form transforms by congruence, the
// subspace coordinate bases by right multiplication with the inverse.
void canonicalize_triple(OmegaInvariants& inv) {
  std::size_t w = inv.w;
  if (w == 0) return;
  if (w > 4)
    throw std::invalid_argument("omega residual too large to canonicalize");

  static std::mutex mu;
  static std::map<std::string, OmegaInvariants> cache;
  std::string key = std::to_string(w) + ":" + matrix_bits(inv.gram) + ":" +
                    std::to_string(inv.u.rows()) + ":" + matrix_bits(inv.u) +
                    ":" + std::to_string(inv.v.rows()) + ":" +
                    matrix_bits(inv.v);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) {
      inv.gram = it->second.gram;
      inv.u = it->second.u;
      inv.v = it->second.v;
      return;
    }
  }

  std::optional<std::string> best_bits;
  BinaryMatrix best_gram, best_u, best_v;
  for (const auto& nm : gl_matrices(w)) {
    auto ni = invert_packed(nm, w);
    // gram' = N G N^T with N the new-basis rows in old coordinates.
    BinaryMatrix gram2(w, w);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = 0; j < w; ++j) {
        bool bit = false;
        for (std::size_t a = 0; a < w; ++a)
          if ((nm[i] >> a) & 1)
            for (std::size_t b = 0; b < w; ++b)
              if ((nm[j] >> b) & 1) bit ^= inv.gram.get(a, b);
        gram2.set(i, j, bit);
      }
    BinaryMatrix u2 = apply_packed(inv.u, *ni, w).rref();
    BinaryMatrix v2 = apply_packed(inv.v, *ni, w).rref();
    std::string bits = matrix_bits(gram2) + matrix_bits(u2) + matrix_bits(v2);
    if (!best_bits || bits < *best_bits) {
      best_bits = bits;
      best_gram = gram2;
      best_u = u2;
      best_v = v2;
    }
  }
  inv.gram = best_gram;
  inv.u = best_u;
  inv.v = best_v;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, inv);
}

OmegaInvariants omega_invariants(const OmegaMatrix& om) {
  std::size_t p = om.p;
  if (om.m.rows() != om.m.cols() || om.m.rows() < 2 * p)
    throw std::invalid_argument("malformed omega matrix");
  std::size_t m = om.m.rows() - 2 * p;

  BinaryMatrix a(m, m), b(m, 2 * p), c(2 * p, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a.set(i, j, om.m.get(i, j));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < 2 * p; ++j) b.set(i, j, om.m.get(i, m + j));
  for (std::size_t i = 0; i < 2 * p; ++i)
    for (std::size_t j = 0; j < m; ++j) c.set(i, j, om.m.get(m + i, j));

  OmegaInvariants inv;
  inv.m = m;
  inv.p = p;
  inv.r = a.rank();

  // U: pair parts of a-rows whose b part vanishes. V: the same on the
  // column side.
  BinaryMatrix ka = a.left_kernel();
  BinaryMatrix urows(0, 2 * p);
  for (std::size_t i = 0; i < ka.rows(); ++i) {
    Bits row(2 * p);
    for (std::size_t j = 0; j < m; ++j)
      if (ka.get(i, j)) row ^= b.row(j);
    urows.append_row(std::move(row));
  }
  BinaryMatrix uspace = urows.row_basis();

  BinaryMatrix kat = a.transpose().left_kernel();
  BinaryMatrix vrows(0, 2 * p);
  for (std::size_t i = 0; i < kat.rows(); ++i) {
    Bits row(2 * p);
    for (std::size_t j = 0; j < m; ++j)
      if (kat.get(i, j))
        for (std::size_t t = 0; t < 2 * p; ++t)
          if (c.get(t, j)) row.flip(t);
    vrows.append_row(std::move(row));
  }
  BinaryMatrix vspace = vrows.row_basis();

  BinaryMatrix wbasis = uspace.stack(vspace).row_basis();
  inv.w = wbasis.rows();
  inv.gram = BinaryMatrix(inv.w, inv.w);
  for (std::size_t i = 0; i < inv.w; ++i)
    for (std::size_t j = i + 1; j < inv.w; ++j) {
      bool vbit = pair_form(wbasis.row(i), wbasis.row(j), p);
      inv.gram.set(i, j, vbit);
      inv.gram.set(j, i, vbit);
    }
  auto coords = [&](const BinaryMatrix& space) {
    BinaryMatrix out(space.rows(), inv.w);
    for (std::size_t i = 0; i < space.rows(); ++i) {
      auto sol = wbasis.solve(space.row(i));
      if (!sol) throw std::logic_error("subspace escaped its own span");
      out.set_row(i, std::move(*sol));
    }
    return out.rref();
  };
  inv.u = coords(uspace);
  inv.v = coords(vspace);

  // Quotient rank of the pair-pair block: what remains of D after
  // adding arbitrary a-rows into pair rows and b-columns into pair
  // columns.
  BinaryMatrix top(0, m + 2 * p);
  for (std::size_t i = 0; i < m; ++i) top.append_row(om.m.row(i));
  BinaryMatrix left(m + 2 * p, m);
  for (std::size_t i = 0; i < m + 2 * p; ++i)
    for (std::size_t j = 0; j < m; ++j) left.set(i, j, om.m.get(i, j));
  inv.rho = om.m.rank() + inv.r - top.rank() - left.rank();

  canonicalize_triple(inv);
  return inv;
}

OmegaMatrix build_standard(std::size_t n, const OmegaInvariants& inv) {
  std::size_t m = inv.m, p = inv.p, w = inv.w;

  // Symplectic Gram-Schmidt on the canonical form: coordinate vectors
  // of U + V split into hyperbolic pairs and a radical.
  std::vector<Bits> rest;
  for (std::size_t i = 0; i < w; ++i) {
    Bits e(w);
    e.set(i);
    rest.push_back(e);
  }
  auto form = [&](const Bits& x, const Bits& y) {
    bool bit = false;
    for (std::size_t i = 0; i < w; ++i)
      if (x.get(i))
        for (std::size_t j = 0; j < w; ++j)
          if (y.get(j)) bit ^= inv.gram.get(i, j);
    return bit;
  };
  std::vector<std::pair<Bits, Bits>> hyper;
  std::vector<Bits> radical;
  while (!rest.empty()) {
    std::size_t pi = rest.size(), pj = rest.size();
    for (std::size_t i = 0; i < rest.size() && pi == rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (form(rest[i], rest[j])) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == rest.size()) {
      radical = rest;
      break;
    }
    Bits u = rest[pi], v = rest[pj];
    rest.erase(rest.begin() + pj);
    rest.erase(rest.begin() + pi);
    for (auto& t : rest) {
      if (form(t, v)) t ^= u;
      if (form(t, u)) t ^= v;
    }
    hyper.push_back({u, v});
  }
  if (hyper.size() + radical.size() > p)
    throw std::logic_error("omega residual does not fit the pair sector");

  // Q rows: the symplectic basis in canonical coordinates; T rows: its
  // embedding. The embedding of the canonical basis is Q^{-1} T.
  std::vector<std::uint32_t> q(w, 0);
  BinaryMatrix targets(w, 2 * p);
  std::size_t row = 0;
  for (std::size_t s = 0; s < hyper.size(); ++s) {
    for (std::size_t i = 0; i < w; ++i)
      if (hyper[s].first.get(i)) q[row] |= 1u << i;
    targets.set(row++, 2 * s);
    for (std::size_t i = 0; i < w; ++i)
      if (hyper[s].second.get(i)) q[row] |= 1u << i;
    targets.set(row++, 2 * s + 1);
  }
  for (std::size_t t = 0; t < radical.size(); ++t) {
    for (std::size_t i = 0; i < w; ++i)
      if (radical[t].get(i)) q[row] |= 1u << i;
    targets.set(row++, 2 * (hyper.size() + t));
  }
  auto qi = invert_packed(q, w);
  if (!qi) throw std::logic_error("degenerate symplectic basis");
  BinaryMatrix embed(w, 2 * p);
  for (std::size_t i = 0; i < w; ++i) {
    Bits r(2 * p);
    for (std::size_t k = 0; k < w; ++k)
      if (((*qi)[i] >> k) & 1) r ^= targets.row(k);
    embed.set_row(i, std::move(r));
  }
  auto embed_row = [&](const BinaryMatrix& coords, std::size_t i) {
    Bits r(2 * p);
    for (std::size_t k = 0; k < w; ++k)
      if (coords.get(i, k)) r ^= embed.row(k);
    return r;
  };

  OmegaMatrix out;
  out.n = n;
  out.p = p;
  out.standard = true;
  out.m = BinaryMatrix(m + 2 * p, m + 2 * p);
  for (std::size_t i = 0; i < inv.r; ++i) out.m.set(i, i);
  for (std::size_t i = 0; i < inv.u.rows(); ++i) {
    Bits r = embed_row(inv.u, i);
    for (std::size_t t = 0; t < 2 * p; ++t)
      if (r.get(t)) out.m.set(inv.r + i, m + t);
  }
  for (std::size_t i = 0; i < inv.v.rows(); ++i) {
    Bits r = embed_row(inv.v, i);
    for (std::size_t t = 0; t < 2 * p; ++t)
      if (r.get(t)) out.m.set(m + t, inv.r + i);
  }

  // rho rank-one terms f g^T in the pair-pair block, f independent of
  // the embedded V, g independent of the embedded U. The bordered rank
  // then reproduces rho exactly.
  auto pick = [&](const BinaryMatrix& coords, std::size_t count) {
    BinaryMatrix span(0, 2 * p);
    for (std::size_t i = 0; i < coords.rows(); ++i)
      span.append_row(embed_row(coords, i));
    std::vector<std::size_t> out_idx;
    for (std::size_t t = 0; t < 2 * p && out_idx.size() < count; ++t) {
      Bits e(2 * p);
      e.set(t);
      BinaryMatrix trial = span;
      trial.append_row(e);
      if (trial.rank() == span.rank() + 1) {
        span = trial;
        out_idx.push_back(t);
      }
    }
    if (out_idx.size() < count)
      throw std::logic_error("omega residual does not fit the pair sector");
    return out_idx;
  };
  if (inv.rho > 0) {
    auto fs = pick(inv.v, inv.rho);
    auto gs = pick(inv.u, inv.rho);
    for (std::size_t i = 0; i < inv.rho; ++i)
      out.m.set(m + fs[i], m + gs[i]);
  }
  return out;
}

}  // namespace

OmegaMatrix omega_standard_form(const OmegaMatrix& om) {
  return build_standard(om.n, omega_invariants(om));
}

std::string omega_serialize(const OmegaMatrix& om) {
  std::string s = std::to_string(om.n) + "," + std::to_string(om.p);
  for (std::size_t i = 0; i < om.m.rows(); ++i) {
    s += ',';
    for (std::size_t j = 0; j < om.m.cols(); ++j)
      s += om.m.get(i, j) ? '1' : '0';
  }
  return s;
}

LocalFormLabel local_form(const StabilizerTensor& A) {
  // Single tensor, physical leg measured; cut {H, V} with H = (l, r)
  // on the left.
  auto sa = project_plus(A.group, kPhys);
  auto hv = permute_qubits(sa, {kL, kR, kU, kD});
  auto f = canonical_bipartite_form(hv, 2);

  LocalFormLabel out;
  out.p = f.p;
  if (f.p == 0) {
    out.form = LocalFormLabel::Case::i;
    return out;
  }
  if (f.p == 2) {
    out.form = LocalFormLabel::Case::iv;
    return out;
  }
  // p == 1: inspect the V halves of the crossing logical qubit. Every
  // representative is one of the three nontrivial recombinations of
  // (g^V, gbar^V) times a V-only stabilizer.
  std::vector<PauliVector> vonly = {PauliVector(2)};
  for (const auto& b : f.b) {
    std::size_t sz = vonly.size();
    for (std::size_t i = 0; i < sz; ++i) vonly.push_back(vonly[i] * b);
  }
  std::array<PauliVector, 3> dirs = {f.pairs[0].gr, f.pairs[0].gr_bar,
                                     f.pairs[0].gr * f.pairs[0].gr_bar};
  auto on_u = [](const PauliVector& x) { return x.x.get(0) || x.z.get(0); };
  auto on_d = [](const PauliVector& x) { return x.x.get(1) || x.z.get(1); };

  // q = 0 when two anticommuting representatives fit on one leg: the
  // crossing qubit then detaches from the other leg entirely.
  bool localizable = false;
  for (std::size_t i = 0; i < 3 && !localizable; ++i)
    for (std::size_t j = 0; j < 3 && !localizable; ++j) {
      if (i == j) continue;
      for (const auto& wi : vonly)
        for (const auto& wj : vonly) {
          PauliVector ri = dirs[i] * wi, rj = dirs[j] * wj;
          if ((!on_d(ri) && !on_d(rj)) || (!on_u(ri) && !on_u(rj)))
            localizable = true;
        }
    }
  out.q = localizable ? 0 : 1;
  if (localizable) {
    out.form = LocalFormLabel::Case::iii;
    return out;
  }
  // gamma^u == gamma^d: some representative acts identically and
  // nontrivially on both legs, so vertical strings telescope.
  bool equal = false;
  for (const auto& d : dirs)
    for (const auto& w : vonly) {
      PauliVector x = d * w;
      equal = equal || (on_u(x) && x.x.get(0) == x.x.get(1) &&
                        x.z.get(0) == x.z.get(1));
    }
  out.gamma_equal = equal;
  out.form = LocalFormLabel::Case::ii;
  return out;
}

std::size_t left_rank(const StabilizerTensor& A, std::size_t n) {
  auto layer = ring_group(A, n);
  const auto& gens = layer.group.gens();
  BinaryMatrix left(0, 2 * n);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Bits row(2 * n);
    row.paste(0, gens.row(i).slice(0, n));
    row.paste(n, gens.row(i).slice(2 * n, n));
    left.append_row(std::move(row));
  }
  return left.rank();
}

char phi_letter(const std::array<std::size_t, 6>& s) {
  auto sig = [&](std::array<std::size_t, 6> want) { return s == want; };
  if (sig({0, 0, 0, 0, 0, 0})) return 'a';
  if (sig({1, 1, 1, 1, 1, 1})) return 'b';
  if (sig({0, 1, 2, 3, 4, 5})) return 'c';
  if (sig({0, 0, 2, 2, 4, 4})) return 'd';
  if (sig({1, 2, 1, 4, 5, 4})) return 'e';
  if (sig({1, 1, 3, 3, 5, 5})) return 'f';
  if (sig({1, 2, 3, 4, 5, 6})) return 'g';
  throw std::runtime_error("p signature matches no known class");
}

PhiClassLabel phi_class(const StabilizerTensor& A) {
  PhiClassLabel out;
  for (std::size_t n = 1; n <= 6; ++n) out.p_signature[n - 1] = phi1(A, n).p;
  out.letter = phi_letter(out.p_signature);
  return out;
}

}  // namespace stabwire
