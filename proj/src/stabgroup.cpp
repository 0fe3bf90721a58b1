// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/stabgroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stabwire {

StabilizerGroup StabilizerGroup::from_generators(
    std::size_t n, const std::vector<PauliVector>& gens) {
  BinaryMatrix m(0, 2 * n);
  for (const auto& g : gens) {
    if (g.n != n)
      throw std::invalid_argument("generator has wrong qubit count");
    m.append_row(pack_pauli(g));
  }
  return from_packed(n, m);
}

StabilizerGroup StabilizerGroup::from_packed(std::size_t n,
                                             const BinaryMatrix& gens) {
  if (gens.cols() != 2 * n)
    throw std::invalid_argument("packed generators must have 2n columns");
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = i + 1; j < gens.rows(); ++j)
      if (symplectic_form_packed(gens.row(i), gens.row(j), n))
        throw std::invalid_argument("generators do not commute");
  StabilizerGroup s(n);
  s.gens_ = gens.row_basis();
  return s;
}

std::vector<PauliVector> StabilizerGroup::generators() const {
  std::vector<PauliVector> out;
  out.reserve(gens_.rows());
  for (std::size_t r = 0; r < gens_.rows(); ++r)
    out.push_back(unpack_pauli(gens_.row(r), n_));
  return out;
}

bool StabilizerGroup::contains(const PauliVector& p) const {
  return gens_.solve(pack_pauli(p)).has_value();
}

StabilizerGroup parse_group(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PauliVector> gens;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) break;
    PauliVector p = PauliVector::from_string(line);
    if (gens.empty())
      n = p.n;
    else if (p.n != n)
      throw std::invalid_argument("group lines have unequal length");
    gens.push_back(std::move(p));
  }
  if (gens.empty()) throw std::invalid_argument("empty group text");
  return StabilizerGroup::from_generators(n, gens);
}

std::string group_to_string(const StabilizerGroup& s) {
  std::string out;
  for (const auto& g : s.generators()) {
    out += g.to_string();
    out += '\n';
  }
  return out;
}

BinaryMatrix center(const std::vector<PauliVector>& gens) {
  if (gens.empty()) return BinaryMatrix(0, 0);
  std::size_t n = gens[0].n;
  std::size_t m = gens.size();
  // Coefficient vectors c with sum_i c_i omega(g_i, g_j) = 0 for all j.
  BinaryMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (symplectic_form(gens[i], gens[j])) gram.set(i, j);
  BinaryMatrix kern = gram.left_kernel();
  BinaryMatrix out(0, 2 * n);
  for (std::size_t r = 0; r < kern.rows(); ++r) {
    Bits elem(2 * n);
    for (std::size_t i = 0; i < m; ++i)
      if (kern.get(r, i)) elem ^= pack_pauli(gens[i]);
    out.append_row(std::move(elem));
  }
  return out.row_basis();
}

namespace {

// Left and right halves of a packed two-sided row, re-packed as
// standalone Pauli rows on cut and (n - cut) qubits respectively.
Bits left_half(const Bits& row, std::size_t n, std::size_t cut) {
  Bits out(2 * cut);
  out.paste(0, row.slice(0, cut));
  out.paste(cut, row.slice(n, cut));
  return out;
}

Bits right_half(const Bits& row, std::size_t n, std::size_t cut) {
  std::size_t m = n - cut;
  Bits out(2 * m);
  out.paste(0, row.slice(cut, m));
  out.paste(m, row.slice(n + cut, m));
  return out;
}

Bits join_halves(const Bits& l, const Bits& r, std::size_t cut,
                 std::size_t nr) {
  Bits out(2 * (cut + nr));
  out.paste(0, l.slice(0, cut));
  out.paste(cut, r.slice(0, nr));
  out.paste(cut + nr, l.slice(cut, cut));
  out.paste(2 * cut + nr, r.slice(nr, nr));
  return out;
}

// Incremental Gaussian elimination: rows keyed by pivot position.
// insert() returns the reduced residual (empty optional if dependent).
struct Eliminator {
  std::vector<std::pair<std::size_t, Bits>> rows;  // sorted by pivot

  std::optional<Bits> insert(Bits v) {
    for (;;) {
      std::size_t p = v.first_set();
      if (p == Bits::npos) return std::nullopt;
      auto it = std::lower_bound(
          rows.begin(), rows.end(), p,
          [](const auto& a, std::size_t key) { return a.first < key; });
      if (it == rows.end() || it->first != p) {
        rows.insert(it, {p, v});
        return v;
      }
      v ^= it->second;
    }
  }
};

}  // namespace

CanonicalBipartiteForm canonical_bipartite_form(const StabilizerGroup& s,
                                                std::size_t cut) {
  std::size_t n = s.n();
  if (cut > n) throw std::invalid_argument("cut out of range");
  std::size_t nl = cut, nr = n - cut;
  const BinaryMatrix& g = s.gens();

  BinaryMatrix gl(0, 2 * nl), gr(0, 2 * nr);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    gl.append_row(left_half(g.row(r), n, cut));
    gr.append_row(right_half(g.row(r), n, cut));
  }

  CanonicalBipartiteForm out;
  out.n_left = nl;
  out.n_right = nr;

  // Z_L: combinations of generators with trivial right part.
  BinaryMatrix zl(0, 2 * nl);
  {
    BinaryMatrix kern = gr.left_kernel();
    for (std::size_t r = 0; r < kern.rows(); ++r) {
      Bits e(2 * nl);
      for (std::size_t i = 0; i < g.rows(); ++i)
        if (kern.get(r, i)) e ^= gl.row(i);
      zl.append_row(std::move(e));
    }
    zl = zl.row_basis();
  }
  BinaryMatrix zr(0, 2 * nr);
  {
    BinaryMatrix kern = gl.left_kernel();
    for (std::size_t r = 0; r < kern.rows(); ++r) {
      Bits e(2 * nr);
      for (std::size_t i = 0; i < g.rows(); ++i)
        if (kern.get(r, i)) e ^= gr.row(i);
      zr.append_row(std::move(e));
    }
    zr = zr.row_basis();
  }
  for (std::size_t r = 0; r < zl.rows(); ++r)
    out.a.push_back(unpack_pauli(zl.row(r), nl));
  for (std::size_t r = 0; r < zr.rows(); ++r)
    out.b.push_back(unpack_pauli(zr.row(r), nr));

  // Remaining generators, reduced modulo <Z_L x I, I x Z_R>.
  BinaryMatrix centers(0, 2 * n);
  for (std::size_t r = 0; r < zl.rows(); ++r)
    centers.append_row(
        join_halves(zl.row(r), Bits(2 * nr), nl, nr));
  for (std::size_t r = 0; r < zr.rows(); ++r)
    centers.append_row(
        join_halves(Bits(2 * nl), zr.row(r), nl, nr));

  Eliminator elim;
  for (std::size_t r = 0; r < centers.rows(); ++r)
    elim.insert(centers.row(r));
  std::vector<Bits> w;
  for (std::size_t r = 0; r < g.rows(); ++r)
    if (auto res = elim.insert(g.row(r))) w.push_back(*res);

  // Pairing sweep on the left halves.
  std::vector<Bits> rem = w;
  while (!rem.empty()) {
    Bits u = rem.front();
    rem.erase(rem.begin());
    Bits ul = left_half(u, n, cut);
    std::size_t mate = Bits::npos;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (symplectic_form_packed(ul, left_half(rem[i], n, cut), nl)) {
        mate = i;
        break;
      }
    if (mate == Bits::npos) {
      throw std::invalid_argument(
          "group has no bipartite canonical form across this cut "
          "(unpairable generator; row space is rank-deficient)");
    }
    Bits v = rem[mate];
    rem.erase(rem.begin() + mate);
    Bits vl = left_half(v, n, cut);
    for (Bits& x : rem) {
      Bits xl = left_half(x, n, cut);
      if (symplectic_form_packed(xl, vl, nl)) x ^= u;
      xl = left_half(x, n, cut);
      if (symplectic_form_packed(xl, ul, nl)) x ^= v;
    }
    CanonicalBipartiteForm::Pair pr;
    pr.gl = unpack_pauli(left_half(u, n, cut), nl);
    pr.gr = unpack_pauli(right_half(u, n, cut), nr);
    pr.gl_bar = unpack_pauli(left_half(v, n, cut), nl);
    pr.gr_bar = unpack_pauli(right_half(v, n, cut), nr);
    out.pairs.push_back(std::move(pr));
  }
  out.p = out.pairs.size();
  return out;
}

std::vector<std::pair<PauliVector, PauliVector>> pair_completion(
    const BinaryMatrix& zl, std::size_t n) {
  if (zl.cols() != 2 * n && zl.rows() > 0)
    throw std::invalid_argument("pair_completion: wrong column count");
  for (std::size_t i = 0; i < zl.rows(); ++i)
    for (std::size_t j = i; j < zl.rows(); ++j)
      if (symplectic_form_packed(zl.row(i), zl.row(j), n))
        throw std::invalid_argument("pair_completion: input not isotropic");

  BinaryMatrix basis0 = zl.rows() ? zl.row_basis() : BinaryMatrix(0, 2 * n);
  BinaryMatrix comp = basis0.rows()
                          ? basis0.symplectic_complement()
                          : BinaryMatrix::identity(2 * n);
  // Representatives of complement / zl.
  Eliminator elim;
  for (std::size_t r = 0; r < basis0.rows(); ++r) elim.insert(basis0.row(r));
  std::vector<Bits> rem;
  for (std::size_t r = 0; r < comp.rows(); ++r)
    if (auto res = elim.insert(comp.row(r))) rem.push_back(*res);

  std::vector<std::pair<PauliVector, PauliVector>> pairs;
  while (!rem.empty()) {
    Bits u = rem.front();
    rem.erase(rem.begin());
    std::size_t mate = Bits::npos;
    for (std::size_t i = 0; i < rem.size(); ++i)
      if (symplectic_form_packed(u, rem[i], n)) {
        mate = i;
        break;
      }
    if (mate == Bits::npos)
      throw std::logic_error("pair_completion: degenerate quotient form");
    Bits v = rem[mate];
    rem.erase(rem.begin() + mate);
    for (Bits& x : rem) {
      if (symplectic_form_packed(x, v, n)) x ^= u;
      if (symplectic_form_packed(x, u, n)) x ^= v;
    }
    pairs.emplace_back(unpack_pauli(u, n), unpack_pauli(v, n));
  }
  return pairs;
}

namespace {

StabilizerGroup drop_qubits(std::size_t n, std::vector<Bits> rows,
                            std::vector<std::size_t> dead) {
  std::sort(dead.begin(), dead.end());
  std::size_t n_out = n - dead.size();
  BinaryMatrix out(0, 2 * n_out);
  for (const Bits& r : rows) {
    Bits b(2 * n_out);
    std::size_t k = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (std::binary_search(dead.begin(), dead.end(), q)) continue;
      b.set(k, r.get(q));
      b.set(n_out + k, r.get(n + q));
      ++k;
    }
    out.append_row(std::move(b));
  }
  return StabilizerGroup::from_packed(n_out, out);
}

}  // namespace

StabilizerGroup project_plus(const StabilizerGroup& s, std::size_t q) {
  std::size_t n = s.n();
  if (q >= n) throw std::invalid_argument("project_plus: qubit out of range");
  std::vector<Bits> rows;
  for (std::size_t r = 0; r < s.gens().rows(); ++r)
    rows.push_back(s.gens().row(r));
  // A row anticommutes with X_q exactly when its z bit at q is set.
  std::size_t piv = Bits::npos;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].get(n + q)) {
      piv = i;
      break;
    }
  if (piv != Bits::npos) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != piv && rows[i].get(n + q)) rows[i] ^= rows[piv];
    rows.erase(rows.begin() + piv);
  }
  // Multiply by the adjoined X_q to clear residual X action on q.
  for (Bits& r : rows) r.set(q, false);
  return drop_qubits(n, std::move(rows), {q});
}

StabilizerGroup contract_bond(const StabilizerGroup& s, std::size_t q1,
                              std::size_t q2) {
  std::size_t n = s.n();
  if (q1 == q2 || q1 >= n || q2 >= n)
    throw std::invalid_argument("contract_bond: bad qubit pair");
  std::vector<Bits> rows;
  for (std::size_t r = 0; r < s.gens().rows(); ++r)
    rows.push_back(s.gens().row(r));

  auto postselect = [&](auto anti) {
    std::size_t piv = Bits::npos;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (anti(rows[i])) {
        piv = i;
        break;
      }
    if (piv != Bits::npos) {
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != piv && anti(rows[i])) rows[i] ^= rows[piv];
      rows.erase(rows.begin() + piv);
    }
  };
  // X_q1 X_q2, then Z_q1 Z_q2.
  postselect([&](const Bits& r) { return r.get(n + q1) != r.get(n + q2); });
  postselect([&](const Bits& r) { return r.get(q1) != r.get(q2); });

  // Remaining rows restrict to {II, XX, YY, ZZ} on the bond; clear with
  // the adjoined Bell operators.
  for (Bits& r : rows) {
    if (r.get(q1)) {
      r.set(q1, false);
      r.set(q2, false);
    }
    if (r.get(n + q1)) {
      r.set(n + q1, false);
      r.set(n + q2, false);
    }
  }
  return drop_qubits(n, std::move(rows), {q1, q2});
}

StabilizerGroup permute_qubits(const StabilizerGroup& s,
                               const std::vector<std::size_t>& old_of_new) {
  std::size_t n = s.n();
  if (old_of_new.size() != n)
    throw std::invalid_argument("permute_qubits: wrong permutation length");
  BinaryMatrix out(0, 2 * n);
  for (std::size_t r = 0; r < s.gens().rows(); ++r) {
    const Bits& src = s.gens().row(r);
    Bits b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      b.set(i, src.get(old_of_new[i]));
      b.set(n + i, src.get(n + old_of_new[i]));
    }
    out.append_row(std::move(b));
  }
  return StabilizerGroup::from_packed(n, out);
}

}  // namespace stabwire
