// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/oracle.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace stabwire {

namespace {

using Cx = std::complex<double>;

Eigen::Matrix2cd pauli1(bool x, bool z) {
  Eigen::Matrix2cd m;
  if (x && z)
    m << Cx(0, 0), Cx(0, -1), Cx(0, 1), Cx(0, 0);
  else if (x)
    m << 0, 1, 1, 0;
  else if (z)
    m << 1, 0, 0, -1;
  else
    m << 1, 0, 0, 1;
  return m;
}

// Sign patterns sorted by (flip count, value) so the lowest-index flip
// comes first.
std::vector<unsigned> flip_order(unsigned width) {
  std::vector<unsigned> out(1u << width);
  for (unsigned i = 0; i < out.size(); ++i) out[i] = i;
  std::sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

// Dense state under construction, qubits tracked by label; the first
// label is the most significant amplitude bit. Postselections try sign
// branches in a fixed order and keep the first nonzero one, mirroring
// sign-free postselection in the symplectic picture. Every branch set
// is a complete basis, so a nonzero branch always exists.
class DenseAssembly {
 public:
  DenseAssembly() : amp_(1) { amp_(0) = 1.0; }

  void attach(const Eigen::VectorXcd& t, const std::vector<std::size_t>& labels) {
    Eigen::VectorXcd next(amp_.size() * t.size());
    for (Eigen::Index i = 0; i < amp_.size(); ++i)
      for (Eigen::Index k = 0; k < t.size(); ++k)
        next(i * t.size() + k) = amp_(i) * t(k);
    amp_ = std::move(next);
    labels_.insert(labels_.end(), labels.begin(), labels.end());
  }

  // <+| on the labelled qubit, falling back to <-|.
  void postselect_plus(std::size_t label) {
    std::size_t j = position(label);
    for (int branch = 0; branch < 2; ++branch) {
      Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amp_.size() / 2);
      for (Eigen::Index idx = 0; idx < amp_.size(); ++idx) {
        int bit = bit_at(idx, j);
        double w = (branch == 1 && bit == 1) ? -1.0 : 1.0;
        out(drop_bit(idx, j)) += w * amp_(idx);
      }
      if (accept(std::move(out), {label})) return;
    }
    throw std::logic_error("both X branches vanished");
  }

  // Bell-basis postselection of two qubits; branch order Phi+, Phi-,
  // Psi+, Psi-.
  void postselect_bell(std::size_t la, std::size_t lb) {
    std::size_t j1 = position(la), j2 = position(lb);
    for (int branch = 0; branch < 4; ++branch) {
      bool anti = branch >= 2;     // Psi: indices differ
      bool minus = branch & 1;     // sign on the second term
      Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amp_.size() / 4);
      for (Eigen::Index idx = 0; idx < amp_.size(); ++idx) {
        int b1 = bit_at(idx, j1), b2 = bit_at(idx, j2);
        if ((b1 ^ b2) != (anti ? 1 : 0)) continue;
        double w = (minus && b1 == 1) ? -1.0 : 1.0;
        out(drop_two(idx, j1, j2)) += w * amp_(idx);
      }
      if (accept(std::move(out), {la, lb})) return;
    }
    throw std::logic_error("all Bell branches vanished");
  }

  // Amplitudes reordered to the requested label sequence.
  Eigen::VectorXcd finish(const std::vector<std::size_t>& order) const {
    if (order.size() != labels_.size())
      throw std::logic_error("finish label count mismatch");
    std::size_t m = labels_.size();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amp_.size());
    for (Eigen::Index idx = 0; idx < amp_.size(); ++idx) {
      Eigen::Index to = 0;
      for (std::size_t k = 0; k < m; ++k) {
        std::size_t j = position(order[k]);
        to |= static_cast<Eigen::Index>(bit_at(idx, j)) << (m - 1 - k);
      }
      out(to) = amp_(idx);
    }
    return out;
  }

 private:
  std::size_t position(std::size_t label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::logic_error("unknown qubit label");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  int bit_at(Eigen::Index idx, std::size_t j) const {
    return (idx >> (labels_.size() - 1 - j)) & 1;
  }

  Eigen::Index drop_bit(Eigen::Index idx, std::size_t j) const {
    std::size_t shift = labels_.size() - 1 - j;
    Eigen::Index high = idx >> (shift + 1);
    Eigen::Index low = idx & ((Eigen::Index(1) << shift) - 1);
    return (high << shift) | low;
  }

  Eigen::Index drop_two(Eigen::Index idx, std::size_t j1, std::size_t j2) const {
    if (j1 > j2) std::swap(j1, j2);
    std::size_t s1 = labels_.size() - 1 - j1;  // higher shift
    std::size_t s2 = labels_.size() - 1 - j2;
    Eigen::Index high = idx >> (s1 + 1);
    Eigen::Index mid = (idx >> (s2 + 1)) & ((Eigen::Index(1) << (s1 - s2 - 1)) - 1);
    Eigen::Index low = idx & ((Eigen::Index(1) << s2) - 1);
    return (high << (s1 - 1)) | (mid << s2) | low;
  }

  bool accept(Eigen::VectorXcd out, std::vector<std::size_t> removed) {
    double norm = out.norm();
    if (norm < 1e-12) return false;
    amp_ = out / norm;
    for (std::size_t l : removed)
      labels_.erase(std::find(labels_.begin(), labels_.end(), l));
    return true;
  }

  std::vector<std::size_t> labels_;
  Eigen::VectorXcd amp_;
};

constexpr std::size_t kU = 0, kD = 1, kL = 2, kR = 3, kPhys = 4;

}  // namespace

Eigen::MatrixXcd pauli_dense(const PauliVector& p) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Ones(1, 1);
  // Innermost factor first, so qubit 0 ends up most significant.
  for (std::size_t qi = p.n; qi-- > 0;) {
    Eigen::Matrix2cd f = pauli1(p.x.get(qi), p.z.get(qi));
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        next.block(i * m.rows(), j * m.cols(), m.rows(), m.cols()) =
            f(i, j) * m;
    m = std::move(next);
  }
  return m;
}

DenseTensor densify(const StabilizerTensor& A) {
  auto gens = A.group.generators();
  std::vector<Eigen::MatrixXcd> mats;
  for (const auto& g : gens) mats.push_back(pauli_dense(g));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(32, 32);
  for (unsigned flips : flip_order(5)) {
    Eigen::MatrixXcd proj = id;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      double sign = ((flips >> i) & 1) ? -1.0 : 1.0;
      proj = proj * (0.5 * (id + sign * mats[i]));
    }
    // The joint eigenprojector is rank 1 when the signs are admissible
    // and 0 otherwise.
    Eigen::Index best = 0;
    double best_norm = 0;
    for (Eigen::Index c = 0; c < 32; ++c) {
      double nc = proj.col(c).norm();
      if (nc > best_norm) {
        best_norm = nc;
        best = c;
      }
    }
    if (best_norm > 1e-9) {
      DenseTensor t;
      t.amp = proj.col(best) / best_norm;
      return t;
    }
  }
  throw std::logic_error("no admissible sign pattern for stabilizer tensor");
}

EdgeState contract_cylinder(const StabilizerTensor& A, std::size_t n,
                            std::size_t d) {
  if (n < 1 || n > 6 || d < 1 || d > 6)
    throw std::invalid_argument("dense contraction limited to n,d in 1..6");
  DenseTensor t = densify(A);
  DenseAssembly state;
  auto leg = [&](std::size_t col, std::size_t site, std::size_t which) {
    return 5 * (col * n + site) + which;
  };
  // Column-major, one site at a time; bonds are contracted as soon as
  // both ends exist so the live qubit count stays O(n).
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t s = 0; s < n; ++s) {
      state.attach(t.amp, {leg(c, s, kU), leg(c, s, kD), leg(c, s, kL),
                           leg(c, s, kR), leg(c, s, kPhys)});
      state.postselect_plus(leg(c, s, kPhys));
      if (c > 0) state.postselect_bell(leg(c - 1, s, kR), leg(c, s, kL));
      if (s > 0) state.postselect_bell(leg(c, s - 1, kD), leg(c, s, kU));
    }
    state.postselect_bell(leg(c, n - 1, kD), leg(c, 0, kU));
  }
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) order.push_back(leg(0, s, kL));
  for (std::size_t s = 0; s < n; ++s) order.push_back(leg(d - 1, s, kR));
  Eigen::VectorXcd flat = state.finish(order);

  std::size_t dim = std::size_t(1) << n;
  EdgeState out;
  out.amp = Eigen::MatrixXcd(dim, dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t r = 0; r < dim; ++r)
      out.amp(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(r)) =
          flat(static_cast<Eigen::Index>((l << n) | r));
  return out;
}

std::vector<double> schmidt_spectrum(const EdgeState& s) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.amp);
  std::vector<double> out(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  return out;
}

std::size_t schmidt_qubits(const EdgeState& s, std::size_t n) {
  auto sv = schmidt_spectrum(s);
  if (sv.empty() || sv[0] <= 0)
    throw std::invalid_argument("zero edge state");
  std::size_t rank = 0;
  for (double v : sv)
    if (v > 1e-9 * sv[0]) ++rank;
  if (!std::has_single_bit(rank))
    throw std::runtime_error("Schmidt rank is not a power of two");
  (void)n;
  return static_cast<std::size_t>(std::countr_zero(rank));
}

}  // namespace stabwire
