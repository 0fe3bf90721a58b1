// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace stabwire {

std::size_t ClassSignature::total() const {
  std::size_t t = 0;
  for (const auto& row : grid)
    for (auto v : row) t += v;
  return t;
}

ClassSignature ClassSignature::constant(std::size_t value) {
  ClassSignature s;
  for (auto& row : s.grid)
    for (auto& v : row) v = static_cast<std::uint8_t>(value);
  return s;
}

ClassSignature ClassSignature::linear(int offset) {
  ClassSignature s;
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d)
      s.grid[n - 1][d - 1] = static_cast<std::uint8_t>(std::max(0, n + offset));
  return s;
}

std::map<int, std::size_t> ClassificationReport::census() const {
  std::map<int, std::size_t> out;
  for (const auto& r : records) ++out[r.transmission_class];
  return out;
}

std::map<char, std::set<int>> ClassificationReport::phi_crosstab() const {
  std::map<char, std::set<int>> out;
  for (const auto& r : records) out[r.phi_class].insert(r.transmission_class);
  return out;
}

std::map<int, std::set<int>> ClassificationReport::omega_crosstab() const {
  std::map<int, std::set<int>> out;
  for (const auto& r : records) out[r.omega_class].insert(r.transmission_class);
  return out;
}

namespace {

struct PerRep {
  ClassSignature sig;
  char phi = '?';
  std::string omega;
};

PerRep evaluate(const StabilizerTensor& A, std::size_t n_max,
                std::size_t d_max) {
  PerRep out;
  std::array<std::size_t, 6> p_sig{};
  for (std::size_t n = 1; n <= 6 || n <= n_max; ++n) {
    auto phi = phi1(A, n);
    if (n <= 6) p_sig[n - 1] = phi.p;
    if (n <= n_max) {
      auto profile = capacity_profile(phi, d_max);
      for (std::size_t d = 1; d <= d_max && d <= 6 && n <= 6; ++d)
        out.sig.grid[n - 1][d - 1] = static_cast<std::uint8_t>(profile[d - 1]);
      if (!out.omega.empty()) out.omega += ';';
      out.omega += omega_serialize(omega_standard_form(omega_of(phi, n)));
    }
    if (n >= 6 && n >= n_max) break;
  }
  out.phi = phi_letter(p_sig);
  return out;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

std::string dump_signature(const ClassSignature& s) {
  std::string out;
  for (const auto& row : s.grid) {
    for (auto v : row) out += static_cast<char>('0' + v);
    out += '/';
  }
  return out;
}

}  // namespace

ClassificationReport sweep(const OrbitTable& table, std::size_t n_max,
                           std::size_t d_max, std::size_t workers) {
  auto reps = table.representatives();
  std::vector<PerRep> data(reps.size());
  parallel_for(reps.size(), workers, [&](std::size_t i) {
    data[i] = evaluate(tensor_from_key(table.keys[reps[i]]), n_max, d_max);
  });

  ClassificationReport report;
  report.n_max = n_max;
  report.d_max = d_max;

  // Transmission class ids: 0 for the all-zero signature, the top id
  // for C(n,d) = n, the rest ascending by (capacity sum, grid).
  std::set<ClassSignature> distinct;
  for (const auto& d : data) distinct.insert(d.sig);
  if (distinct.size() != 13) {
    std::string msg = "expected 13 distinct signatures, found " +
                      std::to_string(distinct.size()) + ":\n";
    for (const auto& s : distinct) msg += "  " + dump_signature(s) + "\n";
    throw std::runtime_error(msg);
  }
  ClassSignature zero = ClassSignature::constant(0);
  ClassSignature full = ClassSignature::linear(0);
  if (!distinct.count(zero) || !distinct.count(full))
    throw std::runtime_error("trivial or full-capacity signature missing");
  std::vector<ClassSignature> middle;
  for (const auto& s : distinct)
    if (!(s == zero) && !(s == full)) middle.push_back(s);
  std::sort(middle.begin(), middle.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.total(), a) < std::make_pair(b.total(), b);
  });
  report.class_signatures.push_back(zero);
  report.class_signatures.insert(report.class_signatures.end(), middle.begin(),
                                 middle.end());
  report.class_signatures.push_back(full);
  std::map<ClassSignature, int> class_of;
  for (std::size_t i = 0; i < report.class_signatures.size(); ++i)
    class_of[report.class_signatures[i]] = static_cast<int>(i);

  std::set<std::string> omega_set;
  for (const auto& d : data) omega_set.insert(d.omega);
  report.omega_vectors.assign(omega_set.begin(), omega_set.end());
  std::map<std::string, int> omega_of_vec;
  for (std::size_t i = 0; i < report.omega_vectors.size(); ++i)
    omega_of_vec[report.omega_vectors[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < reps.size(); ++i) {
    TensorRecord r;
    r.canonical_ordinal = reps[i];
    r.sig = data[i].sig;
    r.transmission_class = class_of.at(data[i].sig);
    r.phi_class = data[i].phi;
    r.omega_class = omega_of_vec.at(data[i].omega);
    report.records.push_back(r);
  }
  return report;
}

std::map<char, std::set<int>> phi_transmission_crosstab(
    const ClassificationReport& report) {
  auto tab = report.phi_crosstab();
  const std::map<char, std::size_t> shape = {{'a', 1}, {'b', 2}, {'c', 3},
                                             {'d', 2}, {'e', 2}, {'f', 2},
                                             {'g', 1}};
  std::string err;
  if (tab.size() != shape.size()) err = "wrong number of phi letters";
  for (const auto& [letter, want] : shape)
    if (err.empty() && tab[letter].size() != want)
      err = std::string("phi class ") + letter + " spans " +
            std::to_string(tab[letter].size()) + " transmission classes, want " +
            std::to_string(want);
  int top = static_cast<int>(report.class_signatures.size()) - 1;
  if (err.empty() && tab['a'] != std::set<int>{0})
    err = "phi class a is not the trivial class";
  if (err.empty() && tab['g'] != std::set<int>{top})
    err = "phi class g is not the full-capacity class";
  if (!err.empty()) throw std::runtime_error("crosstab mismatch: " + err);
  return tab;
}

namespace {

// Standard local generator families and their Z_L groups on a ring.
struct ZlFamily {
  std::string name;
  // Z_L generators at circumference n, before relabeling.
  std::function<std::vector<PauliVector>(std::size_t)> zl;
};

PauliVector ring_op(std::size_t n, const std::vector<std::pair<std::size_t, char>>& sites) {
  PauliVector p(n);
  for (auto [i, c] : sites) {
    std::size_t q = i % n;
    if (c == 'X' || c == 'Y') p.x.flip(q);
    if (c == 'Z' || c == 'Y') p.z.flip(q);
  }
  return p;
}

std::vector<ZlFamily> zl_families() {
  std::vector<ZlFamily> fam;
  fam.push_back({"<Z_i>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   for (std::size_t i = 0; i < n; ++i)
                     g.push_back(ring_op(n, {{i, 'Z'}}));
                   return g;
                 }});
  fam.push_back({"<X_{i-1} Z_i X_{i+1}>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   for (std::size_t i = 0; i < n; ++i)
                     g.push_back(ring_op(n, {{i + n - 1, 'X'}, {i, 'Z'}, {i + 1, 'X'}}));
                   return g;
                 }});
  fam.push_back({"<Z_i Z_{i+1}, prod X_i>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   for (std::size_t i = 0; i < n; ++i)
                     g.push_back(ring_op(n, {{i, 'Z'}, {i + 1, 'Z'}}));
                   std::vector<std::pair<std::size_t, char>> all;
                   for (std::size_t i = 0; i < n; ++i) all.push_back({i, 'X'});
                   g.push_back(ring_op(n, all));
                   return g;
                 }});
  fam.push_back({"<Z_i Z_{i+1}>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   for (std::size_t i = 0; i < n; ++i)
                     g.push_back(ring_op(n, {{i, 'Z'}, {i + 1, 'Z'}}));
                   return g;
                 }});
  fam.push_back({"<prod Z_i>", [](std::size_t n) {
                   std::vector<std::pair<std::size_t, char>> all;
                   for (std::size_t i = 0; i < n; ++i) all.push_back({i, 'Z'});
                   return std::vector<PauliVector>{ring_op(n, all)};
                 }});
  fam.push_back({"<prod Z_even, prod Z_odd> / <prod Z_i>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   if (n % 2 == 0) {
                     std::vector<std::pair<std::size_t, char>> ev, od;
                     for (std::size_t i = 0; i < n; i += 2) {
                       ev.push_back({i, 'Z'});
                       od.push_back({i + 1, 'Z'});
                     }
                     g.push_back(ring_op(n, ev));
                     g.push_back(ring_op(n, od));
                   } else {
                     std::vector<std::pair<std::size_t, char>> all;
                     for (std::size_t i = 0; i < n; ++i) all.push_back({i, 'Z'});
                     g.push_back(ring_op(n, all));
                   }
                   return g;
                 }});
  fam.push_back({"<prod Z_{3i} Z_{3i+1}, prod Z_{3i+1} Z_{3i+2}> / <I>",
                 [](std::size_t n) {
                   std::vector<PauliVector> g;
                   if (n % 3 == 0) {
                     std::vector<std::pair<std::size_t, char>> g1, g2;
                     for (std::size_t i = 0; i < n; i += 3) {
                       g1.push_back({i, 'Z'});
                       g1.push_back({i + 1, 'Z'});
                       g2.push_back({i + 1, 'Z'});
                       g2.push_back({i + 2, 'Z'});
                     }
                     g.push_back(ring_op(n, g1));
                     g.push_back(ring_op(n, g2));
                   }
                   return g;
                 }});
  fam.push_back({"<prod Z_i> (n even) / <I>", [](std::size_t n) {
                   std::vector<PauliVector> g;
                   if (n % 2 == 0) {
                     std::vector<std::pair<std::size_t, char>> all;
                     for (std::size_t i = 0; i < n; ++i) all.push_back({i, 'Z'});
                     g.push_back(ring_op(n, all));
                   }
                   return g;
                 }});
  fam.push_back({"<I>", [](std::size_t) { return std::vector<PauliVector>{}; }});
  return fam;
}

BinaryMatrix row_space(const std::vector<PauliVector>& gens, std::size_t n) {
  BinaryMatrix m(0, 2 * n);
  for (const auto& g : gens) m.append_row(pack_pauli(g));
  return m.row_basis();
}

// Uniform single-qubit symplectic relabeling of every site.
std::vector<PauliVector> relabel(const std::vector<PauliVector>& gens,
                                 const Mat2& m) {
  std::vector<PauliVector> out;
  for (const auto& g : gens) {
    PauliVector p(g.n);
    for (std::size_t q = 0; q < g.n; ++q) {
      unsigned x = g.x.get(q), z = g.z.get(q);
      if ((m.a & x) ^ (m.b & z)) p.x.set(q);
      if ((m.c & x) ^ (m.d & z)) p.z.set(q);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<ZlVerdict> zl_table_check(const OrbitTable& table) {
  auto fams = zl_families();
  const std::array<std::size_t, 3> ns = {4, 5, 6};

  // Expected Z_L row spaces per family, per relabeling, per n.
  struct Expected {
    std::size_t family;
    std::array<BinaryMatrix, 3> spaces;
  };
  std::vector<Expected> expected;
  for (std::size_t f = 0; f < fams.size(); ++f)
    for (const Mat2& m : gl2_all()) {
      Expected e;
      e.family = f;
      for (std::size_t k = 0; k < 3; ++k)
        e.spaces[k] = row_space(relabel(fams[f].zl(ns[k]), m), ns[k]);
      if (std::none_of(expected.begin(), expected.end(), [&](const Expected& o) {
            return o.family == f && o.spaces == e.spaces;
          }))
        expected.push_back(std::move(e));
    }

  std::vector<ZlVerdict> verdicts;
  for (const auto& f : fams) verdicts.push_back({f.name, false, 0});

  for (std::uint32_t r : table.representatives()) {
    if (std::all_of(verdicts.begin(), verdicts.end(),
                    [](const ZlVerdict& v) { return v.matched; }))
      break;
    auto A = tensor_from_key(table.keys[r]);
    std::array<BinaryMatrix, 3> actual;
    for (std::size_t k = 0; k < 3; ++k)
      actual[k] = row_space(phi1(A, ns[k]).a, ns[k]);
    for (const auto& e : expected)
      if (!verdicts[e.family].matched && e.spaces == actual) {
        verdicts[e.family].matched = true;
        verdicts[e.family].witness_ordinal = r;
      }
  }
  return verdicts;
}

std::vector<StabilityWitness> proposition1_check(
    const OrbitTable& table, const ClassificationReport& report,
    std::size_t n_ext, std::size_t d_ext, std::uint64_t seed,
    std::size_t random_pairs, std::size_t workers) {
  // Reference member per class plus a random sample, with each grid
  // computed once.
  std::map<int, std::uint32_t> reference;
  for (const auto& r : report.records)
    if (!reference.count(r.transmission_class))
      reference[r.transmission_class] = r.canonical_ordinal;

  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, int>> sampled;  // ordinal, class
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const auto& rec = report.records[rng() % report.records.size()];
    sampled.push_back({rec.canonical_ordinal, rec.transmission_class});
  }

  std::vector<std::uint32_t> ordinals;
  for (const auto& [cls, ord] : reference) ordinals.push_back(ord);
  for (const auto& [ord, cls] : sampled) ordinals.push_back(ord);
  std::sort(ordinals.begin(), ordinals.end());
  ordinals.erase(std::unique(ordinals.begin(), ordinals.end()), ordinals.end());

  std::vector<std::vector<std::vector<std::size_t>>> grids(ordinals.size());
  parallel_for(ordinals.size(), workers, [&](std::size_t i) {
    auto A = tensor_from_key(table.keys[ordinals[i]]);
    auto& grid = grids[i];
    grid.resize(n_ext);
    for (std::size_t n = 1; n <= n_ext; ++n)
      grid[n - 1] = capacity_profile(A, n, d_ext);
  });
  auto grid_of = [&](std::uint32_t ord) -> const auto& {
    auto it = std::lower_bound(ordinals.begin(), ordinals.end(), ord);
    return grids[static_cast<std::size_t>(it - ordinals.begin())];
  };

  std::vector<StabilityWitness> witnesses;
  for (const auto& [ord, cls] : sampled) {
    std::uint32_t ref = reference.at(cls);
    const auto& ga = grid_of(ref);
    const auto& gb = grid_of(ord);
    for (std::size_t n = 1; n <= n_ext; ++n)
      for (std::size_t d = 1; d <= d_ext; ++d)
        if (ga[n - 1][d - 1] != gb[n - 1][d - 1])
          witnesses.push_back({ref, ord, n, d, ga[n - 1][d - 1], gb[n - 1][d - 1]});
  }
  return witnesses;
}

std::string report_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "# stabwire-report v1\n";
  out << "canonical_ordinal,transmission_class,phi_class,omega_class";
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t d = 1; d <= 6; ++d) out << ",sig_c" << n << d;
  out << "\n";
  for (const auto& r : report.records) {
    out << r.canonical_ordinal << ',' << r.transmission_class << ','
        << r.phi_class << ',' << r.omega_class;
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t d = 1; d <= 6; ++d)
        out << ',' << static_cast<int>(r.sig.grid[n - 1][d - 1]);
    out << "\n";
  }
  return out.str();
}

std::string census_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "# stabwire-report v1\n";
  out << "class_id,count\n";
  for (const auto& [cls, count] : report.census())
    out << cls << ',' << count << "\n";
  return out.str();
}

}  // namespace stabwire
