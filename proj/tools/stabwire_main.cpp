// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "stabwire/classify.hpp"
#include "stabwire/oracle.hpp"

namespace fs = std::filesystem;
using namespace stabwire;

namespace {

struct Options {
  std::size_t n_max = 6, d_max = 6;
  std::string cache_dir;
  std::string out;
  std::size_t workers = 1;
  std::uint64_t seed = 1;
  bool trace = false;
  bool corrupt_for_test = false;
};

fs::path cache_path(const Options& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("STABWIRE_CACHE")) return env;
  return ".stabwire-cache";
}

OrbitTable load_or_build(const Options& opt, bool* was_cached = nullptr) {
  fs::path dir = cache_path(opt);
  if (auto t = load_cache(dir)) {
    if (was_cached) *was_cached = true;
    return *t;
  }
  if (was_cached) *was_cached = false;
  OrbitTable t = compute_orbits();
  fs::create_directories(dir);
  if (!write_cache(t, dir))
    throw std::runtime_error("cannot write cache to " + dir.string());
  return t;
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + p.string());
  f << text;
}

int cmd_enumerate(const Options& opt) {
  bool cached = false;
  OrbitTable t = load_or_build(opt, &cached);
  std::cout << "lagrangians=" << t.keys.size() << " orbits=" << t.orbit_count()
            << "\n";
  if (cached) std::cout << "cached\n";
  return 0;
}

int cmd_capacity(const Options& opt, const std::string& file, std::size_t n,
                 std::size_t d) {
  std::ifstream f(file);
  if (!f) {
    std::cerr << "error: cannot open " << file << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  StabilizerTensor A = tensor_from_file(buf.str());
  CapacityTrace trace;
  auto profile = capacity_profile(A, n, d, opt.trace ? &trace : nullptr);
  if (opt.trace) {
    for (std::size_t k = 0; k < trace.fronts.size(); ++k) {
      std::cout << "depth " << (k + 1) << ":";
      for (const auto& p : trace.fronts[k]) std::cout << " " << p.to_string();
      std::cout << "\n";
    }
  }
  std::cout << "C = " << profile[d - 1] << "\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  OrbitTable t = load_or_build(opt);
  ClassificationReport r = sweep(t, 6, 6, opt.workers);

  fs::path out = opt.out.empty() ? fs::path(".") : fs::path(opt.out);
  write_file(out / "report.csv", report_csv(r));
  write_file(out / "census.csv", census_csv(r));

  for (const auto& [c, k] : r.census())
    std::cout << "class " << c << ": " << k << "\n";
  for (const auto& [letter, classes] : phi_transmission_crosstab(r)) {
    std::cout << "phi " << letter << ":";
    for (int c : classes) std::cout << " " << c;
    std::cout << "\n";
  }
  std::cout << "classes=" << r.class_signatures.size() << "\n";
  std::cout << "omega_classes=" << r.omega_vectors.size() << "\n";
  return r.class_signatures.size() == 13 ? 0 : 1;
}

struct SuiteResult {
  bool ok = true;
  std::string witness;
};

void fail(SuiteResult& s, const std::string& w) {
  if (s.ok) s.witness = w;
  s.ok = false;
}

SuiteResult suite_oracle(const OrbitTable& t, const ClassificationReport& r,
                         const Options& opt) {
  SuiteResult res;
  // One representative per transmission class, exact dense cross-check.
  std::vector<std::uint32_t> picks;
  {
    std::set<int> seen;
    for (const auto& rec : r.records)
      if (seen.insert(rec.transmission_class).second)
        picks.push_back(rec.canonical_ordinal);
  }
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < 20; ++i)
    picks.push_back(static_cast<std::uint32_t>(rng() % t.keys.size()));

  bool first = true;
  for (std::uint32_t ord : picks) {
    auto A = tensor_from_key(t.keys[ord]);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto profile = capacity_profile(A, n, 3);
      for (std::size_t d = 1; d <= 3; ++d) {
        std::size_t alg = profile[d - 1];
        if (opt.corrupt_for_test && first) {
          alg += 1;  // negative control: the oracle must catch this
          first = false;
        }
        std::size_t dense = schmidt_qubits(contract_cylinder(A, n, d), n);
        if (alg != dense) {
          std::ostringstream w;
          w << "ordinal=" << ord << " n=" << n << " d=" << d
            << " algorithm=" << alg << " oracle=" << dense;
          fail(res, w.str());
        }
      }
    }
  }
  return res;
}

SuiteResult suite_update_rule(const OrbitTable& t, const Options& opt) {
  SuiteResult res;
  std::mt19937_64 rng(opt.seed + 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t ord = static_cast<std::uint32_t>(rng() % t.keys.size());
    auto A = tensor_from_key(t.keys[ord]);
    std::size_t n = 1 + rng() % 4;

    // Capacity is non-increasing in d and its plateau persists.
    auto profile = capacity_profile(A, n, 12);
    for (std::size_t d = 1; d < 12; ++d) {
      if (profile[d] > profile[d - 1]) {
        std::ostringstream w;
        w << "ordinal=" << ord << " n=" << n << " d=" << d + 1
          << " capacity increased " << profile[d - 1] << "->" << profile[d];
        fail(res, w.str());
      }
    }
    for (std::size_t d = n; d + 1 < 12; ++d) {
      // Once the profile is flat past depth n it never drops again.
      if (profile[d] == profile[d - 1] && profile[d + 1] != profile[d]) {
        std::ostringstream w;
        w << "ordinal=" << ord << " n=" << n << " plateau broke at d=" << d + 2;
        fail(res, w.str());
      }
    }

    // Chain capacity equals the direct cylinder computation.
    for (std::size_t d = 1; d <= 3; ++d) {
      auto direct = canonical_bipartite_form(cylinder_group(A, n, d).group, n);
      if (profile[d - 1] != direct.p) {
        std::ostringstream w;
        w << "ordinal=" << ord << " n=" << n << " d=" << d << " chain="
          << profile[d - 1] << " direct=" << direct.p;
        fail(res, w.str());
      }
    }

    // T preserves the symplectic form on random domain elements.
    auto rule = make_update_rule(phi1(A, n));
    auto random_domain = [&]() {
      Bits row(2 * n);
      for (std::size_t r = 0; r < rule.domain.rows(); ++r)
        if (rng() & 1) row ^= rule.domain.row(r);
      return unpack_pauli(row, n);
    };
    for (int k = 0; k < 4; ++k) {
      PauliVector x = random_domain(), y = random_domain();
      auto tx = apply_T(rule, x), ty = apply_T(rule, y);
      if (tx && ty &&
          symplectic_form(x, y) != symplectic_form(*tx, *ty)) {
        std::ostringstream w;
        w << "ordinal=" << ord << " n=" << n << " T broke commutation on "
          << x.to_string() << ", " << y.to_string();
        fail(res, w.str());
      }
    }
  }
  return res;
}

SuiteResult suite_stability(const OrbitTable& t, const ClassificationReport& r,
                            const Options& opt) {
  SuiteResult res;
  auto witnesses =
      proposition1_check(t, r, 7, 7, opt.seed, 20, opt.workers);
  if (!witnesses.empty()) {
    const auto& w = witnesses.front();
    std::ostringstream s;
    s << "ordinals=" << w.ordinal_a << "," << w.ordinal_b << " n=" << w.n
      << " d=" << w.d << " capacities=" << w.capacity_a << ","
      << w.capacity_b;
    fail(res, s.str());
  }
  return res;
}

int cmd_verify(const Options& opt) {
  OrbitTable t = load_or_build(opt);
  ClassificationReport r = sweep(t, 6, 6, opt.workers);

  bool all_ok = true;
  auto run = [&](const char* name, SuiteResult s) {
    std::cout << "suite " << name << ": " << (s.ok ? "pass" : "fail") << "\n";
    if (!s.ok) {
      std::cout << "  counterexample: " << s.witness << "\n";
      all_ok = false;
    }
  };
  run("oracle-equivalence", suite_oracle(t, r, opt));
  run("update-rule-properties", suite_update_rule(t, opt));
  run("signature-stability", suite_stability(t, r, opt));
  return all_ok ? 0 : 1;
}

int cmd_heatmap(const Options& opt, int class_id) {
  OrbitTable t = load_or_build(opt);
  ClassificationReport r = sweep(t, 6, 6, opt.workers);
  if (class_id < 0 ||
      class_id >= static_cast<int>(r.class_signatures.size())) {
    std::cerr << "error: unknown class id " << class_id << "\n";
    return 1;
  }

  // A representative tensor extends the signature past the base grid.
  StabilizerTensor rep;
  for (const auto& rec : r.records)
    if (rec.transmission_class == class_id) {
      rep = tensor_from_key(t.keys[rec.canonical_ordinal]);
      break;
    }

  std::vector<std::vector<std::size_t>> grid(opt.n_max);
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    auto profile = capacity_profile(rep, n, opt.d_max);
    grid[n - 1].assign(profile.begin(), profile.end());
  }

  std::ostringstream csv;
  csv << "# stabwire-heatmap v1\n" << "n,d,capacity\n";
  for (std::size_t n = 1; n <= opt.n_max; ++n)
    for (std::size_t d = 1; d <= opt.d_max; ++d)
      csv << n << "," << d << "," << grid[n - 1][d - 1] << "\n";
  fs::path out = opt.out.empty()
                     ? fs::path("heatmap_class" + std::to_string(class_id) +
                                ".csv")
                     : fs::path(opt.out);
  write_file(out, csv.str());

  std::cout << "class " << class_id << " C(n,d), n down, d across:\n";
  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    std::cout << "  n=" << std::setw(2) << n << " |";
    for (std::size_t d = 1; d <= opt.d_max; ++d)
      std::cout << " " << std::setw(2) << grid[n - 1][d - 1];
    std::cout << "\n";
  }
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabwire: transmission classification of stabilizer PEPS "
               "wires on a cylinder"};
  app.require_subcommand(1);

  Options opt;
  std::string tensor_file;
  std::size_t cap_n = 5, cap_d = 5;
  int class_id = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--n-max", opt.n_max, "largest ring circumference")
        ->check(CLI::PositiveNumber);
    c->add_option("--d-max", opt.d_max, "largest cylinder depth")
        ->check(CLI::PositiveNumber);
    c->add_option("--cache-dir", opt.cache_dir,
                  "enumeration cache directory (default $STABWIRE_CACHE)");
    c->add_option("--out", opt.out, "output file or directory");
    c->add_option("--workers", opt.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
    c->add_option("--seed", opt.seed, "seed for randomized suites");
    c->add_flag("--trace", opt.trace, "print per-depth chain fronts");
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "enumerate all Lagrangians and gauge orbits");
  add_common(enumerate);

  auto* capacity = app.add_subcommand(
      "capacity", "transmission capacity of one tensor file");
  capacity->add_option("tensor", tensor_file, "tensor file")->required();
  capacity->add_option("-n", cap_n, "ring circumference")
      ->check(CLI::PositiveNumber);
  capacity->add_option("-d", cap_d, "cylinder depth")
      ->check(CLI::PositiveNumber);
  add_common(capacity);

  auto* classify = app.add_subcommand(
      "classify", "full classification sweep with CSV reports");
  add_common(classify);

  auto* verify = app.add_subcommand(
      "verify", "oracle cross-checks and property suites");
  verify->add_flag("--corrupt-for-test", opt.corrupt_for_test,
                   "inject a fault the oracle suite must catch");
  add_common(verify);

  auto* heatmap = app.add_subcommand(
      "heatmap", "capacity grid of one transmission class");
  heatmap->add_option("class", class_id, "transmission class id")->required();
  add_common(heatmap);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return cmd_enumerate(opt);
    if (*capacity) return cmd_capacity(opt, tensor_file, cap_n, cap_d);
    if (*classify) return cmd_classify(opt);
    if (*verify) return cmd_verify(opt);
    if (*heatmap) return cmd_heatmap(opt, class_id);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
