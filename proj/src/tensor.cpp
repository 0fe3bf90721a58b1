// Copyright 2026 The stabwire authors
// SPDX-License-Identifier: Apache-2.0

#include "stabwire/tensor.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stabwire {

namespace {

// Packed 2n-bit row: column c at bit 2n-1-c, so the x block occupies
// the high n bits and the z block the low n bits.
int omega_u32(std::uint32_t a, std::uint32_t b, unsigned n) {
  std::uint32_t mask = (1u << n) - 1;
  std::uint32_t t = ((a >> n) & (b & mask)) ^ ((a & mask) & (b >> n));
  return std::popcount(t) & 1;
}

void rref_u32(std::vector<std::uint32_t>& rows, unsigned cols) {
  std::size_t r = 0;
  for (unsigned c = 0; c < cols && r < rows.size(); ++c) {
    std::uint32_t m = 1u << (cols - 1 - c);
    std::size_t piv = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i] & m) {
        piv = i;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & m)) rows[i] ^= rows[r];
    ++r;
  }
}

// Fill rows i..n-1 of an isotropic rref matrix with the pivot columns
// fixed. Free entries of row i are linear under the commutation
// constraints with rows 0..i-1, so plain enumeration with early
// rejection stays small.
void fill_rows(unsigned n, const std::vector<unsigned>& piv,
               std::uint32_t piv_mask, std::vector<std::uint32_t>& rows,
               unsigned i, std::vector<std::vector<std::uint32_t>>& out) {
  if (i == n) {
    out.push_back(rows);
    return;
  }
  unsigned cols = 2 * n;
  std::vector<unsigned> free_bits;
  for (unsigned c = piv[i] + 1; c < cols; ++c)
    if (!((piv_mask >> (cols - 1 - c)) & 1)) free_bits.push_back(cols - 1 - c);
  std::uint32_t base = 1u << (cols - 1 - piv[i]);
  for (std::uint32_t m = 0; m < (1u << free_bits.size()); ++m) {
    std::uint32_t row = base;
    for (std::size_t k = 0; k < free_bits.size(); ++k)
      if ((m >> k) & 1) row |= 1u << free_bits[k];
    bool ok = true;
    for (unsigned j = 0; j < i && ok; ++j)
      ok = omega_u32(rows[j], row, n) == 0;
    if (!ok) continue;
    rows[i] = row;
    fill_rows(n, piv, piv_mask, rows, i + 1, out);
  }
}

std::vector<std::vector<std::uint32_t>> enumerate_core(unsigned n) {
  std::vector<std::vector<std::uint32_t>> out;
  unsigned cols = 2 * n;
  std::vector<unsigned> piv;
  std::vector<std::uint32_t> rows(n, 0);
  // Depth-first over pivot column combinations, ascending.
  auto choose = [&](auto&& self, unsigned from) -> void {
    if (piv.size() == n) {
      std::uint32_t piv_mask = 0;
      for (unsigned c : piv) piv_mask |= 1u << (cols - 1 - c);
      fill_rows(n, piv, piv_mask, rows, 0, out);
      return;
    }
    for (unsigned c = from; c < cols; ++c) {
      piv.push_back(c);
      self(self, c + 1);
      piv.pop_back();
    }
  };
  choose(choose, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

constexpr unsigned kLegs = 5;

std::array<std::uint16_t, kLegs> unpack_key(TensorKey k) {
  std::array<std::uint16_t, kLegs> rows;
  for (unsigned r = 0; r < kLegs; ++r)
    rows[r] = (k >> (10 * (kLegs - 1 - r))) & 0x3ff;
  return rows;
}

TensorKey pack_key(const std::array<std::uint16_t, kLegs>& rows) {
  TensorKey k = 0;
  for (unsigned r = 0; r < kLegs; ++r) k = (k << 10) | rows[r];
  return k;
}

}  // namespace

StabilizerTensor::StabilizerTensor(StabilizerGroup g) : group(std::move(g)) {
  if (group.n() != kLegs || group.rank() != kLegs)
    throw std::invalid_argument("stabilizer tensor requires a Lagrangian of 5 qubits");
}

TensorKey tensor_key(const StabilizerTensor& t) {
  std::array<std::uint16_t, kLegs> rows{};
  for (unsigned r = 0; r < kLegs; ++r)
    for (unsigned c = 0; c < 2 * kLegs; ++c)
      if (t.group.gens().get(r, c)) rows[r] |= 1u << (9 - c);
  return pack_key(rows);
}

StabilizerTensor tensor_from_key(TensorKey k) {
  auto rows = unpack_key(k);
  BinaryMatrix m(kLegs, 2 * kLegs);
  for (unsigned r = 0; r < kLegs; ++r)
    for (unsigned c = 0; c < 2 * kLegs; ++c)
      if ((rows[r] >> (9 - c)) & 1) m.set(r, c);
  return StabilizerTensor(StabilizerGroup::from_packed(kLegs, m));
}

std::vector<BinaryMatrix> enumerate_lagrangians(std::size_t n) {
  auto raw = enumerate_core(static_cast<unsigned>(n));
  std::vector<BinaryMatrix> out;
  out.reserve(raw.size());
  for (const auto& rows : raw) {
    BinaryMatrix m(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < 2 * n; ++c)
        if ((rows[r] >> (2 * n - 1 - c)) & 1) m.set(r, c);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<TensorKey> enumerate_tensors() {
  auto raw = enumerate_core(kLegs);
  std::vector<TensorKey> out;
  out.reserve(raw.size());
  for (const auto& rows : raw) {
    std::array<std::uint16_t, kLegs> r16{};
    for (unsigned r = 0; r < kLegs; ++r)
      r16[r] = static_cast<std::uint16_t>(rows[r]);
    out.push_back(pack_key(r16));
  }
  return out;  // already sorted by enumerate_core
}

const std::array<Mat2, 6>& gl2_all() {
  static const std::array<Mat2, 6> all = [] {
    std::array<Mat2, 6> v{};
    std::size_t k = 0;
    for (unsigned bits = 0; bits < 16; ++bits) {
      Mat2 m{static_cast<std::uint8_t>(bits & 1),
             static_cast<std::uint8_t>((bits >> 1) & 1),
             static_cast<std::uint8_t>((bits >> 2) & 1),
             static_cast<std::uint8_t>((bits >> 3) & 1)};
      if (((m.a & m.d) ^ (m.b & m.c)) == 1) v[k++] = m;
    }
    return v;
  }();
  return all;
}

Mat2 bond_dual(const Mat2& m) {
  // The bond group <XX, ZZ> is the span of {(w, w)} in symplectic
  // coordinates, so the dual is whichever matrix agrees with m on every
  // vector.
  for (const Mat2& s : gl2_all()) {
    bool ok = true;
    for (unsigned w = 1; w < 4 && ok; ++w) {
      unsigned x = w & 1, z = (w >> 1) & 1;
      unsigned mx = (m.a & x) ^ (m.b & z), mz = (m.c & x) ^ (m.d & z);
      unsigned sx = (s.a & x) ^ (s.b & z), sz = (s.c & x) ^ (s.d & z);
      ok = mx == sx && mz == sz;
    }
    if (ok) return s;
  }
  throw std::logic_error("no bond-preserving dual found");
}

const std::vector<GaugeElement>& gauge_group() {
  static const std::vector<GaugeElement> g = [] {
    std::vector<GaugeElement> v;
    for (const Mat2& sv : gl2_all())
      for (const Mat2& sh : gl2_all())
        v.push_back({sv, bond_dual(sv), sh, bond_dual(sh)});
    return v;
  }();
  return g;
}

TensorKey apply_gauge(const GaugeElement& g, TensorKey t) {
  auto rows = unpack_key(t);
  const Mat2* leg_mat[4] = {&g.s_v, &g.s_v_dual, &g.s_h, &g.s_h_dual};
  std::vector<std::uint32_t> out(kLegs);
  for (unsigned r = 0; r < kLegs; ++r) {
    std::uint32_t row = rows[r];
    for (unsigned q = 0; q < 4; ++q) {
      const Mat2& m = *leg_mat[q];
      unsigned xb = 9 - q, zb = 4 - q;
      unsigned x = (row >> xb) & 1, z = (row >> zb) & 1;
      unsigned nx = (m.a & x) ^ (m.b & z), nz = (m.c & x) ^ (m.d & z);
      row = (row & ~((1u << xb) | (1u << zb))) | (nx << xb) | (nz << zb);
    }
    out[r] = row;
  }
  rref_u32(out, 2 * kLegs);
  std::array<std::uint16_t, kLegs> r16{};
  for (unsigned r = 0; r < kLegs; ++r)
    r16[r] = static_cast<std::uint16_t>(out[r]);
  return pack_key(r16);
}

std::vector<TensorKey> gauge_orbit(TensorKey t) {
  std::vector<TensorKey> out;
  out.reserve(gauge_group().size());
  for (const auto& g : gauge_group()) out.push_back(apply_gauge(g, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TensorKey canonical_representative(TensorKey t) {
  TensorKey best = t;
  for (const auto& g : gauge_group()) best = std::min(best, apply_gauge(g, t));
  return best;
}

std::size_t OrbitTable::orbit_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    if (canonical[i] == i) ++count;
  return count;
}

std::vector<std::uint32_t> OrbitTable::representatives() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < canonical.size(); ++i)
    if (canonical[i] == i) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

std::uint32_t OrbitTable::ordinal_of(TensorKey k) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), k);
  if (it == keys.end() || *it != k)
    throw std::invalid_argument("key not in enumeration");
  return static_cast<std::uint32_t>(it - keys.begin());
}

OrbitTable compute_orbits() {
  OrbitTable t;
  t.keys = enumerate_tensors();
  t.canonical.resize(t.keys.size());
  for (std::size_t i = 0; i < t.keys.size(); ++i)
    t.canonical[i] = t.ordinal_of(canonical_representative(t.keys[i]));
  return t;
}

std::string tensor_to_file(const StabilizerTensor& t) {
  std::string out = "stabtensor v1 legs=u,d,l,r,phys\n";
  for (const auto& g : t.group.generators()) out += g.to_string() + "\n";
  return out;
}

StabilizerTensor tensor_from_file(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  if (header != "stabtensor v1 legs=u,d,l,r,phys")
    throw std::invalid_argument("bad tensor file header");
  std::string body, line;
  while (std::getline(in, line))
    if (!line.empty()) body += line + "\n";
  auto group = parse_group(body);
  if (group.n() != kLegs || group.rank() != kLegs)
    throw std::invalid_argument("tensor file must carry 5 independent 5-qubit generators");
  return StabilizerTensor(std::move(group));
}

bool write_cache(const OrbitTable& t, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  {
    std::string data;
    for (TensorKey k : t.keys) data += std::to_string(k) + "\n";
    std::ofstream out(dir / "lagrangians.txt");
    if (!out) return false;
    out << "# stabwire-enumeration v1\n"
        << "# count=" << t.keys.size() << "\n"
        << "# checksum=" << fnv1a(data) << "\n"
        << data;
    if (!out) return false;
  }
  {
    std::string data;
    for (std::size_t i = 0; i < t.canonical.size(); ++i)
      data += std::to_string(i) + "," + std::to_string(t.canonical[i]) + "\n";
    std::ofstream out(dir / "orbits.csv");
    if (!out) return false;
    out << "# stabwire-orbits v1\n"
        << "# checksum=" << fnv1a(data) << "\n"
        << "ordinal,canonical_ordinal\n"
        << data;
    if (!out) return false;
  }
  return true;
}

namespace {

std::optional<std::string> read_checked(const std::filesystem::path& file,
                                        const std::string& magic,
                                        std::vector<std::string> skip) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != magic) return std::nullopt;
  std::uint64_t want = 0;
  bool have_sum = false;
  std::string data;
  while (std::getline(in, line)) {
    if (line.rfind("# checksum=", 0) == 0) {
      want = std::stoull(line.substr(11));
      have_sum = true;
      continue;
    }
    if (line.rfind("# ", 0) == 0) continue;
    bool skipped = false;
    for (const auto& s : skip) skipped = skipped || line == s;
    if (skipped) continue;
    data += line + "\n";
  }
  if (!have_sum || fnv1a(data) != want) return std::nullopt;
  return data;
}

}  // namespace

std::optional<OrbitTable> load_cache(const std::filesystem::path& dir) {
  auto lag = read_checked(dir / "lagrangians.txt", "# stabwire-enumeration v1", {});
  auto orb = read_checked(dir / "orbits.csv", "# stabwire-orbits v1",
                          {"ordinal,canonical_ordinal"});
  if (!lag || !orb) return std::nullopt;
  OrbitTable t;
  try {
    std::istringstream in(*lag);
    std::string line;
    while (std::getline(in, line)) t.keys.push_back(std::stoull(line));
    std::istringstream oin(*orb);
    while (std::getline(oin, line)) {
      auto comma = line.find(',');
      if (comma == std::string::npos) return std::nullopt;
      if (std::stoull(line.substr(0, comma)) != t.canonical.size())
        return std::nullopt;
      t.canonical.push_back(
          static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1))));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (t.keys.size() != t.canonical.size() || t.keys.empty()) return std::nullopt;
  if (!std::is_sorted(t.keys.begin(), t.keys.end())) return std::nullopt;
  return t;
}

}  // namespace stabwire
