// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trico/pauli.hpp"

namespace trico {

enum class Color { Red, Green, Blue };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Green: return "green";
    case Color::Blue: return "blue";
  }
  return "?";
}

struct Plaquette {
  Color color;
  std::vector<std::size_t> qubits;  // 0-based, sorted
};

// Triangular 4-8-8 color code of odd distance d: one X-type and one Z-type
// generator per plaquette, logical X/Z acting on every qubit.
struct ColorCode {
  std::size_t d = 0;
  std::size_t n = 0;
  std::vector<Plaquette> plaquettes;
  std::vector<PauliString> sx, sz;  // per plaquette
  PauliString logical_x, logical_z;

  std::size_t num_generators() const { return 2 * plaquettes.size(); }

  // All 2p generators, Z-type block first (matches the syndrome ordering
  // S_z^(1..p), S_x^(1..p) used throughout).
  std::vector<PauliString> generators() const {
    std::vector<PauliString> g;
    g.reserve(num_generators());
    for (const auto& p : sz) g.push_back(p);
    for (const auto& p : sx) g.push_back(p);
    return g;
  }
};

namespace detail488 {

// The planar square-octagon tiling with integer coordinates (scale 3):
// diamonds centered at (3i,3j), octagons centered at (3i+1.5, 3j+1.5).
using Pt = std::pair<int, int>;

inline std::array<Pt, 4> diamond(int i, int j) {
  return {Pt{3 * i + 1, 3 * j}, Pt{3 * i, 3 * j + 1}, Pt{3 * i - 1, 3 * j}, Pt{3 * i, 3 * j - 1}};
}

// Octagon vertices in cyclic order.
inline std::array<Pt, 8> octagon(int i, int j) {
  return {Pt{3 * i + 1, 3 * j},           Pt{3 * (i + 1) - 1, 3 * j},
          Pt{3 * (i + 1), 3 * j + 1},     Pt{3 * (i + 1), 3 * (j + 1) - 1},
          Pt{3 * (i + 1) - 1, 3 * (j + 1)}, Pt{3 * i + 1, 3 * (j + 1)},
          Pt{3 * i, 3 * (j + 1) - 1},     Pt{3 * i, 3 * j + 1}};
}

inline std::vector<Pt> arc(int i, int j, int start) {
  auto v = octagon(i, j);
  std::vector<Pt> out;
  for (int t = 0; t < 4; ++t) out.push_back(v[(start + t) % 8]);
  return out;
}

inline Color octagon_color(int i, int j) {
  return ((i + j) % 2 + 2) % 2 == 0 ? Color::Blue : Color::Green;
}

struct RawFace {
  Color color;
  std::vector<Pt> pts;
};

// Face layout for distance d = 2k+1. Validated against the d=3 layout of the
// 7-qubit code (plaquettes {1,2,3,4}/{2,3,5,6}/{3,4,6,7}) and by the full
// invariant suite (counts, even overlaps, rank, boundary strings) up to d=17,
// with exhaustive distance checks at d=3,5,7.
inline std::vector<RawFace> faces_for(std::size_t k) {
  std::vector<RawFace> f;
  auto add = [&](Color c, std::vector<Pt> pts) { f.push_back({c, std::move(pts)}); };
  if (k == 1) {
    auto dm = diamond(0, 0);
    add(Color::Red, {dm.begin(), dm.end()});
    add(Color::Blue, arc(-1, -1, 2));
    add(Color::Green, arc(0, -1, 4));
    return f;
  }
  const int ki = static_cast<int>(k);
  for (int i = 0; i < ki; ++i)
    for (int j = -i; j <= 0; ++j) {
      auto dm = diamond(i, j);
      add(Color::Red, {dm.begin(), dm.end()});
    }
  for (int i = 0; i <= ki - 2; ++i)
    for (int j = -i - 1; j <= -1; ++j) {
      auto oc = octagon(i, j);
      add(octagon_color(i, j), {oc.begin(), oc.end()});
    }
  for (int i = 0; i < ki; ++i)  // hypotenuse
    add(octagon_color(i - 1, -i - 1), arc(i - 1, -i - 1, 2));
  for (int i = -1; i <= ki - 2; ++i)  // top edge
    if (i % 2 != 0) add(octagon_color(i, 0), arc(i, 0, 7));
  for (int j = 1 - ki; j <= -1; j += 2)  // right edge
    add(octagon_color(ki - 1, j), arc(ki - 1, j, 5));
  return f;
}

// Qubit numbering: L1 ring about the top diamond, then counterclockwise
// starting from north. Reproduces the paper's 1..7 labels at d=3.
inline bool point_less(const Pt& a, const Pt& b) {
  int ra = std::abs(a.first) + std::abs(a.second);
  int rb = std::abs(b.first) + std::abs(b.second);
  if (ra != rb) return ra < rb;
  auto key = [](const Pt& p) {
    double deg = std::atan2(static_cast<double>(p.second), static_cast<double>(p.first)) * 180.0 /
                 3.14159265358979323846;
    return std::fmod(std::fmod(deg - 90.0, 360.0) + 360.0, 360.0);  // ccw from north
  };
  double ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

}  // namespace detail488

inline ColorCode build_triangular_488(std::size_t d) {
  if (d < 3 || d % 2 == 0)
    throw std::invalid_argument("build_triangular_488: distance must be odd and >= 3");
  const std::size_t k = (d - 1) / 2;
  auto faces = detail488::faces_for(k);

  std::vector<detail488::Pt> pts;
  for (const auto& f : faces)
    for (const auto& p : f.pts) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::sort(pts.begin(), pts.end(), detail488::point_less);

  std::map<detail488::Pt, std::size_t> index;
  for (std::size_t q = 0; q < pts.size(); ++q) index[pts[q]] = q;

  ColorCode code;
  code.d = d;
  code.n = pts.size();
  const std::size_t expected = (d * d + 2 * d - 1) / 2;
  if (code.n != expected)
    throw std::runtime_error("build_triangular_488: internal error, qubit count " +
                             std::to_string(code.n) + " != " + std::to_string(expected));

  for (const auto& f : faces) {
    Plaquette pl;
    pl.color = f.color;
    for (const auto& p : f.pts) pl.qubits.push_back(index.at(p));
    std::sort(pl.qubits.begin(), pl.qubits.end());
    code.plaquettes.push_back(std::move(pl));
  }
  // paper order for d=3 is red, blue, green; keep color-major order generally
  std::stable_sort(code.plaquettes.begin(), code.plaquettes.end(),
                   [](const Plaquette& a, const Plaquette& b) {
                     auto rank = [](Color c) {
                       return c == Color::Red ? 0 : (c == Color::Blue ? 1 : 2);
                     };
                     if (rank(a.color) != rank(b.color)) return rank(a.color) < rank(b.color);
                     return a.qubits < b.qubits;
                   });

  for (const auto& pl : code.plaquettes) {
    PauliString px(code.n), pz(code.n);
    for (std::size_t q : pl.qubits) {
      px.set_x(q, true);
      pz.set_z(q, true);
    }
    code.sx.push_back(px);
    code.sz.push_back(pz);
  }
  code.logical_x = PauliString(code.n);
  code.logical_z = PauliString(code.n);
  for (std::size_t q = 0; q < code.n; ++q) {
    code.logical_x.set_x(q, true);
    code.logical_z.set_z(q, true);
  }
  return code;
}

// Y_L = +i X_L Z_L; equals -(Y x ... x Y) for d=3.
inline PauliString logical_y(const ColorCode& code) {
  PauliString p = code.logical_x * code.logical_z;
  p.set_phase_exponent(p.phase_exponent() + 1);
  return p;
}

namespace detail488 {

// GF(2) echelon basis over the symplectic (x|z) rows; used for membership tests.
class Gf2Span {
public:
  explicit Gf2Span(std::size_t n) : n_(n) {}

  // Reduce v by the basis; returns the residue (empty == in span).
  std::vector<uint64_t> reduce(std::vector<uint64_t> v) const {
    for (const auto& b : basis_) {
      std::size_t piv = pivot(b);
      if (bit(v, piv)) xor_into(v, b);
    }
    return v;
  }

  bool contains(const std::vector<uint64_t>& v) const {
    auto r = reduce(v);
    for (uint64_t w : r)
      if (w) return false;
    return true;
  }

  // Insert if independent; returns true if the vector extended the span.
  bool insert(std::vector<uint64_t> v) {
    v = reduce(std::move(v));
    bool zero = true;
    for (uint64_t w : v)
      if (w) { zero = false; break; }
    if (zero) return false;
    basis_.push_back(std::move(v));
    // keep reduced order by pivot
    std::sort(basis_.begin(), basis_.end(),
              [](const auto& a, const auto& b) { return pivot(a) < pivot(b); });
    return true;
  }

  std::size_t rank() const { return basis_.size(); }

  static std::vector<uint64_t> sympl(const PauliString& p) {
    const auto& x = p.x_words();
    const auto& z = p.z_words();
    std::vector<uint64_t> v;
    v.reserve(x.size() + z.size());
    for (uint64_t w : x) v.push_back(w);
    for (uint64_t w : z) v.push_back(w);
    return v;
  }

private:
  static std::size_t pivot(const std::vector<uint64_t>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k]) {
        uint64_t w = v[k];
        std::size_t b = 0;
        while (!((w >> b) & 1u)) ++b;
        return k * 64 + b;
      }
    return v.size() * 64;
  }
  static bool bit(const std::vector<uint64_t>& v, std::size_t i) {
    return i < v.size() * 64 && ((v[i >> 6] >> (i & 63)) & 1u);
  }
  static void xor_into(std::vector<uint64_t>& v, const std::vector<uint64_t>& b) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] ^= b[k];
  }

  std::size_t n_;
  std::vector<std::vector<uint64_t>> basis_;
};

}  // namespace detail488

// Membership of the letters of p (phase ignored) in the group generated by the
// code's stabilizer generators, by GF(2) elimination.
inline bool in_stabilizer_group(const PauliString& p, const ColorCode& code) {
  detail488::Gf2Span span(code.n);
  for (const auto& g : code.generators()) span.insert(detail488::Gf2Span::sympl(g));
  return span.contains(detail488::Gf2Span::sympl(p));
}

// Enumerate the full stabilizer group (letters and signs) as products of
// generator subsets. Guarded: 2^(n-1) elements.
inline std::vector<PauliString> stabilizer_group(const ColorCode& code,
                                                 std::size_t max_qubits = 17) {
  if (code.n > max_qubits)
    throw std::invalid_argument("stabilizer_group: code too large to enumerate (n=" +
                                std::to_string(code.n) + ", cap=" + std::to_string(max_qubits) +
                                ")");
  const auto gens = code.generators();
  std::vector<PauliString> group;
  group.reserve(std::size_t(1) << gens.size());
  group.push_back(PauliString::identity(code.n));
  for (const auto& g : gens) {
    const std::size_t sz = group.size();
    for (std::size_t i = 0; i < sz; ++i) group.push_back(group[i] * g);
  }
  return group;
}

// Minimal-weight representative of the coset l * stabilizer_group. Exhaustive
// for n <= 17; greedy GF(2) descent above that (exactness not guaranteed).
inline PauliString reduce_logical(const PauliString& l, const ColorCode& code) {
  for (const auto& g : code.generators())
    if (!l.commutes_with(g))
      throw std::invalid_argument("reduce_logical: operator is not in the normalizer");
  if (code.n <= 17) {
    PauliString best = l;
    for (const auto& s : stabilizer_group(code)) {
      PauliString cand = l * s;
      if (cand.weight() < best.weight()) best = cand;
    }
    return best;
  }
  PauliString cur = l;
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& g : code.generators()) {
      PauliString cand = cur * g;
      if (cand.weight() < cur.weight()) {
        cur = cand;
        improved = true;
      }
    }
  }
  return cur;
}

// Structural invariants: commutation, CSS form, counts, logical algebra,
// 3-colorability of the plaquette adjacency. Throws on violation.
inline void validate(const ColorCode& code) {
  const auto gens = code.generators();
  if (gens.size() != code.n - 1)
    throw std::runtime_error("validate: generator count != n-1");
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!gens[a].commutes_with(gens[b]))
        throw std::runtime_error("validate: generators " + std::to_string(a) + "," +
                                 std::to_string(b) + " anticommute");
  for (const auto& g : gens) {
    bool purex = true, purez = true;
    for (std::size_t q = 0; q < code.n; ++q) {
      if (g.z_bit(q)) purex = false;
      if (g.x_bit(q)) purez = false;
    }
    if (!purex && !purez) throw std::runtime_error("validate: generator not CSS");
  }
  detail488::Gf2Span span(code.n);
  for (const auto& g : gens)
    if (!span.insert(detail488::Gf2Span::sympl(g)))
      throw std::runtime_error("validate: dependent generator");
  if (code.logical_x.commutes_with(code.logical_z))
    throw std::runtime_error("validate: logicals commute");
  for (const auto& g : gens)
    if (!g.commutes_with(code.logical_x) || !g.commutes_with(code.logical_z))
      throw std::runtime_error("validate: logical fails to commute with a generator");
  for (std::size_t a = 0; a < code.plaquettes.size(); ++a)
    for (std::size_t b = a + 1; b < code.plaquettes.size(); ++b) {
      if (code.plaquettes[a].color != code.plaquettes[b].color) continue;
      std::vector<std::size_t> inter;
      std::set_intersection(code.plaquettes[a].qubits.begin(), code.plaquettes[a].qubits.end(),
                            code.plaquettes[b].qubits.begin(), code.plaquettes[b].qubits.end(),
                            std::back_inserter(inter));
      if (!inter.empty())
        throw std::runtime_error("validate: same-color plaquettes share qubits");
    }
}

// Structured text dump (qubit count, plaquettes, generators, logicals).
inline std::string to_text(const ColorCode& code) {
  std::ostringstream os;
  os << "triangular-488 d=" << code.d << " n=" << code.n << "\n";
  for (std::size_t p = 0; p < code.plaquettes.size(); ++p) {
    os << "plaquette " << (p + 1) << " " << color_name(code.plaquettes[p].color) << " qubits";
    for (std::size_t q : code.plaquettes[p].qubits) os << " " << (q + 1);
    os << "\n";
    os << "  Sx(" << (p + 1) << ") = " << code.sx[p].str() << "\n";
    os << "  Sz(" << (p + 1) << ") = " << code.sz[p].str() << "\n";
  }
  os << "X_L = " << code.logical_x.str() << "\n";
  os << "Z_L = " << code.logical_z.str() << "\n";
  return os.str();
}

}  // namespace trico
