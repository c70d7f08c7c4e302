// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace trico {

// An n-qubit Pauli operator stored in bit-packed symplectic form.
//
// The operator equals i^phase_exp * (W_1 x W_2 x ... x W_n) where W_q is the
// literal letter on qubit q: X iff x-bit set, Z iff z-bit set, Y iff both.
// Qubit 1 of the paper is index 0 here; the parser/formatter own that boundary.
class PauliString {
public:
  PauliString() = default;

  explicit PauliString(std::size_t n)
      : n_(n), x_(words(n), 0), z_(words(n), 0), phase_(0) {}

  static PauliString identity(std::size_t n) { return PauliString(n); }

  // Single-letter factories, 0-based qubit index.
  static PauliString x(std::size_t n, std::size_t q) { PauliString p(n); p.set_x(q, true); return p; }
  static PauliString z(std::size_t n, std::size_t q) { PauliString p(n); p.set_z(q, true); return p; }
  static PauliString y(std::size_t n, std::size_t q) {
    PauliString p(n);
    p.set_x(q, true);
    p.set_z(q, true);
    return p;
  }

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t q) const { check(q); return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z_bit(std::size_t q) const { check(q); return (z_[q >> 6] >> (q & 63)) & 1u; }

  void set_x(std::size_t q, bool v) { check(q); set_bit(x_, q, v); }
  void set_z(std::size_t q, bool v) { check(q); set_bit(z_, q, v); }

  // Phase exponent k in i^k, 0..3.
  int phase_exponent() const { return phase_; }
  void set_phase_exponent(int k) { phase_ = ((k % 4) + 4) % 4; }

  std::complex<double> phase() const {
    static const std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[phase_];
  }

  char letter(std::size_t q) const {
    bool xb = x_bit(q), zb = z_bit(q);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < x_.size(); ++k) w += popcount64(x_[k] | z_[k]);
    return w;
  }

  bool is_identity_letters() const {
    for (std::size_t k = 0; k < x_.size(); ++k)
      if (x_[k] | z_[k]) return false;
    return true;
  }

  // Parity of the symplectic inner product.
  bool commutes_with(const PauliString& o) const {
    if (o.n_ != n_) throw std::invalid_argument("PauliString: size mismatch");
    std::size_t par = 0;
    for (std::size_t k = 0; k < x_.size(); ++k)
      par ^= popcount64(x_[k] & o.z_[k]) ^ popcount64(z_[k] & o.x_[k]);
    return (par & 1u) == 0;
  }

  // Exact product a*b with phase tracking (this = a).
  PauliString operator*(const PauliString& o) const {
    if (o.n_ != n_) throw std::invalid_argument("PauliString: size mismatch");
    PauliString r(n_);
    int acc = phase_ + o.phase_;  // powers of i
    for (std::size_t k = 0; k < x_.size(); ++k) {
      const uint64_t x1 = x_[k], z1 = z_[k], x2 = o.x_[k], z2 = o.z_[k];
      // Aaronson-Gottesman g function, vectorised: +1 and -1 masks (powers of i)
      const uint64_t plus = (~x1 & z1 & x2 & ~z2) | (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2);
      const uint64_t minus = (~x1 & z1 & x2 & z2) | (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2);
      acc += static_cast<int>(popcount64(plus)) - static_cast<int>(popcount64(minus));
      r.x_[k] = x1 ^ x2;
      r.z_[k] = z1 ^ z2;
    }
    r.set_phase_exponent(acc);
    return r;
  }

  bool operator==(const PauliString& o) const {
    return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliString& o) const { return !(*this == o); }

  // Letters equal, phase ignored.
  bool same_letters(const PauliString& o) const {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }

  // Canonical text: optional sign ("-", "+i", "-i"; "+" omitted), then one
  // letter per qubit, qubit 1 leftmost.
  std::string str() const {
    std::string s;
    switch (phase_) {
      case 0: break;
      case 1: s += "+i"; break;
      case 2: s += "-"; break;
      case 3: s += "-i"; break;
    }
    for (std::size_t q = 0; q < n_; ++q) s += letter(q);
    return s;
  }

  // Parse "ZIIZIIZ", "-YYYYYYY", "+iXZ", ... against a fixed register size.
  static PauliString parse(const std::string& text, std::size_t n) {
    std::size_t pos = 0;
    int ph = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      bool neg = text[pos] == '-';
      ++pos;
      bool imag = pos < text.size() && (text[pos] == 'i');
      if (imag) ++pos;
      ph = neg ? (imag ? 3 : 2) : (imag ? 1 : 0);
    }
    if (text.size() - pos != n)
      throw std::invalid_argument("PauliString::parse: length mismatch (got " +
                                  std::to_string(text.size() - pos) + ", register is " +
                                  std::to_string(n) + ")");
    PauliString p(n);
    p.set_phase_exponent(ph);
    for (std::size_t q = 0; q < n; ++q) {
      switch (text[pos + q]) {
        case 'I': break;
        case 'X': p.set_x(q, true); break;
        case 'Z': p.set_z(q, true); break;
        case 'Y': p.set_x(q, true); p.set_z(q, true); break;
        default:
          throw std::invalid_argument(std::string("PauliString::parse: invalid character '") +
                                      text[pos + q] + "'");
      }
    }
    return p;
  }

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }

private:
  static std::size_t words(std::size_t n) { return (n + 63) / 64; }
  static std::size_t popcount64(uint64_t v) {
#if defined(__GNUC__) || defined(__clang__)
    return static_cast<std::size_t>(__builtin_popcountll(v));
#else
    std::size_t c = 0;
    while (v) { v &= v - 1; ++c; }
    return c;
#endif
  }
  static void set_bit(std::vector<uint64_t>& w, std::size_t q, bool v) {
    if (v) w[q >> 6] |= uint64_t(1) << (q & 63);
    else w[q >> 6] &= ~(uint64_t(1) << (q & 63));
  }
  void check(std::size_t q) const {
    if (q >= n_) throw std::out_of_range("PauliString: qubit index out of range");
  }

  std::size_t n_ = 0;
  std::vector<uint64_t> x_, z_;
  int phase_ = 0;
};

}  // namespace trico
