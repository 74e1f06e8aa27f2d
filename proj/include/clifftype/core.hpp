#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliff {

// Default cap on the number of generators. Brute-force sums are O(2^n);
// 2^30 keeps every accumulator comfortably inside int64.
inline constexpr int kDefaultMaxGenerators = 30;

struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Metric signature (p, q): the first p generators square to +1, the
// remaining q square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  int n() const { return p + q; }

  // Bitmask with a 1 on every negative-metric generator index.
  std::uint32_t negative_mask() const {
    return n() == 0 ? 0u : ((n() < 32 ? (1u << n()) : 0u) - 1u) & ~((p < 32 ? (1u << p) : 0u) - 1u);
  }

  std::uint32_t full_mask() const { return n() == 0 ? 0u : (1u << n()) - 1u; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature make_signature(int p, int q, int max_n = kDefaultMaxGenerators);

enum class GroupKind { Pin, Spin };

inline const char* kind_name(GroupKind k) { return k == GroupKind::Pin ? "pin" : "spin"; }

// A signed product of distinct generators: sign * gamma_{i1}...gamma_{ik}
// with i1 < ... < ik given by the set bits of mask. The identity is
// (+1, 0), the central involution (-1, 0).
struct SignedMonomial {
  int sign = +1;           // +1 or -1
  std::uint32_t mask = 0;  // subset of {0,...,n-1}

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
  friend auto operator<=>(const SignedMonomial&, const SignedMonomial&) = default;
};

inline int grade(std::uint32_t mask) { return std::popcount(mask); }

inline int metric_sign(const Signature& sig, int i) {
  if (i < 0 || i >= sig.n()) throw std::out_of_range("generator index out of range");
  return i < sig.p ? +1 : -1;
}

// Sign s with m * m = (s, 0) for either sign of m:
// (-1)^{k(k-1)/2} times the product of metric signs over the mask.
inline int mono_square_sign(const Signature& sig, std::uint32_t mask) {
  int k = std::popcount(mask);
  int neg = std::popcount(mask & sig.negative_mask());
  return ((k * (k - 1) / 2 + neg) % 2 == 0) ? +1 : -1;
}

SignedMonomial mono_mul(const Signature& sig, const SignedMonomial& a, const SignedMonomial& b);

inline SignedMonomial mono_inverse(const Signature& sig, const SignedMonomial& m) {
  // m*m = (square_sign, 0), so m^{-1} = square_sign * m.
  return {mono_square_sign(sig, m.mask) * m.sign, m.mask};
}

// True iff ab = ba; depends only on the masks, not the signature.
inline bool commutes(const SignedMonomial& a, const SignedMonomial& b) {
  int e = grade(a.mask) * grade(b.mask) - std::popcount(a.mask & b.mask);
  return e % 2 == 0;
}

}  // namespace cliff
