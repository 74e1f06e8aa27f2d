#include "clifftype/core.hpp"

namespace cliff {

Signature make_signature(int p, int q, int max_n) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
  if (p + q > max_n) {
    throw cap_error("p+q = " + std::to_string(p + q) + " exceeds generator cap " +
                    std::to_string(max_n));
  }
  return Signature{p, q};
}

SignedMonomial mono_mul(const Signature& sig, const SignedMonomial& a, const SignedMonomial& b) {
  std::uint32_t full = sig.full_mask();
  if ((a.mask & ~full) || (b.mask & ~full)) {
    throw std::invalid_argument("monomial mask outside ambient signature");
  }

  // Transpositions needed to move each generator of b past the higher
  // generators of a into ascending position.
  int transpositions = 0;
  for (std::uint32_t rest = b.mask; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    transpositions += std::popcount(a.mask >> (j + 1));
  }

  // Repeated generators contract to their metric sign.
  int neg_contractions = std::popcount(a.mask & b.mask & sig.negative_mask());

  int sign = a.sign * b.sign;
  if ((transpositions + neg_contractions) % 2 != 0) sign = -sign;
  return {sign, a.mask ^ b.mask};
}

}  // namespace cliff
