#pragma once

#include <cstdint>
#include <vector>

#include "clifftype/core.hpp"
#include "clifftype/group.hpp"

namespace cliff {

// Frobenius-Schur type: +1 real, 0 complex, -1 quaternionic.
struct TypeValue {
  int value = 0;

  const char* label() const {
    return value > 0 ? "real" : (value < 0 ? "quaternionic" : "complex");
  }

  friend bool operator==(const TypeValue&, const TypeValue&) = default;
};

struct SpinorIrrepInfo {
  std::uint64_t num_one_dim = 0;  // irreps trivial on -1
  std::uint64_t num_spinor = 0;   // irreps with D(-1) = -Id
  std::uint64_t spinor_dim = 0;
  std::uint64_t group_order = 0;
  std::uint64_t class_count = 0;
};

// Unique solution of |G| = sum d_i^2 given the class count; the one-dim
// irreps are exactly those factoring through G/{+-1}.
SpinorIrrepInfo burnside_spinor_solve(const Signature& sig, GroupKind kind);

// (1/|G|) sum_g chi(g^2) over the spinor irrep, computed from the
// square signs of all group masks. Exact integer arithmetic throughout.
TypeValue fs_indicator_brute(const Signature& sig, GroupKind kind);

// Exact mod-8 lookup on (p - q); no Signature cap applies.
TypeValue fs_indicator_closed(long long p, long long q, GroupKind kind);

inline TypeValue fs_indicator_closed(const Signature& sig, GroupKind kind) {
  return fs_indicator_closed(sig.p, sig.q, kind);
}

struct TypeTableCell {
  int p = 0;
  int q = 0;
  int pq_mod8 = 0;
  TypeValue type;
};

std::vector<TypeTableCell> type_table(int p_max, int q_max, GroupKind kind);

// Type is unchanged under p -> p+8 and q -> q+8; brute force confirms
// when the shifted signatures are within the cap.
bool check_periodicity(const Signature& sig, GroupKind kind);

}  // namespace cliff
