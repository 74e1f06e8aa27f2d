#include "clifftype/rep.hpp"

namespace cliff {

namespace {

// P[exp(2*pi*i*a/8)] evaluated exactly at the eight eighth roots of
// unity, with P = (Re + Im) for Pin and Re for Spin (including the
// sqrt(2) factor for odd a in both cases).
constexpr int kPinTable[8] = {1, 1, 1, 0, -1, -1, -1, 0};
constexpr int kSpinTable[8] = {1, 1, 0, -1, -1, -1, 0, 1};

}  // namespace

SpinorIrrepInfo burnside_spinor_solve(const Signature& sig, GroupKind kind) {
  SpinorIrrepInfo info;
  info.group_order = describe_group(sig, kind).order;
  info.class_count = conjugacy_class_count_structural(sig, kind);
  // One-dim irreps are those of the elementary abelian quotient G/{+-1}.
  info.num_one_dim = info.group_order / 2;
  info.num_spinor = info.class_count - info.num_one_dim;

  std::uint64_t remainder = info.group_order - info.num_one_dim;
  if (info.num_spinor == 0 || remainder % info.num_spinor != 0) {
    throw std::logic_error("Burnside equation has no integral solution");
  }
  std::uint64_t d2 = remainder / info.num_spinor;
  std::uint64_t d = 1;
  while (d * d < d2) d *= 2;
  if (d * d != d2) throw std::logic_error("spinor dimension is not an exact power of 2");
  info.spinor_dim = d;
  return info;
}

TypeValue fs_indicator_brute(const Signature& sig, GroupKind kind) {
  int n = sig.n();
  auto info = burnside_spinor_solve(sig, kind);

  // g^2 depends only on the mask, so the sum over both signs is twice
  // the sum over masks.
  std::int64_t mask_sum = 0;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    auto mask = static_cast<std::uint32_t>(m);
    if (kind == GroupKind::Spin && grade(mask) % 2 != 0) continue;
    mask_sum += mono_square_sign(sig, mask);
  }

  std::int64_t numerator = 2 * static_cast<std::int64_t>(info.spinor_dim) * mask_sum;
  auto order = static_cast<std::int64_t>(info.group_order);
  if (numerator % order != 0) throw std::logic_error("FS indicator sum is not an exact integer");
  std::int64_t value = numerator / order;
  if (value < -1 || value > 1) throw std::logic_error("FS indicator outside {-1,0,1}");
  return {static_cast<int>(value)};
}

TypeValue fs_indicator_closed(long long p, long long q, GroupKind kind) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
  int a = static_cast<int>((((p - q) % 8) + 8) % 8);
  return {kind == GroupKind::Pin ? kPinTable[a] : kSpinTable[a]};
}

std::vector<TypeTableCell> type_table(int p_max, int q_max, GroupKind kind) {
  if (p_max < 0 || q_max < 0) throw std::invalid_argument("table bounds must be nonnegative");
  std::vector<TypeTableCell> cells;
  for (int p = 0; p <= p_max; ++p) {
    for (int q = 0; q <= q_max; ++q) {
      int a = (((p - q) % 8) + 8) % 8;
      cells.push_back({p, q, a, fs_indicator_closed(p, q, kind)});
    }
  }
  return cells;
}

bool check_periodicity(const Signature& sig, GroupKind kind) {
  TypeValue base = fs_indicator_closed(sig, kind);
  if (fs_indicator_closed(sig.p + 8, sig.q, kind) != base) return false;
  if (fs_indicator_closed(sig.p, sig.q + 8, kind) != base) return false;
  for (auto [dp, dq] : {std::pair{0, 0}, {8, 0}, {0, 8}}) {
    if (sig.n() + dp + dq <= 16) {  // keep the brute cross-check quick
      Signature shifted{sig.p + dp, sig.q + dq};
      if (fs_indicator_brute(shifted, kind) != base) return false;
    }
  }
  return true;
}

}  // namespace cliff
