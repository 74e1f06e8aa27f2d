#include "clifftype/group.hpp"

#include <algorithm>

namespace cliff {

namespace {

constexpr int kEnumerationCap = 12;  // O(|G|^2) conjugation scan
constexpr int kMaterializeCap = 20;

// Masks generating the group of the given kind: the single generators
// for Pin, adjacent pairs for Spin. Commutation with these decides
// centrality, and a sign discrepancy with any of them decides
// non-commutativity, since the conjugation sign is multiplicative.
std::vector<std::uint32_t> generating_masks(const Signature& sig, GroupKind kind) {
  std::vector<std::uint32_t> gens;
  int n = sig.n();
  if (kind == GroupKind::Pin) {
    for (int i = 0; i < n; ++i) gens.push_back(1u << i);
  } else {
    for (int i = 0; i + 1 < n; ++i) gens.push_back(3u << i);
  }
  return gens;
}

}  // namespace

GroupDescriptor describe_group(const Signature& sig, GroupKind kind) {
  int n = sig.n();
  std::uint64_t order;
  if (kind == GroupKind::Pin) {
    order = std::uint64_t{1} << (n + 1);
  } else {
    // Both signs times the even-grade masks. For n = 0 the group is
    // still {+1, -1}, so the order is 2 rather than 2^0.
    order = n == 0 ? 2 : std::uint64_t{1} << n;
  }
  return {sig, kind, order};
}

std::vector<std::uint32_t> enumerate_masks(const Signature& sig, GroupKind kind) {
  if (sig.n() > kMaterializeCap) throw cap_error("mask enumeration capped at n <= 20");
  std::vector<std::uint32_t> masks;
  std::uint32_t full = sig.full_mask();
  for (std::uint32_t m = 0;; ++m) {
    if (kind == GroupKind::Pin || grade(m) % 2 == 0) masks.push_back(m);
    if (m == full) break;
  }
  return masks;
}

std::vector<SignedMonomial> enumerate_group(const Signature& sig, GroupKind kind) {
  std::vector<SignedMonomial> elems;
  for (std::uint32_t m : enumerate_masks(sig, kind)) {
    elems.push_back({+1, m});
    elems.push_back({-1, m});
  }
  return elems;
}

std::vector<SignedMonomial> center(const Signature& sig, GroupKind kind) {
  auto gens = generating_masks(sig, kind);
  std::vector<SignedMonomial> central;
  for (std::uint32_t m : enumerate_masks(sig, kind)) {
    bool ok = std::all_of(gens.begin(), gens.end(), [&](std::uint32_t g) {
      return commutes({+1, m}, {+1, g});
    });
    if (ok) {
      central.push_back({+1, m});
      central.push_back({-1, m});
    }
  }
  return central;
}

std::vector<SignedMonomial> commutator_subgroup(const Signature& sig, GroupKind kind) {
  // Every commutator is +-identity; -identity occurs iff some pair of
  // group elements anticommutes.
  auto gens = generating_masks(sig, kind);
  for (std::uint32_t m : enumerate_masks(sig, kind)) {
    for (std::uint32_t g : gens) {
      if (!commutes({+1, m}, {+1, g})) {
        return {{+1, 0}, {-1, 0}};
      }
    }
  }
  return {{+1, 0}};
}

std::uint64_t abelianization_order(const Signature& sig, GroupKind kind) {
  int n = sig.n();
  bool abelian = (kind == GroupKind::Pin) ? n <= 1 : n <= 2;
  std::uint64_t order = describe_group(sig, kind).order;
  return abelian ? order : order / 2;
}

ConjugacyClassReport conjugacy_classes_brute(const Signature& sig, GroupKind kind) {
  if (sig.n() > kEnumerationCap) throw cap_error("conjugacy scan capped at n <= 12");
  auto elems = enumerate_group(sig, kind);
  auto index_of = [&](const SignedMonomial& m) {
    auto it = std::lower_bound(elems.begin(), elems.end(), m,
                               [](const SignedMonomial& a, const SignedMonomial& b) {
                                 return std::pair(a.mask, -a.sign) < std::pair(b.mask, -b.sign);
                               });
    return static_cast<std::size_t>(it - elems.begin());
  };

  std::vector<char> seen(elems.size(), 0);
  ConjugacyClassReport report;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (const auto& g : elems) {
      auto conj = mono_mul(sig, mono_mul(sig, g, elems[i]), mono_inverse(sig, g));
      std::size_t j = index_of(conj);
      if (!seen[j]) {
        seen[j] = 1;
        orbit.push_back(j);
      }
    }
    report.class_sizes.push_back(orbit.size());
    if (orbit.size() == 1) ++report.central_count;
  }
  report.class_count = report.class_sizes.size();
  std::sort(report.class_sizes.begin(), report.class_sizes.end());
  return report;
}

std::uint64_t structural_center_size(const Signature& sig, GroupKind kind) {
  int n = sig.n();
  if (kind == GroupKind::Pin) return n % 2 == 1 ? 4 : 2;
  return (n >= 2 && n % 2 == 0) ? 4 : 2;
}

std::uint64_t conjugacy_class_count_structural(const Signature& sig, GroupKind kind) {
  std::uint64_t order = describe_group(sig, kind).order;
  std::uint64_t central = structural_center_size(sig, kind);
  if (central > order) central = order;  // degenerate abelian cases
  int n = sig.n();
  bool abelian = (kind == GroupKind::Pin) ? n <= 1 : n <= 2;
  if (abelian) return order;
  return central + (order - central) / 2;
}

}  // namespace cliff
