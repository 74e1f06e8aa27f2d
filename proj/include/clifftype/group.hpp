#pragma once

#include <cstdint>
#include <vector>

#include "clifftype/core.hpp"

namespace cliff {

struct GroupDescriptor {
  Signature sig;
  GroupKind kind = GroupKind::Pin;
  std::uint64_t order = 0;
};

GroupDescriptor describe_group(const Signature& sig, GroupKind kind);

// Masks admitted by the group kind, in ascending unsigned order.
std::vector<std::uint32_t> enumerate_masks(const Signature& sig, GroupKind kind);

// All group elements: + sign before - sign for each mask, masks ascending.
// Materialization is capped at n <= 20.
std::vector<SignedMonomial> enumerate_group(const Signature& sig, GroupKind kind);

std::vector<SignedMonomial> center(const Signature& sig, GroupKind kind);

std::vector<SignedMonomial> commutator_subgroup(const Signature& sig, GroupKind kind);

std::uint64_t abelianization_order(const Signature& sig, GroupKind kind);

struct ConjugacyClassReport {
  std::uint64_t class_count = 0;
  std::vector<std::uint64_t> class_sizes;  // sorted ascending
  std::uint64_t central_count = 0;
};

// O(|G|^2) conjugation-orbit scan; capped at n <= 12.
ConjugacyClassReport conjugacy_classes_brute(const Signature& sig, GroupKind kind);

// central + (order - central)/2, from the structural center size.
std::uint64_t conjugacy_class_count_structural(const Signature& sig, GroupKind kind);

std::uint64_t structural_center_size(const Signature& sig, GroupKind kind);

}  // namespace cliff
