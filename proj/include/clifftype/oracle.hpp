#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "clifftype/core.hpp"
#include "clifftype/group.hpp"
#include "clifftype/rep.hpp"

namespace cliff {

// Gaussian integer a + b*i with 64-bit components.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend bool operator==(const GaussInt&, const GaussInt&) = default;

  GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
  GaussInt operator*(const GaussInt& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  std::int64_t norm() const { return re * re + im * im; }
};

// Dense square matrix over the Gaussian integers, row-major.
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {}

  static GaussianMatrix identity(int dim);

  int dim() const { return dim_; }
  GaussInt& at(int r, int c) { return data_[static_cast<std::size_t>(r) * dim_ + c]; }
  const GaussInt& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * dim_ + c]; }

  GaussianMatrix operator*(const GaussianMatrix& o) const;
  GaussianMatrix operator+(const GaussianMatrix& o) const;
  GaussianMatrix scaled(GaussInt s) const;
  GaussInt trace() const;

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<GaussInt> data_;
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational reduced(std::int64_t n, std::int64_t d);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Jordan-Wigner gamma matrices of dimension 2^(n/2); negative-metric
// generators are the Euclidean ones multiplied by i. Anticommutation is
// verified on construction. Capped at n <= 12.
std::vector<GaussianMatrix> build_gammas(const Signature& sig);

GaussianMatrix rep_element(const std::vector<GaussianMatrix>& gammas, const SignedMonomial& m);

// (1/|G|) sum_g trace(rep(g)^2): the FS indicator of the built
// representation, i.e. constituent count times the irrep type.
Rational fs_sum_matrix(const Signature& sig, GroupKind kind);

// (1/|G|) sum_g |trace(rep(g))|^2 = sum of squared constituent
// multiplicities of the built representation.
std::int64_t character_norm(const Signature& sig, GroupKind kind);

// Expected number of spinor constituents of the built representation:
// 2 for Spin in even n >= 2 (Delta+ plus Delta-), otherwise 1.
int constituent_count(const Signature& sig, GroupKind kind);

}  // namespace cliff
