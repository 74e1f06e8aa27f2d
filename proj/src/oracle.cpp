#include "clifftype/oracle.hpp"

namespace cliff {

namespace {

constexpr int kMatrixCap = 12;

// 2x2 Pauli blocks.
GaussianMatrix pauli(char which) {
  GaussianMatrix m(2);
  switch (which) {
    case 'I': m.at(0, 0) = {1, 0}; m.at(1, 1) = {1, 0}; break;
    case 'X': m.at(0, 1) = {1, 0}; m.at(1, 0) = {1, 0}; break;
    case 'Y': m.at(0, 1) = {0, -1}; m.at(1, 0) = {0, 1}; break;
    case 'Z': m.at(0, 0) = {1, 0}; m.at(1, 1) = {-1, 0}; break;
  }
  return m;
}

GaussianMatrix kron(const GaussianMatrix& a, const GaussianMatrix& b) {
  GaussianMatrix out(a.dim() * b.dim());
  for (int ar = 0; ar < a.dim(); ++ar)
    for (int ac = 0; ac < a.dim(); ++ac)
      for (int br = 0; br < b.dim(); ++br)
        for (int bc = 0; bc < b.dim(); ++bc)
          out.at(ar * b.dim() + br, ac * b.dim() + bc) = a.at(ar, ac) * b.at(br, bc);
  return out;
}

GaussianMatrix pauli_string(const std::string& ops) {
  GaussianMatrix m(1);
  m.at(0, 0) = {1, 0};
  for (char c : ops) m = kron(m, pauli(c));
  return m;
}

}  // namespace

GaussianMatrix GaussianMatrix::identity(int dim) {
  GaussianMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = {1, 0};
  return m;
}

GaussianMatrix GaussianMatrix::operator*(const GaussianMatrix& o) const {
  GaussianMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int k = 0; k < dim_; ++k) {
      GaussInt v = at(r, k);
      if (v.re == 0 && v.im == 0) continue;
      for (int c = 0; c < dim_; ++c) out.at(r, c) = out.at(r, c) + v * o.at(k, c);
    }
  return out;
}

GaussianMatrix GaussianMatrix::operator+(const GaussianMatrix& o) const {
  GaussianMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(r, c) + o.at(r, c);
  return out;
}

GaussianMatrix GaussianMatrix::scaled(GaussInt s) const {
  GaussianMatrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out.at(r, c) = at(r, c) * s;
  return out;
}

GaussInt GaussianMatrix::trace() const {
  GaussInt t;
  for (int i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

Rational Rational::reduced(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) { n = -n; d = -d; }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return {n / g, d / g};
}

std::vector<GaussianMatrix> build_gammas(const Signature& sig) {
  int n = sig.n();
  if (n > kMatrixCap) throw cap_error("gamma matrices capped at n <= 12");
  int qubits = n / 2;
  int dim = 1 << qubits;

  std::vector<GaussianMatrix> gammas;
  for (int k = 0; k < qubits; ++k) {
    std::string base(static_cast<std::size_t>(qubits), 'I');
    for (int j = 0; j < k; ++j) base[j] = 'Z';
    base[k] = 'X';
    gammas.push_back(pauli_string(base));
    base[k] = 'Y';
    gammas.push_back(pauli_string(base));
  }
  if (n % 2 == 1) {
    gammas.push_back(pauli_string(std::string(static_cast<std::size_t>(qubits), 'Z')));
  }
  for (int i = sig.p; i < n; ++i) gammas[i] = gammas[i].scaled({0, 1});

  // Verify the Clifford relations instead of trusting the construction.
  auto id = GaussianMatrix::identity(dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      GaussianMatrix anti = gammas[i] * gammas[j] + gammas[j] * gammas[i];
      GaussianMatrix expected(dim);
      if (i == j) expected = id.scaled({2 * metric_sign(sig, i), 0});
      if (!(anti == expected)) throw std::logic_error("gamma construction failed Clifford check");
    }
  }
  return gammas;
}

GaussianMatrix rep_element(const std::vector<GaussianMatrix>& gammas, const SignedMonomial& m) {
  int dim = gammas.empty() ? 1 : gammas[0].dim();
  GaussianMatrix out = GaussianMatrix::identity(dim);
  for (std::uint32_t rest = m.mask; rest != 0; rest &= rest - 1) {
    out = out * gammas[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  if (m.sign < 0) out = out.scaled({-1, 0});
  return out;
}

namespace {

// Visit rep(+1, mask) for every mask of the kind, sharing partial
// products along the subset tree (one matmul per visited subset).
template <typename Fn>
void visit_mask_reps(const Signature& sig, GroupKind kind,
                     const std::vector<GaussianMatrix>& gammas, Fn&& fn) {
  int n = sig.n();
  int dim = gammas.empty() ? 1 : gammas[0].dim();
  auto walk = [&](auto&& self, const GaussianMatrix& mat, std::uint32_t mask, int next) -> void {
    if (kind == GroupKind::Pin || grade(mask) % 2 == 0) fn(mask, mat);
    for (int i = next; i < n; ++i) {
      self(self, mat * gammas[static_cast<std::size_t>(i)], mask | (1u << i), i + 1);
    }
  };
  walk(walk, GaussianMatrix::identity(dim), 0, 0);
}

}  // namespace

Rational fs_sum_matrix(const Signature& sig, GroupKind kind) {
  auto gammas = build_gammas(sig);
  std::int64_t sum = 0;
  // (-A)^2 = A^2, so the two signs of each mask contribute equally.
  visit_mask_reps(sig, kind, gammas, [&](std::uint32_t, const GaussianMatrix& mat) {
    GaussInt tr = (mat * mat).trace();
    if (tr.im != 0) throw std::logic_error("trace of a squared group element must be real");
    sum += 2 * tr.re;
  });
  return Rational::reduced(sum, static_cast<std::int64_t>(describe_group(sig, kind).order));
}

std::int64_t character_norm(const Signature& sig, GroupKind kind) {
  auto gammas = build_gammas(sig);
  std::int64_t sum = 0;
  visit_mask_reps(sig, kind, gammas, [&](std::uint32_t, const GaussianMatrix& mat) {
    sum += 2 * mat.trace().norm();
  });
  auto order = static_cast<std::int64_t>(describe_group(sig, kind).order);
  if (sum % order != 0) throw std::logic_error("character norm is not an exact integer");
  return sum / order;
}

int constituent_count(const Signature& sig, GroupKind kind) {
  int n = sig.n();
  return (kind == GroupKind::Spin && n >= 2 && n % 2 == 0) ? 2 : 1;
}

}  // namespace cliff
