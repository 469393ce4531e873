#include "dhankel/coeffspace.hpp"

#include <cmath>
#include <string>

#include "dhankel/errors.hpp"
#include "dhankel/summation.hpp"

namespace dhankel {

TaylorPoly::TaylorPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.assign(1, cplx{0.0});
}

TaylorPoly TaylorPoly::monomial(std::size_t k, cplx coeff) {
  TaylorPoly p = zero(k);
  p[k] = coeff;
  return p;
}

TaylorPoly TaylorPoly::resized(std::size_t degree) const {
  std::vector<cplx> c(degree + 1);
  for (std::size_t n = 0; n <= degree && n < coeffs_.size(); ++n) c[n] = coeffs_[n];
  return TaylorPoly(std::move(c));
}

TaylorPoly TaylorPoly::derivative() const {
  if (coeffs_.size() == 1) return TaylorPoly{};
  std::vector<cplx> c(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] = static_cast<double>(n) * coeffs_[n];
  return TaylorPoly(std::move(c));
}

bool TaylorPoly::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != cplx{0.0}) return false;
  return true;
}

double space_weight(SpaceTag tag, std::size_t n) noexcept {
  switch (tag) {
    case SpaceTag::dirichlet_exact:
      return n == 0 ? 1.0 : static_cast<double>(n);
    case SpaceTag::dirichlet_section:
      return static_cast<double>(n + 1);
    case SpaceTag::bergman:
      return 1.0 / static_cast<double>(n + 1);
  }
  return 0.0;
}

double space_norm(const TaylorPoly& p, SpaceTag tag) {
  const auto c = p.coeffs();
  const double sq = pairwise_accumulate(0, c.size(), [&](std::size_t n) { return space_weight(tag, n) * std::norm(c[n]); });
  return std::sqrt(sq);
}

cplx dirichlet_inner(const TaylorPoly& p, const TaylorPoly& q) {
  const std::size_t len = std::min(p.coeffs().size(), q.coeffs().size());
  return pairwise_accumulate(0, len, [&](std::size_t n) {
    return space_weight(SpaceTag::dirichlet_exact, n) * p[n] * std::conj(q[n]);
  });
}

namespace {

void require_in_disk(cplx z, const char* what) {
  if (!(std::abs(z) < 1.0))
    throw DomainError(std::string(what) + ": |z| must be < 1, got " + std::to_string(std::abs(z)));
}

}  // namespace

cplx evaluate(const TaylorPoly& p, cplx z) {
  require_in_disk(z, "evaluate");
  const auto c = p.coeffs();
  cplx acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

TaylorPoly kernel_coeffs(cplx w, std::size_t degree) {
  require_in_disk(w, "kernel_coeffs");
  std::vector<cplx> c(degree + 1);
  c[0] = 1.0;
  const cplx wb = std::conj(w);
  cplx power = 1.0;
  for (std::size_t n = 1; n <= degree; ++n) {
    power *= wb;
    c[n] = power / static_cast<double>(n);
  }
  return TaylorPoly(std::move(c));
}

double kernel_tail_bound(double t, std::size_t degree) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("kernel_tail_bound: t must lie in [0,1)");
  if (t == 0.0) return 0.0;
  const double n1 = static_cast<double>(degree) + 1.0;
  // sum_{n>N} t^{2n}/n <= t^{2N+2} / ((N+1)(1-t^2))
  return std::exp(2.0 * n1 * std::log(t)) / (n1 * (1.0 - t * t));
}

std::size_t kernel_degree_for_tail(double t, double tol) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("kernel_degree_for_tail: t must lie in [0,1)");
  if (!(tol > 0.0)) throw DomainError("kernel_degree_for_tail: tol must be positive");
  if (t == 0.0) return 0;
  // bound is decreasing in N: bracket by doubling, then bisect
  std::size_t hi = 1;
  while (kernel_tail_bound(t, hi) >= tol) hi *= 2;
  std::size_t lo = 0;
  if (kernel_tail_bound(t, 0) < tol) return 0;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (kernel_tail_bound(t, mid) < tol)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

NormalizedKernel normalized_kernel_coeffs(double t, std::size_t degree) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("normalized_kernel_coeffs: t must lie in [0,1)");
  const double normalizer = 1.0 / (1.0 - std::log1p(-t * t));
  const double scale = std::sqrt(normalizer);
  TaylorPoly k = kernel_coeffs(cplx{t, 0.0}, degree);
  for (auto& c : k.coeffs()) c *= scale;
  return {std::move(k), kernel_tail_bound(t, degree), normalizer};
}

std::string_view to_string(SpaceTag t) noexcept {
  switch (t) {
    case SpaceTag::dirichlet_exact:
      return "dirichlet-exact";
    case SpaceTag::dirichlet_section:
      return "dirichlet-section";
    case SpaceTag::bergman:
      return "bergman";
  }
  return "?";
}

}  // namespace dhankel
