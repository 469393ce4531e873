#include "dhankel/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "dhankel/errors.hpp"
#include "dhankel/rng.hpp"
#include "dhankel/summation.hpp"

namespace dhankel {

std::string_view to_string(OperatorKind k) noexcept {
  switch (k) {
    case OperatorKind::hankel:
      return "hankel";
    case OperatorKind::cesaro:
      return "cesaro";
    case OperatorKind::bilinear:
      return "bilinear";
  }
  return "?";
}

OperatorKind operator_kind_from_string(std::string_view name) {
  if (name == "hankel") return OperatorKind::hankel;
  if (name == "cesaro") return OperatorKind::cesaro;
  if (name == "bilinear") return OperatorKind::bilinear;
  throw PreconditionError("unknown operator kind '" + std::string(name) + "'");
}

TaylorPoly hankel_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out, std::size_t n_inner) {
  if (n_inner < f.degree())
    throw PreconditionError("hankel_apply: n_inner must be >= deg f; truncate series inputs first");
  const std::size_t deg = std::min(n_inner, f.degree());
  const auto lambda = s.values(n_out + deg + 1);
  const auto a = f.coeffs();
  std::vector<cplx> b(n_out + 1);
  for (std::size_t n = 0; n <= n_out; ++n)
    b[n] = pairwise_accumulate(0, deg + 1, [&](std::size_t k) { return lambda[n + k] * a[k]; });
  return TaylorPoly(std::move(b));
}

TaylorPoly hankel_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out) {
  return hankel_apply(s, f, n_out, f.degree());
}

TaylorPoly cesaro_apply(const SymbolSeq& s, const TaylorPoly& f, std::size_t n_out) {
  const auto eta = s.values(n_out + 1);
  const auto a = f.coeffs();
  std::vector<cplx> c(n_out + 1);
  // Neumaier-compensated running sum of the coefficients
  cplx sum{0.0}, comp{0.0};
  auto add = [&](cplx x) {
    const double re = sum.real() + x.real();
    const double im = sum.imag() + x.imag();
    const double cre = std::abs(sum.real()) >= std::abs(x.real()) ? (sum.real() - re) + x.real() : (x.real() - re) + sum.real();
    const double cim = std::abs(sum.imag()) >= std::abs(x.imag()) ? (sum.imag() - im) + x.imag() : (x.imag() - im) + sum.imag();
    sum = {re, im};
    comp += cplx{cre, cim};
  };
  for (std::size_t n = 0; n <= n_out; ++n) {
    if (n < a.size()) add(a[n]);
    c[n] = eta[n] * (sum + comp);
  }
  return TaylorPoly(std::move(c));
}

namespace {

// sqrt(w_k / w_j) for the supported weightings; w(j,k) and w(k,j) are the
// same expression with arguments swapped, so the Bergman section is the exact
// transpose of the Dirichlet-section one.
inline double ratio_weight(std::size_t j, std::size_t k) {
  return std::sqrt(static_cast<double>(j + 1) / static_cast<double>(k + 1));
}

double section_weight(SpaceTag tag, std::size_t j, std::size_t k) {
  return tag == SpaceTag::bergman ? ratio_weight(k, j) : ratio_weight(j, k);
}

}  // namespace

SectionMatrix section_block(const SymbolSeq& s, OperatorKind kind, SpaceTag tag, std::size_t first, std::size_t n) {
  if (n == 0) throw PreconditionError("section_matrix: dimension must be at least 1");
  if (first >= n) throw PreconditionError("section_block: first index must be below the dimension");
  if (tag == SpaceTag::dirichlet_exact)
    throw PreconditionError(
        "section_matrix: dirichlet-exact weights are not supported (d_0 = d_1 breaks the Bergman transpose "
        "identity); use dirichlet-section and the sqrt(2) norm equivalence");
  if (kind == OperatorKind::bilinear && tag != SpaceTag::dirichlet_section)
    throw PreconditionError("section_matrix: bilinear-form sections are defined in the dirichlet-section basis only");

  const auto dim = static_cast<Eigen::Index>(n - first);
  SectionMatrix out;
  out.weight = tag;
  out.kind = kind;
  out.first = first;
  out.entries = Eigen::MatrixXcd::Zero(dim, dim);
  auto& e = out.entries;

  switch (kind) {
    case OperatorKind::hankel: {
      const auto lambda = s.values(2 * n - 1);
      for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = 0; r < dim; ++r) {
          const std::size_t j = first + static_cast<std::size_t>(r), k = first + static_cast<std::size_t>(c);
          e(r, c) = section_weight(tag, j, k) * lambda[j + k];
        }
      break;
    }
    case OperatorKind::cesaro: {
      const auto eta = s.values(n);
      for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = c; r < dim; ++r) {
          const std::size_t j = first + static_cast<std::size_t>(r), k = first + static_cast<std::size_t>(c);
          e(r, c) = section_weight(tag, j, k) * eta[j];
        }
      break;
    }
    case OperatorKind::bilinear: {
      const auto b = s.values(2 * n - 1);
      for (Eigen::Index c = 0; c < dim; ++c)
        for (Eigen::Index r = 0; r < dim; ++r) {
          const std::size_t j = first + static_cast<std::size_t>(r), k = first + static_cast<std::size_t>(c);
          const double w = static_cast<double>(j + k) / std::sqrt(static_cast<double>(j + 1) * static_cast<double>(k + 1));
          e(r, c) = w * std::conj(b[j + k]);
        }
      break;
    }
  }
  return out;
}

SectionMatrix section_matrix(const SymbolSeq& s, OperatorKind kind, SpaceTag tag, std::size_t n) {
  return section_block(s, kind, tag, 0, n);
}

int default_max_iterations(std::size_t n) noexcept {
  const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  return static_cast<int>(50.0 * lg) + 200;
}

namespace {

constexpr RngSpec kStartVectorRng{0x5EEDF00DULL, 0x7057A27ULL};

template <typename Matrix>
SingularValue power_iterate(const Matrix& m, double tol, int max_iter) {
  using Vector = Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1>;
  if (!(tol > 0.0)) throw PreconditionError("top_singular_value: tol must be positive");
  const Eigen::Index cols = m.cols();
  if (max_iter <= 0) max_iter = default_max_iterations(static_cast<std::size_t>(std::max(m.rows(), cols)));
  SingularValue out;
  if (cols == 0 || m.rows() == 0) {
    out.converged = true;
    return out;
  }
  Vector v(cols);
  for (Eigen::Index i = 0; i < cols; ++i) v(i) = 2.0 * uniform01(kStartVectorRng, static_cast<std::uint64_t>(i)) - 1.0;
  v /= v.norm();

  double prev = -1.0;
  double best = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    const Vector w = m * v;
    const double s2 = w.squaredNorm();
    best = std::max(best, s2);
    out.iterations = it;
    Vector u = m.adjoint() * w;
    const double nu = u.norm();
    if (nu == 0.0) {
      // v is in the kernel; for a generic start vector this means M == 0
      out.sigma = std::sqrt(s2);
      out.converged = true;
      return out;
    }
    v = u / nu;
    if (prev >= 0.0 && std::abs(s2 - prev) <= tol * s2) {
      out.sigma = std::sqrt(s2);
      out.converged = true;
      return out;
    }
    prev = s2;
  }
  out.sigma = std::sqrt(best);
  out.converged = false;
  return out;
}

}  // namespace

SingularValue top_singular_value(const Eigen::MatrixXd& m, double tol, int max_iter) {
  return power_iterate(m, tol, max_iter);
}

SingularValue top_singular_value(const Eigen::MatrixXcd& m, double tol, int max_iter) {
  if (m.imag().isZero(0.0)) {
    const Eigen::MatrixXd re = m.real();
    return power_iterate(re, tol, max_iter);
  }
  return power_iterate(m, tol, max_iter);
}

SingularValue top_singular_value(const SectionMatrix& m, double tol, int max_iter) {
  if (max_iter <= 0) max_iter = default_max_iterations(m.first + m.dimension());
  return top_singular_value(m.entries, tol, max_iter);
}

SingularValue tail_section_norm(const SymbolSeq& s, OperatorKind kind, std::size_t m, std::size_t n, double tol,
                                int max_iter) {
  if (m >= n) throw PreconditionError("tail_section_norm: need 0 <= m < N");
  return top_singular_value(section_block(s, kind, SpaceTag::dirichlet_section, m, n), tol, max_iter);
}

double cesaro_rkt_norm(const SymbolSeq& s, double t, std::size_t n) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("cesaro_rkt_norm: t must lie in [0,1)");
  const auto eta = s.values(n + 1);
  // partial[k] = 1 + sum_{i=1}^{k} t^i / i
  std::vector<double> partial(n + 1);
  partial[0] = 1.0;
  double power = 1.0, sum = 1.0, comp = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    power *= t;
    const double x = power / static_cast<double>(k);
    const double y = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - y) + x : (x - y) + sum;
    sum = y;
    partial[k] = sum + comp;
  }
  const double body = pairwise_accumulate(1, n + 1, [&](std::size_t k) {
    return static_cast<double>(k) * std::norm(eta[k]) * partial[k] * partial[k];
  });
  const double normalizer = 1.0 / (1.0 - std::log1p(-t * t));
  return std::sqrt(normalizer * (std::norm(eta[0]) + body));
}

}  // namespace dhankel
