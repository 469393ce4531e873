#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "dhankel/coeffspace.hpp"
#include "dhankel/measure.hpp"
#include "dhankel/rng.hpp"

namespace dhankel {

enum class Monotonicity { decreasing_positive, general, unknown };

enum class SymbolKind { explicit_list, powerlog, moments, lacunary, randomized };

class SymbolSeq;

struct ExplicitSymbol {
  std::vector<cplx> values;  ///< lambda_n = 0 beyond the list
};

/// lambda_n = scale * (n+1)^{-alpha} * log(n+2)^{-beta}.
struct PowerLogSymbol {
  double alpha = 1.0;
  double beta = 0.0;
  double scale = 1.0;
};

struct MomentSymbol {
  MeasureSpec measure;
};

/// lambda_{q^k} = scale * q^{-decay k} * (k+1)^{-log_power} for all k >= 0.
struct LacunaryLaw {
  std::size_t q = 2;
  double decay = 0.5;
  double log_power = 0.0;
  double scale = 1.0;
};

/// lambda_{support[k]} = values[k], zero elsewhere; or the infinite `law`.
struct LacunarySymbol {
  std::vector<std::size_t> support;
  std::vector<cplx> values;
  double ratio = 0.0;  ///< min support[k+1]/support[k], always > 1
  std::optional<LacunaryLaw> law;
};

/// omega_n = X_n * conj(base_n) with X_n drawn from `dist` on stream `rng`.
struct RandomizedSymbol {
  std::shared_ptr<const SymbolSeq> base;
  DistTag dist;
  RngSpec rng;
};

/// Coefficient sequence lambda (or eta) of a Hankel-type or Cesaro-type operator.
class SymbolSeq {
 public:
  using Kind = std::variant<ExplicitSymbol, PowerLogSymbol, MomentSymbol, LacunarySymbol, RandomizedSymbol>;

  SymbolSeq() : SymbolSeq(ExplicitSymbol{}) {}

  static SymbolSeq explicit_list(std::vector<cplx> values);
  static SymbolSeq explicit_real(const std::vector<double>& values);
  static SymbolSeq powerlog(double alpha, double beta, double scale = 1.0);
  static SymbolSeq hilbert() { return powerlog(1.0, 0.0, 1.0); }
  static SymbolSeq moments(MeasureSpec measure);
  /// Throws PreconditionError unless support is increasing with a ratio > 1
  /// between consecutive entries and sizes match.
  static SymbolSeq lacunary(std::vector<std::size_t> support, std::vector<cplx> values);
  /// Infinite lacunary sequence on {q^k}; q >= 2.
  static SymbolSeq lacunary_law(LacunaryLaw law);
  static SymbolSeq randomized(SymbolSeq base, DistTag dist, RngSpec rng);

  SymbolKind kind() const noexcept { return static_cast<SymbolKind>(kind_.index()); }
  const Kind& data() const noexcept { return kind_; }
  Monotonicity monotonicity() const noexcept { return monotone_; }

  cplx value(std::size_t n) const;
  /// lambda_0 .. lambda_{count-1}.
  std::vector<cplx> values(std::size_t count) const;

  /// One past the last possibly nonzero index, when the support is finite.
  std::optional<std::size_t> support_end() const;

  /// True when every coefficient is real (imaginary part exactly zero).
  bool is_real() const;

 private:
  explicit SymbolSeq(Kind k, Monotonicity m = Monotonicity::unknown) : kind_(std::move(k)), monotone_(m) {}

  Kind kind_;
  Monotonicity monotone_;
};

std::string_view to_string(SymbolKind k) noexcept;
std::string_view to_string(Monotonicity m) noexcept;

}  // namespace dhankel
