#pragma once

#include <limits>
#include <vector>

#include "hartree/grid.hpp"

namespace hartree {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Time-ordered samples of a field on one grid.
class Trajectory {
 public:
  Trajectory() = default;

  /// Appends a sample; times must increase strictly and grids must agree.
  void push_back(double t, Field u);

  std::size_t size() const noexcept { return times_.size(); }
  bool empty() const noexcept { return times_.empty(); }
  double time(std::size_t i) const { return times_.at(i); }
  const Field& field(std::size_t i) const { return fields_.at(i); }
  const std::vector<double>& times() const noexcept { return times_; }
  const std::vector<Field>& fields() const noexcept { return fields_; }
  const Field& back() const { return fields_.back(); }

 private:
  std::vector<double> times_;
  std::vector<Field> fields_;
};

/// (dx^d sum |u|^p)^{1/p}; grid maximum for p = inf.
double norm_lp(const Field& u, double p);

/// Wiener norm ||uhat||_{L^1} as a dxi^d-weighted sum.
double norm_wiener(const Field& u);
double norm_wiener(const SpectralField& uhat);

/// ||u||_{L^2 cap W} := max(||u||_{L^2}, ||u||_W).
double norm_l2_cap_w(const Field& u);

/// ||u||_{L^p_t L^q_x} over the trajectory's time span, composite trapezoid
/// in time (sup over samples when p_time = inf).
double spacetime_norm(const Trajectory& tr, double p_time, double q_space);

/// Strichartz-admissible exponents: 2/p = d (1/2 - 1/q), (p, q) != (2, inf).
struct AdmissiblePair {
  double p;  // time exponent
  double q;  // space exponent
};

/// Completes q_space to an admissible pair. q_space must lie in [2, inf) for
/// d <= 2 and in [2, 2d/(d-2)) for d = 3.
AdmissiblePair make_admissible(double q_space, int dim);

bool is_admissible(const AdmissiblePair& pair, int dim, double tol = 1e-12);

/// Space-time exponents of the homogeneous-kernel contraction argument:
/// q = 8/gamma (time), r = 4d/(2d-gamma) (space), theta = 8/(4-gamma).
struct ContractionExponents {
  double q;
  double r;
  double theta;
};

/// Requires 0 < gamma < min(2, d). Verifies the Holder bookkeeping identities
/// 1 - 1/q = (4-gamma)/4 + 1/q = 1/2 + 1/theta, 1 - 1/r = gamma/(2d) + 1/r and
/// 1/2 = 1/theta + 1/q to 1e-12.
ContractionExponents contraction_exponents(double gamma, int dim);

}  // namespace hartree
