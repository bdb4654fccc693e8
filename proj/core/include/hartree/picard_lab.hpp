#pragma once

#include <string>
#include <vector>

#include "hartree/fit.hpp"
#include "hartree/grid.hpp"
#include "hartree/kernels.hpp"

namespace hartree {

/// Family f^h(x) = f(hx) on co-scaled grids: member h lives on the box
/// L0 / h with the base N, so its samples coincide with the base samples.
class ScaledFamily {
 public:
  /// h_values must be strictly decreasing and lie in (0, 1].
  ScaledFamily(Field base, std::vector<double> h_values);

  const Field& base() const noexcept { return base_; }
  const std::vector<double>& h_values() const noexcept { return h_values_; }
  double base_length() const noexcept { return base_.grid().length(); }

  Grid grid_for(double h) const;
  Field member(double h) const;

 private:
  Field base_;
  std::vector<double> h_values_;
};

ScaledFamily gaussian_family(const Grid& base_grid, double width, std::vector<double> h_values);

/// D(f)(t) = -i int_0^t e^{i(t-s) Delta} (K * |e^{is Delta} f|^2) e^{is Delta} f ds,
/// composite trapezoid with n_quad nodes. D(f)(0) = 0.
Field second_iterate(const Field& f, const Kernel& k, double t, std::size_t n_quad);

/// Relative gap between ||D(f^h)(t)||_W (co-scaled grid) and
/// h^{-(d-gamma+2)} ||D(f)(t h^2)||_W (base grid). Homogeneous kernels only.
double scaling_identity_residual(const ScaledFamily& family, const KernelSpec& spec, double t, double h,
                                 std::size_t n_quad);

struct InflationReport {
  std::string kernel;
  double t = 0.0;
  double decay_exponent = 0.0;          // d - gamma
  std::vector<double> h;
  std::vector<double> d_wiener;         // ||D(f^h)(t)||_W
  std::vector<double> f_wiener;         // ||f^h||_W
  std::vector<double> f_l2;             // ||f^h||_L2
  std::vector<double> compensated;      // ||D(f^h)(t)||_W h^{d-gamma}
  double g0_wiener = 0.0;               // ||(K*|f|^2) f||_W on the base grid
  bool fit_valid = false;               // >= 5 positive values
  LineFit fit;                          // log ||D||_W against log h
  // Truncated kernels: tail-correction bound t h^2 ||K_h hat||_{L^q}.
  double tail_q = 0.0;
  std::vector<double> tail_norm;
  std::vector<double> tail_bound;
};

/// Evaluates ||D(f^h)(t)||_W across the family. Throws DomainError for fewer
/// than 3 h values.
InflationReport inflation_sweep(const ScaledFamily& family, const KernelSpec& spec, double t,
                                std::size_t n_quad);

struct TaylorFit {
  double linear_coeff = 0.0;   // coefficient a in ||D(f)(s)||_W ~ a s + b s^2
  double remainder_order = 0.0;  // log-log slope of ||D(f)(s) + i s g(0)||_W
  double g0_wiener = 0.0;      // ||(K*|f|^2) f||_W
  std::vector<double> s;
  std::vector<double> d_wiener;
  std::vector<double> remainder;
  bool remainder_fit_valid = false;
};

/// Requires >= 4 strictly decreasing s values spanning at least a decade.
TaylorFit taylor_fit(const Field& f, const Kernel& k, const std::vector<double>& s_values, std::size_t n_quad);

}  // namespace hartree
