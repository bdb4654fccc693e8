#include "hartree/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hartree/error.hpp"

namespace hartree {

void Trajectory::push_back(double t, Field u) {
  if (!std::isfinite(t)) throw DomainError("trajectory time must be finite");
  if (!times_.empty()) {
    if (!(t > times_.back())) throw DomainError("trajectory times must increase strictly");
    require_same_grid(fields_.front().grid(), u.grid(), "trajectory");
  }
  times_.push_back(t);
  fields_.push_back(std::move(u));
}

double norm_lp(const Field& u, double p) {
  if (!(p >= 1.0)) throw DomainError("norm_lp: p must be >= 1");
  if (!u.all_finite()) throw InvalidFieldError("norm_lp: field contains non-finite samples");
  const auto vals = u.values();
  if (std::isinf(p)) {
    double mx = 0.0;
    for (complex z : vals) mx = std::max(mx, std::abs(z));
    return mx;
  }
  std::vector<double> terms(vals.size());
  if (p == 2.0) {
    std::transform(vals.begin(), vals.end(), terms.begin(), [](complex z) { return std::norm(z); });
  } else {
    std::transform(vals.begin(), vals.end(), terms.begin(), [p](complex z) { return std::pow(std::abs(z), p); });
  }
  return std::pow(u.grid().cell_volume() * pairwise_sum(terms), 1.0 / p);
}

double norm_wiener(const SpectralField& uhat) {
  const auto vals = uhat.values();
  std::vector<double> terms(vals.size());
  std::transform(vals.begin(), vals.end(), terms.begin(), [](complex z) { return std::abs(z); });
  return uhat.grid().spectral_cell_volume() * pairwise_sum(terms);
}

double norm_wiener(const Field& u) { return norm_wiener(forward(u)); }

double norm_l2_cap_w(const Field& u) { return std::max(norm_lp(u, 2.0), norm_wiener(u)); }

double spacetime_norm(const Trajectory& tr, double p_time, double q_space) {
  if (!(p_time >= 1.0) || !(q_space >= 1.0)) throw DomainError("spacetime_norm: exponents must be >= 1");
  if (tr.size() < 2) throw DomainError("spacetime_norm: trajectory needs at least 2 samples");
  std::vector<double> spatial(tr.size());
  for (std::size_t m = 0; m < tr.size(); ++m) spatial[m] = norm_lp(tr.field(m), q_space);
  if (std::isinf(p_time)) return *std::max_element(spatial.begin(), spatial.end());

  std::vector<double> panels(tr.size() - 1);
  for (std::size_t m = 0; m + 1 < tr.size(); ++m) {
    const double dt = tr.time(m + 1) - tr.time(m);
    panels[m] = 0.5 * dt * (std::pow(spatial[m], p_time) + std::pow(spatial[m + 1], p_time));
  }
  return std::pow(pairwise_sum(panels), 1.0 / p_time);
}

AdmissiblePair make_admissible(double q_space, int dim) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("make_admissible: dimension must be 1, 2 or 3");
  const double d = dim;
  const double upper = dim >= 3 ? 2.0 * d / (d - 2.0) : kInfinity;
  if (!(q_space >= 2.0 && q_space < upper)) {
    throw DomainError("make_admissible: q = " + std::to_string(q_space) + " outside [2, " +
                      (std::isinf(upper) ? std::string("inf") : std::to_string(upper)) + ")");
  }
  const double rate = d * (0.5 - 1.0 / q_space);
  const double p = rate == 0.0 ? kInfinity : 2.0 / rate;
  if (p == 2.0 && std::isinf(q_space)) throw DomainError("make_admissible: (2, inf) is excluded");
  return {p, q_space};
}

bool is_admissible(const AdmissiblePair& pair, int dim, double tol) {
  if (!(pair.p >= 2.0 && pair.q >= 2.0)) return false;
  if (pair.p == 2.0 && std::isinf(pair.q)) return false;
  const double lhs = std::isinf(pair.p) ? 0.0 : 2.0 / pair.p;
  const double rhs = dim * (0.5 - (std::isinf(pair.q) ? 0.0 : 1.0 / pair.q));
  return std::abs(lhs - rhs) <= tol;
}

ContractionExponents contraction_exponents(double gamma, int dim) {
  const double d = dim;
  if (!(gamma > 0.0 && gamma < std::min(2.0, d)))
    throw DomainError("contraction_exponents: gamma must satisfy 0 < gamma < min(2, d)");
  ContractionExponents e{8.0 / gamma, 4.0 * d / (2.0 * d - gamma), 8.0 / (4.0 - gamma)};

  const double q_conj = 1.0 - 1.0 / e.q;
  const double r_conj = 1.0 - 1.0 / e.r;
  const bool ok = std::abs(q_conj - ((4.0 - gamma) / 4.0 + 1.0 / e.q)) <= 1e-12 &&
                  std::abs(q_conj - (0.5 + 1.0 / e.theta)) <= 1e-12 &&
                  std::abs(r_conj - (gamma / (2.0 * d) + 1.0 / e.r)) <= 1e-12 &&
                  std::abs(0.5 - (1.0 / e.theta + 1.0 / e.q)) <= 1e-12;
  if (!ok) throw std::logic_error("contraction_exponents: Holder identities violated");
  return e;
}

}  // namespace hartree
