#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "sfw/domain_mesh.hpp"

namespace sfw::testing {

inline constexpr double pi = std::numbers::pi;

inline DomainMesh disk(const SpaceFormModel& model, double chart_radius, int level) {
  StarDomainSpec s;
  s.profile = RadialProfile::circle(chart_radius);
  s.level = level;
  return build_mesh(s, model);
}

inline DomainMesh star(const SpaceFormModel& model, const RadialProfile& p, int level) {
  StarDomainSpec s;
  s.profile = p;
  s.level = level;
  return build_mesh(s, model);
}

/// rho = R_chart (1 + eps cos(k t)).
inline RadialProfile perturbed(double r_chart, double eps, int k) {
  std::vector<double> c(static_cast<std::size_t>(k), 0.0);
  c[static_cast<std::size_t>(k - 1)] = eps * r_chart;
  return RadialProfile::fourier(r_chart, c);
}

inline double order(double e0, double e1, double h0, double h1) {
  return std::log(std::abs(e0 / e1)) / std::log(h0 / h1);
}

}  // namespace sfw::testing
