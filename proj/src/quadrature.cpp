#include "normgeom/quadrature.hpp"

#include <algorithm>
#include <boost/math/special_functions/legendre.hpp>
#include <map>
#include <memory>
#include <mutex>

namespace normgeom {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw Error(ErrorCode::InvalidInput, "rel_tol must be positive");
  if (nodes_per_panel < 2) throw Error(ErrorCode::InvalidInput, "nodes_per_panel must be >= 2");
  if (max_depth < 0) throw Error(ErrorCode::InvalidInput, "max_depth must be >= 0");
}

const GaussLegendreRule& GaussLegendreRule::get(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto rule = std::make_unique<GaussLegendreRule>();
    // Boost returns the non-negative roots only.
    const std::vector<double> roots = boost::math::legendre_p_zeros<double>(n);
    for (double x : roots) {
      const double dp = boost::math::legendre_p_prime<double>(n, x);
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      rule->nodes.push_back(x);
      rule->weights.push_back(w);
      if (x != 0.0) {
        rule->nodes.push_back(-x);
        rule->weights.push_back(w);
      }
    }
    slot = std::move(rule);
  }
  return *slot;
}

std::vector<double> rule_nodes(double a, double b, const QuadratureConfig& config) {
  const auto& rule = GaussLegendreRule::get(config.nodes_per_panel);
  std::vector<double> out;
  out.reserve(rule.nodes.size());
  for (double x : rule.nodes) out.push_back(0.5 * (a + b) + 0.5 * (b - a) * x);
  std::sort(out.begin(), out.end());
  return out;
}

double integrate_piecewise(const PiecewiseIntegrand& f, std::span<const double> breakpoints,
                           const QuadratureConfig& config, double abs_floor) {
  config.validate();
  if (breakpoints.size() < 2) return 0.0;
  const auto& rule = GaussLegendreRule::get(config.nodes_per_panel);
  const double span = breakpoints.back() - breakpoints.front();

  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    auto abs_f = [&](double t) { return std::abs(f(i, t)); };
    scale += gauss_panel<double>(abs_f, breakpoints[i], breakpoints[i + 1], rule);
  }
  if (scale == 0.0) return 0.0;
  const double abs_tol = std::max(config.rel_tol * scale, abs_floor);

  double total = 0.0;
  std::vector<Panel<double>> panels;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    panels.clear();
    auto fi = [&](double t) { return f(i, t); };
    adaptive_panels<double>(fi, breakpoints[i], breakpoints[i + 1], abs_tol, span,
                            config, panels);
    for (const auto& p : panels) total += p.integral;
  }
  return total;
}

}  // namespace normgeom
