#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <vector>

#include "normgeom/errors.hpp"
#include "normgeom/vec2.hpp"

namespace normgeom {

struct QuadratureConfig {
  int nodes_per_panel = 32;
  double rel_tol = 1e-10;
  int max_depth = 12;

  // Throws InvalidInput when rel_tol <= 0 or nodes_per_panel < 2.
  void validate() const;
};

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Cached per node count; safe to call concurrently.
  static const GaussLegendreRule& get(int n);
};

// Nodes of the configured rule mapped onto [a, b] (interior only).
std::vector<double> rule_nodes(double a, double b, const QuadratureConfig& config);

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const Vec2& v) { return std::abs(v.x) + std::abs(v.y); }

template <class Value>
struct PanelSum {
  Value value{};
  // Integral of the magnitude of f, used as a roundoff floor.
  double absolute = 0.0;
};

template <class Value, class F>
PanelSum<Value> gauss_panel_sum(const F& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  PanelSum<Value> sum;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const Value v = f(mid + half * rule.nodes[k]);
    sum.value += v * rule.weights[k];
    sum.absolute += magnitude(v) * rule.weights[k];
  }
  sum.value = sum.value * half;
  sum.absolute *= std::abs(half);
  return sum;
}

template <class Value, class F>
Value gauss_panel(const F& f, double a, double b, const GaussLegendreRule& rule) {
  return gauss_panel_sum<Value>(f, a, b, rule).value;
}

// A converged sub-interval and its integral.
template <class Value>
struct Panel {
  double a;
  double b;
  Value integral;
};

// Adaptive panel halving on [a, b]. A panel is accepted when the single-panel
// and two-half-panel estimates differ by at most abs_tol * (b - a) / span.
// Appends the accepted panels in increasing order of t.
template <class Value, class F>
void adaptive_panels(const F& f, double a, double b, double abs_tol, double span,
                     const QuadratureConfig& config, std::vector<Panel<Value>>& out,
                     int depth = 0, Value coarse = Value{}, bool have_coarse = false) {
  constexpr double kRoundoff = 1e-14;
  const auto& rule = GaussLegendreRule::get(config.nodes_per_panel);
  if (!have_coarse) coarse = gauss_panel<Value>(f, a, b, rule);
  const double m = 0.5 * (a + b);
  const PanelSum<Value> left = gauss_panel_sum<Value>(f, a, m, rule);
  const PanelSum<Value> right = gauss_panel_sum<Value>(f, m, b, rule);
  const Value fine = left.value + right.value;
  const double err = magnitude(fine - coarse);
  const double allowed =
      std::max(abs_tol * (b - a) / span, kRoundoff * (left.absolute + right.absolute));
  if (err <= allowed) {
    out.push_back({a, m, left.value});
    out.push_back({m, b, right.value});
    return;
  }
  if (depth >= config.max_depth) {
    std::ostringstream msg;
    msg << "quadrature did not converge on panel [" << a << ", " << b << "]: error estimate "
        << err << " exceeds " << allowed;
    throw Error(ErrorCode::NoConvergence, msg.str());
  }
  adaptive_panels<Value>(f, a, m, abs_tol, span, config, out, depth + 1, left.value, true);
  adaptive_panels<Value>(f, m, b, abs_tol, span, config, out, depth + 1, right.value, true);
}

// Integrand evaluated as f(piece, t) with t inside piece `piece`, whose
// parameter interval is [breakpoints[piece], breakpoints[piece + 1]].
using PiecewiseIntegrand = std::function<double(std::size_t, double)>;

// Sum over pieces of adaptive Gauss-Legendre integrals, reduced in piece
// order. The tolerance is rel_tol times the integral of |f|, but never below
// abs_floor.
double integrate_piecewise(const PiecewiseIntegrand& f, std::span<const double> breakpoints,
                           const QuadratureConfig& config = {}, double abs_floor = 0.0);

}  // namespace normgeom
