#pragma once

// Random expressions that stay inside the evaluation domain for t in
// [-1, 1]: every function argument that needs it is made positive first.

#include <random>

#include "normgeom/expr.hpp"

namespace oracle {

class RandomExpr {
 public:
  explicit RandomExpr(unsigned seed) : rng_(seed) {}

  normgeom::Expr make(int depth) {
    using normgeom::Expr;
    using normgeom::Func;
    if (depth == 0) return leaf();
    const Expr one = Expr::number(1.0);
    switch (pick(0, 11)) {
      case 0: return make(depth - 1) + make(depth - 1);
      case 1: return make(depth - 1) - make(depth - 1);
      case 2: return make(depth - 1) * make(depth - 1);
      case 3: {
        const Expr d = make(depth - 1);
        return make(depth - 1) / (d * d + one);
      }
      case 4: return normgeom::call(Func::Sin, make(depth - 1));
      case 5: return normgeom::call(Func::Cos, make(depth - 1));
      case 6: return normgeom::call(Func::Exp, normgeom::call(Func::Sin, make(depth - 1)));
      case 7: {
        const Expr a = make(depth - 1);
        return normgeom::call(Func::Sqrt, a * a + one);
      }
      case 8: {
        const Expr a = make(depth - 1);
        return normgeom::call(Func::Log, a * a + one);
      }
      case 9: return normgeom::pow(make(depth - 1), Expr::number(pick(2, 3)));
      case 10: {
        const Expr a = make(depth - 1);
        return normgeom::pow(a * a + one, Expr::number(0.5 + pick(0, 3) * 0.25));
      }
      default:
        return normgeom::call(Func::Tan,
                              Expr::number(0.5) * normgeom::call(Func::Sin, make(depth - 1)));
    }
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  normgeom::Expr leaf() {
    switch (pick(0, 3)) {
      case 0: return normgeom::Expr::number(uniform(-2.0, 2.0));
      case 1: return normgeom::Expr::pi();
      default: return normgeom::Expr::var();
    }
  }

  std::mt19937 rng_;
};

}  // namespace oracle
