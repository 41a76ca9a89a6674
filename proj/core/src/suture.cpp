#include <algorithm>
#include <cmath>

#include "knotinv/geomforms.hpp"

namespace knotinv::geomforms {

std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo,
                                  double hi, int subdivisions) {
  std::vector<double> roots;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i <= subdivisions; ++i) {
    double x = lo + (hi - lo) * i / subdivisions;
    double fx = f(x);
    if (prev_f == 0) {
      roots.push_back(prev_x);
    } else if (prev_f * fx < 0) {
      double a = prev_x, b = x, fa = prev_f;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double fm = f(mid);
        if (fm == 0 || (b - a) < 1e-16) {
          a = b = mid;
          break;
        }
        if (fa * fm < 0) {
          b = mid;
        } else {
          a = mid;
          fa = fm;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0) roots.push_back(prev_x);
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-14; }),
              roots.end());
  return roots;
}

namespace {

void validate_suture_params(double eps, double delta) {
  if (!(eps > 0 && eps <= 0.05))
    throw std::invalid_argument("suture displacement needs eps in (0, 0.05]");
  if (!(delta > 0 && delta <= 0.1))
    throw std::invalid_argument("suture displacement needs delta in (0, 0.1]");
}

SutureRoots collect(const std::function<double(double)>& poly) {
  SutureRoots out;
  out.roots = bracket_roots(poly, -1.0, 1.0);
  if (out.roots.empty()) throw NoRootInBracket("no suture root in [-1, 1]");
  out.near_zero_root = *std::min_element(
      out.roots.begin(), out.roots.end(),
      [](double a, double b) { return std::abs(a) < std::abs(b); });
  out.residual = std::abs(poly(out.near_zero_root));
  if (out.residual > 1e-12) throw NoRootInBracket("suture root residual too large");
  return out;
}

}  // namespace

SutureRoots suture_solve_quadratic(double eps, double delta, double p_squared) {
  validate_suture_params(eps, delta);
  auto poly = [=](double x) {
    return -4 * eps * x * x - x + eps * (1 + p_squared) * delta;
  };
  return collect(poly);
}

SutureRoots suture_solve_cubic(double eps, double delta) {
  validate_suture_params(eps, delta);
  auto poly = [=](double x) {
    return -eps * eps * x * x * x - eps * x * x + (1 + eps * eps * delta) * x + eps * delta;
  };
  return collect(poly);
}

}  // namespace knotinv::geomforms
