#include <cmath>

#include "knotinv/geomforms.hpp"

namespace knotinv::geomforms {

namespace {

void require_direction(int direction) {
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("stereographic direction must be +1 or -1");
}

}  // namespace

Vec stereographic_forward(int direction, const Vec& sqp) {
  require_direction(direction);
  Eigen::Vector2d p(sqp[3], sqp[4]);
  const double r = p.squaredNorm();
  Vec out(6);
  out[0] = sqp[0];
  out[1] = sqp[1];
  out[2] = sqp[2];
  out[3] = direction * (1 - r) / (1 + r);
  out.segment<2>(4) = 2 * p / (1 + r);
  return out;
}

Vec stereographic_inverse(int direction, const Vec& tzte) {
  require_direction(direction);
  const double tau = tzte[3];
  const double denom = 1 + direction * tau;
  if (std::abs(denom) < 1e-12)
    throw PoleExcluded("inverse stereographic chart excludes tau = " +
                       std::to_string(-direction));
  Vec out(5);
  out[0] = tzte[0];
  out[1] = tzte[1];
  out[2] = tzte[2];
  out[3] = tzte[4] / denom;
  out[4] = tzte[5] / denom;
  return out;
}

Vec stereographic_transition(const Vec& sqp) {
  Eigen::Vector2d p(sqp[3], sqp[4]);
  const double r = p.squaredNorm();
  if (r < 1e-24) throw PoleExcluded("chart change undefined at p = 0");
  Vec out = sqp;
  out.segment<2>(3) = p / r;
  return out;
}

Vec stereographic_pullback_covector(int direction, const Vec& sqp) {
  require_direction(direction);
  // d(phi_pm) composed with lambda_eu = -tau dt - eta.dz at the image point.
  Eigen::Vector2d p(sqp[3], sqp[4]);
  const double r = p.squaredNorm();
  const double tau = direction * (1 - r) / (1 + r);
  Eigen::Vector2d eta = 2 * p / (1 + r);

  // Jacobian of (t, z, tau, eta) in (s, q, p).
  Mat jac = Mat::Zero(6, 5);
  jac(0, 0) = 1;
  jac(1, 1) = 1;
  jac(2, 2) = 1;
  const double denom2 = (1 + r) * (1 + r);
  for (int k = 0; k < 2; ++k) {
    jac(3, 3 + k) = direction * (-2 * p[k] * (1 + r) - (1 - r) * 2 * p[k]) / denom2;
    for (int i = 0; i < 2; ++i)
      jac(4 + i, 3 + k) = (2 * (i == k ? 1.0 : 0.0) * (1 + r) - 2 * p[i] * 2 * p[k]) / denom2;
  }

  Vec lambda_image = Vec::Zero(6);
  lambda_image[0] = -tau;
  lambda_image[1] = -eta[0];
  lambda_image[2] = -eta[1];
  return jac.transpose() * lambda_image;
}

Vec jet_to_unit_bundle(const Vec& sqp) {
  Eigen::Vector3d q = sqp.segment<3>(1), p = sqp.segment<3>(4);
  if (std::abs(q.squaredNorm() - 1) > 1e-10 || std::abs(q.dot(p)) > 1e-10)
    throw ConstraintViolation("point off the jet-space constraint |q|=1, q.p=0");
  Vec out(6);
  out.segment<3>(0) = sqp[0] * q + p;
  out.segment<3>(3) = q;
  return out;
}

Vec jet_fiber_point(const Eigen::Vector3d& x, const Eigen::Vector3d& q) {
  Vec out(7);
  const double s = x.dot(q);
  out[0] = s;
  out.segment<3>(1) = q;
  out.segment<3>(4) = x - s * q;
  return out;
}

Vec jet_pullback_covector(const Vec& sqp) {
  Eigen::Vector3d q = sqp.segment<3>(1);
  const double s = sqp[0];
  // Map (s,q,p) -> (x, v) = (s q + p, q); pull back v.dx.
  Mat jac = Mat::Zero(6, 7);
  jac.block<3, 1>(0, 0) = q;                      // dx/ds
  jac.block<3, 3>(0, 1) = s * Mat::Identity(3, 3);  // dx/dq
  jac.block<3, 3>(0, 4) = Mat::Identity(3, 3);      // dx/dp
  jac.block<3, 3>(3, 1) = Mat::Identity(3, 3);      // dv/dq
  Vec lambda_image = Vec::Zero(6);
  lambda_image.segment<3>(0) = q;  // v.dx with v = q
  return jac.transpose() * lambda_image;
}

LieReport interp_vector_check(const std::vector<Vec>& points, double h) {
  // The flow of v = q d_q - ((1-p^2)/(1+p^2)) p d_p, with its Jacobian,
  // integrated by fixed-step RK4 for time +-h on the eps = 0 chart form.
  ChartParams params;
  params.eps = 0;
  ChartForm chart = make_chart("lambda_eps", params);

  auto field = [](const Vec& x) {
    Vec v = Vec::Zero(5);
    v[1] = x[1];
    v[2] = x[2];
    const double r = x[3] * x[3] + x[4] * x[4];
    const double fac = (1 - r) / (1 + r);
    v[3] = -fac * x[3];
    v[4] = -fac * x[4];
    return v;
  };
  auto field_jacobian = [](const Vec& x) {
    Mat d = Mat::Zero(5, 5);
    d(1, 1) = 1;
    d(2, 2) = 1;
    const double r = x[3] * x[3] + x[4] * x[4];
    const double fac = (1 - r) / (1 + r);
    const double dfac_dr = -2 / ((1 + r) * (1 + r));
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        d(3 + i, 3 + k) = -(i == k ? fac : 0.0) - dfac_dr * 2 * x[3 + k] * x[3 + i];
    return d;
  };

  struct FlowState {
    Vec x;
    Mat j;
  };
  auto rhs = [&](const FlowState& st) {
    return FlowState{field(st.x), field_jacobian(st.x) * st.j};
  };
  auto step = [&](FlowState st, double dt) {
    auto add = [](const FlowState& a, const FlowState& b, double w) {
      return FlowState{a.x + w * b.x, a.j + w * b.j};
    };
    FlowState k1 = rhs(st);
    FlowState k2 = rhs(add(st, k1, dt / 2));
    FlowState k3 = rhs(add(st, k2, dt / 2));
    FlowState k4 = rhs(add(st, k3, dt));
    st.x += dt / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    st.j += dt / 6 * (k1.j + 2 * k2.j + 2 * k3.j + k4.j);
    return st;
  };
  auto flow = [&](const Vec& x0, double time) {
    FlowState st{x0, Mat::Identity(5, 5)};
    const int substeps = 4;
    for (int i = 0; i < substeps; ++i) st = step(st, time / substeps);
    return st;
  };

  LieReport report;
  for (const Vec& x : points) {
    FlowState fwd = flow(x, h);
    FlowState bwd = flow(x, -h);
    Vec pull_fwd = fwd.j.transpose() * chart.coefficients(fwd.x);
    Vec pull_bwd = bwd.j.transpose() * chart.coefficients(bwd.x);
    Vec lie = (pull_fwd - pull_bwd) / (2 * h);
    const double r = x[3] * x[3] + x[4] * x[4];
    const double factor = 2 * r / (1 + r);
    Vec expected = factor * chart.coefficients(x);
    report.max_abs_error = std::max(report.max_abs_error, (lie - expected).cwiseAbs().maxCoeff());
    ++report.points;
  }
  return report;
}

}  // namespace knotinv::geomforms
