#include <cmath>
#include <map>

#include "knotinv/geomforms.hpp"

namespace knotinv::geomforms {

double ChartForm::dlambda_on(const Vec& x, const Vec& u, const Vec& v) const {
  Mat j = coefficient_jacobian(x);
  return u.dot(j.transpose() * v) - (j * u).dot(v);
}

Mat ChartForm::tangent_frame(const Vec& x) const {
  const int n = ambient_dim();
  const int k = static_cast<int>(constraints.size());
  const int d = n - k;
  if (k == 0) {
    Mat frame = Mat::Identity(n, n);
    return frame;
  }
  Mat g(n, k);
  for (int i = 0; i < k; ++i) g.col(i) = constraints[i].gradient(x);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat frame = q.rightCols(d);
  // Verify annihilation; a rank-deficient gradient matrix would break it.
  for (int i = 0; i < k; ++i)
    if ((frame.transpose() * g.col(i)).cwiseAbs().maxCoeff() > 1e-10)
      throw DegenerateAt(name + ": constraint gradients degenerate");
  // Fix the coorientation: (gradients, frame) positively oriented.
  Mat full(n, n);
  full.leftCols(k) = g;
  full.rightCols(d) = frame;
  if (full.determinant() < 0) frame.col(0) *= -1;
  return frame;
}

double ChartForm::max_constraint_violation(const Vec& x) const {
  double worst = 0;
  for (const auto& c : constraints) worst = std::max(worst, std::abs(c.value(x)));
  return worst;
}

void ChartForm::check_on_chart(const Vec& x, double tol) const {
  if (x.size() != ambient_dim())
    throw ConstraintViolation(name + ": wrong coordinate count");
  if (max_constraint_violation(x) > tol)
    throw ConstraintViolation(name + ": point violates chart constraint");
}

void ChartForm::fd_validate(Rng& rng, int points, double tol) const {
  const double h = 1e-5;
  for (int p = 0; p < points; ++p) {
    Vec x = sample(rng);
    Mat exact = coefficient_jacobian(x);
    for (int j = 0; j < ambient_dim(); ++j) {
      Vec xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      Vec fd = (coefficients(xp) - coefficients(xm)) / (2 * h);
      for (int i = 0; i < ambient_dim(); ++i)
        if (std::abs(fd[i] - exact(i, j)) > tol * (1 + std::abs(exact(i, j))))
          throw std::logic_error(name + ": coefficient partial (" + std::to_string(i) +
                                 "," + std::to_string(j) + ") disagrees with finite differences");
    }
  }
}

namespace {

Eigen::Vector2d rotate90(const Eigen::Vector2d& v) { return {-v[1], v[0]}; }

Vec sphere_dir2(Rng& rng) {
  // Uniform on S^2: cos(polar) uniform, azimuth uniform.
  double u = rng.uniform(-1.0, 1.0);
  double psi = rng.uniform(0.0, 2 * M_PI);
  double r = std::sqrt(std::max(0.0, 1 - u * u));
  Vec out(3);
  out << u, r * std::cos(psi), r * std::sin(psi);
  return out;
}

Vec sphere_dir3(Rng& rng) {
  // Uniform on S^3 by rejection from the 4-cube.
  for (;;) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = rng.uniform(-1.0, 1.0);
    double n = v.norm();
    if (n > 0.2 && n <= 1.0) return v / n;
  }
}

ChartForm chart_lambda_eu(const ChartParams& params) {
  ChartForm c;
  c.name = "lambda_eu";
  c.coordinates = {"t", "z1", "z2", "tau", "eta1", "eta2"};
  c.params = params;
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.constraints.push_back(
      {[](const Vec& x) { return x[3] * x[3] + x[4] * x[4] + x[5] * x[5] - 1; },
       [](const Vec& x) {
         Vec g = Vec::Zero(6);
         g[3] = 2 * x[3];
         g[4] = 2 * x[4];
         g[5] = 2 * x[5];
         return g;
       }});
  c.coefficients = [](const Vec& x) {
    Vec a = Vec::Zero(6);
    a[0] = -x[3];
    a[1] = -x[4];
    a[2] = -x[5];
    return a;
  };
  c.coefficient_jacobian = [](const Vec&) {
    Mat j = Mat::Zero(6, 6);
    j(0, 3) = -1;
    j(1, 4) = -1;
    j(2, 5) = -1;
    return j;
  };
  c.sample = [](Rng& rng) {
    Vec x(6);
    x[0] = rng.uniform();
    x[1] = rng.uniform(-1.0, 1.0);
    x[2] = rng.uniform(-1.0, 1.0);
    x.segment<3>(3) = sphere_dir2(rng);
    return x;
  };
  c.closed_reeb = [](const Vec& x) {
    Vec r = Vec::Zero(6);
    r[0] = -x[3];
    r[1] = -x[4];
    r[2] = -x[5];
    return r;
  };
  return c;
}

ChartForm chart_handle(const ChartParams& params) {
  const double eps = params.eps;
  ChartForm c;
  c.name = "handle";
  c.coordinates = {"s", "x1", "x2", "y1", "y2"};
  c.params = params;
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.coefficients = [eps](const Vec& x) {
    Vec a = Vec::Zero(5);
    a[0] = 1 + eps * (x[1] * x[3] + x[2] * x[4]);
    a[1] = -x[3];
    a[2] = -x[4];
    return a;
  };
  c.coefficient_jacobian = [eps](const Vec& x) {
    Mat j = Mat::Zero(5, 5);
    j(0, 1) = eps * x[3];
    j(0, 2) = eps * x[4];
    j(0, 3) = eps * x[1];
    j(0, 4) = eps * x[2];
    j(1, 3) = -1;
    j(2, 4) = -1;
    return j;
  };
  c.sample = [](Rng& rng) {
    Vec x(5);
    x[0] = rng.uniform();
    for (int i = 1; i < 5; ++i) x[i] = rng.uniform(-1.0, 1.0);
    return x;
  };
  c.closed_reeb = [eps](const Vec& x) {
    Vec r = Vec::Zero(5);
    r[0] = 1;
    r[1] = eps * x[1];
    r[2] = eps * x[2];
    r[3] = -eps * x[3];
    r[4] = -eps * x[4];
    return r;
  };
  return c;
}

S1xWData lambda_eps_s1xw_data(double eps) {
  S1xWData d;
  d.w_dim = 4;  // (q1, q2, p1, p2)
  d.dbeta = Mat::Zero(4, 4);
  d.dbeta(0, 2) = 2;
  d.dbeta(2, 0) = -2;
  d.dbeta(1, 3) = 2;
  d.dbeta(3, 1) = -2;
  d.beta = [](const Vec& w) {
    Vec b = Vec::Zero(4);
    b[0] = -2 * w[2];
    b[1] = -2 * w[3];
    return b;
  };
  d.phi = [eps](const Vec& w) { return 1 + 2 * eps * (w[0] * w[2] + w[1] * w[3]); };
  d.grad_phi = [eps](const Vec& w) {
    Vec g(4);
    g << 2 * eps * w[2], 2 * eps * w[3], 2 * eps * w[0], 2 * eps * w[1];
    return g;
  };
  d.f = [](const Vec& w) { return 1 - (w[2] * w[2] + w[3] * w[3]); };
  d.grad_f = [](const Vec& w) {
    Vec g(4);
    g << 0, 0, -2 * w[2], -2 * w[3];
    return g;
  };
  return d;
}

ChartForm chart_lambda_eps(const ChartParams& params) {
  const double eps = params.eps;
  ChartForm c;
  c.name = "lambda_eps";
  c.coordinates = {"s", "q1", "q2", "p1", "p2"};
  c.params = params;
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.coefficients = [eps](const Vec& x) {
    double chi = x[1] * x[3] + x[2] * x[4];
    double r = x[3] * x[3] + x[4] * x[4];
    double phi = 1 + 2 * eps * chi;
    Vec a = Vec::Zero(5);
    a[0] = phi * (1 - r);
    a[1] = -2 * phi * x[3];
    a[2] = -2 * phi * x[4];
    return a;
  };
  c.coefficient_jacobian = [eps](const Vec& x) {
    double q[2] = {x[1], x[2]}, p[2] = {x[3], x[4]};
    double chi = q[0] * p[0] + q[1] * p[1];
    double r = p[0] * p[0] + p[1] * p[1];
    double phi = 1 + 2 * eps * chi;
    Mat j = Mat::Zero(5, 5);
    for (int k = 0; k < 2; ++k) {
      j(0, 1 + k) = 2 * eps * p[k] * (1 - r);              // da_s/dq_k
      j(0, 3 + k) = 2 * eps * q[k] * (1 - r) - 2 * phi * p[k];  // da_s/dp_k
      for (int i = 0; i < 2; ++i) {
        j(1 + i, 1 + k) = -4 * eps * p[k] * p[i];          // da_qi/dq_k
        j(1 + i, 3 + k) = -4 * eps * q[k] * p[i] - (i == k ? 2 * phi : 0);
      }
    }
    return j;
  };
  c.sample = [](Rng& rng) {
    Vec x(5);
    x[0] = rng.uniform();
    for (int i = 1; i < 5; ++i) x[i] = rng.uniform(-1.0, 1.0);
    return x;
  };
  c.closed_reeb = [eps](const Vec& x) { return reeb_closed_form_S1xW(lambda_eps_s1xw_data(eps), x); };
  return c;
}

ChartForm chart_highdim_eps(const ChartParams& params) {
  const double eps = params.eps;
  ChartForm c;
  c.name = "highdim_eps";
  c.coordinates = {"a", "z1", "z2", "z3", "alpha", "eta1", "eta2", "eta3"};
  c.params = params;
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.constraints.push_back(
      {[](const Vec& x) { return x.segment<4>(4).squaredNorm() - 1; },
       [](const Vec& x) {
         Vec g = Vec::Zero(8);
         g.segment<4>(4) = 2 * x.segment<4>(4);
         return g;
       }});
  c.coefficients = [eps](const Vec& x) {
    double chi = x.segment<3>(1).dot(x.segment<3>(5));
    double f = 1 + eps * chi;
    Vec a = Vec::Zero(8);
    a[0] = f * x[4];
    a.segment<3>(1) = f * x.segment<3>(5);
    return a;
  };
  c.coefficient_jacobian = [eps](const Vec& x) {
    Eigen::Vector3d z = x.segment<3>(1), eta = x.segment<3>(5);
    double alpha = x[4];
    double f = 1 + eps * z.dot(eta);
    Mat j = Mat::Zero(8, 8);
    j(0, 4) = f;
    for (int k = 0; k < 3; ++k) {
      j(0, 1 + k) = eps * eta[k] * alpha;
      j(0, 5 + k) = eps * z[k] * alpha;
      for (int i = 0; i < 3; ++i) {
        j(1 + i, 1 + k) = eps * eta[k] * eta[i];
        j(1 + i, 5 + k) = eps * z[k] * eta[i] + (i == k ? f : 0);
      }
    }
    return j;
  };
  c.sample = [](Rng& rng) {
    Vec x(8);
    x[0] = rng.uniform();
    for (int i = 1; i < 4; ++i) x[i] = rng.uniform(-1.0, 1.0);
    x.segment<4>(4) = sphere_dir3(rng);
    return x;
  };
  c.closed_reeb = [eps](const Vec& x) {
    Eigen::Vector3d z = x.segment<3>(1), eta = x.segment<3>(5);
    double alpha = x[4];
    double chi = z.dot(eta);
    double f = 1 + eps * chi;
    Vec r0 = Vec::Zero(8);
    r0[0] = alpha;
    r0.segment<3>(1) = eta;
    Vec w = Vec::Zero(8);
    w[0] = -chi * alpha;
    w.segment<3>(1) = z - chi * eta;
    w[4] = eta.squaredNorm() * alpha;
    w.segment<3>(5) = -alpha * alpha * eta;
    return Vec((f * r0 + eps * w) / (f * f));
  };
  return c;
}

ChartForm chart_jet_s2(const ChartParams& params) {
  ChartForm c;
  c.name = "jet_s2";
  c.coordinates = {"s", "q1", "q2", "q3", "p1", "p2", "p3"};
  c.params = params;
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.constraints.push_back({[](const Vec& x) { return x.segment<3>(1).squaredNorm() - 1; },
                           [](const Vec& x) {
                             Vec g = Vec::Zero(7);
                             g.segment<3>(1) = 2 * x.segment<3>(1);
                             return g;
                           }});
  c.constraints.push_back({[](const Vec& x) { return x.segment<3>(1).dot(x.segment<3>(4)); },
                           [](const Vec& x) {
                             Vec g = Vec::Zero(7);
                             g.segment<3>(1) = x.segment<3>(4);
                             g.segment<3>(4) = x.segment<3>(1);
                             return g;
                           }});
  c.coefficients = [](const Vec& x) {
    Vec a = Vec::Zero(7);
    a[0] = 1;
    a.segment<3>(1) = -x.segment<3>(4);
    return a;
  };
  c.coefficient_jacobian = [](const Vec&) {
    Mat j = Mat::Zero(7, 7);
    j(1, 4) = -1;
    j(2, 5) = -1;
    j(3, 6) = -1;
    return j;
  };
  c.sample = [](Rng& rng) {
    Vec x(7);
    x[0] = rng.uniform();
    Eigen::Vector3d q = sphere_dir2(rng);
    Eigen::Vector3d raw;
    raw << rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0);
    Eigen::Vector3d p = raw - raw.dot(q) * q;
    x.segment<3>(1) = q;
    x.segment<3>(4) = p;
    return x;
  };
  c.closed_reeb = [](const Vec&) {
    Vec r = Vec::Zero(7);
    r[0] = 1;
    return r;
  };
  return c;
}

}  // namespace

ChartForm make_chart(const std::string& name, const ChartParams& params) {
  ChartForm c;
  if (name == "lambda_eu") {
    c = chart_lambda_eu(params);
  } else if (name == "lambda_eps") {
    c = chart_lambda_eps(params);
  } else if (name == "handle") {
    c = chart_handle(params);
  } else if (name == "highdim_eps") {
    c = chart_highdim_eps(params);
  } else if (name == "jet_s2") {
    c = chart_jet_s2(params);
  } else {
    throw std::invalid_argument("unknown chart: " + name);
  }
  Rng rng(0x9e3779b9);
  c.fd_validate(rng);
  return c;
}

std::vector<std::string> chart_names() {
  return {"lambda_eu", "lambda_eps", "handle", "highdim_eps", "jet_s2"};
}

ChartForm make_degenerate_chart() {
  ChartForm c;
  c.name = "ds_degenerate";
  c.coordinates = {"s", "x1", "x2", "x3", "x4"};
  c.box = {{0, 1}, {-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}};
  c.coefficients = [](const Vec&) {
    Vec a = Vec::Zero(5);
    a[0] = 1;
    return a;
  };
  c.coefficient_jacobian = [](const Vec&) { return Mat::Zero(5, 5); };
  c.sample = [](Rng& rng) {
    Vec x(5);
    x[0] = rng.uniform();
    for (int i = 1; i < 5; ++i) x[i] = rng.uniform(-1.0, 1.0);
    return x;
  };
  return c;
}

namespace {

double pfaffian(const Mat& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1;
  if (n % 2 == 1) return 0;
  if (n == 2) return a(0, 1);
  double sum = 0;
  for (int j = 1; j < n; ++j) {
    if (a(0, j) == 0) continue;
    Mat minor(n - 2, n - 2);
    int r = 0;
    for (int i = 1; i < n; ++i) {
      if (i == j) continue;
      int c = 0;
      for (int k = 1; k < n; ++k) {
        if (k == j) continue;
        minor(r, c++) = a(i, k);
      }
      ++r;
    }
    sum += (j % 2 == 1 ? 1.0 : -1.0) * a(0, j) * pfaffian(minor);
  }
  return sum;
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double form_on_frame(const ChartForm& chart, const Vec& x, const Mat& frame) {
  const int d = static_cast<int>(frame.cols());
  if (d % 2 == 0) throw std::invalid_argument("need an odd-dimensional frame");
  const int half = (d - 1) / 2;
  Vec lam(d);
  for (int i = 0; i < d; ++i) lam[i] = chart.lambda_on(x, frame.col(i));
  Mat omega(d, d);
  for (int i = 0; i < d; ++i) {
    omega(i, i) = 0;
    for (int j = i + 1; j < d; ++j) {
      omega(i, j) = chart.dlambda_on(x, frame.col(i), frame.col(j));
      omega(j, i) = -omega(i, j);
    }
  }
  double total = 0;
  for (int i = 0; i < d; ++i) {
    if (lam[i] == 0) continue;
    Mat minor(d - 1, d - 1);
    int r = 0;
    for (int a = 0; a < d; ++a) {
      if (a == i) continue;
      int c = 0;
      for (int b = 0; b < d; ++b) {
        if (b == i) continue;
        minor(r, c++) = omega(a, b);
      }
      ++r;
    }
    total += (i % 2 == 0 ? 1.0 : -1.0) * lam[i] * pfaffian(minor);
  }
  return factorial(half) * total;
}

ContactReport contact_check(const ChartForm& chart, const std::vector<Vec>& grid) {
  ContactReport report;
  double sign = 0;
  bool first = true;
  for (const Vec& x : grid) {
    double value = form_on_frame(chart, x, chart.tangent_frame(x));
    if (first) {
      sign = value >= 0 ? 1.0 : -1.0;
      report.min_value = report.max_value = sign * value;
      first = false;
    } else {
      double v = sign * value;
      report.min_value = std::min(report.min_value, v);
      report.max_value = std::max(report.max_value, v);
      if (v < 0) report.sign_consistent = false;
    }
    ++report.points;
  }
  return report;
}

double suture_frame_value(const ChartForm& chart, const Vec& x) {
  Eigen::Vector2d q(x[1], x[2]), p(x[3], x[4]);
  Eigen::Vector2d iq = rotate90(q), ip = rotate90(p);
  Mat frame = Mat::Zero(5, 3);
  frame(0, 0) = 1;                 // d_s
  frame.block<2, 1>(3, 1) = iq;    // V = iq d_p
  frame.block<2, 1>(1, 2) = iq;    // W = iq d_q + ip d_p
  frame.block<2, 1>(3, 2) = ip;
  return form_on_frame(chart, x, frame);
}

}  // namespace knotinv::geomforms
