#include <cmath>

#include "knotinv/geomforms.hpp"

namespace knotinv::geomforms {

ReebResult reeb_numeric(const ChartForm& chart, const Vec& x, double tol) {
  chart.check_on_chart(x, 1e-12);
  const Mat frame = chart.tangent_frame(x);
  const int d = static_cast<int>(frame.cols());

  // Unknown coefficients c with R = frame * c. Rows: dlambda(R, f_i) = 0 for
  // every frame vector, then lambda(R) = 1.
  Mat a(d + 1, d);
  Vec rhs = Vec::Zero(d + 1);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      a(i, j) = chart.dlambda_on(x, frame.col(j), frame.col(i));
  for (int j = 0; j < d; ++j) a(d, j) = chart.lambda_on(x, frame.col(j));
  rhs[d] = 1;

  Eigen::ColPivHouseholderQR<Mat> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < d) throw DegenerateAt(chart.name + ": Reeb system singular");
  Vec c = qr.solve(rhs);

  ReebResult result;
  result.vector = frame * c;
  result.lambda_residual = std::abs(chart.lambda_on(x, result.vector) - 1);
  for (int i = 0; i < d; ++i)
    result.dlambda_residual = std::max(
        result.dlambda_residual, std::abs(chart.dlambda_on(x, result.vector, frame.col(i))));
  if (result.lambda_residual > tol || result.dlambda_residual > tol)
    throw DegenerateAt(chart.name + ": Reeb residuals exceed tolerance");
  return result;
}

Vec reeb_closed_form_S1xW(const S1xWData& data, const Vec& point) {
  const int m = data.w_dim;
  Vec w = point.tail(m);

  const Mat bt = data.dbeta.transpose();
  Eigen::FullPivLU<Mat> lu(bt);
  if (!lu.isInvertible()) throw SingularDenominator("dbeta is degenerate");

  Vec beta = data.beta(w);
  Vec y = lu.solve(beta);            // Liouville field of beta
  Vec xf = lu.solve(data.grad_f(w));
  Vec xphi = lu.solve(data.grad_phi(w));

  const double phi = data.phi(w);
  const double f = data.f(w);
  const double dphi_y = data.grad_phi(w).dot(y);
  const double df_y = data.grad_f(w).dot(y);
  const double df_xphi = data.grad_f(w).dot(xphi);
  const double denom = f - df_y;
  if (std::abs(denom) < 1e-12) throw SingularDenominator("f - df(Y) vanishes");

  Vec r = Vec::Zero(m + 1);
  r[0] = (phi + dphi_y) / denom;
  Vec wpart = ((phi + dphi_y) / denom) * xf + (df_xphi / denom) * y + xphi;
  r.tail(m) = wpart;
  r /= phi * phi;

  // Normalization cross-check: lambda(R) = phi (f ds + beta)(R) = 1.
  double lam = phi * (f * r[0] + beta.dot(r.tail(m)));
  if (std::abs(lam - 1) > 1e-9)
    throw SingularDenominator("closed-form Reeb fails lambda(R) = 1");
  return r;
}

}  // namespace knotinv::geomforms
