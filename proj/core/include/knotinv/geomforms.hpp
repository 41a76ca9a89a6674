#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotinv/rng.hpp"

namespace knotinv::geomforms {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct ChartParams {
  double eps = 0.01;
  double delta = 0.04;
  double T = 1.0;
  double C0 = 1.0;
};

struct Constraint {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
};

struct DegenerateAt : std::runtime_error {
  explicit DegenerateAt(const std::string& what) : std::runtime_error(what) {}
};
struct SingularDenominator : std::runtime_error {
  explicit SingularDenominator(const std::string& what) : std::runtime_error(what) {}
};
struct PoleExcluded : std::runtime_error {
  explicit PoleExcluded(const std::string& what) : std::runtime_error(what) {}
};
struct ConstraintViolation : std::runtime_error {
  explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};
struct NoRootInBracket : std::runtime_error {
  explicit NoRootInBracket(const std::string& what) : std::runtime_error(what) {}
};

// A named coordinate chart carrying a contact 1-form. Coefficients come with
// exact partial derivatives; a finite-difference sweep cross-validates them
// when the chart is built. Points are ambient coordinate vectors; the
// underlying manifold is the joint zero set of the constraints.
class ChartForm {
public:
  std::string name;
  std::vector<std::string> coordinates;
  std::vector<Constraint> constraints;
  std::function<Vec(const Vec&)> coefficients;          // lambda = sum a_i dx_i
  std::function<Mat(const Vec&)> coefficient_jacobian;  // J(i,j) = da_i/dx_j
  std::vector<std::pair<double, double>> box;
  std::function<Vec(Rng&)> sample;                     // constraint-satisfying point
  std::function<Vec(const Vec&)> closed_reeb;          // exact Reeb field, if known
  ChartParams params;

  int ambient_dim() const { return static_cast<int>(coordinates.size()); }
  int tangent_dim() const { return ambient_dim() - static_cast<int>(constraints.size()); }

  double lambda_on(const Vec& x, const Vec& v) const { return coefficients(x).dot(v); }
  double dlambda_on(const Vec& x, const Vec& u, const Vec& v) const;

  // Orthonormal basis of the constraint tangent space, deterministic in x.
  // Columns annihilate every constraint gradient to 1e-10.
  Mat tangent_frame(const Vec& x) const;

  double max_constraint_violation(const Vec& x) const;
  void check_on_chart(const Vec& x, double tol = 1e-9) const;

  // Central finite differences (h = 1e-5) against the exact Jacobian at a few
  // sampled points; throws std::logic_error on disagreement.
  void fd_validate(Rng& rng, int points = 5, double tol = 2e-5) const;
};

// Registry of the paper's charts: "lambda_eu", "lambda_eps", "handle",
// "highdim_eps", "jet_s2".
ChartForm make_chart(const std::string& name, const ChartParams& params = {});
std::vector<std::string> chart_names();

// Synthetic rank-deficient form (lambda = ds on a 5-box); not a contact form.
ChartForm make_degenerate_chart();

// ---- Reeb fields ----------------------------------------------------------

struct ReebResult {
  Vec vector;
  double lambda_residual = 0;       // |lambda(R) - 1|
  double dlambda_residual = 0;      // max_i |dlambda(R, frame_i)|
};

// Solves dlambda(R, v_i) = 0 over a tangent frame together with
// lambda(R) = 1. Throws DegenerateAt when the system is singular.
ReebResult reeb_numeric(const ChartForm& chart, const Vec& x, double tol = 1e-9);

// Contact form phi (f ds + beta) on S^1_s x W with a constant symplectic
// form dbeta on W. Supplies the closed-form Reeb field
//   R = phi^-2 [ (phi + dphi(Y))/(f - df(Y)) (d_s + X_f)
//                + df(X_phi)/(f - df(Y)) Y + X_phi ].
struct S1xWData {
  int w_dim = 4;
  Mat dbeta;  // dbeta(u, v) = u^T B v, antisymmetric
  std::function<Vec(const Vec&)> beta;      // coefficients of beta on W
  std::function<double(const Vec&)> phi, f;
  std::function<Vec(const Vec&)> grad_phi, grad_f;
};

// Point layout: (s, w); returns the ambient Reeb vector (1 + w_dim entries).
Vec reeb_closed_form_S1xW(const S1xWData& data, const Vec& point);

// ---- Contact condition ------------------------------------------------------

struct ContactReport {
  double min_value = 0;   // min over the grid of the orientation-anchored value
  double max_value = 0;
  bool sign_consistent = true;
  std::size_t points = 0;
};

// Evaluates lambda ^ (dlambda)^n on a positively oriented orthonormal tangent
// frame at each point. The orientation is anchored so the first point's value
// is nonnegative; a contact form yields min_value > 0.
ContactReport contact_check(const ChartForm& chart, const std::vector<Vec>& grid);

// lambda ^ (dlambda)^k evaluated on an explicitly supplied frame of 2k+1
// vectors (used for suture-submanifold contact checks).
double form_on_frame(const ChartForm& chart, const Vec& x, const Mat& frame);

// Frame (d_s, iq d_p, iq d_q + ip d_p) spanning the suture candidate
// {q^2 = delta, p.q = 0} in the stereographic chart; the associated
// lambda ^ dlambda value is -2(p^2 q^2 + q^2) for the eps = 0 form.
double suture_frame_value(const ChartForm& chart, const Vec& x);

// ---- Sutures ---------------------------------------------------------------

struct SutureRoots {
  std::vector<double> roots;   // all bracketed roots in [-1, 1]
  double near_zero_root = 0;   // the root of smallest magnitude
  double residual = 0;
};

// Boundary polynomial of the displaced suture, in X = p.q:
//   -4 eps X^2 - X + eps (1 + p^2) delta.
SutureRoots suture_solve_quadratic(double eps, double delta, double p_squared);

// Higher-dimensional boundary polynomial, in X = z.eta:
//   -eps^2 X^3 - eps X^2 + (1 + eps^2 delta) X + eps delta.
SutureRoots suture_solve_cubic(double eps, double delta);

// Generic bracketing bisection on [lo, hi]; residual of each root <= 1e-12.
std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo,
                                  double hi, int subdivisions = 4096);

// ---- Stereographic charts and the 1-jet model ------------------------------

// phi_pm(s, q, p) = (t = s, z = q, tau = +-(1-|p|^2)/(1+|p|^2),
//                    eta = 2p/(1+|p|^2)); q, p in R^2.
Vec stereographic_forward(int direction, const Vec& sqp);
// Inverse; throws PoleExcluded at tau = -direction.
Vec stereographic_inverse(int direction, const Vec& tzte);
// Chart change (s, q, p) -> (s, q, p/|p|^2).
Vec stereographic_transition(const Vec& sqp);
// Pullback of lambda_eu under phi_pm as a covector on (s, q, p); equals
// -+(1-|p|^2)/(1+|p|^2) ds - 2/(1+|p|^2) p.dq.
Vec stereographic_pullback_covector(int direction, const Vec& sqp);

// Unit-bundle model of the jet space: (s, q, p) -> (x = s q + p, v = q),
// |q| = 1, q.p = 0. Throws ConstraintViolation off the jet constraint.
Vec jet_to_unit_bundle(const Vec& sqp);
// Fiber over x: s = x.q, p = x - (x.q) q.
Vec jet_fiber_point(const Eigen::Vector3d& x, const Eigen::Vector3d& q);
// Pullback of v.dx under the map, as a covector on (s, q, p); equals
// ds - p.dq on the jet constraint.
Vec jet_pullback_covector(const Vec& sqp);

// ---- Interpolating contact vector field -------------------------------------

struct LieReport {
  std::size_t points = 0;
  double max_abs_error = 0;  // |FD Lie derivative - factor * lambda| per component
};

// v = q d_q - ((1-p^2)/(1+p^2)) p d_p on the stereographic chart satisfies
// L_v lambda_0 = (2 p^2/(1+p^2)) lambda_0; verified by finite-difference flow
// pullback at the given points.
LieReport interp_vector_check(const std::vector<Vec>& points, double h = 1e-4);

}  // namespace knotinv::geomforms
