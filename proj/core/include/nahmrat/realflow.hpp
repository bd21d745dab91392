#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace nahmrat {
namespace realflow {

using CMat = Eigen::MatrixXcd;

// Uniform grid t_0..t_G on [0, L] with complex matrix values per node.
struct ComplexPairPath {
  double length = 1.0;
  std::vector<CMat> alpha, beta;
  int grid() const { return static_cast<int>(alpha.size()) - 1; }
  double dt() const { return length / grid(); }
};

// Positive hermitian path; endpoints carry the boundary data.
struct HPath {
  double length = 1.0;
  std::vector<CMat> h;
  int grid() const { return static_cast<int>(h.size()) - 1; }
  double dt() const { return length / grid(); }
};

// alpha = (T0 + i T1)/2, beta = (T2 + i T3)/2.  Inputs must be skew-adjoint
// at every node to within 1e-10 (Frobenius).
ComplexPairPath nahm_to_complex_pair(const std::vector<CMat>& t0, const std::vector<CMat>& t1,
                                     const std::vector<CMat>& t2, const std::vector<CMat>& t3,
                                     double length);
// Inverse of the linear change; exact up to round-off.
void complex_pair_to_nahm(const ComplexPairPath& p, std::vector<CMat>& t0, std::vector<CMat>& t1,
                          std::vector<CMat>& t2, std::vector<CMat>& t3);

// Real-equation residual (d/dt)(alpha + alpha*) + 2([alpha, alpha*] +
// [beta, beta*]) at the interior nodes 1..G-1; derivatives are central
// differences of the node values.
std::vector<CMat> residual_F(const ComplexPairPath& p);
// Complex-equation residual beta' + 2[alpha, beta] at interior nodes.
std::vector<CMat> complex_residual(const ComplexPairPath& p);
double sup_frobenius(const std::vector<CMat>& mats);

// Hermitian square root / logarithm helpers (positive definite input).
CMat sqrt_pd(const CMat& h);
bool is_positive_definite(const CMat& h);

// The pair g.(0, beta0) evaluated on the grid: alpha = -1/2 g' g^{-1}
// (central differences inside, 4th-order one-sided at the ends),
// beta = g beta0 g^{-1}.
ComplexPairPath pair_from_g(const std::vector<CMat>& g, const CMat& beta0, double length);
ComplexPairPath pair_from_h(const HPath& h, const CMat& beta0);

// Energy of g.(0, beta0); depends on g only through h = g* g, so it is
// invariant under pointwise unitary left multiplication up to round-off.
// Discretized per interval with ḣ = (h_{i+1} - h_i)/dt and the midpoint
// average h̄: integrand = 1/4 tr((h̄^{-1} ḣ)^2) + 2 tr(beta0* h̄ beta0 h̄^{-1}).
double donaldson_energy(const std::vector<CMat>& g, const CMat& beta0, double length);
double energy_of_h(const HPath& h, const CMat& beta0);

// Analytic gradient of energy_of_h with respect to the interior h nodes
// (hermitian matrices, one per node 1..G-1).
std::vector<CMat> energy_gradient(const HPath& h, const CMat& beta0);

// log of the largest eigenvalue of a positive definite hermitian matrix.
double phi(const CMat& h);

struct SolveOptions {
  double length = 1.0;
  std::uint64_t seed = 0;
  bool randomize_start = false;  // perturb the geodesic warm start
  int max_descent_iters = 400;
  int max_newton_iters = 40;
};

struct SolveResult {
  HPath path;
  double residual = 0.0;
  bool converged = false;
  std::vector<double> residual_history;  // per accepted step, non-increasing
  int descent_steps = 0;
  int newton_steps = 0;
};

// Minimizes the Donaldson energy over positive hermitian paths with the
// given endpoints (g = h^{1/2} parametrization): damped gradient descent
// with backtracking accepts only steps that do not increase the sup-node
// residual, then a damped Newton polish drives the residual below tol.
SolveResult solve_real_bvp(const CMat& beta0, const CMat& h_minus, const CMat& h_plus, int grid,
                           double tol, const SolveOptions& opts = {});

struct ConvexityReport {
  int checked_nodes = 0;
  int violations = 0;
  double worst_margin = 0.0;  // most negative value of lhs - rhs (0 if none)
  bool pass() const { return violations == 0; }
};

// Discrete check of d^2/dt^2 Phi(h(g)) >= -2(|F(0,beta0)| + |F(g.(0,beta0))|)
// at interior nodes, for both Phi(h) and Phi(h^{-1}); violations beyond
// tol + 10*dt are flagged.  Norms are Frobenius.
ConvexityReport convexity_check(const std::vector<CMat>& g, const CMat& beta0, double length,
                                double tol);

// Solves twice from independently seeded random starts and returns the
// sup-node Frobenius distance between the two h paths.
double uniqueness_check(const CMat& beta0, const CMat& h_minus, const CMat& h_plus, int grid,
                        double tol, std::uint64_t seed1, std::uint64_t seed2, double length = 1.0);

// Closed-form scalar solution h(t) = exp of the linear interpolation of
// log h- and log h+ (all commutators vanish at m = 1).
HPath scalar_closed_form(double h_minus, double h_plus, int grid, double length);

}  // namespace realflow
}  // namespace nahmrat
