#include "nahmrat/realflow.hpp"

#include <cmath>
#include <stdexcept>

#include "nahmrat/rng.hpp"

namespace nahmrat {
namespace realflow {

namespace {

using cd = std::complex<double>;

double fro(const CMat& m) { return m.norm(); }

CMat herm(const CMat& m) { return 0.5 * (m + m.adjoint()); }

void check_grid(int nodes) {
  if (nodes < 2) throw std::invalid_argument("realflow: need at least two nodes");
}

// Derivative stencil at node i as (node, coefficient/dt) pairs: central in
// the interior, 6th-order one-sided at the ends (keeps the discrete solution
// within ~dt^5 of the smooth one near the boundary).
constexpr int kEndStencil = 6;

std::vector<std::pair<int, double>> dstencil(int i, int G, double dt) {
  static const double end[7] = {-49.0 / 20, 6.0, -15.0 / 2, 20.0 / 3, -15.0 / 4, 6.0 / 5,
                                -1.0 / 6};
  if (i == 0) {
    std::vector<std::pair<int, double>> s;
    for (int t = 0; t <= kEndStencil; ++t) s.emplace_back(t, end[t] / dt);
    return s;
  }
  if (i == G) {
    std::vector<std::pair<int, double>> s;
    for (int t = 0; t <= kEndStencil; ++t) s.emplace_back(G - t, -end[t] / dt);
    return s;
  }
  return {{i - 1, -1.0 / (2 * dt)}, {i + 1, 1.0 / (2 * dt)}};
}

}  // namespace

ComplexPairPath nahm_to_complex_pair(const std::vector<CMat>& t0, const std::vector<CMat>& t1,
                                     const std::vector<CMat>& t2, const std::vector<CMat>& t3,
                                     double length) {
  size_t nodes = t0.size();
  if (t1.size() != nodes || t2.size() != nodes || t3.size() != nodes || nodes < 2)
    throw std::invalid_argument("nahm_to_complex_pair: inconsistent node counts");
  ComplexPairPath p;
  p.length = length;
  for (size_t i = 0; i < nodes; ++i) {
    for (const auto* t : {&t0[i], &t1[i], &t2[i], &t3[i]})
      if (fro(*t + t->adjoint()) > 1e-10)
        throw std::invalid_argument("nahm_to_complex_pair: input is not skew-adjoint");
    p.alpha.push_back(0.5 * (t0[i] + cd(0, 1) * t1[i]));
    p.beta.push_back(0.5 * (t2[i] + cd(0, 1) * t3[i]));
  }
  return p;
}

void complex_pair_to_nahm(const ComplexPairPath& p, std::vector<CMat>& t0, std::vector<CMat>& t1,
                          std::vector<CMat>& t2, std::vector<CMat>& t3) {
  t0.clear();
  t1.clear();
  t2.clear();
  t3.clear();
  for (size_t i = 0; i < p.alpha.size(); ++i) {
    t0.push_back(p.alpha[i] - p.alpha[i].adjoint());
    t1.push_back(cd(0, -1) * (p.alpha[i] + p.alpha[i].adjoint()));
    t2.push_back(p.beta[i] - p.beta[i].adjoint());
    t3.push_back(cd(0, -1) * (p.beta[i] + p.beta[i].adjoint()));
  }
}

std::vector<CMat> residual_F(const ComplexPairPath& p) {
  const int G = p.grid();
  check_grid(G + 1);
  const double dt = p.dt();
  std::vector<CMat> x(static_cast<size_t>(G) + 1);
  for (int i = 0; i <= G; ++i) x[static_cast<size_t>(i)] = p.alpha[static_cast<size_t>(i)] + p.alpha[static_cast<size_t>(i)].adjoint();
  std::vector<CMat> r;
  r.reserve(static_cast<size_t>(G) - 1);
  for (int i = 1; i < G; ++i) {
    CMat xdot = (x[static_cast<size_t>(i) + 1] - x[static_cast<size_t>(i) - 1]) / (2 * dt);
    const CMat& a = p.alpha[static_cast<size_t>(i)];
    const CMat& b = p.beta[static_cast<size_t>(i)];
    r.push_back(xdot + 2.0 * ((a * a.adjoint() - a.adjoint() * a) + (b * b.adjoint() - b.adjoint() * b)));
  }
  return r;
}

std::vector<CMat> complex_residual(const ComplexPairPath& p) {
  const int G = p.grid();
  const double dt = p.dt();
  std::vector<CMat> r;
  for (int i = 1; i < G; ++i) {
    CMat bdot = (p.beta[static_cast<size_t>(i) + 1] - p.beta[static_cast<size_t>(i) - 1]) / (2 * dt);
    const CMat& a = p.alpha[static_cast<size_t>(i)];
    const CMat& b = p.beta[static_cast<size_t>(i)];
    r.push_back(bdot + 2.0 * (a * b - b * a));
  }
  return r;
}

double sup_frobenius(const std::vector<CMat>& mats) {
  double s = 0;
  for (const auto& m : mats) s = std::max(s, fro(m));
  return s;
}

bool is_positive_definite(const CMat& h) {
  if (fro(h - h.adjoint()) > 1e-9 * std::max(1.0, fro(h))) return false;
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  return es.eigenvalues().minCoeff() > 0;
}

CMat sqrt_pd(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.eigenvalues().minCoeff() <= 0)
    throw std::domain_error("sqrt_pd: matrix is not positive definite");
  Eigen::VectorXd s = es.eigenvalues().cwiseSqrt();
  return es.eigenvectors() * s.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexPairPath pair_from_g(const std::vector<CMat>& g, const CMat& beta0, double length) {
  const int G = static_cast<int>(g.size()) - 1;
  check_grid(G + 1);
  if (G < kEndStencil) throw std::invalid_argument("pair_from_g: too few nodes");
  const double dt = length / G;
  ComplexPairPath p;
  p.length = length;
  p.alpha.resize(static_cast<size_t>(G) + 1);
  p.beta.resize(static_cast<size_t>(G) + 1);
  std::vector<CMat> ginv(static_cast<size_t>(G) + 1);
  for (int i = 0; i <= G; ++i) {
    Eigen::FullPivLU<CMat> lu(g[static_cast<size_t>(i)]);
    if (!lu.isInvertible()) throw std::domain_error("pair_from_g: singular g node");
    ginv[static_cast<size_t>(i)] = lu.inverse();
  }
  for (int i = 0; i <= G; ++i) {
    CMat gdot = CMat::Zero(g[0].rows(), g[0].cols());
    for (auto [node, c] : dstencil(i, G, dt)) gdot += c * g[static_cast<size_t>(node)];
    p.alpha[static_cast<size_t>(i)] = -0.5 * gdot * ginv[static_cast<size_t>(i)];
    p.beta[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] * beta0 * ginv[static_cast<size_t>(i)];
  }
  return p;
}

ComplexPairPath pair_from_h(const HPath& h, const CMat& beta0) {
  std::vector<CMat> g;
  g.reserve(h.h.size());
  for (const auto& hi : h.h) g.push_back(sqrt_pd(hi));
  return pair_from_g(g, beta0, h.length);
}

double energy_of_h(const HPath& hp, const CMat& beta0) {
  const int G = hp.grid();
  check_grid(G + 1);
  const double dt = hp.dt();
  double e = 0;
  for (int i = 0; i < G; ++i) {
    CMat hbar = 0.5 * (hp.h[static_cast<size_t>(i)] + hp.h[static_cast<size_t>(i) + 1]);
    CMat hdot = (hp.h[static_cast<size_t>(i) + 1] - hp.h[static_cast<size_t>(i)]) / dt;
    Eigen::FullPivLU<CMat> lu(hbar);
    if (!lu.isInvertible()) throw std::domain_error("energy_of_h: singular midpoint");
    CMat hinv = lu.inverse();
    CMat k = hinv * hdot;
    e += dt * (0.25 * (k * k).trace().real() +
               2.0 * (beta0.adjoint() * hbar * beta0 * hinv).trace().real());
  }
  return e;
}

double donaldson_energy(const std::vector<CMat>& g, const CMat& beta0, double length) {
  HPath hp;
  hp.length = length;
  for (const auto& gi : g) {
    Eigen::FullPivLU<CMat> lu(gi);
    if (!lu.isInvertible()) throw std::domain_error("donaldson_energy: singular g node");
    hp.h.push_back(gi.adjoint() * gi);
  }
  return energy_of_h(hp, beta0);
}

std::vector<CMat> energy_gradient(const HPath& hp, const CMat& beta0) {
  const int G = hp.grid();
  const double dt = hp.dt();
  // Per-interval pieces: q = 1/2 hbar^{-1} hdot hbar^{-1} and
  // Gq = -1/2 (hbar^{-1} hdot)^2 hbar^{-1} + 2(beta0 hbar^{-1} beta0*
  //      - hbar^{-1} beta0* hbar beta0 hbar^{-1}).
  std::vector<CMat> q(static_cast<size_t>(G)), gq(static_cast<size_t>(G));
  for (int i = 0; i < G; ++i) {
    CMat hbar = 0.5 * (hp.h[static_cast<size_t>(i)] + hp.h[static_cast<size_t>(i) + 1]);
    CMat hdot = (hp.h[static_cast<size_t>(i) + 1] - hp.h[static_cast<size_t>(i)]) / dt;
    CMat hinv = hbar.fullPivLu().inverse();
    q[static_cast<size_t>(i)] = 0.5 * hinv * hdot * hinv;
    gq[static_cast<size_t>(i)] = -0.5 * hinv * hdot * hinv * hdot * hinv +
                                 2.0 * (beta0 * hinv * beta0.adjoint() -
                                        hinv * beta0.adjoint() * hbar * beta0 * hinv);
  }
  std::vector<CMat> grad;
  grad.reserve(static_cast<size_t>(G) - 1);
  for (int j = 1; j < G; ++j) {
    CMat g = 0.5 * dt * (gq[static_cast<size_t>(j) - 1] + gq[static_cast<size_t>(j)]) +
             (q[static_cast<size_t>(j) - 1] - q[static_cast<size_t>(j)]);
    grad.push_back(herm(g));
  }
  return grad;
}

double phi(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  if (es.eigenvalues().minCoeff() <= 0) throw std::domain_error("phi: input not positive definite");
  return std::log(es.eigenvalues().maxCoeff());
}

namespace {

// Hermitian matrix <-> real coordinates (diagonal, then re/im of the upper
// triangle).
int herm_dim(int m) { return m * m; }

void herm_pack(const CMat& h, double* out) {
  int m = static_cast<int>(h.rows());
  int idx = 0;
  for (int i = 0; i < m; ++i) out[idx++] = h(i, i).real();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      out[idx++] = h(i, j).real();
      out[idx++] = h(i, j).imag();
    }
}

CMat herm_unpack(const double* in, int m) {
  CMat h = CMat::Zero(m, m);
  int idx = 0;
  for (int i = 0; i < m; ++i) h(i, i) = in[idx++];
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double re = in[idx++], im = in[idx++];
      h(i, j) = cd(re, im);
      h(j, i) = cd(re, -im);
    }
  return h;
}

CMat herm_basis(int m, int p) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(herm_dim(m));
  e(p) = 1.0;
  return herm_unpack(e.data(), m);
}

// d(sqrt(h))[dh] via the Sylvester identity g dX + dX g = dh, solved in the
// eigenbasis of g.
CMat sqrt_derivative(const Eigen::SelfAdjointEigenSolver<CMat>& es, const CMat& dh) {
  const auto& v = es.eigenvectors();
  Eigen::VectorXd s = es.eigenvalues().cwiseSqrt();
  CMat w = v.adjoint() * dh * v;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j) w(i, j) /= (s(i) + s(j));
  return v * w * v.adjoint();
}

// Cached per-node state for the residual and its analytic directional
// derivatives.
struct ResidState {
  int G = 0, m = 0;
  double dt = 0, length = 0;
  CMat beta0;
  std::vector<Eigen::SelfAdjointEigenSolver<CMat>> es;  // of h nodes
  std::vector<CMat> g, ginv, gdot, alpha, beta, x;
  std::vector<CMat> r;  // interior nodes 1..G-1

  void build(const HPath& hp, const CMat& b0) {
    G = hp.grid();
    m = static_cast<int>(b0.rows());
    dt = hp.dt();
    length = hp.length;
    beta0 = b0;
    es.resize(static_cast<size_t>(G) + 1);
    g.resize(static_cast<size_t>(G) + 1);
    ginv.resize(static_cast<size_t>(G) + 1);
    gdot.resize(static_cast<size_t>(G) + 1);
    alpha.resize(static_cast<size_t>(G) + 1);
    beta.resize(static_cast<size_t>(G) + 1);
    x.resize(static_cast<size_t>(G) + 1);
    for (int i = 0; i <= G; ++i) {
      es[static_cast<size_t>(i)].compute(hp.h[static_cast<size_t>(i)]);
      if (es[static_cast<size_t>(i)].eigenvalues().minCoeff() <= 0)
        throw std::domain_error("solve_real_bvp: path left the positive cone");
      Eigen::VectorXd s = es[static_cast<size_t>(i)].eigenvalues().cwiseSqrt();
      const auto& v = es[static_cast<size_t>(i)].eigenvectors();
      g[static_cast<size_t>(i)] = v * s.asDiagonal() * v.adjoint();
      ginv[static_cast<size_t>(i)] = v * s.cwiseInverse().asDiagonal() * v.adjoint();
    }
    for (int i = 0; i <= G; ++i) {
      CMat d = CMat::Zero(m, m);
      for (auto [node, c] : dstencil(i, G, dt)) d += c * g[static_cast<size_t>(node)];
      gdot[static_cast<size_t>(i)] = d;
      alpha[static_cast<size_t>(i)] = -0.5 * d * ginv[static_cast<size_t>(i)];
      beta[static_cast<size_t>(i)] = g[static_cast<size_t>(i)] * beta0 * ginv[static_cast<size_t>(i)];
      x[static_cast<size_t>(i)] = alpha[static_cast<size_t>(i)] + alpha[static_cast<size_t>(i)].adjoint();
    }
    r.assign(static_cast<size_t>(G) - 1, CMat());
    for (int i = 1; i < G; ++i) r[static_cast<size_t>(i) - 1] = resid_at(i);
  }

  CMat resid_at(int i) const {
    CMat xdot = (x[static_cast<size_t>(i) + 1] - x[static_cast<size_t>(i) - 1]) / (2 * dt);
    const CMat& a = alpha[static_cast<size_t>(i)];
    const CMat& b = beta[static_cast<size_t>(i)];
    return xdot + 2.0 * ((a * a.adjoint() - a.adjoint() * a) + (b * b.adjoint() - b.adjoint() * b));
  }

  double sup_resid() const { return sup_frobenius(r); }

  // Analytic directional derivative of the stacked residual for a hermitian
  // perturbation `dir` of node `j`; writes the affected rows into `col`.
  void jacobian_column(int j, const CMat& dir, Eigen::VectorXd& col) const {
    CMat dg = sqrt_derivative(es[static_cast<size_t>(j)], dir);
    // Nodes whose x changes: stencil users of node j plus j itself.
    std::vector<int> xnodes;
    auto add_x = [&](int i) {
      for (int v : xnodes)
        if (v == i) return;
      xnodes.push_back(i);
    };
    if (j - 1 >= 0) add_x(j - 1);
    add_x(j);
    if (j + 1 <= G) add_x(j + 1);
    if (j <= kEndStencil) add_x(0);
    if (j >= G - kEndStencil) add_x(G);

    std::vector<std::pair<int, CMat>> dxs;
    std::vector<std::pair<int, CMat>> dalphas;
    for (int i : xnodes) {
      double sc = 0;  // coefficient of g_j in gdot_i
      for (auto [node, c] : dstencil(i, G, dt))
        if (node == j) sc = c;
      CMat dgdot = sc * dg;
      CMat da;
      if (i == j)
        da = -0.5 * (dgdot * ginv[static_cast<size_t>(i)] -
                     gdot[static_cast<size_t>(i)] * ginv[static_cast<size_t>(i)] * dg * ginv[static_cast<size_t>(i)]);
      else
        da = -0.5 * dgdot * ginv[static_cast<size_t>(i)];
      dalphas.emplace_back(i, da);
      dxs.emplace_back(i, da + da.adjoint());
    }
    auto dx_of = [&](int i) -> const CMat* {
      for (auto& [n, v] : dxs)
        if (n == i) return &v;
      return nullptr;
    };
    auto dalpha_of = [&](int i) -> const CMat* {
      for (auto& [n, v] : dalphas)
        if (n == i) return &v;
      return nullptr;
    };

    std::vector<int> rows;
    for (int i : xnodes)
      for (int cand : {i - 1, i + 1})
        if (cand >= 1 && cand <= G - 1) {
          bool seen = false;
          for (int v : rows) seen = seen || v == cand;
          if (!seen) rows.push_back(cand);
        }
    if (j >= 1 && j <= G - 1) {
      bool seen = false;
      for (int v : rows) seen = seen || v == j;
      if (!seen) rows.push_back(j);
    }

    const int hd = herm_dim(m);
    std::vector<double> packed(static_cast<size_t>(hd));
    for (int i : rows) {
      CMat dr = CMat::Zero(m, m);
      if (const CMat* dxp = dx_of(i + 1)) dr += *dxp / (2 * dt);
      if (const CMat* dxm = dx_of(i - 1)) dr -= *dxm / (2 * dt);
      if (i == j) {
        const CMat& a = alpha[static_cast<size_t>(i)];
        const CMat* dap = dalpha_of(i);
        CMat da = dap ? *dap : CMat::Zero(m, m);
        CMat db = dg * beta0 * ginv[static_cast<size_t>(i)] -
                  g[static_cast<size_t>(i)] * beta0 * ginv[static_cast<size_t>(i)] * dg * ginv[static_cast<size_t>(i)];
        const CMat& b = beta[static_cast<size_t>(i)];
        dr += 2.0 * (da * a.adjoint() + a * da.adjoint() - da.adjoint() * a - a.adjoint() * da);
        dr += 2.0 * (db * b.adjoint() + b * db.adjoint() - db.adjoint() * b - b.adjoint() * db);
      } else if (const CMat* dap = dalpha_of(i)) {
        const CMat& a = alpha[static_cast<size_t>(i)];
        const CMat& da = *dap;
        dr += 2.0 * (da * a.adjoint() + a * da.adjoint() - da.adjoint() * a - a.adjoint() * da);
      }
      herm_pack(herm(dr), packed.data());
      for (int p = 0; p < hd; ++p) col((i - 1) * hd + p) = packed[static_cast<size_t>(p)];
    }
  }
};

HPath geodesic_start(const CMat& h_minus, const CMat& h_plus, int grid, double length) {
  HPath hp;
  hp.length = length;
  CMat rm = sqrt_pd(h_minus);
  CMat rminv = rm.fullPivLu().inverse();
  Eigen::SelfAdjointEigenSolver<CMat> es(herm(rminv * h_plus * rminv));
  Eigen::VectorXd lam = es.eigenvalues();
  for (int i = 0; i <= grid; ++i) {
    double t = static_cast<double>(i) / grid;
    Eigen::VectorXd p = lam.array().pow(t);
    CMat mid = es.eigenvectors() * p.asDiagonal() * es.eigenvectors().adjoint();
    hp.h.push_back(herm(rm * mid * rm));
  }
  hp.h.front() = h_minus;
  hp.h.back() = h_plus;
  return hp;
}

}  // namespace

SolveResult solve_real_bvp(const CMat& beta0, const CMat& h_minus, const CMat& h_plus, int grid,
                           double tol, const SolveOptions& opts) {
  if (grid < 16) throw std::invalid_argument("solve_real_bvp: grid must be >= 16");
  if (tol <= 0) throw std::invalid_argument("solve_real_bvp: tol must be positive");
  if (!is_positive_definite(h_minus) || !is_positive_definite(h_plus))
    throw std::invalid_argument("solve_real_bvp: boundary values must be positive hermitian");
  const int m = static_cast<int>(beta0.rows());
  const int G = grid;
  const int hd = m * m;

  HPath hp = geodesic_start(h_minus, h_plus, G, opts.length);
  if (opts.randomize_start) {
    Rng rng(opts.seed);
    for (int i = 1; i < G; ++i) {
      CMat s = CMat::Zero(m, m);
      for (int a = 0; a < m; ++a) {
        s(a, a) = 2 * rng.real01() - 1;
        for (int b = a + 1; b < m; ++b) {
          s(a, b) = cd(2 * rng.real01() - 1, 2 * rng.real01() - 1);
          s(b, a) = std::conj(s(a, b));
        }
      }
      double env = 0.25 * std::sin(M_PI * i / G);
      Eigen::SelfAdjointEigenSolver<CMat> es(herm(env * s));
      CMat expm = es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
                  es.eigenvectors().adjoint();
      CMat r = sqrt_pd(hp.h[static_cast<size_t>(i)]);
      hp.h[static_cast<size_t>(i)] = herm(r * expm * r);
    }
  }

  SolveResult out;
  ResidState st;
  st.build(hp, beta0);
  double res = st.sup_resid();
  out.residual_history.push_back(res);

  // Phase 1: damped gradient descent on the energy; a step is accepted only
  // if the energy satisfies Armijo decrease and the residual does not grow.
  double step = hp.dt() * hp.dt();
  double energy = energy_of_h(hp, beta0);
  for (int it = 0; it < opts.max_descent_iters && res > tol; ++it) {
    std::vector<CMat> grad = energy_gradient(hp, beta0);
    double gnorm2 = 0;
    for (const auto& gm : grad) gnorm2 += gm.squaredNorm();
    if (gnorm2 < 1e-28) break;
    bool accepted = false;
    while (step > 1e-14) {
      HPath trial = hp;
      for (int i = 1; i < G; ++i)
        trial.h[static_cast<size_t>(i)] = herm(trial.h[static_cast<size_t>(i)] - step * grad[static_cast<size_t>(i) - 1]);
      bool pd = true;
      for (int i = 1; i < G && pd; ++i) pd = is_positive_definite(trial.h[static_cast<size_t>(i)]);
      if (pd) {
        double e_trial = energy_of_h(trial, beta0);
        if (e_trial <= energy - 1e-4 * step * gnorm2) {
          ResidState st_trial;
          st_trial.build(trial, beta0);
          double res_trial = st_trial.sup_resid();
          if (res_trial <= res) {
            hp = std::move(trial);
            st = std::move(st_trial);
            energy = e_trial;
            res = res_trial;
            out.residual_history.push_back(res);
            ++out.descent_steps;
            step *= 1.6;
            accepted = true;
            break;
          }
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;  // the descent stalled, hand over to Newton
  }

  // Phase 2: damped Newton on the discrete residual system; the Jacobian is
  // assembled column by column from analytic directional derivatives (matrix
  // square-root differentials via the Sylvester identity).
  const int dim = (G - 1) * hd;
  Eigen::VectorXd rvec(dim), colbuf(dim);
  Eigen::MatrixXd jac(dim, dim);
  std::vector<double> packed(static_cast<size_t>(hd));
  for (int it = 0; it < opts.max_newton_iters && res > tol * 0.25; ++it) {
    for (int i = 1; i < G; ++i) {
      herm_pack(st.r[static_cast<size_t>(i) - 1], packed.data());
      for (int p = 0; p < hd; ++p) rvec((i - 1) * hd + p) = packed[static_cast<size_t>(p)];
    }
    jac.setZero();
    for (int j = 1; j < G; ++j)
      for (int p = 0; p < hd; ++p) {
        colbuf.setZero();
        st.jacobian_column(j, herm_basis(m, p), colbuf);
        jac.col((j - 1) * hd + p) = colbuf;
      }
    Eigen::VectorXd delta = jac.partialPivLu().solve(-rvec);
    if (!delta.allFinite()) break;
    bool accepted = false;
    for (double s = 1.0; s > 1e-6; s *= 0.5) {
      HPath trial = hp;
      bool pd = true;
      for (int i = 1; i < G; ++i) {
        CMat d = herm_unpack(delta.data() + (i - 1) * hd, m);
        trial.h[static_cast<size_t>(i)] = herm(trial.h[static_cast<size_t>(i)] + s * d);
        pd = pd && is_positive_definite(trial.h[static_cast<size_t>(i)]);
      }
      if (!pd) continue;
      ResidState st_trial;
      st_trial.build(trial, beta0);
      double res_trial = st_trial.sup_resid();
      if (res_trial < res) {
        hp = std::move(trial);
        st = std::move(st_trial);
        res = res_trial;
        out.residual_history.push_back(res);
        ++out.newton_steps;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }

  out.path = hp;
  out.residual = res;
  out.converged = res <= tol;
  return out;
}

ConvexityReport convexity_check(const std::vector<CMat>& g, const CMat& beta0, double length,
                                double tol) {
  const int G = static_cast<int>(g.size()) - 1;
  if (G < kEndStencil) throw std::invalid_argument("convexity_check: too few nodes");
  const double dt = length / G;
  ComplexPairPath pair = pair_from_g(g, beta0, length);
  std::vector<CMat> f = residual_F(pair);
  CMat f0 = 2.0 * (beta0 * beta0.adjoint() - beta0.adjoint() * beta0);
  const double rhs_const = f0.norm();

  std::vector<double> ph(static_cast<size_t>(G) + 1), phinv(static_cast<size_t>(G) + 1);
  for (int i = 0; i <= G; ++i) {
    CMat h = g[static_cast<size_t>(i)].adjoint() * g[static_cast<size_t>(i)];
    Eigen::SelfAdjointEigenSolver<CMat> es(herm(h));
    if (es.eigenvalues().minCoeff() <= 0)
      throw std::domain_error("convexity_check: h not positive definite");
    ph[static_cast<size_t>(i)] = std::log(es.eigenvalues().maxCoeff());
    phinv[static_cast<size_t>(i)] = -std::log(es.eigenvalues().minCoeff());
  }

  ConvexityReport rep;
  const double slack = tol + 10 * dt;
  for (int i = 1; i < G; ++i) {
    // Second-difference lower bound with the sum of the two equation errors
    // on the right (the subtraction printed in some statements of the lemma
    // fails already for scalars; the triangle-inequality form is the one the
    // uniqueness argument uses, where both terms vanish).
    double rhs = -2.0 * (rhs_const + f[static_cast<size_t>(i) - 1].norm());
    for (const auto& curve : {ph, phinv}) {
      double d2 = (curve[static_cast<size_t>(i) + 1] - 2 * curve[static_cast<size_t>(i)] +
                   curve[static_cast<size_t>(i) - 1]) /
                  (dt * dt);
      double margin = d2 - rhs;
      ++rep.checked_nodes;
      if (margin < -slack) {
        ++rep.violations;
        rep.worst_margin = std::min(rep.worst_margin, margin);
      }
    }
  }
  return rep;
}

double uniqueness_check(const CMat& beta0, const CMat& h_minus, const CMat& h_plus, int grid,
                        double tol, std::uint64_t seed1, std::uint64_t seed2, double length) {
  SolveOptions o1, o2;
  o1.length = o2.length = length;
  o1.seed = seed1;
  o2.seed = seed2;
  o1.randomize_start = o2.randomize_start = true;
  SolveResult r1 = solve_real_bvp(beta0, h_minus, h_plus, grid, tol, o1);
  SolveResult r2 = solve_real_bvp(beta0, h_minus, h_plus, grid, tol, o2);
  if (!r1.converged || !r2.converged)
    throw std::runtime_error("uniqueness_check: a solve failed to converge");
  double d = 0;
  for (size_t i = 0; i < r1.path.h.size(); ++i)
    d = std::max(d, (r1.path.h[i] - r2.path.h[i]).norm());
  return d;
}

HPath scalar_closed_form(double h_minus, double h_plus, int grid, double length) {
  if (h_minus <= 0 || h_plus <= 0)
    throw std::invalid_argument("scalar_closed_form: boundary values must be positive");
  HPath hp;
  hp.length = length;
  double a = std::log(h_minus), b = std::log(h_plus);
  for (int i = 0; i <= grid; ++i) {
    double t = static_cast<double>(i) / grid;
    CMat h(1, 1);
    h(0, 0) = std::exp((1 - t) * a + t * b);
    hp.h.push_back(h);
  }
  return hp;
}

}  // namespace realflow
}  // namespace nahmrat
