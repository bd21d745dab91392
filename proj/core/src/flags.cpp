#include "nahmrat/flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace nahmrat {

int SyzygyTuple::degree() const {
  int d = Poly::neg_inf_degree;
  for (const auto& ti : t) d = std::max(d, ti.degree());
  return d;
}

bool SyzygyTuple::is_zero() const {
  if (!s.is_zero()) return false;
  for (const auto& ti : t)
    if (!ti.is_zero()) return false;
  return true;
}

std::vector<GaussScalar> SyzygyTuple::leading_t_vector() const {
  int d = degree();
  std::vector<GaussScalar> v;
  v.reserve(t.size());
  for (const auto& ti : t) v.push_back(ti.coeff(d));
  return v;
}

bool is_syzygy(const RationalMapData& f, const SyzygyTuple& tuple) {
  if (static_cast<int>(tuple.t.size()) != f.n()) return false;
  Poly acc = tuple.s * f.Q;
  for (int i = 0; i < f.n(); ++i) acc = acc + tuple.t[static_cast<size_t>(i)] * f.P[static_cast<size_t>(i)];
  return acc.is_zero();
}

std::vector<int> flag_degree_vector(const ChargeVector& k) {
  std::vector<int> m(static_cast<size_t>(k.n()));
  int acc = 0;
  for (int i = k.n() - 1; i >= 0; --i) {
    acc += k[i];
    m[static_cast<size_t>(i)] = acc;
  }
  return m;
}

namespace {

// Row space with full reduction; rows are kept in reduced echelon form so
// membership tests and new-vector extraction are deterministic.
class Span {
public:
  explicit Span(int dim) : dim_(dim) {}

  // Reduces v against the span; returns the residual (empty-normalized).
  std::vector<GaussScalar> reduce(std::vector<GaussScalar> v) const {
    for (const auto& row : rows_) {
      const GaussScalar& c = v[static_cast<size_t>(pivot_of(row))];
      if (!c.is_zero()) {
        GaussScalar f = c;
        for (int j = 0; j < dim_; ++j) v[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
      }
    }
    return v;
  }

  // Adds a (nonzero) vector, returns the normalized inserted row.
  std::vector<GaussScalar> add(std::vector<GaussScalar> v) {
    v = reduce(std::move(v));
    int p = first_nonzero(v);
    if (p < 0) throw std::logic_error("Span::add: vector already in span");
    GaussScalar inv = GaussScalar(1) / v[static_cast<size_t>(p)];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_) {
      GaussScalar c = row[static_cast<size_t>(p)];
      if (!c.is_zero())
        for (int j = 0; j < dim_; ++j)
          row[static_cast<size_t>(j)] -= c * v[static_cast<size_t>(j)];
    }
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(),
              [](const auto& a, const auto& b) { return pivot_of(a) < pivot_of(b); });
    return v;
  }

  bool contains(std::vector<GaussScalar> v) const { return first_nonzero(reduce(std::move(v))) < 0; }

private:
  static int first_nonzero(const std::vector<GaussScalar>& v) {
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) return static_cast<int>(j);
    return -1;
  }
  static int pivot_of(const std::vector<GaussScalar>& row) { return first_nonzero(row); }

  int dim_;
  std::vector<std::vector<GaussScalar>> rows_;
};

// Coordinates of degree-d bounded tuples: (s_0..s_{d-1}, t_10..t_1d, ...,
// t_n0..t_nd).
int coord_dim(int n, int d) { return d + n * (d + 1); }

std::vector<GaussScalar> tuple_to_coords(const SyzygyTuple& g, int n, int d) {
  std::vector<GaussScalar> v(static_cast<size_t>(coord_dim(n, d)), GaussScalar(0));
  for (int j = 0; j < d; ++j) v[static_cast<size_t>(j)] = g.s.coeff(j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j)
      v[static_cast<size_t>(d + i * (d + 1) + j)] = g.t[static_cast<size_t>(i)].coeff(j);
  return v;
}

SyzygyTuple coords_to_tuple(const std::vector<GaussScalar>& v, int n, int d) {
  SyzygyTuple g;
  std::vector<GaussScalar> sc(v.begin(), v.begin() + d);
  g.s = Poly(std::move(sc));
  for (int i = 0; i < n; ++i) {
    std::vector<GaussScalar> tc(v.begin() + d + i * (d + 1), v.begin() + d + (i + 1) * (d + 1));
    g.t.emplace_back(std::move(tc));
  }
  return g;
}

SyzygyTuple shift_tuple(const SyzygyTuple& g, int j) {
  SyzygyTuple out;
  out.s = g.s.shifted(j);
  out.t.reserve(g.t.size());
  for (const auto& ti : g.t) out.t.push_back(ti.shifted(j));
  return out;
}

}  // namespace

std::vector<SyzygyTuple> minimal_syzygy_basis(const RationalMapData& f) {
  f.check();
  const int n = f.n(), m = f.m();
  std::vector<SyzygyTuple> gens;
  for (int d = 0; d <= m && static_cast<int>(gens.size()) < n; ++d) {
    const int dim = coord_dim(n, d);
    // Kernel of the evaluation (s, t) -> coefficients of sQ + sum t_i P_i.
    Mat eval(m + d, dim);
    for (int j = 0; j < d; ++j)
      for (int idx = 0; idx <= m; ++idx) eval(j + idx, j) = f.Q.coeff(idx);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= d; ++j)
        for (int idx = 0; idx < m; ++idx)
          eval(j + idx, d + i * (d + 1) + j) = f.P[static_cast<size_t>(i)].coeff(idx);
    std::vector<Mat> kernel = nullspace(eval);

    Span span(dim);
    for (const auto& g : gens)
      for (int j = 0; j + g.degree() <= d; ++j)
        span.add(tuple_to_coords(shift_tuple(g, j), n, d));
    for (const auto& kv : kernel) {
      std::vector<GaussScalar> v(static_cast<size_t>(dim));
      for (int r = 0; r < dim; ++r) v[static_cast<size_t>(r)] = kv(r, 0);
      if (span.contains(v)) continue;
      std::vector<GaussScalar> row = span.add(std::move(v));
      SyzygyTuple g = coords_to_tuple(row, n, d);
      if (g.degree() != d) throw std::logic_error("minimal_syzygy_basis: unexpected degree drop");
      gens.push_back(std::move(g));
      if (static_cast<int>(gens.size()) == n) break;
    }
  }
  if (static_cast<int>(gens.size()) != n)
    throw std::logic_error("minimal_syzygy_basis: fewer than n generators found");
  std::stable_sort(gens.begin(), gens.end(),
                   [](const SyzygyTuple& a, const SyzygyTuple& b) { return a.degree() < b.degree(); });
  return gens;
}

bool reduces_to_zero(const std::vector<SyzygyTuple>& basis, const SyzygyTuple& tuple) {
  if (basis.empty()) return tuple.is_zero();
  const int n = static_cast<int>(basis.front().t.size());
  SyzygyTuple cur = tuple;
  while (!cur.is_zero()) {
    int d = cur.degree();
    if (d == Poly::neg_inf_degree) return false;  // nonzero s with zero t is no syzygy
    // Solve lead(cur) = sum lambda_e lead(e) over basis elements of degree <= d.
    std::vector<int> usable;
    for (size_t e = 0; e < basis.size(); ++e)
      if (basis[e].degree() <= d) usable.push_back(static_cast<int>(e));
    Mat lhs(n, static_cast<int>(usable.size()));
    for (size_t c = 0; c < usable.size(); ++c) {
      auto lv = basis[static_cast<size_t>(usable[c])].leading_t_vector();
      for (int r = 0; r < n; ++r) lhs(r, static_cast<int>(c)) = lv[static_cast<size_t>(r)];
    }
    Mat rhs(n, 1);
    auto lv = cur.leading_t_vector();
    for (int r = 0; r < n; ++r) rhs(r, 0) = lv[static_cast<size_t>(r)];
    // Least-structure solve: append rhs, the system must be consistent.
    Mat aug(n, static_cast<int>(usable.size()) + 1);
    aug.set_block(0, 0, lhs);
    aug.set_block(0, static_cast<int>(usable.size()), rhs);
    if (rank(aug) != rank(lhs)) return false;
    // Extract one solution via nullspace of [lhs | -rhs].
    Mat sys(n, static_cast<int>(usable.size()) + 1);
    sys.set_block(0, 0, lhs);
    sys.set_block(0, static_cast<int>(usable.size()), -rhs);
    std::vector<Mat> ns = nullspace(sys);
    Mat sol;
    bool found = false;
    for (const auto& v : ns)
      if (!v(static_cast<int>(usable.size()), 0).is_zero()) {
        sol = v * (GaussScalar(1) / v(static_cast<int>(usable.size()), 0));
        found = true;
        break;
      }
    if (!found) return false;
    for (size_t c = 0; c < usable.size(); ++c) {
      const SyzygyTuple& e = basis[static_cast<size_t>(usable[c])];
      GaussScalar lambda = sol(static_cast<int>(c), 0);
      if (lambda.is_zero()) continue;
      SyzygyTuple sub = shift_tuple(e, d - e.degree());
      cur.s = cur.s - sub.s * lambda;
      for (int i = 0; i < n; ++i)
        cur.t[static_cast<size_t>(i)] = cur.t[static_cast<size_t>(i)] - sub.t[static_cast<size_t>(i)] * lambda;
    }
    if (cur.degree() >= d && !cur.is_zero())
      throw std::logic_error("reduces_to_zero: leading term did not drop");
  }
  return true;
}

bool based_check(const RationalMapData& f) {
  std::vector<SyzygyTuple> basis = minimal_syzygy_basis(f);
  const int n = static_cast<int>(basis.size());
  for (int e = 0; e < n; ++e) {
    int d = basis[static_cast<size_t>(e)].degree();
    int mu = 0;
    for (const auto& g : basis)
      if (g.degree() <= d) ++mu;
    // V_d must equal the span of the last mu coordinate directions.
    auto lv = basis[static_cast<size_t>(e)].leading_t_vector();
    for (int j = 0; j < n - mu; ++j)
      if (!lv[static_cast<size_t>(j)].is_zero()) return false;
  }
  return true;
}

FlagData flag_lift(const RationalMapData& f, const ChargeVector& k) {
  if (!membership_Rk(f, k)) throw std::domain_error("flag_lift: membership_Rk fails");
  FlagData flag;
  flag.elements = minimal_syzygy_basis(f);
  for (const auto& g : flag.elements) flag.degree_profile.push_back(g.degree());
  std::vector<int> mvec = flag_degree_vector(k);  // m_1 >= ... >= m_n
  const int n = k.n();
  for (int i = 1; i <= n; ++i)
    flag.piece_degrees.push_back(-mvec[static_cast<size_t>(n - i)]);  // -m_{N-i}
  for (int i = 0; i < n; ++i) {
    int sum = 0;
    for (int j = 0; j <= i; ++j) sum += flag.degree_profile[static_cast<size_t>(j)];
    if (-sum != flag.piece_degrees[static_cast<size_t>(i)])
      throw std::logic_error("flag_lift: piece degree bookkeeping failed");
  }
  return flag;
}

RationalMapData annihilator(const FlagData& flag) {
  const int n = static_cast<int>(flag.elements.size());
  PolyMat rows(n, n + 1);
  for (int r = 0; r < n; ++r) {
    rows(r, 0) = flag.elements[static_cast<size_t>(r)].s;
    for (int i = 0; i < n; ++i) rows(r, i + 1) = flag.elements[static_cast<size_t>(r)].t[static_cast<size_t>(i)];
  }
  std::vector<Poly> minors(static_cast<size_t>(n + 1));
  for (int j = 0; j <= n; ++j) {
    PolyMat sub(n, n);
    for (int r = 0; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c <= n; ++c) {
        if (c == j) continue;
        sub(r, cc++) = rows(r, c);
      }
    }
    Poly d = det(sub);
    minors[static_cast<size_t>(j)] = (j % 2 == 0) ? d : -d;
  }
  Poly content = poly_gcd_many(minors);
  for (auto& g : minors) g = g.divmod(content).quot;
  if (minors[0].is_zero()) throw std::domain_error("annihilator: degenerate flag (Q component 0)");
  GaussScalar scale = GaussScalar(1) / minors[0].leading();
  RationalMapData f;
  f.Q = minors[0] * scale;
  for (int i = 1; i <= n; ++i) f.P.push_back(minors[static_cast<size_t>(i)] * scale);
  f.check();
  return f;
}

}  // namespace nahmrat
