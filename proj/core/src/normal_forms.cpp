#include "nahmrat/normal_forms.hpp"

#include <stdexcept>

namespace nahmrat {

int BlockLayout::charge_offset(int i) const {
  int off = 0;
  for (int j = i + 1; j <= k_.n(); ++j) off += k_[j - 1];
  return off;
}

bool NormalFormData::c_pattern_ok() const {
  return C == apply_c_pattern(C, k);
}

Mat apply_c_pattern(Mat C, const ChargeVector& k) {
  BlockLayout lay(k);
  if (C.rows() != k.m() || C.cols() != k.n())
    throw std::invalid_argument("apply_c_pattern: C must be m x n");
  for (int i = 1; i <= k.n(); ++i)
    for (int j = 1; j < i; ++j)  // charge j > charge i segments
      for (int r = lay.charge_size(i); r < lay.charge_size(j); ++r)
        C(lay.charge_offset(j) + r, i - 1) = GaussScalar(0);
  return C;
}

Mat hurtubise_block_B(const Mat& C, const ChargeVector& k) {
  if (C.rows() != k.m() || C.cols() != k.n())
    throw std::invalid_argument("hurtubise_block_B: C must be m x n");
  BlockLayout lay(k);
  const int m = k.m();
  Mat B(m, m);
  for (int i = 1; i <= k.n(); ++i) {
    int off = lay.charge_offset(i), sz = lay.charge_size(i);
    for (int r = 0; r + 1 < sz; ++r) B(off + r + 1, off + r) = GaussScalar(1);
    if (sz > 0)
      for (int r = 0; r < m; ++r) B(r, off + sz - 1) = C(r, i - 1);
  }
  return B;
}

MatrixPair hurtubise_pair(const Mat& C, const ChargeVector& k) {
  BlockLayout lay(k);
  MatrixPair p;
  p.B = hurtubise_block_B(C, k);
  p.w1 = Mat(1, k.m());
  p.w1(0, 0) = GaussScalar(1);
  for (int i = 1; i <= k.n(); ++i) {
    Mat v(k.m(), 1);
    if (lay.charge_size(i) > 0) v(lay.charge_offset(i), 0) = GaussScalar(1);
    p.w.push_back(std::move(v));
  }
  return p;
}

BetaStForm build_beta_st(const NormalFormData& nf) {
  if (static_cast<int>(nf.q.size()) != nf.k.m())
    throw std::invalid_argument("build_beta_st: q must have m entries");
  if (!nf.c_pattern_ok()) throw std::invalid_argument("build_beta_st: C sparsity violated");
  const int m = nf.k.m(), n = nf.k.n();
  BlockLayout lay(nf.k);
  BetaStForm out;

  out.beta_lambda1 = LaurentMat(m, m);
  for (int r = 1; r < m; ++r)
    out.beta_lambda1(r, r - 1) = LaurentPoly::term(-2, GaussScalar(1));
  for (int r = 1; r <= m; ++r)
    out.beta_lambda1(r - 1, m - 1) =
        out.beta_lambda1(r - 1, m - 1) +
        LaurentPoly::term(2 * (m - r), -nf.q[static_cast<size_t>(r - 1)]);

  out.alpha_res_lambda1 = Mat(m, m);  // x(m) = diag(-(m-1)/4 .. (m-1)/4)
  for (int r = 0; r < m; ++r)
    out.alpha_res_lambda1(r, r) = GaussScalar(mpq_class(2 * r - (m - 1), 4));

  out.beta_lambdaN.residue = Mat(m, m);
  for (int i = 1; i <= n; ++i) {
    int off = lay.charge_offset(i), sz = lay.charge_size(i);
    for (int r = 0; r + 1 < sz; ++r)
      out.beta_lambdaN.residue(off + r + 1, off + r) = GaussScalar(1);
  }
  out.beta_lambdaN.regular = LaurentMat(m, m);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      int ka = lay.charge_size(a), kb = lay.charge_size(b);
      if (ka == 0 || kb == 0) continue;
      int col = lay.charge_offset(b) + kb - 1;
      for (int r = 1; r <= ka; ++r) {
        GaussScalar c = nf.C(lay.charge_offset(a) + r - 1, b - 1);
        if (c.is_zero()) continue;
        int twice_exp = ka + kb - 2 * r;
        if (twice_exp < std::abs(ka - kb))
          throw std::logic_error("build_beta_st: exponent below |k_a - k_b|/2");
        out.beta_lambdaN.regular(lay.charge_offset(a) + r - 1, col) =
            LaurentPoly::term(twice_exp, c);
      }
    }

  out.alpha_res_lambdaN = Mat(m, m);
  for (int i = 1; i <= n; ++i) {
    int off = lay.charge_offset(i), sz = lay.charge_size(i);
    for (int r = 0; r < sz; ++r)
      out.alpha_res_lambdaN(off + r, off + r) = GaussScalar(mpq_class(2 * r - (sz - 1), 4));
  }
  return out;
}

bool gq_conjugation_identity(const std::vector<GaussScalar>& q) {
  const int m = static_cast<int>(q.size());
  if (m == 0) throw std::invalid_argument("gq_conjugation_identity: empty q");
  LaurentMat g(m, m), a_sup(m, m), a_sub(m, m);
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c) {
      if (r + c < m + 1)
        g(r - 1, c - 1) = LaurentPoly::term(2 * (m + 1 - r - c), q[static_cast<size_t>(r + c - 1)]);
      else if (r + c == m + 1)
        g(r - 1, c - 1) = LaurentPoly::term(0, GaussScalar(1));
    }
  for (int r = 1; r < m; ++r) a_sup(r - 1, r) = LaurentPoly::term(-2, GaussScalar(1));
  for (int c = 1; c <= m; ++c)
    a_sup(m - 1, c - 1) = a_sup(m - 1, c - 1) +
                          LaurentPoly::term(2 * (m - c), -q[static_cast<size_t>(c - 1)]);
  for (int r = 1; r < m; ++r) a_sub(r, r - 1) = LaurentPoly::term(-2, GaussScalar(1));
  for (int r = 1; r <= m; ++r)
    a_sub(r - 1, m - 1) = a_sub(r - 1, m - 1) +
                          LaurentPoly::term(2 * (m - r), -q[static_cast<size_t>(r - 1)]);

  if (g * a_sup != a_sub * g) return false;
  LaurentPoly d = det(g);
  LaurentPoly one = LaurentPoly::term(0, GaussScalar(1));
  return d == one || d == -one;
}

namespace {

// Zero-pattern check for the partially transformed matrices of the g_B
// recursion.  Stage (si, sj) means steps before (si, sj) in the sweep
// (2,1), (3,1), (3,2), ... are done; stage (n+1, 1) is the final form.
// In every state: diagonal blocks are companion-shaped, upper blocks have
// only the last column free, lower blocks are either "last-column" (first
// size(j') entries of the last column free) or "first-row".
bool mixed_pattern_ok(const Mat& B, const ChargeVector& k, int si, int sj) {
  BlockLayout lay(k);
  const int n = k.n();
  if (B.rows() != k.m() || B.cols() != k.m()) return false;
  for (int bi = 1; bi <= n; ++bi)
    for (int bj = 1; bj <= n; ++bj) {
      int ro = lay.block_offset(bi), co = lay.block_offset(bj);
      int rs = lay.block_size(bi), cs = lay.block_size(bj);
      for (int r = 0; r < rs; ++r)
        for (int c = 0; c < cs; ++c) {
          const GaussScalar& v = B(ro + r, co + c);
          bool free_pos;
          if (bi == bj) {
            if (c == cs - 1)
              free_pos = true;
            else
              free_pos = false;
            if (!free_pos) {
              bool subdiag = (r == c + 1);
              if (subdiag) {
                if (v != GaussScalar(1)) return false;
                continue;
              }
              if (!v.is_zero()) return false;
              continue;
            }
            continue;  // last column free
          }
          if (bj > bi) {
            free_pos = (c == cs - 1);
          } else {
            bool done = (bi < si) || (bi == si && bj < sj);
            if (done)
              free_pos = (r == 0);  // first-row form
            else
              free_pos = (c == cs - 1 && r < cs);  // truncated last column
          }
          if (!free_pos && !v.is_zero()) return false;
        }
    }
  return true;
}

void advance_stage(const ChargeVector& k, int& i, int& j) {
  if (j + 1 < i)
    ++j;
  else {
    ++i;
    j = 1;
  }
  if (i > k.n()) {
    i = k.n() + 1;
    j = 1;
  }
}

}  // namespace

bool block_pattern_validate(const Mat& M, const ChargeVector& k, const std::string& pattern_id) {
  if (pattern_id == "gb-source") return mixed_pattern_ok(M, k, 2, 1);
  if (pattern_id == "gb-target") return mixed_pattern_ok(M, k, k.n() + 1, 1);
  throw std::invalid_argument("block_pattern_validate: unknown pattern id '" + pattern_id + "'");
}

std::pair<Mat, Mat> gB_transform(const Mat& B, const ChargeVector& k, int i, int j) {
  const int n = k.n();
  if (!(i > j && j >= 1 && i <= n)) throw std::invalid_argument("gB_transform: need n >= i > j >= 1");
  if (!mixed_pattern_ok(B, k, i, j))
    throw std::domain_error("gB_transform: input does not match the stage pattern");
  BlockLayout lay(k);
  const int m = k.m();
  const int ro = lay.block_offset(i), co = lay.block_offset(j);
  const int K = lay.block_size(j);
  const int lastcol = co + K - 1;

  // nu_1 = C at the bottom of the truncated segment; the recursion folds in
  // the last column of the (j,j) companion block.
  std::vector<GaussScalar> nu(static_cast<size_t>(K), GaussScalar(0));  // nu[1..K-1]
  if (K >= 2) {
    nu[1] = B(ro + K - 1, lastcol);
    for (int ip = 2; ip <= K - 1; ++ip) {
      GaussScalar v = B(ro + K - ip, lastcol);
      for (int jp = 1; jp <= ip - 1; ++jp)
        v += B(co + K - jp, lastcol) * nu[static_cast<size_t>(ip - jp)];
      nu[static_cast<size_t>(ip)] = v;
    }
  }

  Mat g = Mat::identity(m);
  for (int ip = 1; ip <= K - 1; ++ip)
    for (int jp = 1; jp <= K - ip; ++jp) g(ro + jp - 1, co + ip + jp - 1) = nu[static_cast<size_t>(ip)];
  Mat ginv = Mat::identity(m) * GaussScalar(2) - g;  // (g - I)^2 = 0
  Mat Bp = g * B * ginv;

  int ni = i, nj = j;
  advance_stage(k, ni, nj);
  if (!mixed_pattern_ok(Bp, k, ni, nj))
    throw std::logic_error("gB_transform: output does not match the next stage pattern");

  // Only the (i,j) block, last columns of (i, j'>j) and first rows of
  // (i, j'<j) may differ from B.
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      if (B(r, c) == Bp(r, c)) continue;
      if (r < ro || r >= ro + lay.block_size(i))
        throw std::logic_error("gB_transform: change outside row block i");
      bool ok = false;
      for (int bj = 1; bj <= n; ++bj) {
        int o = lay.block_offset(bj), s = lay.block_size(bj);
        if (c < o || c >= o + s) continue;
        if (bj == j)
          ok = true;
        else if (bj > j)
          ok = (c == o + s - 1);
        else
          ok = (r == ro);
        break;
      }
      if (!ok) throw std::logic_error("gB_transform: change at a protected position");
    }
  return {g, Bp};
}

Mat gB_inverse_transform(const Mat& Bp, const ChargeVector& k, int i, int j) {
  const int n = k.n();
  if (!(i > j && j >= 1 && i <= n))
    throw std::invalid_argument("gB_inverse_transform: need n >= i > j >= 1");
  int ni = i, nj = j;
  advance_stage(k, ni, nj);
  if (!mixed_pattern_ok(Bp, k, ni, nj))
    throw std::domain_error("gB_inverse_transform: input does not match the stage pattern");
  BlockLayout lay(k);
  const int m = k.m();
  const int ro = lay.block_offset(i), co = lay.block_offset(j);
  const int K = lay.block_size(j);

  Mat g = Mat::identity(m);
  for (int ip = 1; ip <= K - 1; ++ip) {
    GaussScalar nu = Bp(ro, co + ip - 1);  // first-row entries give nu directly
    for (int jp = 1; jp <= K - ip; ++jp) g(ro + jp - 1, co + ip + jp - 1) = nu;
  }
  Mat ginv = Mat::identity(m) * GaussScalar(2) - g;
  Mat B = ginv * Bp * g;
  if (!mixed_pattern_ok(B, k, i, j))
    throw std::logic_error("gB_inverse_transform: reconstruction does not match the source pattern");
  return B;
}

std::pair<Mat, Mat> to_hurtubise_form(const Mat& B, const ChargeVector& k) {
  if (!block_pattern_validate(B, k, "gb-source"))
    throw std::domain_error("to_hurtubise_form: input is not in gb-source form");
  Mat g = Mat::identity(k.m());
  Mat cur = B;
  for (int i = 2; i <= k.n(); ++i)
    for (int j = 1; j < i; ++j) {
      auto [gi, next] = gB_transform(cur, k, i, j);
      g = gi * g;
      cur = next;
    }
  if (!block_pattern_validate(cur, k, "gb-target"))
    throw std::logic_error("to_hurtubise_form: final pattern check failed");
  if (g * B * inverse(g) != cur)
    throw std::logic_error("to_hurtubise_form: stored g does not conjugate input to output");
  return {g, cur};
}

Mat from_hurtubise_form(const Mat& BH, const ChargeVector& k) {
  if (!block_pattern_validate(BH, k, "gb-target"))
    throw std::domain_error("from_hurtubise_form: input is not in gb-target form");
  Mat cur = BH;
  for (int i = k.n(); i >= 2; --i)
    for (int j = i - 1; j >= 1; --j) cur = gB_inverse_transform(cur, k, i, j);
  return cur;
}

}  // namespace nahmrat
