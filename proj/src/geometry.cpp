#include "ksph/geometry.hpp"

#include <random>
#include <stdexcept>

#include "ksph/linalg.hpp"
#include "ksph/spin_action.hpp"

namespace ksph {

namespace {

Rational inner(const Vec<Rational>& a, const Vec<Rational>& b) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// w += c * (perm applied to s)
void add_perm_apply(Vec<Rational>& w, const SignedPerm& p, const Rational& c,
                    const Vec<Rational>& s) {
  if (sgn(c) == 0) return;
  for (size_t a = 0; a < s.size(); ++a) {
    if (sgn(s[a]) == 0) continue;
    if (p.sign[a] > 0)
      w[p.img[a]] += c * s[a];
    else
      w[p.img[a]] -= c * s[a];
  }
}

}  // namespace

SpherePoint::SpherePoint(Vec<Rational> v) : x(std::move(v)) {
  if (inner(x, x) != 1) throw std::invalid_argument("SpherePoint: |x|^2 != 1");
}

SpherePoint stereographic(const Vec<Rational>& a) {
  Rational n2 = inner(a, a);
  Rational d = 1 + n2;
  Vec<Rational> x(a.size() + 1);
  for (size_t i = 0; i < a.size(); ++i) x[i] = 2 * a[i] / d;
  x[a.size()] = (1 - n2) / d;
  return SpherePoint(std::move(x));
}

std::vector<SpherePoint> sample_sphere_points(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  std::vector<SpherePoint> pts;
  pts.reserve(count);
  while (static_cast<int>(pts.size()) < count) {
    Vec<Rational> a(n);
    for (int i = 0; i < n; ++i) {
      a[i] = Rational(num(rng), den(rng));
      a[i].canonicalize();
    }
    pts.push_back(stereographic(a));
  }
  return pts;
}

bool is_tangent(const SpherePoint& x, const Vec<Rational>& v) {
  return sgn(inner(x.x, v)) == 0;
}

SparseMatrix<Rational> mu(const CliffordAlgebra& ca, const Vec<Rational>& v,
                          const Vec<Rational>& w) {
  const int n = ca.n, d = ca.module_dim;
  if (static_cast<int>(v.size()) != n + 1 || static_cast<int>(w.size()) != n + 1)
    throw std::invalid_argument("mu: dimension mismatch");
  SparseMatrix<Rational> out(d, d);
  Rational diag = -inner(v, w);
  if (sgn(diag) != 0)
    for (int a = 0; a < d; ++a) out.add(a, a, diag);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational c = v[i] * w[j] - v[j] * w[i];
      if (sgn(c) == 0) continue;
      SignedPerm p = ca.gamma[i] * ca.gamma[j];
      for (int a = 0; a < d; ++a) out.add(p.img[a], a, p.sign[a] > 0 ? c : Rational(-c));
    }
    Rational c = v[i] * w[n] - v[n] * w[i];
    if (sgn(c) == 0) continue;
    const SignedPerm& p = ca.gamma[i];
    for (int a = 0; a < d; ++a) out.add(p.img[a], a, p.sign[a] > 0 ? c : Rational(-c));
  }
  return out;
}

namespace {

// mu(v, w) s without materializing the endomorphism.
Vec<Rational> mu_apply(const CliffordAlgebra& ca, const Vec<Rational>& v,
                       const Vec<Rational>& w, const Vec<Rational>& s) {
  const int n = ca.n;
  Vec<Rational> out(ca.module_dim, Rational(0));
  Rational diag = -inner(v, w);
  for (int a = 0; a < ca.module_dim; ++a)
    if (sgn(s[a]) != 0) out[a] = diag * s[a];
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational c = v[i] * w[j] - v[j] * w[i];
      if (sgn(c) == 0) continue;
      add_perm_apply(out, ca.gamma[i] * ca.gamma[j], c, s);
    }
    add_perm_apply(out, ca.gamma[i], v[i] * w[n] - v[n] * w[i], s);
  }
  return out;
}

Vec<Rational> project_tangent(const SpherePoint& x, const Vec<Rational>& y) {
  Rational c = inner(x.x, y);
  Vec<Rational> v(y);
  for (size_t i = 0; i < v.size(); ++i) v[i] -= c * x.x[i];
  return v;
}

Vec<Rational> mat_apply(const Mat<Rational>& m, const Vec<Rational>& v) {
  Vec<Rational> out(m.rows(), Rational(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace

Vec<Rational> clifford_action_at(const CliffordAlgebra& ca, const SpherePoint& x,
                                 const Vec<Rational>& X, const Vec<Rational>& s) {
  if (!is_tangent(x, X)) throw std::invalid_argument("clifford_action_at: X not tangent");
  return mu_apply(ca, X, x.x, s);
}

Vec<Rational> PolySpinorField::value(const Vec<Rational>& x) const {
  Vec<Rational> out(constant);
  for (size_t i = 0; i < linear.size(); ++i)
    for (size_t a = 0; a < out.size(); ++a) out[a] += x[i] * linear[i][a];
  return out;
}

Vec<Rational> PolySpinorField::directional(const Vec<Rational>& X) const {
  Vec<Rational> out(constant.size(), Rational(0));
  for (size_t i = 0; i < linear.size(); ++i)
    for (size_t a = 0; a < out.size(); ++a) out[a] += X[i] * linear[i][a];
  return out;
}

PolySpinorField constant_field(const Vec<Rational>& psi, int) {
  return PolySpinorField{psi, {}};
}

Vec<Rational> covariant_derivative(const CliffordAlgebra& ca, const PolySpinorField& f,
                                   const SpherePoint& x, const Vec<Rational>& X) {
  if (!is_tangent(x, X)) throw std::invalid_argument("covariant_derivative: X not tangent");
  Vec<Rational> out = f.directional(X);
  Vec<Rational> conn = mu_apply(ca, X, x.x, f.value(x.x));
  for (size_t a = 0; a < out.size(); ++a) out[a] += conn[a] / 2;
  return out;
}

SoElement spinor_squaring_field(const KillingAlgebra& ka, const Vec<Rational>& psi1,
                                const Vec<Rational>& psi2) {
  const CliffordAlgebra& ca = ka.ca;
  const int m = ka.n + 1;
  const int unknowns = m * (m - 1) / 2;
  // an antisymmetric matrix is pinned down by its values on m-1 generic
  // vectors; one extra point makes the system an overdetermined certificate
  int npts = m + 1;
  std::vector<SpherePoint> pts = sample_sphere_points(ka.n, npts, 0xA5);

  Mat<Rational> sys(npts * m, unknowns);
  Vec<Rational> rhs(npts * m, Rational(0));
  Vec<Rational> u(m, Rational(0));
  for (int p = 0; p < npts; ++p) {
    const SpherePoint& x = pts[p];
    for (int k = 0; k < m; ++k) {
      u[k] = 1;
      Vec<Rational> pk = project_tangent(x, u);
      u[k] = 0;
      rhs[p * m + k] = inner(psi1, mu_apply(ca, pk, x.x, psi2));
      // (a x)_k = sum_{j != k} a_{kj} x_j with a_{kj} = -a_{jk}
      for (int j = 0; j < m; ++j) {
        if (j == k) continue;
        int i1 = std::min(j, k), j1 = std::max(j, k);
        int col = ka.pair_index(i1 + 1, j1 + 1);
        if (k == i1)
          sys(p * m + k, col) += x.x[j];
        else
          sys(p * m + k, col) -= x.x[j];
      }
    }
  }
  Vec<Rational> sol = solve(sys, rhs);  // throws if V is not linear

  Mat<Rational> a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      a(i, j) = sol[ka.pair_index(i + 1, j + 1)];
      a(j, i) = -a(i, j);
    }

  // independent certificate at fresh points
  for (const SpherePoint& x : sample_sphere_points(ka.n, 2, 0x5A5A)) {
    Vec<Rational> ax = a.apply(x.x);
    for (int k = 0; k < m; ++k) {
      u[k] = 1;
      Vec<Rational> pk = project_tangent(x, u);
      u[k] = 0;
      if (ax[k] != inner(psi1, mu_apply(ca, pk, x.x, psi2)))
        throw std::runtime_error("spinor_squaring_field: linear certificate failed");
    }
  }
  return SoElement(std::move(a));
}

Vec<Rational> rho_at(const CliffordAlgebra& ca, const SpherePoint& x, const Mat<Rational>& b,
                     const Vec<Rational>& s) {
  const int m = ca.n + 1;
  // C = P b P with P = I - x x^T:
  // C_ij = b_ij - x_i (x^T b)_j - (b x)_i x_j + (x^T b x) x_i x_j
  Mat<Rational> c(m, m);
  Vec<Rational> bx = mat_apply(b, x.x);
  Rational xbx = inner(x.x, bx);  // zero for antisymmetric b
  Vec<Rational> xb(m, Rational(0));  // x^T b
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) xb[j] += x.x[i] * b(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      c(i, j) = b(i, j) - x.x[i] * xb[j] - bx[i] * x.x[j] + xbx * x.x[i] * x.x[j];

  Vec<Rational> u(m, Rational(0));
  std::vector<Vec<Rational>> w(m);  // w_l = c_x(P u_l) s
  std::vector<Vec<Rational>> pk(m);
  for (int l = 0; l < m; ++l) {
    u[l] = 1;
    pk[l] = project_tangent(x, u);
    u[l] = 0;
    w[l] = mu_apply(ca, pk[l], x.x, s);
  }
  Vec<Rational> out(ca.module_dim, Rational(0));
  for (int k = 0; k < m; ++k) {
    Vec<Rational> acc(ca.module_dim, Rational(0));
    bool any = false;
    for (int l = 0; l < m; ++l) {
      // coefficient <b P u_k, P u_l> = (P b P)_{l k}
      const Rational& coef = c(l, k);
      if (sgn(coef) == 0) continue;
      any = true;
      for (int a = 0; a < ca.module_dim; ++a) acc[a] += coef * w[l][a];
    }
    if (!any) continue;
    Vec<Rational> t = mu_apply(ca, pk[k], x.x, acc);
    for (int a = 0; a < ca.module_dim; ++a) out[a] += t[a] / 4;
  }
  return out;
}

Vec<Rational> lie_derivative_at(const KillingAlgebra& ka, const SoElement& a,
                                const Vec<Rational>& psi, const SpherePoint& x) {
  Vec<Rational> X = mat_apply(a.m, x.x);
  Vec<Rational> out = mu_apply(ka.ca, X, x.x, psi);
  for (auto& v : out) v /= 2;
  Mat<Rational> minus_a = a.m;
  for (int i = 0; i < minus_a.rows(); ++i)
    for (int j = 0; j < minus_a.cols(); ++j) minus_a(i, j) = -minus_a(i, j);
  Vec<Rational> r = rho_at(ka.ca, x, minus_a, psi);
  for (size_t i = 0; i < out.size(); ++i) out[i] += r[i];
  return out;
}

Vec<Rational> lie_derivative(const KillingAlgebra& ka, const SoElement& a,
                             const Vec<Rational>& psi,
                             const std::vector<SpherePoint>& points) {
  if (points.empty()) throw std::invalid_argument("lie_derivative: no points");
  Vec<Rational> psi1 = lie_derivative_at(ka, a, psi, points[0]);
  for (size_t p = 1; p < points.size(); ++p)
    if (lie_derivative_at(ka, a, psi, points[p]) != psi1)
      throw std::runtime_error("lie_derivative: result is not a constant field");
  return psi1;
}

bool GeometryReport::passed() const {
  return ks_failures == 0 && ks_checks > 0 && mu_antisymmetry && squaring_matches &&
         squaring_killing_eq && lie_derivative_matches && leibniz && morphism &&
         clifford_compat && affine && lie_sign != 0;
}

namespace {

Vec<Rational> basis_spinor(int dim, int a) {
  Vec<Rational> v(dim, Rational(0));
  v[a] = 1;
  return v;
}

Vec<Rational> rho_spin(const KillingAlgebra& ka, const SoElement& a, const Vec<Rational>& s) {
  SparseMatrix<Rational> r = rho(a, ka.ca);
  return r.apply(s);
}

Mat<Rational> field_bracket(const Mat<Rational>& a, const Mat<Rational>& b) {
  // bracket of the vector fields x -> a x and x -> b x
  return b * a - a * b;
}

}  // namespace

GeometryReport geometry_check(const KillingAlgebra& ka, int points, std::uint64_t seed) {
  const CliffordAlgebra& ca = ka.ca;
  const int m = ka.n + 1, dim = ca.module_dim;
  GeometryReport rep;
  rep.sphere = ka.n;
  rep.points_checked = points;
  std::vector<SpherePoint> pts = sample_sphere_points(ka.n, points, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  // Killing spinor equation D_X eps = (1/2) c_x(X) eps for every basis
  // spinor at every point, frame X = P_x u_k.
  Vec<Rational> u(m, Rational(0));
  for (const SpherePoint& x : pts) {
    for (int k = 0; k < m; ++k) {
      u[k] = 1;
      Vec<Rational> X = project_tangent(x, u);
      u[k] = 0;
      if (is_zero_vec(X)) continue;
      SparseMatrix<Rational> M = mu(ca, X, x.x);
      // columns of M give c_x(X) on basis spinors
      std::vector<std::vector<std::pair<int, Rational>>> cols(dim);
      for (const auto& [rc, val] : M.entries()) cols[rc.second].emplace_back(rc.first, val);
      for (int a = 0; a < dim; ++a) {
        ++rep.ks_checks;
        PolySpinorField f = constant_field(basis_spinor(dim, a), m);
        Vec<Rational> lhs = covariant_derivative(ca, f, x, X);
        Vec<Rational> rhs(dim, Rational(0));
        for (const auto& [row, val] : cols[a]) rhs[row] = val / 2;
        if (lhs != rhs) ++rep.ks_failures;
      }
    }
  }

  // mu(v, w) + mu(w, v) = -2 <v, w> I on random pairs.
  {
    std::uniform_int_distribution<int> coef(-2, 2);
    rep.mu_antisymmetry = true;
    for (int t = 0; t < 10 && rep.mu_antisymmetry; ++t) {
      Vec<Rational> v(m), w(m);
      for (int i = 0; i < m; ++i) {
        v[i] = coef(rng);
        w[i] = coef(rng);
      }
      SparseMatrix<Rational> s = mu(ca, v, w) + mu(ca, w, v);
      Rational expect = -2 * inner(v, w);
      for (int a = 0; a < dim && rep.mu_antisymmetry; ++a) {
        Vec<Rational> col = s.apply(basis_spinor(dim, a));
        for (int b = 0; b < dim; ++b)
          if (col[b] != (a == b ? expect : Rational(0))) rep.mu_antisymmetry = false;
      }
    }
  }

  // Spinor squaring: a = s * spinor_square for one global s; zero on
  // equal arguments; Killing's equation for the resulting field.
  {
    std::uniform_int_distribution<int> pick(0, dim - 1);
    rep.squaring_matches = true;
    bool have_scale = false;
    for (int t = 0; t < 5 && rep.squaring_matches; ++t) {
      int i = pick(rng), j = pick(rng);
      if (i == j) j = (j + 1) % dim;
      Vec<Rational> p1 = basis_spinor(dim, i), p2 = basis_spinor(dim, j);
      SoElement geo = spinor_squaring_field(ka, p1, p2);
      SoElement alg = spinor_square(ka, p1, p2);
      bool geo_zero = geo.m.is_zero(), alg_zero = alg.m.is_zero();
      if (geo_zero != alg_zero) {
        rep.squaring_matches = false;
        break;
      }
      if (geo_zero) continue;
      Rational s;
      bool set = false;
      for (int r = 0; r < m && !set; ++r)
        for (int c = 0; c < m && !set; ++c)
          if (sgn(alg.m(r, c)) != 0) {
            s = geo.m(r, c) / alg.m(r, c);
            set = true;
          }
      Mat<Rational> scaled = alg.m;
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) scaled(r, c) *= s;
      if (!(scaled == geo.m)) {
        rep.squaring_matches = false;
        break;
      }
      if (!have_scale) {
        rep.squaring_scale = s;
        have_scale = true;
      } else if (s != rep.squaring_scale) {
        rep.squaring_matches = false;
      }
    }
    if (!have_scale) rep.squaring_matches = false;
    // squaring of a spinor with itself vanishes
    Vec<Rational> p = basis_spinor(dim, 0);
    if (!spinor_squaring_field(ka, p, p).m.is_zero()) rep.squaring_matches = false;

    // <D_Y V, Z> + <D_Z V, Y> = 0 for V = a x: D_Y V = P_x (a Y)
    rep.squaring_killing_eq = true;
    SoElement a = spinor_square(ka, basis_spinor(dim, 0), basis_spinor(dim, 1));
    for (size_t p2 = 0; p2 < pts.size() && p2 < 10; ++p2) {
      const SpherePoint& x = pts[p2];
      for (int k = 0; k < m - 1; ++k) {
        u[k] = 1;
        Vec<Rational> Y = project_tangent(x, u);
        u[k] = 0;
        u[k + 1] = 1;
        Vec<Rational> Z = project_tangent(x, u);
        u[k + 1] = 0;
        Vec<Rational> dY = project_tangent(x, mat_apply(a.m, Y));
        Vec<Rational> dZ = project_tangent(x, mat_apply(a.m, Z));
        if (sgn(inner(dY, Z) + inner(dZ, Y)) != 0) rep.squaring_killing_eq = false;
      }
    }
  }

  // Spinorial Lie derivative: constancy certificate and psi' = sign *
  // rho(a) psi for one global sign; then the derivation properties.
  {
    std::vector<SpherePoint> lie_pts(pts.begin(), pts.begin() + std::min<size_t>(3, pts.size()));
    std::vector<SoElement> elems;
    elems.push_back(SoElement(so_basis_matrix(1, 2, m)));
    elems.push_back(SoElement(so_basis_matrix(3, 4, m)));
    elems.push_back(SoElement(so_basis_matrix(2, 3, m)));
    {
      std::uniform_int_distribution<int> coef(-2, 2);
      Mat<Rational> r(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
          r(i, j) = coef(rng);
          r(j, i) = -r(i, j);
        }
      elems.push_back(SoElement(std::move(r)));
    }
    std::vector<Vec<Rational>> spinors = {basis_spinor(dim, 0), basis_spinor(dim, dim / 2)};
    {
      Vec<Rational> mix(dim, Rational(0));
      mix[0] = 1;
      mix[1] = Rational(-1, 2);
      mix[dim - 1] = 2;
      spinors.push_back(std::move(mix));
    }

    rep.lie_derivative_matches = true;
    bool have_sign = false;
    try {
      for (const SoElement& a : elems)
        for (const Vec<Rational>& psi : spinors) {
          Vec<Rational> got = lie_derivative(ka, a, psi, lie_pts);
          Vec<Rational> expect = rho_spin(ka, a, psi);
          Vec<Rational> neg(expect);
          for (auto& v : neg) v = -v;
          int sign;
          if (got == expect && !is_zero_vec(got))
            sign = 1;
          else if (got == neg)
            sign = -1;
          else if (is_zero_vec(got) && is_zero_vec(expect))
            continue;
          else {
            rep.lie_derivative_matches = false;
            break;
          }
          if (!have_sign) {
            rep.lie_sign = sign;
            have_sign = true;
          } else if (sign != rep.lie_sign && !is_zero_vec(got)) {
            rep.lie_derivative_matches = false;
          }
        }
    } catch (const std::runtime_error&) {
      rep.lie_derivative_matches = false;
    }
    if (!have_sign) rep.lie_derivative_matches = false;

    // Leibniz: D_X(f eps) = X(f) eps + f D_X eps for linear f = <u0, x>
    rep.leibniz = true;
    {
      Vec<Rational> u0(m, Rational(0));
      u0[0] = 1;
      u0[m - 1] = Rational(1, 2);
      const Vec<Rational>& psi = spinors[0];
      PolySpinorField f;
      f.constant.assign(dim, Rational(0));
      f.linear.resize(m);
      for (int i = 0; i < m; ++i) {
        f.linear[i].assign(dim, Rational(0));
        for (int a = 0; a < dim; ++a) f.linear[i][a] = u0[i] * psi[a];
      }
      for (size_t p = 0; p < pts.size() && p < 5; ++p) {
        const SpherePoint& x = pts[p];
        u[1] = 1;
        Vec<Rational> X = project_tangent(x, u);
        u[1] = 0;
        Vec<Rational> lhs = covariant_derivative(ca, f, x, X);
        Rational fx = inner(u0, x.x), Xf = inner(u0, X);
        Vec<Rational> rhs = mu_apply(ca, X, x.x, psi);
        for (int a = 0; a < dim; ++a) rhs[a] = Xf * psi[a] + fx * rhs[a] / 2;
        if (lhs != rhs) rep.leibniz = false;
      }
    }

    // [L_X, L_Y] eps = L_{[X,Y]} eps on a commuting and a non-commuting pair
    rep.morphism = true;
    try {
      const Vec<Rational>& psi = spinors[0];
      std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}};
      for (auto [ia, ib] : pairs) {
        const SoElement &a = elems[ia], &b = elems[ib];
        Vec<Rational> lb = lie_derivative(ka, b, psi, lie_pts);
        Vec<Rational> la = lie_derivative(ka, a, psi, lie_pts);
        Vec<Rational> lab = lie_derivative(ka, a, lb, lie_pts);
        Vec<Rational> lba = lie_derivative(ka, b, la, lie_pts);
        SoElement c(field_bracket(a.m, b.m));
        Vec<Rational> lc = c.m.is_zero() ? Vec<Rational>(dim, Rational(0))
                                         : lie_derivative(ka, c, psi, lie_pts);
        for (int t = 0; t < dim; ++t)
          if (lab[t] - lba[t] != lc[t]) rep.morphism = false;
      }
    } catch (const std::runtime_error&) {
      rep.morphism = false;
    }

    // eq:clifford and eq:affine at sampled points
    rep.clifford_compat = true;
    rep.affine = true;
    try {
      const SoElement& a = elems[0];
      const SoElement& b = elems[3];
      const Vec<Rational>& psi = spinors[0];
      Vec<Rational> psi1 = lie_derivative(ka, a, psi, lie_pts);  // L_X eps
      Mat<Rational> cbr = field_bracket(a.m, b.m);
      Mat<Rational> minus_a = a.m;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) minus_a(i, j) = -a.m(i, j);
      for (size_t p = 0; p < pts.size() && p < 3; ++p) {
        const SpherePoint& x = pts[p];
        Vec<Rational> X = mat_apply(a.m, x.x);
        Vec<Rational> bx = mat_apply(b.m, x.x);
        Vec<Rational> bX = mat_apply(b.m, X);

        // clifford: L_X(c(Z)eps) = c([X,Z])eps + c(Z) L_X eps, Z = b x
        {
          Vec<Rational> gval = mu_apply(ca, bx, x.x, psi);  // g(x)
          Vec<Rational> dg = mu_apply(ca, bX, x.x, psi);    // d_X g, part 1
          Vec<Rational> dg2 = mu_apply(ca, bx, X, psi);
          Vec<Rational> conn = mu_apply(ca, X, x.x, gval);
          Vec<Rational> rho_term = rho_at(ca, x, minus_a, gval);
          Vec<Rational> lhs(dim);
          for (int t = 0; t < dim; ++t)
            lhs[t] = dg[t] + dg2[t] + conn[t] / 2 + rho_term[t];
          Vec<Rational> r1 = mu_apply(ca, mat_apply(cbr, x.x), x.x, psi);
          Vec<Rational> r2 = mu_apply(ca, bx, x.x, psi1);
          for (int t = 0; t < dim; ++t)
            if (lhs[t] != r1[t] + r2[t]) rep.clifford_compat = false;
        }

        // affine: L_X(D_Y eps) - D_Y(L_X eps) = D_{[X,Y]} eps, Y = b x
        {
          // f(z) = (1/2) mu(b z, z) psi
          Vec<Rational> fval = mu_apply(ca, bx, x.x, psi);
          Vec<Rational> df = mu_apply(ca, bX, x.x, psi);
          Vec<Rational> df2 = mu_apply(ca, bx, X, psi);
          Vec<Rational> conn = mu_apply(ca, X, x.x, fval);
          Vec<Rational> rho_term = rho_at(ca, x, minus_a, fval);
          Vec<Rational> lhs(dim);
          for (int t = 0; t < dim; ++t)
            lhs[t] = (df[t] + df2[t]) / 2 + conn[t] / 4 + rho_term[t] / 2;
          Vec<Rational> r1 = mu_apply(ca, bx, x.x, psi1);  // D_Y(L_X eps) * 2
          Vec<Rational> r2 = mu_apply(ca, mat_apply(cbr, x.x), x.x, psi);
          for (int t = 0; t < dim; ++t)
            if (lhs[t] != r1[t] / 2 + r2[t] / 2) rep.affine = false;
        }
      }
    } catch (const std::runtime_error&) {
      rep.clifford_compat = false;
      rep.affine = false;
    }
  }

  return rep;
}

}  // namespace ksph
