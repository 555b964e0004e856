#include "ksph/identify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ksph {

Mat<Rational> killing_form(const KillingAlgebra& ka) {
  const int d = ka.dim();
  Mat<Rational> kappa(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = x; y < d; ++y) {
      Rational t(0);
      for (int w = 0; w < d; ++w)
        for (const auto& [z, cxz] : ka.bracket_basis(x, w))
          for (const auto& [w2, cyw] : ka.bracket_basis(y, z))
            if (w2 == w) t += cxz * cyw;
      kappa(x, y) = t;
      kappa(y, x) = std::move(t);
    }
  return kappa;
}

namespace {

// [b_h, v] for v in basis coordinates, via the table.
Vec<Rational> ad_basis_apply(const KillingAlgebra& ka, int h, const Vec<Rational>& v) {
  Vec<Rational> out(ka.dim(), Rational(0));
  for (int b = 0; b < ka.dim(); ++b) {
    if (sgn(v[b]) == 0) continue;
    for (const auto& [z, c] : ka.bracket_basis(h, b)) out[z] += v[b] * c;
  }
  return out;
}

}  // namespace

std::vector<int> cartan_subalgebra(const KillingAlgebra& ka) {
  const int r = (ka.n + 1) / 2;
  std::vector<int> h;
  for (int i = 1; i <= r; ++i) h.push_back(ka.pair_index(2 * i - 1, 2 * i));

  for (size_t a = 0; a < h.size(); ++a)
    for (size_t b = a + 1; b < h.size(); ++b)
      if (!ka.bracket_basis(h[a], h[b]).empty())
        throw std::runtime_error("cartan_subalgebra: torus elements do not commute");

  // Joint centralizer by iterated kernels.
  const int d = ka.dim();
  std::vector<Vec<Rational>> basis(d);
  for (int k = 0; k < d; ++k) {
    basis[k].assign(d, Rational(0));
    basis[k][k] = 1;
  }
  for (int hi : h) {
    Mat<Rational> img(d, static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
      Vec<Rational> w = ad_basis_apply(ka, hi, basis[j]);
      for (int row = 0; row < d; ++row) img(row, static_cast<int>(j)) = std::move(w[row]);
    }
    std::vector<Vec<Rational>> coeff = kernel_basis(img);
    std::vector<Vec<Rational>> next;
    for (const auto& c : coeff) {
      Vec<Rational> v(d, Rational(0));
      for (size_t j = 0; j < basis.size(); ++j) {
        if (sgn(c[j]) == 0) continue;
        for (int row = 0; row < d; ++row) v[row] += c[j] * basis[j][row];
      }
      next.push_back(std::move(v));
    }
    basis = std::move(next);
  }
  if (static_cast<int>(basis.size()) != r)
    throw std::runtime_error("cartan_subalgebra: centralizer dimension " +
                             std::to_string(basis.size()) + " exceeds rank " + std::to_string(r));
  return h;
}

RootSystem root_system(const KillingAlgebra& ka, const std::vector<int>& cartan) {
  const int d = ka.dim();
  std::vector<SparseMatrix<GaussianRational>> ops;
  for (int h : cartan) {
    SparseMatrix<GaussianRational> ad(d, d);
    for (int b = 0; b < d; ++b)
      for (const auto& [z, c] : ka.bracket_basis(h, b)) ad.add(z, b, GaussianRational(c));
    ops.push_back(std::move(ad));
  }
  const GaussianRational i = GaussianRational::i();
  std::vector<GaussianRational> cand = {GaussianRational(0), i * GaussianRational(Rational(1, 2)),
                                        -(i * GaussianRational(Rational(1, 2))), i, -i};
  std::vector<std::vector<GaussianRational>> cands(ops.size(), cand);
  std::vector<JointEigenspace> spaces = simultaneous_eigenspaces(ops, cands);

  RootSystem rs;
  rs.rank = static_cast<int>(cartan.size());
  int zero_dim = 0;
  for (auto& es : spaces) {
    bool zero = true;
    for (const auto& ev : es.eigenvalue)
      if (!ev.is_zero()) zero = false;
    if (zero) {
      zero_dim += static_cast<int>(es.basis.size());
      continue;
    }
    Vec<Rational> root;
    for (const auto& ev : es.eigenvalue) {
      if (sgn(ev.re) != 0)
        throw std::runtime_error("root_system: non-imaginary torus eigenvalue");
      root.push_back(ev.im);
    }
    for (auto& v : es.basis) {
      rs.roots.push_back(root);
      rs.root_vectors.push_back(std::move(v));
    }
  }
  if (zero_dim != rs.rank)
    throw std::runtime_error("root_system: zero-weight space has dimension " +
                             std::to_string(zero_dim) + ", expected the rank");
  if (static_cast<int>(rs.roots.size()) + rs.rank != d)
    throw std::runtime_error("root_system: root count inconsistent with dimension");
  return rs;
}

std::vector<Vec<Rational>> simple_roots(const RootSystem& rs) {
  const int r = rs.rank;
  auto functional = [&](const Vec<Rational>& a) {
    Rational f(0), p(1);
    for (int k = r - 1; k >= 0; --k) {
      f += p * a[k];
      p *= 1000;
    }
    return f;
  };
  std::set<Vec<Rational>> positive;
  for (const auto& a : rs.roots) {
    Rational f = functional(a);
    if (sgn(f) == 0) throw std::runtime_error("simple_roots: functional vanishes on a root");
    if (sgn(f) > 0) positive.insert(a);
  }
  std::vector<Vec<Rational>> simple;
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive) {
      Vec<Rational> c(a.size());
      for (size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
      if (c != b && positive.count(c)) {  // b + c = a with both positive
        decomposable = true;
        break;
      }
      if (c == b && positive.count(c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  std::sort(simple.begin(), simple.end());
  if (static_cast<int>(simple.size()) != r)
    throw std::runtime_error("simple_roots: found " + std::to_string(simple.size()) +
                             " simple roots, expected " + std::to_string(r));
  return simple;
}

CartanMatrix cartan_matrix(const std::vector<Vec<Rational>>& simple) {
  const int r = static_cast<int>(simple.size());
  CartanMatrix cm;
  cm.a.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational num = 2 * dot(simple[i], simple[j]);
      Rational den = dot(simple[j], simple[j]);
      Rational q = num / den;
      if (q.get_den() != 1)
        throw std::runtime_error("cartan_matrix: non-integer entry");
      long v = q.get_num().get_si();
      if (i == j ? v != 2 : (v > 0 || v < -3))
        throw std::runtime_error("cartan_matrix: entry out of range");
      cm.a[i][j] = v;
    }
  return cm;
}

namespace {

CartanMatrix from_simple_roots(const std::vector<Vec<Rational>>& simple) {
  return cartan_matrix(simple);
}

Vec<Rational> eps(int k, int dim) {
  Vec<Rational> v(dim, Rational(0));
  v[k] = 1;
  return v;
}

std::vector<std::pair<std::string, CartanMatrix>> catalog(int r) {
  std::vector<std::pair<std::string, CartanMatrix>> out;
  auto add = [&](const std::string& name, const std::vector<Vec<Rational>>& simple) {
    out.emplace_back(name, from_simple_roots(simple));
  };
  {  // A_r
    std::vector<Vec<Rational>> s;
    for (int i = 0; i < r; ++i) {
      Vec<Rational> v(r + 1, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
    add("A" + std::to_string(r), s);
  }
  if (r >= 2) {  // B_r
    std::vector<Vec<Rational>> s;
    for (int i = 0; i + 1 < r; ++i) {
      Vec<Rational> v(r, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
    s.push_back(eps(r - 1, r));
    add("B" + std::to_string(r), s);
  }
  if (r >= 3) {  // C_r
    std::vector<Vec<Rational>> s;
    for (int i = 0; i + 1 < r; ++i) {
      Vec<Rational> v(r, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
    Vec<Rational> v(r, Rational(0));
    v[r - 1] = 2;
    s.push_back(v);
    add("C" + std::to_string(r), s);
  }
  if (r >= 4) {  // D_r
    std::vector<Vec<Rational>> s;
    for (int i = 0; i + 1 < r; ++i) {
      Vec<Rational> v(r, Rational(0));
      v[i] = 1;
      v[i + 1] = -1;
      s.push_back(v);
    }
    Vec<Rational> v(r, Rational(0));
    v[r - 2] = 1;
    v[r - 1] = 1;
    s.push_back(v);
    add("D" + std::to_string(r), s);
  }
  if (r == 2) {
    std::vector<Vec<Rational>> s = {{Rational(1), Rational(-1), Rational(0)},
                                    {Rational(-2), Rational(1), Rational(1)}};
    add("G2", s);
  }
  if (r == 4) {
    std::vector<Vec<Rational>> s = {
        {Rational(0), Rational(1), Rational(-1), Rational(0)},
        {Rational(0), Rational(0), Rational(1), Rational(-1)},
        {Rational(0), Rational(0), Rational(0), Rational(1)},
        {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)}};
    add("F4", s);
  }
  if (r >= 6 && r <= 8) {  // E_r from the Bourbaki E8 list
    std::vector<Vec<Rational>> e8;
    Vec<Rational> a1(8, Rational(-1, 2));
    a1[0] = Rational(1, 2);
    a1[7] = Rational(1, 2);
    e8.push_back(a1);
    Vec<Rational> a2(8, Rational(0));
    a2[0] = 1;
    a2[1] = 1;
    e8.push_back(a2);
    for (int i = 0; i < 6; ++i) {
      Vec<Rational> v(8, Rational(0));
      v[i] = -1;
      v[i + 1] = 1;
      e8.push_back(v);
    }
    std::vector<Vec<Rational>> s(e8.begin(), e8.begin() + r);
    add("E" + std::to_string(r), s);
  }
  return out;
}

bool matches_up_to_reordering(const CartanMatrix& a, const CartanMatrix& b) {
  const int r = a.rank();
  if (b.rank() != r) return false;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j)
        if (a.a[i][j] != b.a[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::string classify_dynkin(const CartanMatrix& cm) {
  for (const auto& [name, cat] : catalog(cm.rank()))
    if (matches_up_to_reordering(cm, cat)) return name;
  throw std::runtime_error("classify_dynkin: unrecognized Cartan matrix");
}

IdentifyResult identify(const KillingAlgebra& ka) {
  IdentifyResult res;
  res.sphere = ka.n;
  res.dim = ka.dim();
  Mat<Rational> kappa = killing_form(ka);
  res.signature = ldlt_signature(kappa);
  res.mixed_block_zero = true;
  for (int x = 0; x < ka.dim0 && res.mixed_block_zero; ++x)
    for (int y = ka.dim0; y < ka.dim(); ++y)
      if (sgn(kappa(x, y)) != 0) {
        res.mixed_block_zero = false;
        break;
      }

  std::vector<int> h = cartan_subalgebra(ka);
  // Torus proportionality certificate for the Euclidean form on torus
  // coordinates: kappa(h_i, h_j) = c delta_ij with one common c.
  for (size_t a = 0; a < h.size(); ++a)
    for (size_t b = 0; b < h.size(); ++b) {
      if (a == b) {
        if (kappa(h[a], h[a]) != kappa(h[0], h[0]))
          throw std::runtime_error("identify: torus elements have unequal norms");
      } else if (sgn(kappa(h[a], h[b])) != 0) {
        throw std::runtime_error("identify: torus elements not kappa-orthogonal");
      }
    }

  RootSystem rs = root_system(ka, h);
  res.rank = rs.rank;
  res.root_count = static_cast<int>(rs.roots.size());
  std::vector<Vec<Rational>> simple = simple_roots(rs);
  res.cartan = cartan_matrix(simple);
  res.dynkin_type = classify_dynkin(res.cartan);

  std::set<Rational> lengths;
  for (const auto& a : rs.roots) lengths.insert(dot(a, a));
  res.distinct_root_lengths = static_cast<int>(lengths.size());
  res.length_ratio_sq = *lengths.rbegin() / *lengths.begin();
  return res;
}

}  // namespace ksph
