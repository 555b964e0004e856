#include "ksph/killing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ksph {

int KillingAlgebra::pair_index(int i, int j) const {
  // lexicographic rank of (i,j), 1 <= i < j <= n+1
  const int m = n + 1;
  return (i - 1) * m - (i - 1) * i / 2 + (j - i - 1);
}

namespace {

int clifford_n_for_sphere(int n) {
  switch (n) {
    case 7:
    case 8:
    case 15:
      return n;
    default:
      throw std::invalid_argument("build_killing_algebra: unsupported n=" + std::to_string(n));
  }
}

}  // namespace

KillingAlgebra build_killing_algebra(int n) {
  clifford_n_for_sphere(n);
  KillingAlgebra ka;
  ka.n = n;
  ka.ca = build_clifford(n);
  const int m = n + 1;
  ka.dim0 = m * (m - 1) / 2;
  ka.dim1 = ka.ca.module_dim;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) ka.so_labels.emplace_back(i, j);

  const int d = ka.dim();
  ka.sc.assign(static_cast<size_t>(d) * d, {});
  auto put = [&](int x, int y, int z, const Rational& c) {
    if (sgn(c) == 0) return;
    ka.sc[static_cast<size_t>(x) * d + y].emplace_back(z, c);
    ka.sc[static_cast<size_t>(y) * d + x].emplace_back(z, -c);
  };

  // so-so block: [B_p, B_q] via the 2-entry matrices.
  for (int p = 0; p < ka.dim0; ++p) {
    auto [i, j] = ka.so_labels[p];
    for (int q = p + 1; q < ka.dim0; ++q) {
      auto [k, l] = ka.so_labels[q];
      // [E_ij - E_ji, E_kl - E_lk]; nonzero only when an index is shared.
      if (i != k && i != l && j != k && j != l) continue;
      Mat<Rational> a = so_basis_matrix(i, j, m), b = so_basis_matrix(k, l, m);
      Mat<Rational> comm = a * b - b * a;
      for (int r = 0; r < m; ++r)
        for (int c = r + 1; c < m; ++c)
          if (sgn(comm(r, c)) != 0) put(p, q, ka.pair_index(r + 1, c + 1), comm(r, c));
    }
  }

  // so-spinor block: [B_p, s_a] = rho(B_p) s_a.
  std::vector<RhoBasis> rb;
  rb.reserve(ka.dim0);
  for (int p = 0; p < ka.dim0; ++p) {
    auto [i, j] = ka.so_labels[p];
    rb.push_back(rho_basis_perm(i, j, ka.ca));
  }
  for (int p = 0; p < ka.dim0; ++p)
    for (int a = 0; a < ka.dim1; ++a) {
      Rational c = rb[p].coef * rb[p].perm.sign[a];
      put(p, ka.dim0 + a, ka.dim0 + rb[p].perm.img[a], c);
    }

  // spinor-spinor block: [s_a, s_b] = sum_p (rho(B_p) s_a, s_b) B_p.
  // (rho(B_p) s_a, s_b) is nonzero exactly when rho(B_p) maps s_a to
  // a multiple of s_b.
  for (int a = 0; a < ka.dim1; ++a)
    for (int b = a + 1; b < ka.dim1; ++b) {
      std::vector<std::pair<int, Rational>> row;
      for (int p = 0; p < ka.dim0; ++p)
        if (rb[p].perm.img[a] == b) row.emplace_back(p, rb[p].coef * rb[p].perm.sign[a]);
      for (const auto& [p, c] : row) put(ka.dim0 + a, ka.dim0 + b, p, c);
    }

  return ka;
}

SoElement spinor_square(const KillingAlgebra& ka, const Vec<Rational>& s1, const Vec<Rational>& s2) {
  if (static_cast<int>(s1.size()) != ka.dim1 || static_cast<int>(s2.size()) != ka.dim1)
    throw std::invalid_argument("spinor_square: dimension mismatch");
  const int m = ka.n + 1;
  Mat<Rational> out(m, m);
  for (int p = 0; p < ka.dim0; ++p) {
    auto [i, j] = ka.so_labels[p];
    RhoBasis rb = rho_basis_perm(i, j, ka.ca);
    Rational c(0);
    for (int a = 0; a < ka.dim1; ++a) {
      if (sgn(s1[a]) == 0) continue;
      const Rational& t = s2[rb.perm.img[a]];
      if (sgn(t) == 0) continue;
      c += (rb.perm.sign[a] > 0 ? s1[a] : Rational(-s1[a])) * t;
    }
    c *= rb.coef;
    out(i - 1, j - 1) = c;
    out(j - 1, i - 1) = -c;
  }
  return SoElement(std::move(out));
}

Vec<Rational> bracket(const KillingAlgebra& ka, const Vec<Rational>& x, const Vec<Rational>& y) {
  const int d = ka.dim();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("bracket: dimension mismatch");
  Vec<Rational> out(d, Rational(0));
  for (int a = 0; a < d; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < d; ++b) {
      if (sgn(y[b]) == 0) continue;
      Rational f = x[a] * y[b];
      for (const auto& [z, c] : ka.bracket_basis(a, b)) out[z] += f * c;
    }
  }
  return out;
}

Vec<Rational> jacobiator(const KillingAlgebra& ka, const Vec<Rational>& x, const Vec<Rational>& y,
                         const Vec<Rational>& z) {
  Vec<Rational> j = bracket(ka, bracket(ka, x, y), z);
  Vec<Rational> j2 = bracket(ka, bracket(ka, y, z), x);
  Vec<Rational> j3 = bracket(ka, bracket(ka, z, x), y);
  for (size_t k = 0; k < j.size(); ++k) j[k] += j2[k] + j3[k];
  return j;
}

namespace {

// Basis-triple jacobiator with a scratch accumulator; returns true when
// zero and records the largest |numerator| otherwise.
struct TripleChecker {
  const KillingAlgebra& ka;
  std::vector<Rational> scratch;
  std::vector<int> touched;

  explicit TripleChecker(const KillingAlgebra& k) : ka(k), scratch(k.dim(), Rational(0)) {}

  void accumulate(int a, int b, int c) {
    for (const auto& [w, f] : ka.bracket_basis(a, b))
      for (const auto& [z, g] : ka.bracket_basis(w, c)) {
        if (sgn(scratch[z]) == 0) touched.push_back(z);
        scratch[z] += f * g;
      }
  }

  bool check(int x, int y, int z, Integer& max_num) {
    touched.clear();
    accumulate(x, y, z);
    accumulate(y, z, x);
    accumulate(z, x, y);
    bool ok = true;
    for (int t : touched) {
      if (sgn(scratch[t]) != 0) {
        ok = false;
        Integer num = abs(scratch[t].get_num());
        if (num > max_num) max_num = num;
      }
      scratch[t] = 0;
    }
    return ok;
  }
};

}  // namespace

JacobiReport verify_jacobi(const KillingAlgebra& ka, JacobiMode mode, std::uint64_t seed,
                           std::uint64_t count) {
  auto t0 = std::chrono::steady_clock::now();
  JacobiReport rep;
  rep.mode = mode;
  TripleChecker tc(ka);
  const int d = ka.dim();

  auto run_triple = [&](int x, int y, int z) {
    ++rep.triples_checked;
    if (!tc.check(x, y, z, rep.max_abs_numerator)) ++rep.nonzero_jacobiators;
  };

  switch (mode) {
    case JacobiMode::Exhaustive:
      for (int x = 0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
          for (int z = y + 1; z < d; ++z) run_triple(x, y, z);
      break;
    case JacobiMode::SpinorTriples:
      for (int x = ka.dim0; x < d; ++x)
        for (int y = x + 1; y < d; ++y)
          for (int z = y + 1; z < d; ++z) run_triple(x, y, z);
      break;
    case JacobiMode::Sampled: {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> pick(0, d - 1);
      for (std::uint64_t k = 0; k < count; ++k) run_triple(pick(rng), pick(rng), pick(rng));
      break;
    }
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

StructureConstantFile exported_table(const KillingAlgebra& ka) {
  StructureConstantFile f;
  f.n = ka.n;
  f.dim = ka.dim();
  for (int x = 0; x < f.dim; ++x)
    for (int y = x + 1; y < f.dim; ++y) {
      auto row = ka.bracket_basis(x, y);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [z, c] : row) f.entries.emplace_back(x, y, z, c);
    }
  return f;
}

void export_structure_constants(const KillingAlgebra& ka, const std::string& destination) {
  std::ofstream os(destination);
  if (!os) throw std::runtime_error("export_structure_constants: cannot open " + destination);
  StructureConstantFile f = exported_table(ka);
  os << "# killing-algebra n=" << f.n << " dim=" << f.dim << '\n';
  for (const auto& [x, y, z, c] : f.entries)
    os << x << ' ' << y << ' ' << z << ' ' << c.get_num() << ' ' << c.get_den() << '\n';
  if (!os) throw std::runtime_error("export_structure_constants: write failed for " + destination);
}

StructureConstantFile import_structure_constants(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("import_structure_constants: cannot open " + path);
  std::string header;
  std::getline(is, header);
  StructureConstantFile f;
  if (std::sscanf(header.c_str(), "# killing-algebra n=%d dim=%d", &f.n, &f.dim) != 2)
    throw std::runtime_error("import_structure_constants: bad header in " + path);
  int x, y, z;
  std::string p, q;
  while (is >> x >> y >> z >> p >> q) {
    Rational c{Integer(p), Integer(q)};
    c.canonicalize();
    f.entries.emplace_back(x, y, z, c);
  }
  return f;
}

}  // namespace ksph
