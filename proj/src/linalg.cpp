#include "ksph/linalg.hpp"

namespace ksph {

std::tuple<int, int, int> ldlt_signature(Mat<Rational> a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("ldlt_signature: matrix not square");
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (a(r, c) != a(c, r)) throw std::invalid_argument("ldlt_signature: matrix not symmetric");

  auto sym_swap = [&](int i, int j) {
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  auto sym_add = [&](int i, int j) {  // row/col i += row/col j
    for (int c = 0; c < n; ++c) a(i, c) += a(j, c);
    for (int r = 0; r < n; ++r) a(r, i) += a(r, j);
  };

  int np = 0, nm = 0, nz = 0;
  for (int k = 0; k < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      int jd = -1, jo = -1;
      for (int j = k + 1; j < n; ++j) {
        if (jd < 0 && sgn(a(j, j)) != 0) jd = j;
        if (jo < 0 && sgn(a(k, j)) != 0) jo = j;
      }
      if (jd >= 0)
        sym_swap(k, jd);
      else if (jo >= 0)
        sym_add(k, jo);  // pivot becomes 2*a(k,jo) since both diagonals vanish
      else {
        ++nz;  // row k (and column k) are zero on the trailing block
        continue;
      }
    }
    const Rational piv = a(k, k);
    (sgn(piv) > 0 ? np : nm)++;
    for (int r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      Rational f = a(r, k) / piv;
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (int c = 0; c < n; ++c) a(c, r) = a(r, c);  // keep symmetry on the trailing block
    }
    for (int c = k + 1; c < n; ++c) a(k, c) = 0;
  }
  return {np, nm, nz};
}

namespace {

// Restrict op to span(basis): columns of `basis` are ambient vectors.
Mat<GaussianRational> apply_to_basis(const SparseMatrix<GaussianRational>& op,
                                     const std::vector<Vec<GaussianRational>>& basis) {
  const int d = op.rows();
  Mat<GaussianRational> out(d, static_cast<int>(basis.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    Vec<GaussianRational> w = op.apply(basis[j]);
    for (int r = 0; r < d; ++r) out(r, static_cast<int>(j)) = std::move(w[r]);
  }
  return out;
}

}  // namespace

std::vector<JointEigenspace> simultaneous_eigenspaces(
    const std::vector<SparseMatrix<GaussianRational>>& ops,
    const std::vector<std::vector<GaussianRational>>& candidates) {
  if (ops.empty()) return {};
  const int d = ops[0].rows();
  for (const auto& op : ops)
    if (op.rows() != d || op.cols() != d)
      throw std::invalid_argument("simultaneous_eigenspaces: operator size mismatch");
  if (candidates.size() != ops.size())
    throw std::invalid_argument("simultaneous_eigenspaces: one candidate set per operator required");
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j)
      if (!(ops[i] * ops[j] - ops[j] * ops[i]).entries().empty())
        throw std::invalid_argument("simultaneous_eigenspaces: operators do not commute");

  std::vector<JointEigenspace> current(1);
  current[0].basis.reserve(d);
  for (int k = 0; k < d; ++k) {
    Vec<GaussianRational> e(d);
    e[k] = GaussianRational(1);
    current[0].basis.push_back(std::move(e));
  }

  for (size_t oi = 0; oi < ops.size(); ++oi) {
    std::vector<JointEigenspace> next;
    for (auto& sub : current) {
      const int m = static_cast<int>(sub.basis.size());
      Mat<GaussianRational> img = apply_to_basis(ops[oi], sub.basis);
      int found = 0;
      for (const auto& lambda : candidates[oi]) {
        // kernel of (op - lambda) restricted to the subspace
        Mat<GaussianRational> a = img;
        for (int j = 0; j < m; ++j)
          for (int r = 0; r < ops[oi].rows(); ++r) a(r, j) -= lambda * sub.basis[j][r];
        std::vector<Vec<GaussianRational>> coeffs = kernel_basis(a);
        if (coeffs.empty()) continue;
        JointEigenspace es;
        es.eigenvalue = sub.eigenvalue;
        es.eigenvalue.push_back(lambda);
        for (const auto& c : coeffs) {
          Vec<GaussianRational> v(ops[oi].rows());
          for (int j = 0; j < m; ++j) {
            if (c[j].is_zero()) continue;
            for (int r = 0; r < ops[oi].rows(); ++r) v[r] += c[j] * sub.basis[j][r];
          }
          es.basis.push_back(std::move(v));
        }
        found += static_cast<int>(es.basis.size());
        next.push_back(std::move(es));
      }
      if (found != m)
        throw FailureToSpan("simultaneous_eigenspaces: candidate eigenvalues do not span (got " +
                            std::to_string(found) + " of " + std::to_string(m) + ")");
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace ksph
