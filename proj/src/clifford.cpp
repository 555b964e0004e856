#include "ksph/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace ksph {

namespace {

// Quaternion multiplication table on the basis (1, i, j, k):
// q_table[a][b] = (sign, index) of e_a * e_b.
struct QEntry {
  int sign;
  int idx;
};

constexpr QEntry kQuat[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

SignedPerm quat_left(int a) {  // x -> e_a * x
  SignedPerm p(4);
  for (int b = 0; b < 4; ++b) {
    p.img[b] = kQuat[a][b].idx;
    p.sign[b] = kQuat[a][b].sign;
  }
  return p;
}

SignedPerm quat_right(int a) {  // x -> x * e_a
  SignedPerm p(4);
  for (int b = 0; b < 4; ++b) {
    p.img[b] = kQuat[b][a].idx;
    p.sign[b] = kQuat[b][a].sign;
  }
  return p;
}

SignedPerm product_all(const std::vector<SignedPerm>& gs) {
  SignedPerm w = SignedPerm::identity(gs[0].dim());
  for (const auto& g : gs) w = w * g;
  return w;
}

// Seven generators of Cl_7 on R^8 = R^2 (x) H, with omega = +1.
std::vector<SignedPerm> cl7_generators() {
  const SignedPerm E = block_E(), F = block_F(), G = block_G();
  const SignedPerm I4 = SignedPerm::identity(4);
  std::vector<SignedPerm> g;
  for (int a = 1; a <= 3; ++a) g.push_back(F.kron(quat_left(a)));
  g.push_back(G.kron(I4));
  for (int a = 1; a <= 3; ++a) g.push_back(E.kron(quat_right(a)));
  // Fix the M+ module: flip the last generator if omega came out as -1.
  if (product_all(g).is_minus_identity()) g.back() = -g.back();
  return g;
}

// Eight generators of Cl_8 on R^16 by doubling Cl_7.
std::vector<SignedPerm> cl8_generators() {
  const SignedPerm F = block_F(), G = block_G();
  std::vector<SignedPerm> g;
  for (const auto& g7 : cl7_generators()) g.push_back(F.kron(g7));
  g.push_back(G.kron(SignedPerm::identity(8)));
  return g;
}

// Bott step: generators of Cl_{k+8} on M_k (x) R^16 from generators of
// Cl_k, as {I (x) Gamma_a} followed by {gamma_b (x) omega_8}.
std::vector<SignedPerm> bott_extend(const std::vector<SignedPerm>& base) {
  std::vector<SignedPerm> g8 = cl8_generators();
  SignedPerm omega8 = product_all(g8);
  const int d = base.empty() ? 1 : base[0].dim();
  SignedPerm id_base = SignedPerm::identity(d);
  std::vector<SignedPerm> out;
  for (const auto& ga : g8) out.push_back(id_base.kron(ga));
  for (const auto& gb : base) out.push_back(gb.kron(omega8));
  return out;
}

}  // namespace

CliffordAlgebra build_clifford(int n) {
  CliffordAlgebra ca;
  ca.n = n;
  switch (n) {
    case 6: {
      auto g7 = cl7_generators();
      ca.gamma.assign(g7.begin(), g7.begin() + 6);
      ca.module_tag = ModuleTag::M;
      break;
    }
    case 7:
      ca.gamma = cl7_generators();
      ca.module_tag = ModuleTag::MPlus;
      break;
    case 8:
      ca.gamma = cl8_generators();
      ca.module_tag = ModuleTag::M;
      break;
    case 9: {
      ca.gamma = bott_extend({block_G()});
      ca.module_tag = ModuleTag::MPlus;  // omega acts as +i via the complex structure
      ca.has_complex_structure = true;
      break;
    }
    case 15:
      ca.gamma = bott_extend(cl7_generators());
      ca.module_tag = ModuleTag::MPlus;
      break;
    case 16:
      ca.gamma = bott_extend(cl8_generators());
      ca.module_tag = ModuleTag::M;
      break;
    default:
      throw std::invalid_argument("build_clifford: unsupported n=" + std::to_string(n));
  }
  ca.module_dim = ca.gamma[0].dim();
  ca.omega = product_all(ca.gamma);
  for (const auto& g : ca.gamma) ca.gammas.push_back(g.sparse());
  ca.omega_sparse = ca.omega.sparse();
  return ca;
}

Vec<Rational> CliffordAlgebra::act(const Vec<Rational>& v, const Vec<Rational>& s) const {
  if (static_cast<int>(v.size()) != n || static_cast<int>(s.size()) != module_dim)
    throw std::invalid_argument("CliffordAlgebra::act: dimension mismatch");
  Vec<Rational> out(module_dim, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    const SignedPerm& g = gamma[i];
    for (int c = 0; c < module_dim; ++c) {
      if (sgn(s[c]) == 0) continue;
      if (g.sign[c] > 0)
        out[g.img[c]] += v[i] * s[c];
      else
        out[g.img[c]] -= v[i] * s[c];
    }
  }
  return out;
}

const SignedPerm& volume_element(const CliffordAlgebra& ca) { return ca.omega; }

std::string dump_gammas(const CliffordAlgebra& ca) {
  std::ostringstream os;
  for (int i = 0; i < ca.n; ++i)
    for (const auto& [k, v] : ca.gammas[i].entries())
      os << (i + 1) << ' ' << k.first << ' ' << k.second << ' ' << v << '\n';
  return os.str();
}

}  // namespace ksph
