#pragma once

#include <string>
#include <vector>

#include "ksph/killing.hpp"
#include "ksph/linalg.hpp"

namespace ksph {

// kappa_{xy} = tr(ad b_x . ad b_y), exact, from the structure constants.
Mat<Rational> killing_form(const KillingAlgebra& ka);

// Standard torus h_i = B_{2i-1,2i}, i = 1..floor((n+1)/2), returned as
// basis indices. Certifies pairwise commutation and that the joint
// centralizer has dimension exactly r; throws on a failed certificate.
std::vector<int> cartan_subalgebra(const KillingAlgebra& ka);

struct RootSystem {
  int rank = 0;
  std::vector<Vec<Rational>> roots;                 // alpha(h_k)/i per coordinate
  std::vector<Vec<GaussianRational>> root_vectors;  // one per root (all root spaces are lines)
};

// Joint ad-eigenvalue extraction over Q(i) with candidates {0, +-i/2, +-i}.
RootSystem root_system(const KillingAlgebra& ka, const std::vector<int>& cartan);

// Positive roots selected by f(alpha) = sum_k N^{r-k} alpha_k, N = 1000;
// simple roots are the positive roots that are not sums of two positive
// roots. Deterministic order (lexicographic).
std::vector<Vec<Rational>> simple_roots(const RootSystem& rs);

struct CartanMatrix {
  std::vector<std::vector<long>> a;
  int rank() const { return static_cast<int>(a.size()); }
};

CartanMatrix cartan_matrix(const std::vector<Vec<Rational>>& simple);

// Matches against the Killing-Cartan catalog (A..G) by brute-force
// reordering of the simple roots. Returns e.g. "B4", "F4", "E8".
std::string classify_dynkin(const CartanMatrix& cm);

struct IdentifyResult {
  int sphere = 0;
  int dim = 0;
  std::tuple<int, int, int> signature;  // of the Killing form
  bool mixed_block_zero = false;        // kappa(k0, k1) = 0
  int rank = 0;
  int root_count = 0;
  CartanMatrix cartan;
  std::string dynkin_type;
  int distinct_root_lengths = 0;
  Rational length_ratio_sq;  // max/min squared root length
};

IdentifyResult identify(const KillingAlgebra& ka);

}  // namespace ksph
