#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ksph/rational.hpp"

namespace ksph {

// Roots-and-weights engine for the B and D series. Weights live in the
// orthogonal (epsilon) coordinate basis, stored doubled so that spinor
// half-integers become odd integers; Dynkin labels are converted at the
// boundary. Rank is capped at 8 (B4, D4, D8 are what we need).

struct RepFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Series { B, D };

struct AlgebraType {
  Series series;
  int rank;

  bool operator==(const AlgebraType& o) const { return series == o.series && rank == o.rank; }
  std::string name() const { return (series == Series::B ? "B" : "D") + std::to_string(rank); }
};

struct HighestWeight {
  std::vector<long> labels;  // Dynkin labels, nonnegative

  bool operator==(const HighestWeight& o) const { return labels == o.labels; }
  bool operator<(const HighestWeight& o) const { return labels < o.labels; }
  std::string bracket() const {  // e.g. [0101]
    std::string s = "[";
    for (long l : labels) s += std::to_string(l);
    return s + "]";
  }
};

HighestWeight parse_bracket(const std::string& s);  // "[0101]" -> labels

// Doubled epsilon coordinates packed 8 bits per coordinate (offset 128).
using WeightKey = std::uint64_t;
WeightKey pack_weight(const std::vector<int>& d2);
std::vector<int> unpack_weight(WeightKey k, int rank);

// Dynkin labels <-> doubled epsilon coordinates of the highest weight.
std::vector<int> doubled_weight(const AlgebraType& t, const HighestWeight& hw);
HighestWeight labels_from_doubled(const AlgebraType& t, const std::vector<int>& d2);

struct Character {
  AlgebraType algebra;
  std::unordered_map<WeightKey, long long> weights;  // multiplicities, may be negative

  Integer dim() const;
  void add(const std::vector<int>& d2, long long m);
};

Integer weyl_dim(const AlgebraType& t, const HighestWeight& hw);

// Freudenthal multiplicities expanded over the full Weyl orbit.
Character irreducible_character(const AlgebraType& t, const HighestWeight& hw);

Character trivial_character(const AlgebraType& t);
Character tensor_character(const Character& c1, const Character& c2);
Character adams_character(const Character& c, int k);  // every weight scaled by k

// Newton identities; k in {2, 3}. Throws RepFailure if a division is
// inexact or a multiplicity comes out negative.
Character exterior_power_character(const Character& c, int k);

// Repeated extraction of the lexicographically largest dominant weight.
std::vector<std::pair<HighestWeight, long long>> decompose(Character c);

// Weyl alternation: mult_0 = sum_w det(w) m(w rho - rho).
long long trivial_multiplicity(const Character& c);
// Same, with m = m_{c1 (x) c2} evaluated lazily (avoids materializing the
// tensor product; used for the rank-8 cases).
long long trivial_multiplicity_tensor(const Character& c1, const Character& c2);

}  // namespace ksph
