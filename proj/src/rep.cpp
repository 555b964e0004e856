#include "ksph/rep.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace ksph {

namespace {

constexpr int kMaxRank = 8;

void check_rank(const AlgebraType& t) {
  if (t.rank < 2 || t.rank > kMaxRank)
    throw RepFailure("rep: rank " + std::to_string(t.rank) + " unsupported");
}

// Positive roots in doubled coordinates (entries 0, +-2).
std::vector<std::vector<int>> positive_roots(const AlgebraType& t) {
  const int r = t.rank;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      std::vector<int> a(r, 0), b(r, 0);
      a[i] = 2;
      a[j] = -2;
      b[i] = 2;
      b[j] = 2;
      roots.push_back(a);
      roots.push_back(b);
    }
  if (t.series == Series::B)
    for (int i = 0; i < r; ++i) {
      std::vector<int> a(r, 0);
      a[i] = 2;
      roots.push_back(a);
    }
  return roots;
}

std::vector<int> doubled_rho(const AlgebraType& t) {
  std::vector<int> rho(t.rank);
  for (int i = 0; i < t.rank; ++i)
    rho[i] = (t.series == Series::B) ? 2 * (t.rank - 1 - i) + 1 : 2 * (t.rank - 1 - i);
  return rho;
}

long idot(const std::vector<int>& a, const std::vector<int>& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

bool is_dominant(const AlgebraType& t, const std::vector<int>& d2) {
  const int r = t.rank;
  for (int i = 0; i + 2 < r; ++i)
    if (d2[i] < d2[i + 1]) return false;
  if (t.series == Series::B) return d2[r - 2] >= d2[r - 1] && d2[r - 1] >= 0;
  return d2[r - 2] >= std::abs(d2[r - 1]);
}

std::vector<int> to_dominant(const AlgebraType& t, std::vector<int> d2) {
  int neg = 0;
  for (int& c : d2) {
    if (c < 0) {
      ++neg;
      c = -c;
    }
  }
  std::sort(d2.begin(), d2.end(), std::greater<int>());
  if (t.series == Series::D && (neg % 2) == 1 && d2[t.rank - 1] != 0)
    d2[t.rank - 1] = -d2[t.rank - 1];
  return d2;
}

}  // namespace

HighestWeight parse_bracket(const std::string& s) {
  if (s.size() < 3 || s.front() != '[' || s.back() != ']')
    throw RepFailure("parse_bracket: expected [d1...dr], got " + s);
  HighestWeight hw;
  for (size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw RepFailure("parse_bracket: bad digit in " + s);
    hw.labels.push_back(s[i] - '0');
  }
  return hw;
}

WeightKey pack_weight(const std::vector<int>& d2) {
  WeightKey k = 0;
  for (size_t i = 0; i < d2.size(); ++i) {
    int v = d2[i] + 128;
    if (v < 0 || v > 255) throw RepFailure("pack_weight: coordinate out of range");
    k |= static_cast<WeightKey>(static_cast<unsigned>(v)) << (8 * i);
  }
  return k;
}

std::vector<int> unpack_weight(WeightKey k, int rank) {
  std::vector<int> d2(rank);
  for (int i = 0; i < rank; ++i) d2[i] = static_cast<int>((k >> (8 * i)) & 0xff) - 128;
  return d2;
}

std::vector<int> doubled_weight(const AlgebraType& t, const HighestWeight& hw) {
  check_rank(t);
  const int r = t.rank;
  if (static_cast<int>(hw.labels.size()) != r) throw RepFailure("doubled_weight: label count");
  for (long l : hw.labels)
    if (l < 0) throw RepFailure("doubled_weight: negative label");
  std::vector<int> d2(r, 0);
  if (t.series == Series::B) {
    // omega_k = e_1+...+e_k (k < r), omega_r = (e_1+...+e_r)/2
    for (int i = 0; i < r; ++i) {
      long s = 0;
      for (int k = i; k < r - 1; ++k) s += hw.labels[k];
      d2[i] = static_cast<int>(2 * s + hw.labels[r - 1]);
    }
  } else {
    // omega_k = e_1+...+e_k (k <= r-2),
    // omega_{r-1} = (e_1+...+e_{r-1}-e_r)/2, omega_r = (e_1+...+e_r)/2
    for (int i = 0; i < r - 1; ++i) {
      long s = 0;
      for (int k = i; k < r - 2; ++k) s += hw.labels[k];
      d2[i] = static_cast<int>(2 * s + hw.labels[r - 2] + hw.labels[r - 1]);
    }
    d2[r - 1] = static_cast<int>(hw.labels[r - 1] - hw.labels[r - 2]);
  }
  return d2;
}

HighestWeight labels_from_doubled(const AlgebraType& t, const std::vector<int>& d2) {
  const int r = t.rank;
  HighestWeight hw;
  hw.labels.resize(r);
  auto half = [](int v) {
    if (v % 2 != 0) throw RepFailure("labels_from_doubled: non-integral label");
    return static_cast<long>(v / 2);
  };
  if (t.series == Series::B) {
    for (int i = 0; i + 1 < r; ++i) hw.labels[i] = half(d2[i] - d2[i + 1]);
    hw.labels[r - 1] = d2[r - 1];
  } else {
    for (int i = 0; i + 2 < r; ++i) hw.labels[i] = half(d2[i] - d2[i + 1]);
    hw.labels[r - 2] = half(d2[r - 2] - d2[r - 1]);
    hw.labels[r - 1] = half(d2[r - 2] + d2[r - 1]);
  }
  for (long l : hw.labels)
    if (l < 0) throw RepFailure("labels_from_doubled: weight not dominant");
  return hw;
}

Integer Character::dim() const {
  Integer d = 0;
  for (const auto& [k, m] : weights) d += static_cast<long>(m);
  return d;
}

void Character::add(const std::vector<int>& d2, long long m) {
  if (m == 0) return;
  WeightKey k = pack_weight(d2);
  auto it = weights.find(k);
  if (it == weights.end()) {
    weights.emplace(k, m);
  } else {
    it->second += m;
    if (it->second == 0) weights.erase(it);
  }
}

Integer weyl_dim(const AlgebraType& t, const HighestWeight& hw) {
  std::vector<int> lam = doubled_weight(t, hw);
  std::vector<int> rho = doubled_rho(t);
  std::vector<int> lr(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) lr[i] = lam[i] + rho[i];
  Integer num = 1, den = 1;
  for (const auto& a : positive_roots(t)) {
    num *= Integer(idot(lr, a));
    den *= Integer(idot(rho, a));
  }
  if (num % den != 0) throw RepFailure("weyl_dim: inexact division");
  return num / den;
}

namespace {

// All dominant weights mu <= lambda in the same coset of the root
// lattice, together with the height of lambda - mu.
struct DominantCandidate {
  std::vector<int> d2;
  long height;
};

std::vector<DominantCandidate> dominant_candidates(const AlgebraType& t,
                                                   const std::vector<int>& lam) {
  const int r = t.rank;
  const int parity = ((lam[0] % 2) + 2) % 2;
  std::vector<DominantCandidate> out;
  std::vector<int> v(r, 0);

  auto accept = [&](const std::vector<int>& mu) {
    // delta = lambda - mu must lie in the positive root cone; compute
    // the simple-root coefficients c_i (true units) and the height.
    std::vector<long> s(r);  // partial sums of delta in true units
    long run = 0;
    for (int i = 0; i < r; ++i) {
      if ((lam[i] - mu[i]) % 2 != 0) return;  // wrong coset
      run += (lam[i] - mu[i]) / 2;
      s[i] = run;
    }
    long height = 0;
    if (t.series == Series::B) {
      for (int i = 0; i < r; ++i) {
        if (s[i] < 0) return;
        height += s[i];
      }
    } else {
      long dr = (lam[r - 1] - mu[r - 1]) / 2;
      for (int i = 0; i + 2 < r; ++i) {
        if (s[i] < 0) return;
        height += s[i];
      }
      long twice_cm1 = s[r - 2] - dr, twice_cr = s[r - 2] + dr;
      if (twice_cm1 < 0 || twice_cr < 0 || twice_cm1 % 2 != 0 || twice_cr % 2 != 0) return;
      height += (twice_cm1 + twice_cr) / 2;
    }
    out.push_back({mu, height});
  };

  // Non-increasing sequences bounded by lam[0], last coordinate
  // nonnegative for B and >= -v[r-2] for D.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      accept(v);
      return;
    }
    int hi = (pos == 0) ? lam[0] : v[pos - 1];
    int lo = 0;
    if (t.series == Series::D && pos == r - 1) lo = -v[pos - 1];
    // keep the coset parity coordinate-wise
    for (int val = hi; val >= lo; --val) {
      if (((val % 2) + 2) % 2 != parity) continue;
      v[pos] = val;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Character irreducible_character(const AlgebraType& t, const HighestWeight& hw) {
  check_rank(t);
  std::vector<int> lam = doubled_weight(t, hw);
  std::vector<int> rho = doubled_rho(t);
  std::vector<std::vector<int>> roots = positive_roots(t);

  std::vector<DominantCandidate> cand = dominant_candidates(t, lam);
  std::sort(cand.begin(), cand.end(),
            [](const DominantCandidate& a, const DominantCandidate& b) {
              return a.height != b.height ? a.height < b.height : a.d2 > b.d2;
            });

  std::vector<int> lr(lam.size());
  for (size_t i = 0; i < lam.size(); ++i) lr[i] = lam[i] + rho[i];
  const long lr2 = idot(lr, lr);

  std::unordered_map<WeightKey, long long> mult;  // dominant weights only
  for (const auto& c : cand) {
    if (c.height == 0) {
      mult[pack_weight(c.d2)] = 1;
      continue;
    }
    std::vector<int> mr(c.d2.size());
    for (size_t i = 0; i < mr.size(); ++i) mr[i] = c.d2[i] + rho[i];
    long denom = lr2 - idot(mr, mr);
    if (denom <= 0) throw RepFailure("freudenthal: nonpositive denominator");
    long num = 0;
    std::vector<int> w(c.d2.size());
    for (const auto& a : roots) {
      for (int k = 1; k < 512; ++k) {
        for (size_t i = 0; i < w.size(); ++i) w[i] = c.d2[i] + k * a[i];
        auto it = mult.find(pack_weight(to_dominant(t, w)));
        if (it == mult.end()) break;  // alpha-strings are unbroken
        num += it->second * idot(w, a);
      }
    }
    num *= 2;
    if (num % denom != 0) throw RepFailure("freudenthal: inexact division");
    long long m = num / denom;
    if (m > 0) mult[pack_weight(c.d2)] = m;
  }

  // Expand each dominant weight over its Weyl orbit.
  Character ch{t, {}};
  const int r = t.rank;
  for (const auto& [key, m] : mult) {
    std::vector<int> dom = unpack_weight(key, r);
    int base_neg = 0;
    bool has_zero = false;
    std::vector<int> absv(r);
    for (int i = 0; i < r; ++i) {
      if (dom[i] < 0) ++base_neg;
      if (dom[i] == 0) has_zero = true;
      absv[i] = std::abs(dom[i]);
    }
    std::set<std::vector<int>> signed_multisets;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      int flips = 0;
      bool flips_zero = false;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) {
          if (absv[i] == 0) flips_zero = true;
          ++flips;
        }
      if (flips_zero) continue;  // identity flip; avoid duplicates
      if (t.series == Series::D && !has_zero && (flips % 2) != (base_neg % 2)) continue;
      std::vector<int> s(absv);
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) s[i] = -s[i];
      std::sort(s.begin(), s.end());
      signed_multisets.insert(std::move(s));
    }
    for (std::vector<int> s : signed_multisets) {
      do {
        auto [it, fresh] = ch.weights.emplace(pack_weight(s), m);
        if (!fresh) it->second += m;
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }

  if (ch.dim() != weyl_dim(t, hw))
    throw RepFailure("irreducible_character: dimension mismatch for " + hw.bracket());
  return ch;
}

Character trivial_character(const AlgebraType& t) {
  Character ch{t, {}};
  ch.add(std::vector<int>(t.rank, 0), 1);
  return ch;
}

Character tensor_character(const Character& c1, const Character& c2) {
  if (!(c1.algebra == c2.algebra)) throw RepFailure("tensor_character: algebra mismatch");
  const int r = c1.algebra.rank;
  Character out{c1.algebra, {}};
  out.weights.reserve(c1.weights.size());
  for (const auto& [k1, m1] : c1.weights) {
    std::vector<int> a = unpack_weight(k1, r);
    for (const auto& [k2, m2] : c2.weights) {
      std::vector<int> b = unpack_weight(k2, r);
      for (int i = 0; i < r; ++i) b[i] += a[i];
      auto [it, fresh] = out.weights.emplace(pack_weight(b), m1 * m2);
      if (!fresh) {
        it->second += m1 * m2;
        if (it->second == 0) out.weights.erase(it);
      }
    }
  }
  return out;
}

Character adams_character(const Character& c, int k) {
  if (k <= 0) throw RepFailure("adams_character: k must be positive");
  const int r = c.algebra.rank;
  Character out{c.algebra, {}};
  for (const auto& [key, m] : c.weights) {
    std::vector<int> w = unpack_weight(key, r);
    for (int& x : w) x *= k;
    out.add(w, m);
  }
  return out;
}

namespace {

Character scaled_difference(const Character& a, const Character& b, long long bscale,
                            long long divisor, const Character& c3 = {{Series::B, 2}, {}},
                            long long cscale = 0) {
  Character out{a.algebra, {}};
  std::unordered_map<WeightKey, long long> acc = a.weights;
  for (const auto& [k, m] : b.weights) acc[k] -= bscale * m;
  for (const auto& [k, m] : c3.weights) acc[k] += cscale * m;
  for (const auto& [k, m] : acc) {
    if (m == 0) continue;
    if (m % divisor != 0) throw RepFailure("exterior_power_character: inexact division");
    long long q = m / divisor;
    if (q < 0) throw RepFailure("exterior_power_character: negative multiplicity");
    out.weights.emplace(k, q);
  }
  return out;
}

}  // namespace

Character exterior_power_character(const Character& c, int k) {
  for (const auto& [key, m] : c.weights)
    if (m < 0) throw RepFailure("exterior_power_character: input is virtual");
  Character sq = tensor_character(c, c);
  Character psi2 = adams_character(c, 2);
  if (k == 2) return scaled_difference(sq, psi2, 1, 2);
  if (k == 3) {
    // (chi^3 - 3 chi psi^2(chi) + 2 psi^3(chi)) / 6
    Character cube = tensor_character(sq, c);
    Character mixed = tensor_character(c, psi2);
    Character psi3 = adams_character(c, 3);
    return scaled_difference(cube, mixed, 3, 6, psi3, 2);
  }
  throw RepFailure("exterior_power_character: k must be 2 or 3");
}

std::vector<std::pair<HighestWeight, long long>> decompose(Character c) {
  const AlgebraType t = c.algebra;
  const int r = t.rank;
  std::vector<std::pair<HighestWeight, long long>> out;
  while (!c.weights.empty()) {
    bool found = false;
    std::vector<int> best;
    long long best_m = 0;
    for (const auto& [key, m] : c.weights) {
      if (m == 0) continue;
      std::vector<int> w = unpack_weight(key, r);
      if (!is_dominant(t, w)) continue;
      if (!found || w > best) {
        best = w;
        best_m = m;
        found = true;
      }
    }
    if (!found) throw RepFailure("decompose: nonzero character with no dominant weight");
    if (best_m < 0) throw RepFailure("decompose: negative multiplicity (not a true character)");
    HighestWeight hw = labels_from_doubled(t, best);
    out.emplace_back(hw, best_m);
    Character irr = irreducible_character(t, hw);
    for (const auto& [key, m] : irr.weights) {
      auto it = c.weights.find(key);
      long long nv = (it == c.weights.end() ? 0 : it->second) - best_m * m;
      if (nv == 0) {
        if (it != c.weights.end()) c.weights.erase(it);
      } else if (it == c.weights.end()) {
        throw RepFailure("decompose: negative multiplicity (not a true character)");
      } else {
        it->second = nv;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Dense bounding-box lookup over a character's support.
struct DenseLookup {
  int rank;
  std::array<int, kMaxRank> lo{}, hi{};
  std::array<long long, kMaxRank> stride{};
  std::vector<long long> cells;

  explicit DenseLookup(const Character& c) : rank(c.algebra.rank) {
    lo.fill(1 << 20);
    hi.fill(-(1 << 20));
    for (const auto& [key, m] : c.weights) {
      std::vector<int> w = unpack_weight(key, rank);
      for (int i = 0; i < rank; ++i) {
        lo[i] = std::min(lo[i], w[i]);
        hi[i] = std::max(hi[i], w[i]);
      }
    }
    long long total = 1;
    for (int i = 0; i < rank; ++i) {
      stride[i] = total;
      total *= hi[i] - lo[i] + 1;
      if (total > (1ll << 28)) throw RepFailure("trivial_multiplicity: support box too large");
    }
    cells.assign(total, 0);
    for (const auto& [key, m] : c.weights) {
      std::vector<int> w = unpack_weight(key, rank);
      long long idx = 0;
      for (int i = 0; i < rank; ++i) idx += stride[i] * (w[i] - lo[i]);
      cells[idx] = m;
    }
  }

  long long get(const int* w) const {
    long long idx = 0;
    for (int i = 0; i < rank; ++i) {
      if (w[i] < lo[i] || w[i] > hi[i]) return 0;
      idx += stride[i] * (w[i] - lo[i]);
    }
    return cells[idx];
  }
};

int permutation_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Runs f(v = w rho - rho, det w) over the whole Weyl group.
template <class F>
void for_each_weyl_shift(const AlgebraType& t, F&& f) {
  const int r = t.rank;
  std::vector<int> rho = doubled_rho(t);
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  std::vector<int> v(r);
  do {
    int psign = permutation_sign(perm);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      int flips = __builtin_popcount(mask);
      int det;
      if (t.series == Series::B) {
        det = (flips % 2 == 0) ? psign : -psign;
      } else {
        if (flips % 2 != 0) continue;
        det = psign;
      }
      for (int i = 0; i < r; ++i) {
        int x = rho[perm[i]];
        if (mask & (1u << i)) x = -x;
        v[i] = x - rho[i];
      }
      f(v, det);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

long long trivial_multiplicity(const Character& c) {
  DenseLookup lut(c);
  long long total = 0;
  for_each_weyl_shift(c.algebra, [&](const std::vector<int>& v, int det) {
    total += det * lut.get(v.data());
  });
  return total;
}

long long trivial_multiplicity_tensor(const Character& c1, const Character& c2) {
  if (!(c1.algebra == c2.algebra)) throw RepFailure("trivial_multiplicity_tensor: mismatch");
  const int r = c1.algebra.rank;
  std::vector<std::pair<std::array<int, kMaxRank>, long long>> supp;
  supp.reserve(c1.weights.size());
  for (const auto& [key, m] : c1.weights) {
    std::vector<int> w = unpack_weight(key, r);
    std::array<int, kMaxRank> a{};
    std::copy(w.begin(), w.end(), a.begin());
    supp.emplace_back(a, m);
  }
  DenseLookup lut(c2);
  long long total = 0;
  std::array<int, kMaxRank> u{};
  for_each_weyl_shift(c1.algebra, [&](const std::vector<int>& v, int det) {
    long long s = 0;
    for (const auto& [mu, m1] : supp) {
      for (int i = 0; i < r; ++i) u[i] = v[i] - mu[i];
      s += m1 * lut.get(u.data());
    }
    total += det * s;
  });
  return total;
}

}  // namespace ksph
