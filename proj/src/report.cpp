#include "ksph/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ksph/geometry.hpp"
#include "ksph/identify.hpp"
#include "ksph/killing.hpp"
#include "ksph/rep.hpp"

namespace ksph::reports {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

json finish(const std::string& command, bool pass, json payload, Clock::time_point t0) {
  return json{{"command", command},
              {"status", pass ? "PASS" : "FAIL"},
              {"payload", std::move(payload)},
              {"wall_ms", ms_since(t0)}};
}

std::uint64_t choose3(std::uint64_t d) { return d * (d - 1) * (d - 2) / 6; }

int expected_dim(int sphere) {
  switch (sphere) {
    case 7: return 36;
    case 8: return 52;
    case 15: return 248;
  }
  throw std::invalid_argument("unsupported sphere: " + std::to_string(sphere));
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace

json build_report(int sphere, const std::string& export_path) {
  auto t0 = Clock::now();
  KillingAlgebra ka = build_killing_algebra(sphere);

  bool dims_ok = ka.dim() == expected_dim(sphere);
  bool denom_ok = true;
  std::uint64_t nonzero = 0;
  for (const auto& row : ka.sc)
    for (const auto& [z, c] : row) {
      (void)z;
      ++nonzero;
      if (Integer(4) % c.get_den() != 0) denom_ok = false;
    }

  json payload{{"sphere", sphere},
               {"dim0", ka.dim0},
               {"dim1", ka.dim1},
               {"dim", ka.dim()},
               {"expected_dim", expected_dim(sphere)},
               {"nonzero_table_entries", nonzero},
               {"denominators_divide_4", denom_ok}};

  bool pass = dims_ok && denom_ok;
  if (!export_path.empty()) {
    export_structure_constants(ka, export_path);
    StructureConstantFile in = import_structure_constants(export_path);
    StructureConstantFile ref = exported_table(ka);
    bool roundtrip = in.n == ref.n && in.dim == ref.dim && in.entries == ref.entries;
    payload["export"] = json{{"path", export_path},
                             {"entries", ref.entries.size()},
                             {"roundtrip", roundtrip}};
    pass = pass && roundtrip;
  }
  return finish("build", pass, std::move(payload), t0);
}

json jacobi_report(int sphere, const std::string& mode, std::uint64_t seed, std::uint64_t count) {
  auto t0 = Clock::now();
  JacobiMode m;
  if (mode == "exhaustive") m = JacobiMode::Exhaustive;
  else if (mode == "spinor") m = JacobiMode::SpinorTriples;
  else if (mode == "sample") m = JacobiMode::Sampled;
  else throw std::invalid_argument("unknown jacobi mode: " + mode);

  KillingAlgebra ka = build_killing_algebra(sphere);
  std::uint64_t expected = m == JacobiMode::Exhaustive ? choose3(ka.dim())
                         : m == JacobiMode::SpinorTriples ? choose3(ka.dim1)
                                                          : count;
  JacobiReport jr = verify_jacobi(ka, m, seed, count);

  json payload{{"sphere", sphere},
               {"mode", mode},
               {"triples_checked", jr.triples_checked},
               {"expected_triples", expected},
               {"nonzero_jacobiators", jr.nonzero_jacobiators},
               {"max_abs_numerator", jr.max_abs_numerator.get_str()}};
  if (m == JacobiMode::Sampled) {
    payload["seed"] = seed;
    payload["count"] = count;
  }
  bool pass = jr.passed() && jr.triples_checked == expected;
  return finish("verify jacobi", pass, std::move(payload), t0);
}

json identify_report(int sphere) {
  auto t0 = Clock::now();
  struct Expected {
    int rank, roots, lengths;
    const char* type;
    const char* ratio;
  };
  std::map<int, Expected> want{{7, {4, 32, 2, "B4", "2"}},
                               {8, {4, 48, 2, "F4", "2"}},
                               {15, {8, 240, 1, "E8", "1"}}};
  const Expected& w = want.at(sphere);

  KillingAlgebra ka = build_killing_algebra(sphere);
  IdentifyResult r = identify(ka);

  auto [p, mneg, z] = r.signature;
  json cart = json::array();
  for (const auto& row : r.cartan.a) cart.push_back(row);

  json payload{{"sphere", sphere},
               {"dim", r.dim},
               {"signature", {p, mneg, z}},
               {"mixed_block_zero", r.mixed_block_zero},
               {"rank", r.rank},
               {"root_count", r.root_count},
               {"cartan_matrix", cart},
               {"dynkin_type", r.dynkin_type},
               {"distinct_root_lengths", r.distinct_root_lengths},
               {"length_ratio_sq", rat_str(r.length_ratio_sq)},
               {"expected", {{"dim", expected_dim(sphere)},
                             {"signature", {0, expected_dim(sphere), 0}},
                             {"rank", w.rank},
                             {"root_count", w.roots},
                             {"dynkin_type", w.type},
                             {"distinct_root_lengths", w.lengths},
                             {"length_ratio_sq", w.ratio}}}};

  bool pass = r.dim == expected_dim(sphere) && p == 0 && z == 0 && mneg == r.dim &&
              r.mixed_block_zero && r.rank == w.rank && r.root_count == w.roots &&
              r.dynkin_type == w.type && r.distinct_root_lengths == w.lengths &&
              rat_str(r.length_ratio_sq) == w.ratio;
  return finish("identify", pass, std::move(payload), t0);
}

namespace {

// Fixture grammar: see data/rep_d4.txt.
struct FixtureLine {
  std::string op;          // wedge2 | wedge3 | tensor | trivialtensor
  std::string a, b;        // operand spellings (b empty for wedge ops)
  std::vector<std::string> expected_summands;
  long long expected_trivial = 0;
};

struct Fixture {
  AlgebraType algebra{Series::B, 0};
  std::vector<FixtureLine> lines;
  std::map<std::string, HighestWeight> symbols;
};

AlgebraType parse_algebra(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'B' && s[0] != 'D'))
    throw std::runtime_error("fixture: bad algebra " + s);
  return {s[0] == 'B' ? Series::B : Series::D, std::stoi(s.substr(1))};
}

Fixture parse_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture: cannot open " + path);
  Fixture fx;
  bool have_algebra = false;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "algebra") {
      fx.algebra = parse_algebra(tok.at(1));
      have_algebra = true;
    } else if (tok[0] == "let") {
      if (tok.size() != 4 || tok[2] != "=") throw std::runtime_error("fixture: bad let line");
      fx.symbols[tok[1]] = parse_bracket(tok[3]);
    } else if (tok[0] == "wedge2" || tok[0] == "wedge3") {
      if (tok.size() < 4 || tok[2] != "=") throw std::runtime_error("fixture: bad wedge line");
      FixtureLine fl{tok[0], tok[1], "", {tok.begin() + 3, tok.end()}, 0};
      fx.lines.push_back(std::move(fl));
    } else if (tok[0] == "tensor") {
      if (tok.size() < 5 || tok[3] != "=") throw std::runtime_error("fixture: bad tensor line");
      FixtureLine fl{tok[0], tok[1], tok[2], {tok.begin() + 4, tok.end()}, 0};
      fx.lines.push_back(std::move(fl));
    } else if (tok[0] == "trivialtensor") {
      if (tok.size() != 5 || tok[3] != "=")
        throw std::runtime_error("fixture: bad trivialtensor line");
      FixtureLine fl{tok[0], tok[1], tok[2], {}, std::stoll(tok[4])};
      fx.lines.push_back(std::move(fl));
    } else {
      throw std::runtime_error("fixture: unknown directive " + tok[0]);
    }
  }
  if (!have_algebra || fx.lines.empty())
    throw std::runtime_error("fixture: missing algebra or checks in " + path);
  return fx;
}

HighestWeight resolve(const Fixture& fx, const std::string& arg) {
  if (!arg.empty() && arg[0] == '[') return parse_bracket(arg);
  auto it = fx.symbols.find(arg);
  if (it == fx.symbols.end()) throw std::runtime_error("fixture: unknown symbol " + arg);
  return it->second;
}

}  // namespace

json rep_report(const std::string& rep_case, const std::string& fixtures_dir) {
  auto t0 = Clock::now();
  std::string path = fixtures_dir + "/rep_" + rep_case + ".txt";
  Fixture fx = parse_fixture(path);

  std::map<std::string, Character> cache;
  auto charof = [&](const HighestWeight& hw) -> const Character& {
    auto [it, fresh] = cache.try_emplace(hw.bracket());
    if (fresh) it->second = irreducible_character(fx.algebra, hw);
    return it->second;
  };

  bool pass = true;
  json lines = json::array();
  for (const FixtureLine& fl : fx.lines) {
    json entry{{"op", fl.op}, {"args", json::array({fl.a})}};
    if (!fl.b.empty()) entry["args"].push_back(fl.b);
    if (fl.op == "trivialtensor") {
      long long got = trivial_multiplicity_tensor(charof(resolve(fx, fl.a)),
                                                  charof(resolve(fx, fl.b)));
      entry["computed"] = got;
      entry["expected"] = fl.expected_trivial;
      entry["match"] = got == fl.expected_trivial;
    } else {
      Character c;
      if (fl.op == "tensor") {
        c = tensor_character(charof(resolve(fx, fl.a)), charof(resolve(fx, fl.b)));
      } else {
        c = exterior_power_character(charof(resolve(fx, fl.a)), fl.op == "wedge2" ? 2 : 3);
      }
      entry["input_dim"] = c.dim().get_str();
      std::vector<std::string> got;
      json dims = json::array();
      Integer dim_sum = 0;
      for (const auto& [hw, m] : decompose(c)) {
        Integer d = weyl_dim(fx.algebra, hw);
        for (long long k = 0; k < m; ++k) got.push_back(hw.bracket());
        dims.push_back(json{{"summand", hw.bracket()},
                            {"multiplicity", m},
                            {"dim", d.get_str()}});
        dim_sum += d * Integer(static_cast<long>(m));
      }
      std::sort(got.begin(), got.end());
      std::vector<std::string> want = fl.expected_summands;
      std::sort(want.begin(), want.end());
      entry["computed"] = got;
      entry["expected"] = want;
      entry["summands"] = dims;
      entry["dim_sum"] = dim_sum.get_str();
      entry["match"] = got == want;
    }
    if (!entry["match"].get<bool>()) pass = false;
    lines.push_back(std::move(entry));
  }

  json payload{{"case", rep_case},
               {"algebra", fx.algebra.name()},
               {"fixture", path},
               {"checks", std::move(lines)}};
  return finish("rep check", pass, std::move(payload), t0);
}

json geometry_report(int sphere, int points, std::uint64_t seed) {
  auto t0 = Clock::now();
  KillingAlgebra ka = build_killing_algebra(sphere);
  GeometryReport g = geometry_check(ka, points, seed);

  json payload{{"sphere", sphere},
               {"seed", seed},
               {"points_checked", g.points_checked},
               {"killing_spinors", ka.dim1},
               {"eq_KS_checks", g.ks_checks},
               {"eq_KS_failures", g.ks_failures},
               {"mu_antisymmetry", g.mu_antisymmetry},
               {"squaring_matches", g.squaring_matches},
               {"squaring_killing_eq", g.squaring_killing_eq},
               {"lie_derivative_matches", g.lie_derivative_matches},
               {"properties", {{"leibniz", g.leibniz},
                               {"morphism", g.morphism},
                               {"clifford", g.clifford_compat},
                               {"affine", g.affine}}},
               {"constants", {{"s", rat_str(g.squaring_scale)}, {"sign", g.lie_sign}}}};
  return finish("geometry check", g.passed(), std::move(payload), t0);
}

json report_all(std::uint64_t seed, const std::string& fixtures_dir) {
  auto t0 = Clock::now();
  json subs = json::array();
  for (int n : {7, 8, 15}) {
    subs.push_back(build_report(n));
    subs.push_back(jacobi_report(n, "exhaustive", seed));
    subs.push_back(identify_report(n));
  }
  for (const char* c : {"d4", "b4", "d8"}) subs.push_back(rep_report(c, fixtures_dir));
  for (int n : {7, 8, 15}) subs.push_back(geometry_report(n, 100, seed));

  bool pass = std::all_of(subs.begin(), subs.end(),
                          [](const json& r) { return report_passed(r); });
  json payload{{"seed", seed}, {"reports", std::move(subs)}};
  return finish("report all", pass, std::move(payload), t0);
}

bool report_passed(const json& r) { return r.at("status") == "PASS"; }

json strip_timing(json r) {
  if (r.is_object()) {
    r.erase("wall_ms");
    for (auto& [k, v] : r.items()) {
      (void)k;
      v = strip_timing(v);
    }
  } else if (r.is_array()) {
    for (auto& v : r) v = strip_timing(v);
  }
  return r;
}

}  // namespace ksph::reports
