// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on
// any failure. Everything is exact, so every check is exact equality.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "ksph/geometry.hpp"
#include "ksph/identify.hpp"
#include "ksph/killing.hpp"
#include "ksph/report.hpp"

#ifndef KSPH_DATA_DIR
#define KSPH_DATA_DIR "data"
#endif

using namespace ksph;
using ksph::reports::json;

namespace {

int failures = 0;

void criterion(int n, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

}  // namespace

int main() {
  std::map<int, KillingAlgebra> ka;
  for (int n : {7, 8, 15}) ka.emplace(n, build_killing_algebra(n));

  // 1. Graded dimensions 36 / 52 / 248.
  {
    bool ok = ka.at(7).dim() == 36 && ka.at(8).dim() == 52 && ka.at(15).dim() == 248;
    criterion(1, ok, "dimensions " + std::to_string(ka.at(7).dim()) + "/" +
                         std::to_string(ka.at(8).dim()) + "/" + std::to_string(ka.at(15).dim()) +
                         ", expected 36/52/248");
  }

  // 2. Jacobi identity: exhaustive scans (the S15 full scan covers the
  // spinor-triple component and all mixed components), plus the
  // spinor-triple count on S15.
  {
    bool ok = true;
    std::string detail;
    for (int n : {7, 8, 15}) {
      JacobiReport r = verify_jacobi(ka.at(n), JacobiMode::Exhaustive);
      std::uint64_t d = ka.at(n).dim();
      ok = ok && r.nonzero_jacobiators == 0 && r.triples_checked == d * (d - 1) * (d - 2) / 6;
      detail += (detail.empty() ? "" : ", ") + std::to_string(r.triples_checked) + " triples";
    }
    JacobiReport sp = verify_jacobi(ka.at(15), JacobiMode::SpinorTriples);
    ok = ok && sp.nonzero_jacobiators == 0 && sp.triples_checked == 341376;
    detail += ", S15 spinor triples " + std::to_string(sp.triples_checked);
    criterion(2, ok, "zero jacobiators over " + detail);
  }

  // 3 & 4. Killing-form signatures and Dynkin identification.
  {
    std::map<int, IdentifyResult> id;
    for (int n : {7, 8, 15}) id.emplace(n, identify(ka.at(n)));

    bool sig_ok = true;
    for (int n : {7, 8, 15}) {
      auto [p, m, z] = id.at(n).signature;
      sig_ok = sig_ok && p == 0 && z == 0 && m == ka.at(n).dim() && id.at(n).mixed_block_zero;
    }
    criterion(3, sig_ok,
              "signatures (0,36,0)/(0,52,0)/(0,248,0), kappa(k0,k1) = 0 blockwise");

    struct Want {
      int rank, roots, lengths;
      const char* type;
      Rational ratio;
    };
    std::map<int, Want> want{{7, {4, 32, 2, "B4", Rational(2)}},
                             {8, {4, 48, 2, "F4", Rational(2)}},
                             {15, {8, 240, 1, "E8", Rational(1)}}};
    bool id_ok = true;
    std::string types;
    for (int n : {7, 8, 15}) {
      const IdentifyResult& r = id.at(n);
      const Want& w = want.at(n);
      id_ok = id_ok && r.rank == w.rank && r.root_count == w.roots && r.dynkin_type == w.type &&
              r.distinct_root_lengths == w.lengths && r.length_ratio_sq == w.ratio;
      types += (types.empty() ? "" : "/") + r.dynkin_type;
    }
    criterion(4, id_ok, "types " + types + " with ranks 4/4/8, root counts 32/48/240");
  }

  // 5. Representation fixtures, with the dimension side conditions.
  {
    bool ok = true;
    std::string detail;
    std::map<std::string, std::string> wedge3_dim{
        {"d4", "56"}, {"b4", "560"}, {"d8", "341376"}};
    for (const char* c : {"d4", "b4", "d8"}) {
      json r = reports::rep_report(c, KSPH_DATA_DIR);
      bool this_ok = reports::report_passed(r);
      for (const json& chk : r.at("payload").at("checks"))
        if (chk.at("op") == "wedge3")
          this_ok = this_ok && chk.at("dim_sum").get<std::string>() == wedge3_dim.at(c);
      ok = ok && this_ok;
      detail += std::string(detail.empty() ? "" : ", ") + c + (this_ok ? " ok" : " FAILED");
    }
    criterion(5, ok, detail + " (wedge3 dims 56/560/341376)");
  }

  // 6. Killing spinor geometry at 100 seeded rational points per sphere.
  {
    bool ok = true;
    std::string detail;
    for (int n : {7, 8, 15}) {
      GeometryReport g = geometry_check(ka.at(n), 100, 0);
      ok = ok && g.passed() && g.points_checked == 100 && g.squaring_scale == Rational(2) &&
           g.lie_sign == -1;
      detail += (detail.empty() ? "" : ", ") + std::to_string(ka.at(n).dim1) + " spinors at " +
                std::to_string(g.points_checked) + " pts";
    }
    criterion(6, ok, detail);
  }

  // 7. Determinism: two full report runs identical modulo wall_ms.
  {
    json r1 = reports::strip_timing(reports::report_all(0, KSPH_DATA_DIR));
    json r2 = reports::strip_timing(reports::report_all(0, KSPH_DATA_DIR));
    bool ok = r1 == r2 && r1.at("status") == "PASS";
    criterion(7, ok, ok ? "two report-all runs byte-identical modulo wall_ms"
                        : "report-all runs differ or failed");
  }

  return failures == 0 ? 0 : 1;
}
