#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ksph/report.hpp"

#ifndef KSPH_DATA_DIR
#define KSPH_DATA_DIR "data"
#endif

namespace {

using ksph::reports::json;

void summarize_one(const json& r, std::ostream& os) {
  const json& p = r.at("payload");
  std::string what = r.at("command");
  if (p.contains("sphere")) what += " S" + std::to_string(p.at("sphere").get<int>());
  if (p.contains("case")) what += " " + p.at("case").get<std::string>();
  os << "  " << what << ": " << r.at("status").get<std::string>() << "\n";
}

void summarize(const json& r, std::ostream& os) {
  os << r.at("command").get<std::string>() << ": " << r.at("status").get<std::string>() << "\n";
  if (r.at("payload").contains("reports"))
    for (const json& sub : r.at("payload").at("reports")) summarize_one(sub, os);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Killing algebras of the spheres S7, S8, S15 in exact arithmetic"};
  app.require_subcommand(1);

  std::string fixtures_dir = KSPH_DATA_DIR;
  app.add_option("--fixtures", fixtures_dir, "representation fixture directory");
  int threads = 1;
  app.add_option("--threads", threads,
                 "worker cap; scans are deterministic and independent of this");

  int sphere = 7;
  std::string export_path, mode = "exhaustive", rep_case;
  std::uint64_t seed = 0, count = 1000;
  int points = 100;
  std::function<json()> run;

  auto sphere_opt = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--sphere", sphere, "sphere dimension")
                  ->check(CLI::IsMember({7, 8, 15}));
    if (required) o->required();
  };

  CLI::App* build = app.add_subcommand("build", "construct the Killing algebra");
  sphere_opt(build);
  build->add_option("--export", export_path, "write the structure-constant table here");
  build->callback([&] { run = [&] { return ksph::reports::build_report(sphere, export_path); }; });

  CLI::App* verify = app.add_subcommand("verify", "verify algebraic identities");
  verify->require_subcommand(1);
  CLI::App* jacobi = verify->add_subcommand("jacobi", "scan jacobiators for zero");
  sphere_opt(jacobi);
  jacobi->add_option("--mode", mode, "exhaustive | spinor | sample")
      ->check(CLI::IsMember({"exhaustive", "spinor", "sample"}));
  jacobi->add_option("--seed", seed, "sampling seed");
  jacobi->add_option("--count", count, "sampled triple count");
  jacobi->callback(
      [&] { run = [&] { return ksph::reports::jacobi_report(sphere, mode, seed, count); }; });

  CLI::App* identify = app.add_subcommand("identify", "signature, roots, Dynkin type");
  sphere_opt(identify);
  identify->callback([&] { run = [&] { return ksph::reports::identify_report(sphere); }; });

  CLI::App* rep = app.add_subcommand("rep", "representation-theoretic fixtures");
  rep->require_subcommand(1);
  CLI::App* rep_check = rep->add_subcommand("check", "verify a fixture file");
  rep_check->add_option("--case", rep_case, "d4 | b4 | d8")
      ->required()
      ->check(CLI::IsMember({"d4", "b4", "d8"}));
  rep_check->callback(
      [&] { run = [&] { return ksph::reports::rep_report(rep_case, fixtures_dir); }; });

  CLI::App* geometry = app.add_subcommand("geometry", "Killing spinor geometry");
  geometry->require_subcommand(1);
  CLI::App* geo_check = geometry->add_subcommand("check", "verify at rational points");
  sphere_opt(geo_check);
  geo_check->add_option("--points", points, "sample point count");
  geo_check->add_option("--seed", seed, "sampling seed");
  geo_check->callback(
      [&] { run = [&] { return ksph::reports::geometry_report(sphere, points, seed); }; });

  CLI::App* report = app.add_subcommand("report", "aggregate reports");
  CLI::App* report_all = report->add_subcommand("all", "run the full suite");
  report->require_subcommand(1);
  report_all->add_option("--seed", seed, "sampling seed");
  report_all->callback(
      [&] { run = [&] { return ksph::reports::report_all(seed, fixtures_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json rpt;
  try {
    rpt = run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << rpt.dump(2) << "\n";
  summarize(rpt, std::cerr);
  return ksph::reports::report_passed(rpt) ? 0 : 1;
}
