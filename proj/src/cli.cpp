#include "homothets/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "homothets/json_io.hpp"
#include "homothets/rng.hpp"

namespace homothets {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void emit(const Json& out, const std::string& path) {
  const std::string text = out.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read " + path);
  Json j;
  file >> j;
  return j;
}

// Body arguments accept a spec string or @path to a polytope JSON file.
ConvexPolytope load_body_arg(const std::string& arg, std::uint64_t seed) {
  if (!arg.empty() && arg[0] == '@')
    return polytope_from_json(read_json_file(arg.substr(1)));
  return make_body(parse_body_spec(arg), seed);
}

struct GenOptions {
  std::string body = "square";
  int members = 6;
  std::uint64_t seed = 0;
  std::string spread = "3";
  bool homothets = false;
};

void add_gen_options(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--body", g.body,
                  "square|triangle|cube|gon:<k>|random:<v>|random3:<v>, "
                  "optional trailing :scale");
  cmd->add_option("--members", g.members, "number of family members")
      ->check(CLI::Range(1, 4096));
  cmd->add_option("--seed", g.seed, "generator seed");
  cmd->add_option("--spread", g.spread, "centers land in [0, spread]^n");
  cmd->add_flag("--homothets", g.homothets,
                "draw ratios from [1/2, 2] instead of using translates");
}

InstanceSpec to_instance_spec(const GenOptions& g) {
  InstanceSpec spec;
  spec.body = parse_body_spec(g.body);
  spec.member_count = g.members;
  spec.translates = !g.homothets;
  spec.spread = parse_rational(g.spread);
  spec.seed = g.seed;
  return spec;
}

Json gen_parameters(const GenOptions& g) {
  Json p;
  p["body"] = g.body;
  p["members"] = g.members;
  p["seed"] = g.seed;
  p["spread"] = g.spread;
  p["homothets"] = g.homothets;
  return p;
}

void append_csv(const std::string& path, const GenOptions& gen,
                const std::string& family_path, const BoundReport& r) {
  const bool fresh = [&] {
    std::ifstream probe(path);
    return !probe.good() || probe.peek() == std::ifstream::traits_type::eof();
  }();
  std::ofstream file(path, std::ios::app);
  if (!file) throw std::invalid_argument("cannot write " + path);
  if (fresh)
    file << "source,members,dimension,symmetric,volRatio,rzFactor,"
            "nuGreedy,tauGreedy,nuExact,tauExact,capExceeded\n";
  file << (family_path.empty() ? gen.body : family_path) << ','
       << r.member_count << ',' << r.dimension << ','
       << (r.symmetric ? 1 : 0) << ',' << rational_to_string(r.vol_ratio)
       << ',' << r.rz << ',' << r.nu_greedy << ',' << r.tau_greedy << ',';
  if (r.nu_exact) file << *r.nu_exact;
  file << ',';
  if (r.tau_exact) file << *r.tau_exact;
  file << ',' << (r.cap_exceeded ? 1 : 0) << '\n';
}

int run_gen(const GenOptions& gen, const std::string& out_path) {
  const HomothetFamily family = generate_family(to_instance_spec(gen));
  emit(family_to_json(family), out_path);
  return 0;
}

int run_analyze(const GenOptions& gen, const std::string& family_path,
                int exact_cap, bool exact_required,
                const std::string& out_path, const std::string& csv_path) {
  const auto start = Clock::now();
  const HomothetFamily family =
      family_path.empty() ? generate_family(to_instance_spec(gen))
                          : family_from_json(read_json_file(family_path));

  const BoundReport report = bound_report(family, exact_cap);
  if (report.cap_exceeded && exact_required) {
    std::cerr << "exact search requires at most " << exact_cap
              << " members, family has " << family.size() << "\n";
    return 3;
  }

  const GreedyTransversal greedy = greedy_transversal(family);
  const bool greedy_points_ok =
      validate_transversal(family, greedy.certificate);
  const bool representatives_ok =
      validate_independence(family, greedy.representatives);

  Json result;
  result["report"] = bound_report_to_json(report);
  result["greedy"] = greedy_transversal_to_json(greedy);
  Json valid;
  valid["greedyTransversal"] = greedy_points_ok;
  valid["representativesDisjoint"] = representatives_ok;

  bool chain_ok = static_cast<int>(greedy.groups.size()) == report.nu_greedy &&
                  report.nu_greedy <= report.tau_greedy;
  if (!report.cap_exceeded) {
    const IndependenceCertificate nu = exact_independence(family, exact_cap);
    const TransversalCertificate tau = exact_transversal(family, exact_cap);
    result["exactIndependence"] = independence_to_json(nu);
    result["exactTransversal"] = transversal_to_json(tau);
    valid["exactIndependence"] = validate_independence(family, nu);
    valid["exactTransversal"] = validate_transversal(family, tau);
    chain_ok = chain_ok && valid["exactIndependence"].get<bool>() &&
               valid["exactTransversal"].get<bool>() &&
               report.nu_greedy <= *report.nu_exact &&
               *report.nu_exact <= *report.tau_exact &&
               *report.tau_exact <= report.tau_greedy;
  } else {
    result["exactIndependence"] = nullptr;
    result["exactTransversal"] = nullptr;
  }
  result["valid"] = valid;
  result["chainOk"] = chain_ok;

  Json out;
  out["command"] = "analyze";
  Json params = gen_parameters(gen);
  params["family"] = family_path;
  params["exactCap"] = exact_cap;
  out["parameters"] = params;
  out["result"] = result;
  out["timings"] = Json{{"totalSeconds", seconds_since(start)}};
  emit(out, out_path);
  if (!csv_path.empty()) append_csv(csv_path, gen, family_path, report);

  const bool all_valid = greedy_points_ok && representatives_ok && chain_ok;
  return all_valid ? 0 : 2;
}

int run_cover(const std::string& region_arg, const std::string& tile_arg,
              std::uint64_t seed, const std::string& grid_step, int depth,
              const std::string& out_path) {
  const auto start = Clock::now();
  const ConvexPolytope region = load_body_arg(region_arg, seed);
  const ConvexPolytope tile = load_body_arg(tile_arg, derive_seed(seed, 1));

  std::optional<GridSpec> grid;
  if (!grid_step.empty()) {
    GridSpec g{parse_rational(grid_step), bounding_box(region).first};
    grid = std::move(g);
  }
  const Cover cover = tile_cover(region, tile, grid);
  const CoverCheck check = verify_cover(cover, depth);
  const CoveringBounds bounds = covering_bounds(region, tile);

  Json result;
  result["cover"] = cover_to_json(cover);
  result["check"] = cover_check_to_json(check);
  result["bounds"] = covering_bounds_to_json(bounds);

  Json out;
  out["command"] = "cover";
  out["parameters"] = Json{{"region", region_arg},
                           {"tile", tile_arg},
                           {"gridStep", grid_step},
                           {"verifyDepth", depth},
                           {"seed", seed}};
  out["result"] = result;
  out["timings"] = Json{{"totalSeconds", seconds_since(start)}};
  emit(out, out_path);
  return check.status == CoverStatus::Counterexample ? 2 : 0;
}

int run_vc_paraboloid(int scale, const std::string& out_path) {
  const auto start = Clock::now();
  const ParaboloidInstance instance = build_paraboloid(scale);
  const bool verified = verify_paraboloid(instance);
  const ShatterCheck shatter = shatters(instance.family, instance.ground);
  bool witness_identity = true;
  for (std::size_t mask = 0; mask < shatter.witness_member.size(); ++mask)
    if (shatter.witness_member[mask] != static_cast<int>(mask))
      witness_identity = false;

  Json result;
  result["scale"] = scale;
  result["generatorCount"] = static_cast<int>(instance.generators.size());
  result["memberCount"] = instance.family.size();
  result["verified"] = verified;
  result["shattered"] = shatter.shattered;
  result["witnessIdentity"] = witness_identity;
  if (scale <= 4) {
    const auto samples = paraboloid_dual_samples(instance);
    const DualShatterReport dual =
        dual_shatter_lower(instance.family, 2, samples);
    Json dj = dual_shatter_to_json(dual);
    dj["sampleCount"] = static_cast<int>(samples.size());
    dj["bound"] = 1 << (dual.subset_size + 1);
    result["dualShatter"] = dj;
  } else {
    result["dualShatter"] = nullptr;
  }

  Json out;
  out["command"] = "vc paraboloid";
  out["parameters"] = Json{{"scale", scale}};
  out["result"] = result;
  out["timings"] = Json{{"totalSeconds", seconds_since(start)}};
  emit(out, out_path);
  return verified && shatter.shattered ? 0 : 2;
}

int run_vc_four_point(const std::string& body_arg, long long trials,
                      std::uint64_t seed, int fit_budget,
                      const std::string& out_path) {
  const auto start = Clock::now();
  const ConvexPolytope body = load_body_arg(body_arg, seed);
  const FourPointReport report =
      search_four_points_2d(body, trials, seed, fit_budget);

  Json out;
  out["command"] = "vc four-point";
  out["parameters"] = Json{{"body", body_arg},
                           {"trials", trials},
                           {"seed", seed},
                           {"fitBudget", fit_budget}};
  out["result"] = four_point_to_json(report);
  out["timings"] = Json{{"totalSeconds", seconds_since(start)}};
  emit(out, out_path);
  return report.counterexample ? 2 : 0;
}

int run_vc_antipodal(const std::string& body_arg, std::uint64_t seed,
                     int exact_cap, const std::string& out_path) {
  const auto start = Clock::now();
  const ConvexPolytope body = load_body_arg(body_arg, seed);
  const AntipodalReport antipodal = is_strictly_antipodal(body.vertices());
  const auto touching = build_touching_family(body);

  Json result;
  result["antipodal"] = antipodal_to_json(antipodal);
  if (touching) {
    result["touching"] = touching_to_json(*touching);
    if (touching->family.size() <= exact_cap) {
      result["nuExact"] = static_cast<int>(
          exact_independence(touching->family, exact_cap).indices.size());
      result["tauExact"] = static_cast<int>(
          exact_transversal(touching->family, exact_cap).points.size());
    } else {
      result["nuExact"] = nullptr;
      result["tauExact"] = nullptr;
    }
  } else {
    result["touching"] = nullptr;
  }

  Json out;
  out["command"] = "vc antipodal";
  out["parameters"] = Json{{"body", body_arg}, {"exactCap", exact_cap}};
  out["result"] = result;
  out["timings"] = Json{{"totalSeconds", seconds_since(start)}};
  emit(out, out_path);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact transversal, covering, and shatter experiments on "
               "families of positive homothets"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate a family as JSON");
  add_gen_options(gen, gen_opts);
  gen->add_option("--out", out_path, "output path (default stdout)");

  GenOptions analyze_opts;
  std::string analyze_family, analyze_out, analyze_csv;
  int exact_cap = 15;
  bool exact_required = false;
  auto* analyze = app.add_subcommand(
      "analyze", "piercing and independence numbers with certificates");
  add_gen_options(analyze, analyze_opts);
  analyze->add_option("--family", analyze_family,
                      "read the family from a JSON file instead");
  analyze->add_option("--exact-cap", exact_cap,
                      "largest family the exact searches accept")
      ->check(CLI::Range(1, 15));
  analyze->add_flag("--exact", exact_required,
                    "fail (exit 3) when the exact searches are skipped");
  analyze->add_option("--out", analyze_out, "output path (default stdout)");
  analyze->add_option("--csv", analyze_csv, "append a summary row");

  std::string cover_region = "square:2", cover_tile = "square";
  std::string cover_grid;
  std::uint64_t cover_seed = 0;
  int cover_depth = 8;
  std::string cover_out;
  auto* cover = app.add_subcommand(
      "cover", "cover a region by translates of a tile, then verify");
  cover->add_option("--region", cover_region, "body spec or @file");
  cover->add_option("--tile", cover_tile, "body spec or @file");
  cover->add_option("--grid-step", cover_grid,
                    "override the grid step (rational)");
  cover->add_option("--verify-depth", cover_depth,
                    "subdivision depth for the checker")
      ->check(CLI::Range(0, 16));
  cover->add_option("--seed", cover_seed, "seed for random bodies");
  cover->add_option("--out", cover_out, "output path (default stdout)");

  auto* vc = app.add_subcommand("vc", "shatter experiments");
  vc->require_subcommand(1);

  int paraboloid_scale = 3;
  std::string paraboloid_out;
  auto* vc_paraboloid =
      vc->add_subcommand("paraboloid", "translates shattering 2^M patterns");
  vc_paraboloid->add_option("scale", paraboloid_scale, "ground point count M")
      ->required()
      ->check(CLI::Range(1, 8));
  vc_paraboloid->add_option("--out", paraboloid_out,
                            "output path (default stdout)");

  std::string fp_body = "square", fp_out;
  long long fp_trials = 1000;
  std::uint64_t fp_seed = 0;
  int fp_budget = 5;
  auto* vc_four = vc->add_subcommand(
      "four-point", "search for a shattered four-point configuration");
  vc_four->add_option("--body", fp_body, "body spec or @file");
  vc_four->add_option("--trials", fp_trials, "quadruples to sample")
      ->check(CLI::Range(1LL, 10000000LL));
  vc_four->add_option("--seed", fp_seed, "sampling seed");
  vc_four->add_option("--fit-budget", fp_budget,
                      "search restarts per fit attempt")
      ->check(CLI::Range(1, 1000));
  vc_four->add_option("--out", fp_out, "output path (default stdout)");

  std::string ap_body = "triangle", ap_out;
  std::uint64_t ap_seed = 0;
  int ap_cap = 15;
  auto* vc_antipodal = vc->add_subcommand(
      "antipodal", "strict antipodality of the vertex set, touching family");
  vc_antipodal->add_option("--body", ap_body, "body spec or @file");
  vc_antipodal->add_option("--seed", ap_seed, "seed for random bodies");
  vc_antipodal->add_option("--exact-cap", ap_cap,
                           "largest family the exact searches accept")
      ->check(CLI::Range(1, 15));
  vc_antipodal->add_option("--out", ap_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opts, out_path);
    if (analyze->parsed())
      return run_analyze(analyze_opts, analyze_family, exact_cap,
                         exact_required, analyze_out, analyze_csv);
    if (cover->parsed())
      return run_cover(cover_region, cover_tile, cover_seed, cover_grid,
                       cover_depth, cover_out);
    if (vc_paraboloid->parsed())
      return run_vc_paraboloid(paraboloid_scale, paraboloid_out);
    if (vc_four->parsed())
      return run_vc_four_point(fp_body, fp_trials, fp_seed, fp_budget, fp_out);
    if (vc_antipodal->parsed())
      return run_vc_antipodal(ap_body, ap_seed, ap_cap, ap_out);
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace homothets
