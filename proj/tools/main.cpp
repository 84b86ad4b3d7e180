#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curvewalk/drift.hpp"
#include "curvewalk/stats.hpp"
#include "curvewalk/farey.hpp"
#include "curvewalk/graph_gen.hpp"
#include "curvewalk/measure.hpp"
#include "curvewalk/propositions.hpp"
#include "curvewalk/schottky.hpp"
#include "output.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;
using namespace curvewalk;
using curvewalk::tool::atomic_write;
using curvewalk::tool::JsonlBuffer;
using curvewalk::tool::Provenance;
using curvewalk::tool::SvgPlot;

namespace {

StepDistribution parse_mu(const std::string& name) {
  if (name == "uniform-LR") return StepDistribution::uniform_lr();
  if (name == "sanov") return StepDistribution::sanov();
  if (name == "point-mass") return StepDistribution::point_mass_identity();
  if (!name.empty() && name[0] == '@') {
    std::ifstream in(name.substr(1));
    if (!in) throw CLI::ValidationError("--mu", "cannot open " + name.substr(1));
    std::vector<Atom> atoms;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string matrix, prob, label;
      ls >> matrix >> prob >> label;
      if (matrix.empty() || prob.empty()) {
        throw CLI::ValidationError("--mu", "atom line needs \"matrix p/q [label]\"");
      }
      auto slash = prob.find('/');
      Rational p = slash == std::string::npos
                       ? Rational(Int(prob))
                       : make_ratio(Int(prob.substr(0, slash)), Int(prob.substr(slash + 1)));
      if (label.empty()) label = "g" + std::to_string(atoms.size());
      atoms.push_back(Atom{parse_group_element(matrix), p, label});
    }
    return StepDistribution(std::move(atoms));
  }
  throw CLI::ValidationError("--mu", "unknown distribution \"" + name + "\"");
}

Metric parse_metric(const std::string& name) {
  if (name == "farey-displacement") return Metric::FareyDisplacement;
  if (name == "word") return Metric::Word;
  throw CLI::ValidationError("--metric", "unknown metric \"" + name + "\"");
}

nlohmann::json experiment_record(const Provenance& prov, const std::string& experiment,
                                 const std::string& metric, int n, int m, int replicas,
                                 double estimate, double stderr_, double ci_lo,
                                 double ci_hi) {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["metric"] = metric;
  j["n"] = n;
  j["m"] = m;
  j["replicas"] = replicas;
  j["estimate"] = estimate;
  j["stderr"] = stderr_;
  j["ci_low"] = ci_lo;
  j["ci_high"] = ci_hi;
  prov.stamp(j);
  return j;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string out;
  for (const auto& c : cells) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"halfspace geometry and random-walk experiments on the torus curve graph"};
  app.set_version_flag("--version", curvewalk::tool::kToolVersion);
  app.set_config("--config", "", "flat key = value configuration file");
  app.require_subcommand(1);

  // ---- farey-dist ------------------------------------------------------
  std::string fd_s, fd_t;
  auto* farey_cmd = app.add_subcommand("farey-dist", "distance between two slopes");
  farey_cmd->add_option("s", fd_s, "first slope, as p/q")->required();
  farey_cmd->add_option("t", fd_t, "second slope, as p/q")->required();

  // ---- verify-props ----------------------------------------------------
  std::string vp_graphs, vp_out;
  int vp_trees = 0, vp_random = 0, vp_random_nmax = 30;
  std::vector<int> vp_farey_balls;
  std::uint64_t vp_seed = 0x51ab5eedULL, vp_random_seed = 1;
  long long vp_samples = 100000;
  int vp_threshold = 40;
  auto* props_cmd = app.add_subcommand("verify-props", "run the halfspace verifier suite");
  props_cmd->add_option("--graphs", vp_graphs, "directory of edge-list .txt graphs");
  props_cmd->add_option("--trees", vp_trees, "all trees with up to this many vertices");
  props_cmd->add_option("--random", vp_random, "number of random connected graphs");
  props_cmd->add_option("--random-nmax", vp_random_nmax, "max vertices of random graphs");
  props_cmd->add_option("--random-seed", vp_random_seed, "seed for the random graphs");
  props_cmd->add_option("--farey-ball", vp_farey_balls, "Farey ball denominator bound(s)");
  props_cmd->add_option("--seed", vp_seed, "verifier sampling seed");
  props_cmd->add_option("--samples", vp_samples, "sampled tuples per proposition");
  props_cmd->add_option("--sample-threshold", vp_threshold,
                        "exhaustive up to this vertex count");
  props_cmd->add_option("--out", vp_out, "output directory")->required();

  // ---- drift -----------------------------------------------------------
  std::string dr_mu = "uniform-LR", dr_metric = "farey-displacement", dr_out;
  int dr_steps = 1000, dr_replicas = 100;
  std::uint64_t dr_seed = 1;
  double dr_level = 0.99;
  bool dr_plot = false;
  auto* drift_cmd = app.add_subcommand("drift", "rate-of-escape estimate");
  drift_cmd->add_option("--mu", dr_mu, "step distribution (uniform-LR, sanov, point-mass, @file)");
  drift_cmd->add_option("--metric", dr_metric, "farey-displacement or word");
  drift_cmd->add_option("--steps", dr_steps, "walk length n");
  drift_cmd->add_option("--replicas", dr_replicas, "independent replicas");
  drift_cmd->add_option("--seed", dr_seed, "master seed");
  drift_cmd->add_option("--level", dr_level, "confidence level");
  drift_cmd->add_flag("--plot", dr_plot, "emit drift.svg");
  drift_cmd->add_option("--out", dr_out, "output directory")->required();

  // ---- halfrate --------------------------------------------------------
  std::string hr_out;
  int hr_steps = 100000, hr_replicas = 1;
  std::uint64_t hr_seed = 1;
  auto* hr_cmd = app.add_subcommand("halfrate", "turn-change frequency of the tree walk");
  hr_cmd->add_option("--steps", hr_steps, "turns per replica");
  hr_cmd->add_option("--replicas", hr_replicas, "replicas");
  hr_cmd->add_option("--seed", hr_seed, "master seed");
  hr_cmd->add_option("--out", hr_out, "output directory")->required();

  // ---- delta-nm --------------------------------------------------------
  std::string dn_mu = "uniform-LR", dn_out;
  int dn_n = 2, dn_m = 2, dn_replicas = 2000, dn_scan_max = 0;
  std::uint64_t dn_seed = 1;
  std::size_t dn_budget = 2'000'000;
  bool dn_exact = true;
  auto* dn_cmd = app.add_subcommand("delta-nm", "expected gain of m extra steps after n");
  dn_cmd->add_option("--mu", dn_mu, "step distribution");
  dn_cmd->add_option("--n", dn_n, "prefix length");
  dn_cmd->add_option("--m", dn_m, "extension length");
  dn_cmd->add_option("--replicas", dn_replicas, "replicas");
  dn_cmd->add_option("--seed", dn_seed, "master seed");
  dn_cmd->add_option("--budget", dn_budget, "convolution entry budget");
  dn_cmd->add_flag("--exact,!--no-exact", dn_exact, "also compute the exact value");
  dn_cmd->add_option("--scan-max", dn_scan_max, "scan m = 1..scan-max at fixed n");
  dn_cmd->add_option("--out", dn_out, "output directory")->required();

  // ---- decay -----------------------------------------------------------
  std::string dc_mu = "uniform-LR", dc_direction = "[[2,1],[1,1]]", dc_out;
  int dc_spacing = 2, dc_count = 5, dc_mult = 20, dc_replicas = 4000, dc_mu_replicas = 4000;
  int dc_conditional_replicas = 400;
  std::vector<int> dc_ns = {10, 20, 40};
  std::uint64_t dc_seed = 1;
  bool dc_plot = false;
  auto* dc_cmd = app.add_subcommand("decay", "halfspace measure decay along a nested family");
  dc_cmd->add_option("--mu", dc_mu, "step distribution");
  dc_cmd->add_option("--direction", dc_direction, "hyperbolic element whose powers center the family");
  dc_cmd->add_option("--spacing", dc_spacing, "minimal relative-length gap between centers");
  dc_cmd->add_option("--count", dc_count, "family size");
  dc_cmd->add_option("--horizon-mult", dc_mult, "horizon = mult * relative length");
  dc_cmd->add_option("--replicas", dc_replicas, "replicas per horizon estimate");
  dc_cmd->add_option("--mu-replicas", dc_mu_replicas, "replicas per finite-n estimate");
  dc_cmd->add_option("--conditional-replicas", dc_conditional_replicas,
                     "paths for the first-hit conditional check (0 = skip)");
  dc_cmd->add_option("--n", dc_ns, "finite step counts for the mu^(n) checks");
  dc_cmd->add_option("--seed", dc_seed, "master seed");
  dc_cmd->add_flag("--plot", dc_plot, "emit decay.svg");
  dc_cmd->add_option("--out", dc_out, "output directory")->required();

  // ---- schottky-certify -------------------------------------------------
  std::string sc_a = "[[2,1],[1,1]]", sc_b = "[[1,1],[1,2]]", sc_out;
  int sc_max_power = 10;
  auto* sc_cmd = app.add_subcommand("schottky-certify", "search for a ping-pong certificate");
  sc_cmd->add_option("--a", sc_a, "first element");
  sc_cmd->add_option("--b", sc_b, "second element");
  sc_cmd->add_option("--max-power", sc_max_power, "largest power to try");
  sc_cmd->add_option("--out", sc_out, "certificate file")->required();

  // ---- schottky-verify --------------------------------------------------
  std::string sv_file;
  int sv_audit_len = 0;
  auto* sv_cmd = app.add_subcommand("schottky-verify", "re-verify a stored certificate");
  sv_cmd->add_option("certificate", sv_file, "certificate json file")->required();
  sv_cmd->add_option("--audit-len", sv_audit_len,
                     "also audit reduced words up to this length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Provenance prov;
    {
      // digest the experiment parameters only: where results land is not
      // part of the experiment's identity
      std::istringstream cfg(app.config_to_str(true, false));
      std::string line, kept;
      while (std::getline(cfg, line)) {
        auto eq = line.find('=');
        std::string key = eq == std::string::npos ? line : line.substr(0, eq);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        auto dot = key.rfind('.');
        if (dot != std::string::npos) key = key.substr(dot + 1);
        if (key == "out" || key == "config") continue;
        kept += line;
        kept += '\n';
      }
      prov.config_digest = curvewalk::tool::fnv1a_hex(kept);
    }

    if (*farey_cmd) {
      std::cout << farey_distance(parse_slope(fd_s), parse_slope(fd_t)) << "\n";
      return 0;
    }

    if (*props_cmd) {
      prov.seed = vp_seed;
      VerifyOptions opt;
      opt.seed = vp_seed;
      opt.samples = vp_samples;
      opt.sample_threshold = vp_threshold;

      std::vector<std::pair<std::string, FiniteSpace>> spaces;
      if (!vp_graphs.empty()) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(vp_graphs)) {
          if (entry.path().extension() == ".txt") files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
          spaces.emplace_back(f.filename().string(), FiniteSpace::load_file(f.string()));
        }
      }
      for (int n = 2; n <= vp_trees; ++n) {
        int index = 0;
        for (FiniteSpace& t : all_trees(n)) {
          spaces.emplace_back("tree-" + std::to_string(n) + "-" + std::to_string(index++),
                              std::move(t));
        }
      }
      for (int i = 0; i < vp_random; ++i) {
        int n = 10 + static_cast<int>(child_seed(vp_random_seed, i) % (vp_random_nmax - 9));
        double p = 0.18 + 0.2 * ((child_seed(vp_random_seed, 1000 + i) >> 11) * 0x1.0p-53);
        spaces.emplace_back("random-" + std::to_string(i),
                            random_connected_graph(n, p, child_seed(vp_random_seed, 2000 + i)));
      }
      for (int d : vp_farey_balls) {
        spaces.emplace_back("farey-ball-" + std::to_string(d), farey_ball(d).space);
      }
      if (spaces.empty()) throw CLI::ValidationError("verify-props", "no spaces selected");

      JsonlBuffer records;
      {
        // header record: which membership rule the coarse verifier uses
        nlohmann::json header;
        header["experiment"] = "verify-props";
        header["coarse_halfspace_rule"] = "z in H(1,x;C) iff d(z,x) <= d(z,1) + C";
        header["working_delta"] = "max(four-point, interval-slim)";
        prov.stamp(header);
        records.add(header);
      }
      long long total_violations = 0;
      std::map<std::string, long long> by_prop;
      for (const auto& [id, space] : spaces) {
        for (const PropositionReport& rep : verify_propositions(space, opt)) {
          total_violations += rep.violations;
          by_prop[rep.proposition] += rep.violations;
          nlohmann::json j = nlohmann::json::parse(report_jsonl_line(id, rep));
          prov.stamp(j);
          records.add(j);
        }
      }
      atomic_write(fs::path(vp_out) / "records.jsonl", records.str());
      {
        SvgPlot plot(0, 11, 0, std::max(1.0, static_cast<double>(total_violations)),
                     "verifier violations by proposition");
        double x = 0.5;
        for (const auto& [name, count] : by_prop) {
          plot.bar(x, static_cast<double>(count), 0.8, count ? "#c0392b" : "#27ae60");
          x += 1;
        }
        atomic_write(fs::path(vp_out) / "violations.svg", plot.str());
      }
      curvewalk::tool::write_metadata(vp_out, argc, argv, prov.config_digest);
      std::cout << "spaces=" << spaces.size() << " violations=" << total_violations << "\n";
      return total_violations == 0 ? 0 : 1;
    }

    if (*drift_cmd) {
      prov.seed = dr_seed;
      StepDistribution mu = parse_mu(dr_mu);
      DriftReport rep = drift_estimate(mu, parse_metric(dr_metric), dr_steps, dr_replicas,
                                       dr_seed, dr_level);
      std::vector<double> normalized;
      for (int t : rep.terminal_lengths) {
        normalized.push_back(static_cast<double>(t) / rep.steps);
      }
      double se = sample_sd(normalized) / std::sqrt(static_cast<double>(rep.replicas));
      JsonlBuffer records;
      records.add(experiment_record(prov, "drift", rep.metric, rep.steps, 0, rep.replicas,
                                    rep.l_hat, se, rep.ci.lo, rep.ci.hi));
      atomic_write(fs::path(dr_out) / "records.jsonl", records.str());
      std::vector<std::string> rows;
      for (std::size_t r = 0; r < rep.terminal_lengths.size(); ++r) {
        rows.push_back(csv_row({std::to_string(r), std::to_string(rep.terminal_lengths[r]),
                                fmt_double(static_cast<double>(rep.terminal_lengths[r]) /
                                           rep.steps)}));
      }
      atomic_write(fs::path(dr_out) / "replicas.csv",
                   curvewalk::tool::csv_table("replica,terminal_length,normalized", rows));
      atomic_write(
          fs::path(dr_out) / "summary.csv",
          curvewalk::tool::csv_table(
              "experiment,metric,n,m,replicas,seed,estimate,stderr,ci_low,ci_high",
              {csv_row({"drift", rep.metric, std::to_string(rep.steps), "0",
                        std::to_string(rep.replicas), std::to_string(dr_seed),
                        fmt_double(rep.l_hat), fmt_double(se), fmt_double(rep.ci.lo),
                        fmt_double(rep.ci.hi)})}));
      if (dr_plot) {
        std::vector<double> sorted;
        for (int t : rep.terminal_lengths) sorted.push_back(static_cast<double>(t) / rep.steps);
        std::sort(sorted.begin(), sorted.end());
        SvgPlot plot(0, static_cast<double>(sorted.size()), 0, sorted.back() * 1.1,
                     "normalized terminal lengths (" + rep.metric + ")");
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i = 0; i < sorted.size(); ++i) pts.emplace_back(i, sorted[i]);
        plot.polyline(pts, "#2980b9");
        plot.hline(rep.l_hat, "#c0392b");
        atomic_write(fs::path(dr_out) / "drift.svg", plot.str());
      }
      curvewalk::tool::write_metadata(dr_out, argc, argv, prov.config_digest);
      std::cout << "l_hat=" << rep.l_hat << " ci=[" << rep.ci.lo << "," << rep.ci.hi << "]\n";
      return 0;
    }

    if (*hr_cmd) {
      prov.seed = hr_seed;
      HalfRateReport rep = halfrate_statistic(hr_steps, hr_replicas, hr_seed);
      JsonlBuffer records;
      double se = std::sqrt(0.25 / rep.comparisons);
      records.add(experiment_record(prov, "halfrate", "turn-changes", rep.steps, 0,
                                    rep.replicas, rep.frequency, se, rep.frequency - 3 * se,
                                    rep.frequency + 3 * se));
      atomic_write(fs::path(hr_out) / "records.jsonl", records.str());
      atomic_write(
          fs::path(hr_out) / "summary.csv",
          curvewalk::tool::csv_table(
              "experiment,metric,n,m,replicas,seed,estimate,stderr,ci_low,ci_high",
              {csv_row({"halfrate", "turn-changes", std::to_string(rep.steps), "0",
                        std::to_string(rep.replicas), std::to_string(hr_seed),
                        fmt_double(rep.frequency), fmt_double(se),
                        fmt_double(rep.frequency - 3 * se),
                        fmt_double(rep.frequency + 3 * se)})}));
      curvewalk::tool::write_metadata(hr_out, argc, argv, prov.config_digest);
      std::cout << "frequency=" << rep.frequency << "\n";
      return 0;
    }

    if (*dn_cmd) {
      prov.seed = dn_seed;
      StepDistribution mu = parse_mu(dn_mu);
      JsonlBuffer records;
      std::vector<std::string> rows;
      auto run_one = [&](const char* experiment, int n, int m, bool with_exact) {
        DeltaEstimate mc = delta_nm(mu, n, m, dn_replicas, dn_seed);
        nlohmann::json j = experiment_record(
            prov, experiment, "farey-displacement", n, m, dn_replicas, mc.estimate,
            mc.stderr_, mc.estimate - 3 * mc.stderr_, mc.estimate + 3 * mc.stderr_);
        if (with_exact) {
          Rational exact = delta_nm_exact(mu, n, m, dn_budget);
          j["exact"] = numerator(exact).str() + "/" + denominator(exact).str();
          j["exact_double"] = exact.convert_to<double>();
        }
        records.add(j);
        rows.push_back(csv_row({experiment, "farey-displacement", std::to_string(n),
                                std::to_string(m), std::to_string(dn_replicas),
                                std::to_string(dn_seed), fmt_double(mc.estimate),
                                fmt_double(mc.stderr_),
                                fmt_double(mc.estimate - 3 * mc.stderr_),
                                fmt_double(mc.estimate + 3 * mc.stderr_)}));
      };
      if (dn_scan_max > 0) {
        for (int m = 1; m <= dn_scan_max; ++m) run_one("delta-nm-scan", dn_n, m, false);
      } else {
        run_one("delta-nm", dn_n, dn_m, dn_exact);
      }
      atomic_write(fs::path(dn_out) / "records.jsonl", records.str());
      atomic_write(
          fs::path(dn_out) / "summary.csv",
          curvewalk::tool::csv_table(
              "experiment,metric,n,m,replicas,seed,estimate,stderr,ci_low,ci_high", rows));
      curvewalk::tool::write_metadata(dn_out, argc, argv, prov.config_digest);
      return 0;
    }

    if (*dc_cmd) {
      prov.seed = dc_seed;
      StepDistribution mu = parse_mu(dc_mu);
      GroupElement direction = parse_group_element(dc_direction);
      NestedFamily family = nested_family(direction, dc_spacing, dc_count);

      JsonlBuffer records;
      {
        nlohmann::json j;
        j["experiment"] = "decay-family";
        j["metric"] = "farey-displacement";
        j["direction"] = to_string(direction);
        j["spacing"] = dc_spacing;
        nlohmann::json exps = nlohmann::json::array();
        for (std::size_t i = 0; i < family.centers.size(); ++i) {
          exps.push_back({{"exponent", family.exponents[i]},
                          {"relative_length", family.relative_lengths[i]}});
        }
        j["family"] = exps;
        j["nesting_checked"] = family.nesting_checked;
        j["nesting_violations"] = family.nesting_violations;
        prov.stamp(j);
        records.add(j);
      }

      std::vector<DecayPoint> harmonic_points;
      std::vector<std::string> csv_rows;
      double worst_gap = 0.0;
      bool all_stable = true;
      std::vector<HalfspaceQuery> queries;
      for (std::size_t i = 0; i < family.centers.size(); ++i) {
        queries.push_back(HalfspaceQuery::toward(family.centers[i]));
        const HalfspaceQuery& H = queries.back();
        int horizon = dc_mult * H.center_relative_length();
        HarmonicEstimate est =
            harmonic_halfspace(mu, H, horizon, dc_replicas, child_seed(dc_seed, 100 + i));
        worst_gap = std::max(worst_gap, est.gap);
        all_stable = all_stable && est.stable;
        nlohmann::json j = experiment_record(
            prov, "decay-harmonic", "farey-displacement", est.at_horizon.n, 0, dc_replicas,
            est.at_horizon.estimate, est.at_horizon.stderr_, 0, 0);
        j["family_index"] = i;
        j["relative_length"] = family.relative_lengths[i];
        j["estimate_2N"] = est.at_double_horizon.estimate;
        j["stderr_2N"] = est.at_double_horizon.stderr_;
        j["gap"] = est.gap;
        j["stable"] = est.stable;
        j["caveat"] = est.caveat;
        records.add(j);
        csv_rows.push_back(csv_row({std::to_string(family.relative_lengths[i]),
                                    fmt_double(est.at_horizon.estimate),
                                    fmt_double(est.at_horizon.stderr_)}));
        if (est.stable) {
          harmonic_points.push_back(DecayPoint{family.relative_lengths[i],
                                               est.at_horizon.estimate,
                                               est.at_horizon.stderr_, dc_replicas});
        }
      }
      atomic_write(fs::path(dc_out) / "harmonic.csv",
                   curvewalk::tool::csv_table("r,estimate,stderr", csv_rows));

      DecayReport fit = decay_fit(harmonic_points);
      {
        nlohmann::json j;
        j["experiment"] = "decay-fit";
        j["metric"] = "farey-displacement";
        j["L_hat"] = fit.l_hat;
        j["Q_hat"] = fit.q_hat;
        j["slope_ci_low"] = fit.slope_ci_lo;
        j["slope_ci_high"] = fit.slope_ci_hi;
        j["horizon_gap"] = worst_gap;
        j["all_stable"] = all_stable;
        j["non_decaying"] = fit.non_decaying;
        j["points_below_resolution"] = fit.below_resolution.size();
        prov.stamp(j);
        records.add(j);
      }

      long long envelope_violations = 0;
      for (int n : dc_ns) {
        for (std::size_t i = 0; i < queries.size(); ++i) {
          MeasureEstimate est =
              mu_n_halfspace(mu, n, queries[i], dc_mu_replicas,
                             child_seed(dc_seed, 10000 + n * 100 + i));
          double envelope =
              fit.q_hat * std::pow(fit.l_hat, family.relative_lengths[i]) + 3 * est.stderr_;
          bool ok = est.estimate <= envelope;
          envelope_violations += !ok;
          nlohmann::json j = experiment_record(prov, "decay-mu-n", "farey-displacement", n, 0,
                                               dc_mu_replicas, est.estimate, est.stderr_, 0,
                                               envelope);
          j["family_index"] = i;
          j["relative_length"] = family.relative_lengths[i];
          j["within_envelope"] = ok;
          records.add(j);
        }
      }

      if (dc_conditional_replicas > 0) {
        // conditional decay: among paths that ever enter H_i (within the
        // deepest horizon), how many end inside H_{i+1}?
        int horizon = dc_mult * queries.back().center_relative_length();
        for (std::size_t i = 0; i + 1 < queries.size(); ++i) {
          long long hit = 0, advanced = 0;
          for (int r = 0; r < dc_conditional_replicas; ++r) {
            WalkPath path =
                sample_path(mu, horizon, child_seed(dc_seed, 500000 + i * 10000 + r));
            if (first_hit(path, queries[i]).has_value()) {
              ++hit;
              advanced += queries[i + 1].contains(path.positions.back());
            }
          }
          nlohmann::json j;
          j["experiment"] = "decay-conditional";
          j["family_index"] = i;
          j["paths_hitting"] = hit;
          j["advance_fraction"] = hit ? static_cast<double>(advanced) / hit : 0.0;
          prov.stamp(j);
          records.add(j);
        }
      }

      atomic_write(fs::path(dc_out) / "records.jsonl", records.str());
      if (dc_plot) {
        double rmax = family.relative_lengths.back() + 1;
        double ymin = -12, ymax = 0;
        SvgPlot plot(0, rmax, ymin, ymax, "log halfspace measure vs relative length");
        std::vector<std::pair<double, double>> pts;
        for (const DecayPoint& p : harmonic_points) {
          if (p.estimate > 0) pts.emplace_back(p.r, std::log(p.estimate));
        }
        plot.points(pts, "#2980b9");
        plot.polyline({{0.0, std::log(fit.q_hat)},
                       {rmax, std::log(fit.q_hat) + rmax * std::log(fit.l_hat)}},
                      "#c0392b");
        atomic_write(fs::path(dc_out) / "decay.svg", plot.str());
      }
      curvewalk::tool::write_metadata(dc_out, argc, argv, prov.config_digest);
      std::cout << "L_hat=" << fit.l_hat << " Q_hat=" << fit.q_hat
                << " stable=" << (all_stable ? "yes" : "no")
                << " envelope_violations=" << envelope_violations << "\n";
      return (all_stable && envelope_violations == 0 && family.nesting_violations == 0) ? 0
                                                                                        : 1;
    }

    if (*sc_cmd) {
      SchottkySearch search =
          certify_schottky(parse_group_element(sc_a), parse_group_element(sc_b), sc_max_power);
      for (const std::string& line : search.transcript) std::cerr << line << "\n";
      if (!search.certificate) {
        std::cout << "no certificate up to max power " << sc_max_power << "\n";
        return 1;
      }
      atomic_write(sc_out, search.certificate->to_json() + "\n");
      std::cout << "certificate p=" << search.certificate->p
                << " q=" << search.certificate->q << " -> " << sc_out << "\n";
      return 0;
    }

    if (*sv_cmd) {
      std::ifstream in(sv_file);
      if (!in) throw CLI::ValidationError("schottky-verify", "cannot open " + sv_file);
      std::stringstream buf;
      buf << in.rdbuf();
      PingPongCertificate cert = PingPongCertificate::from_json(buf.str());
      std::vector<std::string> reasons;
      if (!verify_certificate(cert, &reasons)) {
        for (const auto& r : reasons) std::cerr << r << "\n";
        std::cout << "INVALID\n";
        return 1;
      }
      if (sv_audit_len > 0) {
        FreeGroupAudit audit = free_group_audit(cert, sv_audit_len);
        std::cout << "audit words=" << audit.words_checked
                  << " identity=" << audit.identity_words
                  << " non_hyperbolic=" << audit.non_hyperbolic_words << "\n";
        if (audit.identity_words || audit.non_hyperbolic_words) {
          for (const auto& w : audit.counterexamples) std::cerr << "counterexample " << w << "\n";
          return 1;
        }
      }
      std::cout << "VALID p=" << cert.p << " q=" << cert.q << "\n";
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (required " << e.required << ")\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
