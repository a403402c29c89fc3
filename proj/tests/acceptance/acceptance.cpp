// Acceptance run: one PASS/FAIL line per check, exit status 1 if any fails.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/o3.hpp"
#include "symprobe/purify.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "symprobe/toy.hpp"
#include "test_probes.hpp"

using namespace symprobe;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int run_cli_quiet(std::vector<std::string> args, std::string* err = nullptr) {
  args.insert(args.begin(), "symprobe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, e;
  const int code = cli::run_cli(int(argv.size()), argv.data(), out, e);
  if (err) *err = e.str();
  return code;
}

json load_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

// ---------------------------------------------------------------------------

Verdict grid_certification() {
  const auto t0 = Clock::now();
  const auto grid = build_o3_grid(8);
  const double residual = orthogonality_residual(grid, 8);
  const double secs = seconds_since(t0);
  double weights = 0.0;
  for (double w : grid.weights()) weights += w;
  const bool pass = residual <= 1e-10 && secs <= 30.0 && std::abs(weights - 1.0) <= 1e-12 && grid.covers_parity();
  return {pass, fmt::format("{} nodes, max orthogonality residual {:.2e} (<= 1e-10), {:.1f} s (<= 30 s)", grid.size(),
                            residual, secs)};
}

Verdict metric_soundness() {
  const auto grid = build_o3_grid(4);
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int lambda = 0; lambda <= 2; ++lambda) {
    for (int sigma : {1, -1}) {
      const IrrepLabel label(lambda, sigma);
      for (int order : {1, 2}) {
        auto f = oracle_probe(label, order);
        for (int trial = 0; trial < 3; ++trial) {
          worst = std::max(worst, equivariance_error(f, "y", label, fixtures::random_cloud(rng, 5), grid));
        }
      }
    }
  }
  const Vec3 c(2.0, -3.0, 6.0);
  auto constant = constant_vector_probe(c);
  double gap = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const double a = equivariance_error(constant, "y", IrrepLabel(1, 1), fixtures::random_cloud(rng, 4), grid);
    gap = std::max(gap, std::abs(a - c.norm()));
  }
  return {worst <= 1e-9 && gap <= 1e-9,
          fmt::format("max A on exact oracles {:.2e} (<= 1e-9); constant vector |A - |c|| = {:.2e} (<= 1e-9)", worst,
                      gap)};
}

struct RandomProbeCase {
  FunctionProbe probe;
  DecoratedPointCloud cloud;
};

std::vector<RandomProbeCase> random_probe_cases(int count) {
  std::mt19937_64 rng(202);
  std::vector<RandomProbeCase> out;
  for (int k = 0; k < count; ++k) {
    const int band = 1 + k % 2;
    const int dim = 1 + k % 3;
    auto probe = fixtures::random_band_limited_probe(rng, dim, band, 3);
    out.push_back({std::move(probe), fixtures::random_cloud(rng, 4)});
  }
  return out;
}

Verdict fast_matches_direct() {
  const auto t0 = Clock::now();
  const auto grid = build_o3_grid(2);
  auto cases = random_probe_cases(20);
  double a_gap = 0.0, b_gap = 0.0;
  for (auto& [f, x] : cases) {
    const int dim = int(f.schema().at("y"));
    std::vector<IrrepLabel> fitting;
    for (const auto& l : all_labels(2)) {
      if (dim % l.dim() == 0) fitting.push_back(l);
    }
    for (const auto& [label, a] : equivariance_errors_direct(f, "y", fitting, x, grid)) {
      a_gap = std::max(a_gap, std::abs(equivariance_error(f, "y", label, x, grid) - a));
    }
    const auto fast = character_projection(f, "y", x, grid, 2);
    for (const auto& [label, b] : character_projections_direct(f, "y", x, grid, all_labels(2))) {
      b_gap = std::max(b_gap, std::abs(fast.projections.at(label) - b));
    }
  }
  const double secs = seconds_since(t0);
  return {a_gap <= 1e-9 && b_gap <= 1e-9 && secs <= 300.0,
          fmt::format("20 random probes: max |A fast - A direct| {:.2e}, max |B fast - B direct| {:.2e} (<= 1e-9), {:.1f} s",
                      a_gap, b_gap, secs)};
}

Verdict sum_rule() {
  const auto grid = build_o3_grid(2);
  auto cases = random_probe_cases(20);
  double worst = 0.0;
  for (auto& [f, x] : cases) worst = std::max(worst, std::abs(sum_rule_check(character_projection(f, "y", x, grid, 2))));
  std::mt19937_64 rng(303);
  const auto grid3 = build_o3_grid(3);
  auto above = fixtures::single_block_probe(3);
  const double capped = sum_rule_check(character_projection(above, "y", fixtures::random_cloud(rng, 4), grid3, 2));
  return {worst <= 1e-9 && std::abs(capped - 1.0) <= 1e-9,
          fmt::format("band-limited residual {:.2e} (<= 1e-9); above-cap residual {:.12f} (1 +- 1e-9)", worst, capped)};
}

Verdict frame_independence() {
  const auto grid = build_o3_grid(2);
  auto cases = random_probe_cases(20);
  double worst = 0.0;
  for (auto& [f, x] : cases) {
    const auto base = character_projection(f, "y", x, grid, 2);
    const int dim = int(f.schema().at("y"));
    const IrrepLabel alpha = dim % 3 == 0 ? IrrepLabel(1, 1) : IrrepLabel(0, 1);
    const double a0 = equivariance_error(f, "y", alpha, x, grid);
    for (std::size_t k : {std::size_t(1), std::size_t(57), grid.size() / 2 + 3, grid.size() - 1}) {
      const auto y = act(grid.nodes()[k], x);
      const auto moved = character_projection(f, "y", y, grid, 2);
      for (const auto& [label, b] : base.projections) worst = std::max(worst, std::abs(moved.projections.at(label) - b));
      worst = std::max(worst, std::abs(equivariance_error(f, "y", alpha, y, grid) - a0));
    }
  }
  return {worst <= 1e-8, fmt::format("max shift of A and B under frame changes {:.2e} (<= 1e-8)", worst)};
}

Verdict pseudoscalar_signature() {
  ConformerSpec spec;
  spec.count = 20;
  spec.seed = 404;
  spec.rattle_sigma = 0.1;
  const auto conformers = rattled_conformers(spec);
  const auto grid = build_o3_grid(2);
  auto q = q_probe();
  double b_gap = 0.0, min_abs_q = std::numeric_limits<double>::infinity(), cov = 0.0;
  std::mt19937_64 rng(405);
  for (const auto& c : conformers) {
    min_abs_q = std::min(min_abs_q, std::abs(pseudoscalar_Q(c.cloud)));
    const auto r = character_projection(q, "Q", c.cloud, grid, 2);
    b_gap = std::max(b_gap, std::abs(r.normalized.at(IrrepLabel(0, -1)) - 1.0));
    for (int t = 0; t < 10; ++t) {
      const auto g = random_group_element(rng, true);
      const double det = g.rotation().determinant() * (g.parity() ? -1.0 : 1.0);
      cov = std::max(cov, std::abs(pseudoscalar_Q(act(g, c.cloud)) - det * pseudoscalar_Q(c.cloud)));
    }
  }
  return {b_gap <= 1e-9 && cov <= 1e-12 && min_abs_q > 1e-3,
          fmt::format("20 conformers (min |Q| {:.3f}): max |B(0,-1) - 1| {:.2e} (<= 1e-9), max |Q(gx) - det(g) Q(x)| "
                      "{:.2e} (<= 1e-12)",
                      min_abs_q, b_gap, cov)};
}

Eigen::MatrixXd block_rho(const OutputBlocking& b, const GroupElement& g) {
  const Eigen::MatrixXd d = wigner_d(b.label, g).matrix;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(b.dim(), b.dim());
  for (int k = 0; k < b.blocks; ++k) out.block(k * d.rows(), k * d.rows(), d.rows(), d.rows()) = d;
  return out;
}

Verdict purification(const fs::path& scratch) {
  // Loop-by-loop losses from their definitions against the assembled quadratic forms.
  const auto grid = build_o3_grid(2);
  std::mt19937_64 rng(505);
  std::normal_distribution<double> normal;
  double form_gap = 0.0;
  for (const OutputBlocking b : {OutputBlocking{IrrepLabel(0, 1), 2}, OutputBlocking{IrrepLabel(1, -1), 1},
                                 OutputBlocking{IrrepLabel(2, 1), 1}}) {
    const int p = 4;
    std::vector<ReadoutSample> samples;
    for (int s = 0; s < 3; ++s) {
      ReadoutSample r{Eigen::MatrixXd(grid.size(), p), Eigen::VectorXd(b.dim())};
      for (Eigen::Index i = 0; i < r.features.size(); ++i) r.features.data()[i] = normal(rng);
      for (Eigen::Index i = 0; i < r.target.size(); ++i) r.target(i) = normal(rng);
      samples.push_back(std::move(r));
    }
    ReadoutAccumulator acc(grid, p, b);
    for (const auto& s : samples) acc.add(s);
    Eigen::MatrixXd theta(p, b.dim());
    for (Eigen::Index i = 0; i < theta.size(); ++i) theta.data()[i] = normal(rng);
    double mu = 0.0, sig = 0.0;
    for (const auto& s : samples) {
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(b.dim());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Eigen::MatrixXd rho = block_rho(b, grid.nodes()[i]);
        const Eigen::VectorXd out = theta.transpose() * s.features.row(Eigen::Index(i)).transpose();
        mu += grid.weights()[i] * (out - rho * s.target).squaredNorm();
        mean += grid.weights()[i] * rho.transpose() * out;
      }
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const Eigen::MatrixXd rho = block_rho(b, grid.nodes()[i]);
        const Eigen::VectorXd out = theta.transpose() * s.features.row(Eigen::Index(i)).transpose();
        sig += grid.weights()[i] * (out - rho * mean).squaredNorm();
      }
    }
    mu /= double(samples.size());
    sig /= double(samples.size());
    form_gap = std::max({form_gap, std::abs(acc.loss_mu(theta) - mu) / std::max(1.0, mu),
                         std::abs(acc.loss_sigma(theta) - sig) / std::max(1.0, sig)});
  }

  // Ladder and trade-off through the command line on the contaminated fixture.
  std::string err;
  const auto out = scratch / "purify";
  const int code = run_cli_quiet({"purify", "model=builtin:fixture:contaminated", "output=" + out.string(), "seed=7"}, &err);
  if (code != 0) return {false, "purify run failed: " + err};
  const auto s = load_json(out / "reports/purify_summary.json");
  bool monotone = true;
  const auto& ladder = s["ladder"];
  for (std::size_t k = 1; k < ladder.size(); ++k) {
    monotone &= ladder[k]["train_L_sigma"].get<double>() <= ladder[k - 1]["train_L_sigma"].get<double>() * (1 + 1e-12);
  }
  const double reduction = s["equivariance_error_reduction"];
  const double increase = s["relative_rmse_increase"];
  return {form_gap <= 1e-10 && monotone && reduction >= 2.0 && increase <= 0.01,
          fmt::format("quadratic forms vs brute force {:.2e} (<= 1e-10); L_sigma ladder {}; fixture A reduced {:.2f}x "
                      "(>= 2) at {:+.3f}% RMSE (<= 1%)",
                      form_gap, monotone ? "monotone" : "NOT monotone", reduction, 100.0 * increase)};
}

Verdict toy_training(const fs::path& scratch) {
  const auto t0 = Clock::now();
  std::string err;
  const auto out = scratch / "train";
  const int code = run_cli_quiet({"train", "output=" + out.string(), "seed=11", "target=gyration"}, &err);
  const double secs = seconds_since(t0);
  if (code != 0) return {false, "train run failed: " + err};
  const auto s = load_json(out / "reports/train_summary.json");
  const double rel = s["val_relative_rmse"];
  const double a = s["median_equivariance_error"];
  const double e = s["median_absolute_error"];
  return {rel <= 0.05 && a <= e && secs <= 600.0,
          fmt::format("gyration target: val relative RMSE {:.4f} (<= 0.05), median A(0,+1) {:.3e} <= median |error| "
                      "{:.3e}, {:.0f} s (<= 600 s)",
                      rel, a, e, secs)};
}

Verdict embedding_bias() {
  std::mt19937_64 rng(909);
  const auto grid2 = build_o3_grid(2);
  const auto grid4 = build_o3_grid(4);
  double stray = 0.0;
  double top = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = fixtures::random_cloud(rng, 3);
    ToyNetConfig dv;
    dv.seed = std::uint64_t(trial);
    ToyNet dv_net(dv);
    ToyNetProbe dv_probe(dv_net, 3);
    for (const auto& [label, v] : character_projection(dv_probe, "geometry", x, grid2, 2).normalized) {
      if (label.lambda() > 1 || label.sigma() < 0) stray = std::max(stray, v);
    }
    ToyNetConfig ssh;
    ssh.embedding = GeometryEmbedding::ssh;
    ssh.lambda_max_emb = 4;
    ssh.seed = std::uint64_t(trial);
    ToyNet ssh_net(ssh);
    ToyNetProbe ssh_probe(ssh_net, 3);
    top = std::min(top, character_projection(ssh_probe, "geometry", x, grid4, 4).normalized.at(IrrepLabel(4, 1)));
  }
  return {stray <= 1e-9 && top > 0.01,
          fmt::format("distance_vector geometry outside lambda <= 1: {:.2e} (<= 1e-9); ssh(4) normalized B(4,+1) {:.3f} "
                      "(> 0.01)",
                      stray, top)};
}

Verdict gradient_checks() {
  std::mt19937_64 rng(1010);
  auto x = fixtures::random_cloud(rng, 4);
  const int z[] = {6, 1, 8, 1};
  x.scalar_attrs["species"].resize(4, 1);
  for (int i = 0; i < 4; ++i) x.scalar_attrs["species"](i, 0) = z[i];
  const std::map<std::string, Eigen::VectorXd> targets{{"e", Eigen::VectorXd::Constant(1, 0.4)},
                                                       {"v", Eigen::Vector3d(0.1, -0.2, 0.5)}};
  double worst = 0.0;
  int groups = 0;
  for (auto embedding : {GeometryEmbedding::distance_vector, GeometryEmbedding::ssh}) {
    for (auto pooling : {Pooling::sum, Pooling::attention}) {
      for (bool scalar_only : {false, true}) {
        ToyNetConfig c;
        c.embedding = embedding;
        c.lambda_max_emb = 3;
        c.hidden_width = 8;
        c.depth = 2;
        c.pooling = pooling;
        c.species = {1, 6, 8};
        c.species_width = 3;
        c.scalar_only = scalar_only;
        c.heads = {{"e", IrrepLabel(0, 1), 1}, {"v", IrrepLabel(1, 1), 1}};
        c.seed = 5;
        ToyNet net(c);
        net.set_output_scaling("e", 1.7, Eigen::VectorXd::Constant(1, 0.3));
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(net.parameters().size());
        net.loss_and_gradient(x, targets, &grad);
        const double h = 1e-6;
        Eigen::VectorXd fd(grad.size());
        for (Eigen::Index k = 0; k < grad.size(); ++k) {
          const double saved = net.parameters()(k);
          net.parameters()(k) = saved + h;
          const double up = net.loss_and_gradient(x, targets, nullptr);
          net.parameters()(k) = saved - h;
          const double down = net.loss_and_gradient(x, targets, nullptr);
          net.parameters()(k) = saved;
          fd(k) = (up - down) / (2 * h);
        }
        for (const auto& g : net.parameter_groups()) {
          const auto b = fd.segment(g.offset, g.size);
          if (b.norm() <= 1e-8) return {false, fmt::format("layer {} has no gradient signal", g.name)};
          worst = std::max(worst, (grad.segment(g.offset, g.size) - b).norm() / b.norm());
          ++groups;
        }
      }
    }
  }
  return {worst <= 1e-5, fmt::format("{} layer gradients over 8 configurations, max relative deviation {:.2e} (<= 1e-5)",
                                     groups, worst)};
}

}  // namespace

int main() {
  const auto scratch = fs::temp_directory_path() / fmt::format("symprobe_acceptance_{}", ::getpid());
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> checks = {
      {"grid certification", grid_certification},
      {"metric soundness", metric_soundness},
      {"fast vs direct averages", fast_matches_direct},
      {"sum rule", sum_rule},
      {"frame independence", frame_independence},
      {"pseudoscalar signature", pseudoscalar_signature},
      {"purification", [&] { return purification(scratch); }},
      {"toy training, invariant target", [&] { return toy_training(scratch); }},
      {"toy embedding bias", embedding_bias},
      {"gradient checks", gradient_checks},
  };
  int failed = 0;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    Verdict v;
    try {
      v = checks[k].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::cout << fmt::format("{} {:>2} {}: {}", v.pass ? "PASS" : "FAIL", k + 1, checks[k].first, v.detail) << std::endl;
  }
  fs::remove_all(scratch);
  std::cout << fmt::format("{} of {} passed", checks.size() - std::size_t(failed), checks.size()) << std::endl;
  return failed == 0 ? 0 : 1;
}
