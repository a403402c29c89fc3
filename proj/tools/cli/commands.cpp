#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <glob.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "model.hpp"
#include "output_dir.hpp"
#include "plots.hpp"
#include "symprobe/errors.hpp"
#include "symprobe/json_io.hpp"
#include "symprobe/metrics.hpp"
#include "symprobe/protocol.hpp"
#include "symprobe/purify.hpp"
#include "symprobe/quadrature.hpp"
#include "symprobe/targets.hpp"
#include "symprobe/toy.hpp"

namespace symprobe::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

using Keys = std::vector<KeySpec>;

Keys operator+(Keys a, const Keys& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Keys run_keys() {
  return {{"output", ValueKind::text, "", "output directory", true},
          {"seed", ValueKind::integer, "0", "run seed; every random stream derives from it"},
          {"threads", ValueKind::integer, "1", "worker threads for orbit sampling"}};
}

Keys data_keys(const std::string& count, const std::string& rattle, const std::string& parity) {
  return {{"input", ValueKind::text, "", "extended-XYZ structures; empty generates CHBrClF conformers"},
          {"conformers.count", ValueKind::integer, count, "number of generated conformers"},
          {"conformers.rattle", ValueKind::real, rattle, "Gaussian rattle per coordinate (angstrom)"},
          {"conformers.parity", ValueKind::boolean, parity, "invert half of the conformers (both enantiomers)"},
          {"conformers.orientation", ValueKind::boolean, "true", "randomly orient each conformer"}};
}

Keys grid_keys(const std::string& band) {
  return {{"grid.band_limit", ValueKind::integer, band, "O(3) quadrature band limit"},
          {"grid.scheme", ValueKind::text, "lebedev_trapezoid", "lebedev_trapezoid or gauss_product"},
          {"lambda_max", ValueKind::integer, "-1", "largest angular order in spectra; -1 uses the band limit"}};
}

// ---- shared helpers -------------------------------------------------------

std::uint64_t run_seed(const RunConfig& c) { return std::uint64_t(c.integer("seed")); }

int threads(const RunConfig& c) {
  const long t = c.integer("threads");
  if (t < 1) throw ConfigError("threads must be >= 1");
  return int(t);
}

O3Grid make_grid(const RunConfig& c, const std::string& key = "grid.band_limit", bool parity = true) {
  const long band = c.integer(key);
  if (band < 1) throw ConfigError(fmt::format("{} must be >= 1", key));
  GridScheme scheme;
  try {
    scheme = parse_grid_scheme(key == "grid.band_limit" ? c.text("grid.scheme") : "lebedev_trapezoid");
  } catch (const InvalidArgument& e) {
    throw ConfigError(fmt::format("grid.scheme: {}", e.what()));
  }
  try {
    return parity ? build_o3_grid(int(band), scheme) : build_so3_grid(int(band), scheme);
  } catch (const CapacityError& e) {
    throw ConfigError(fmt::format("{} (the largest supported {} is {})", e.what(), key, max_lebedev_band_limit()));
  }
}

int spectrum_lambda_max(const RunConfig& c, const O3Grid& grid) {
  const long l = c.integer("lambda_max");
  if (l < 0) return grid.band_limit();
  if (l > grid.band_limit()) {
    throw ConfigError(fmt::format("lambda_max {} exceeds grid.band_limit {}; raise grid.band_limit or lower lambda_max", l,
                                  grid.band_limit()));
  }
  return int(l);
}

ConformerSpec conformer_spec(const RunConfig& c) {
  ConformerSpec spec;
  spec.count = int(c.integer("conformers.count"));
  spec.rattle_sigma = c.real("conformers.rattle");
  spec.random_parity = c.boolean("conformers.parity");
  spec.random_orientation = c.boolean("conformers.orientation");
  spec.seed = stream_seed(run_seed(c), "conformers");
  if (spec.count < 1) throw ConfigError("conformers.count must be >= 1");
  if (spec.rattle_sigma < 0) throw ConfigError("conformers.rattle must be >= 0");
  return spec;
}

std::vector<DecoratedPointCloud> load_structures(const RunConfig& c) {
  if (const auto path = c.text("input"); !path.empty()) {
    if (!fs::exists(path)) throw ConfigError(fmt::format("input file {} does not exist", path));
    auto clouds = read_xyz_file(path);
    if (clouds.empty()) throw ConfigError(fmt::format("input file {} holds no structures", path));
    return clouds;
  }
  std::vector<DecoratedPointCloud> out;
  for (auto& conf : rattled_conformers(conformer_spec(c))) out.push_back(std::move(conf.cloud));
  return out;
}

/// "gyration" and "Q" are computed; any other name is read from the structure's info.
double target_value(const std::string& name, const DecoratedPointCloud& x) {
  if (name == "gyration") return x.centered().squaredNorm();
  if (name == "Q") return pseudoscalar_Q(x);
  auto it = x.info.find(name);
  if (it == x.info.end()) throw ConfigError(fmt::format("structure has no property '{}' in its info line", name));
  return it->second;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::vector<std::string> schema_names(const TapSchema& schema) {
  std::vector<std::string> out;
  for (const auto& [name, dim] : schema) out.push_back(name);
  return out;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

void write_run_log(const OutputDir& dir, const std::string& command, const RunConfig& c) {
  OutputDir::write(dir.logs() / (command + ".config"), fmt::format("# symprobe {}\n{}", command, c.resolved()));
}

std::vector<size_t> shuffled_indices(size_t n, std::uint64_t seed) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(idx.begin(), idx.end(), rng);
  return idx;
}

std::string label_key(const IrrepLabel& l) { return l.to_string(); }

}  // namespace

std::vector<KeySpec> command_keys(const std::string& command) {
  if (command == "probe") {
    return run_keys() + data_keys("20", "0.05", "false") + grid_keys("4") +
           Keys{{"model", ValueKind::text, "", "model source (builtin:..., checkpoint:..., tcp:..., exec:...)", true},
                {"taps", ValueKind::list, "", "taps to probe; empty probes every tap"},
                {"claim.", ValueKind::label, "", "claimed irrep of a tap, e.g. claim.y = 1,+1"},
                {"target.", ValueKind::text, "", "reference value of a 1-d tap: gyration, Q or an info key"}};
  }
  if (command == "heatmap") {
    return run_keys() + data_keys("8", "0.05", "false") + grid_keys("2") +
           Keys{{"checkpoints", ValueKind::text, "", "glob of toy-model checkpoint JSON files", true},
                {"taps", ValueKind::list, "", "taps (layers) to include; empty includes all"}};
  }
  if (command == "purify") {
    return run_keys() + data_keys("40", "0.05", "false") + grid_keys("2") +
           Keys{{"model", ValueKind::text, "", "model source exposing a last-layer feature tap", true},
                {"tap", ValueKind::text, "", "last-layer feature tap; default llf or llf:<head>"},
                {"head", ValueKind::text, "", "toy-model head to re-solve; default the first"},
                {"target", ValueKind::text, "", "target per structure: gyration, Q or an info key; default the head name"},
                {"readout.irrep", ValueKind::label, "", "irrep of the readout output; default from the model"},
                {"gammas", ValueKind::list, "0,0.1,1,10,100", "equivariance penalty ladder"},
                {"holdout", ValueKind::real, "0.5", "fraction of structures held out for the tradeoff table"},
                {"max_rmse_increase", ValueKind::real, "0.01", "largest relative RMSE increase allowed for the chosen gamma"},
                {"fixture.count", ValueKind::integer, "120", "structures in builtin:fixture:contaminated"},
                {"fixture.eta", ValueKind::real, "0.3", "fixture contamination strength"},
                {"fixture.beta", ValueKind::real, "0.03", "fixture weight of the second feature block in the target"},
                {"fixture.noise", ValueKind::real, "3.0", "fixture unpredictable target noise"}};
  }
  if (command == "dataset") {
    return Keys{{"output", ValueKind::text, "", "output directory", true},
                {"seed", ValueKind::integer, "0", "run seed"},
                {"name", ValueKind::text, "conformers", "dataset file name under data/"},
                {"conformers.count", ValueKind::integer, "1000", "number of conformers"},
                {"conformers.rattle", ValueKind::real, "0.05", "Gaussian rattle per coordinate (angstrom)"},
                {"conformers.parity", ValueKind::boolean, "false", "invert half of the conformers"},
                {"conformers.orientation", ValueKind::boolean, "true", "randomly orient each conformer"}};
  }
  if (command == "grid") {
    return Keys{{"output", ValueKind::text, "", "output directory", true},
                {"grid.band_limit", ValueKind::integer, "8", "band limit"},
                {"grid.scheme", ValueKind::text, "lebedev_trapezoid", "lebedev_trapezoid or gauss_product"},
                {"grid.parity", ValueKind::boolean, "true", "include the inversion coset (O(3) rather than SO(3))"},
                {"certify.lambda_max", ValueKind::integer, "-1", "largest order checked; -1 uses the band limit"}};
  }
  if (command == "train") {
    return run_keys() + data_keys("1000", "0.15", "true") +
           Keys{{"target", ValueKind::text, "gyration", "target: gyration, Q or an info key"},
                {"target.irrep", ValueKind::label, "", "irrep of the target; default (0,-1) for Q, else (0,+1)"},
                {"val_fraction", ValueKind::real, "0.1", "fraction of structures used for validation"},
                {"model.embedding", ValueKind::text, "distance_vector", "distance_vector or ssh"},
                {"model.lambda_max_emb", ValueKind::integer, "2", "solid-harmonic order of the ssh embedding"},
                {"model.width", ValueKind::integer, "64", "hidden width"},
                {"model.depth", ValueKind::integer, "3", "layers per MLP"},
                {"model.pooling", ValueKind::text, "sum", "sum or attention"},
                {"model.species", ValueKind::list, "", "atomic numbers with their own embedding; empty takes those in the data"},
                {"model.species_width", ValueKind::integer, "4", "species embedding width"},
                {"model.scalar_only", ValueKind::boolean, "false", "keep only rotation-invariant geometry channels"},
                {"train.epochs", ValueKind::integer, "150", "epochs"},
                {"train.batch_size", ValueKind::integer, "16", "batch size"},
                {"train.lr", ValueKind::real, "0.003", "initial learning rate"},
                {"train.final_lr_factor", ValueKind::real, "0.03", "learning rate at the last epoch, relative"},
                {"train.weight_decay", ValueKind::real, "0.3", "decoupled weight decay"},
                {"train.augmentation", ValueKind::text, "rotations", "none, rotations or rotations_and_inversion"},
                {"snapshot.stride", ValueKind::integer, "0", "epochs between checkpoints and heatmap columns; 0 disables"},
                {"snapshot.clouds", ValueKind::integer, "8", "validation structures per heatmap column"},
                {"snapshot.band", ValueKind::integer, "2", "grid band limit for heatmap columns"},
                {"snapshot.lambda_max", ValueKind::integer, "2", "largest order in heatmap columns"},
                {"eval.band_limit", ValueKind::integer, "4", "grid band limit for the final equivariance error"},
                {"eval.clouds", ValueKind::integer, "100", "validation structures used for the final equivariance error"}};
  }
  if (command == "serve") {
    return Keys{{"model", ValueKind::text, "", "model source to serve", true},
                {"seed", ValueKind::integer, "0", "run seed (fixture sources)"},
                {"points", ValueKind::integer, "0", "cloud size; required for checkpoint models"},
                {"sessions", ValueKind::integer, "-1", "TCP sessions to serve before exiting; -1 serves forever"}};
  }
  throw ConfigError(fmt::format("unknown command '{}'", command));
}

// ---- probe ----------------------------------------------------------------

void cmd_probe(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto grid = make_grid(c);
  const int lmax = spectrum_lambda_max(c, grid);
  const int nthreads = threads(c);
  const auto structures = load_structures(c);
  auto model = Model::open(c.text("model"), stream_seed(run_seed(c), "fixture"));
  auto& first = model->probe(int(structures.front().size()));

  auto taps = c.list("taps");
  if (taps.empty()) taps = schema_names(first.schema());
  for (const auto& t : taps) {
    if (!first.schema().count(t)) {
      throw ConfigError(fmt::format("model has no tap '{}'; available: {}", t, join(schema_names(first.schema()))));
    }
  }
  std::map<std::string, IrrepLabel> claims;
  for (const auto& t : taps) {
    if (auto it = first.declared_irreps.find(t); it != first.declared_irreps.end()) claims.emplace(t, it->second);
  }
  for (const auto& [t, text] : c.family("claim.")) {
    if (std::find(taps.begin(), taps.end(), t) == taps.end()) throw ConfigError(fmt::format("claim for unprobed tap '{}'", t));
    claims.insert_or_assign(t, c.label("claim." + t));
  }
  for (const auto& [t, label] : claims) {
    if (first.schema().at(t) % label.dim() != 0) {
      throw ConfigError(fmt::format("tap '{}' has dimension {}, not a multiple of dim{} = {}", t, first.schema().at(t),
                                    label.to_string(), label.dim()));
    }
  }
  const auto targets = c.family("target.");
  for (const auto& [t, name] : targets) {
    if (std::find(taps.begin(), taps.end(), t) == taps.end()) throw ConfigError(fmt::format("target for unprobed tap '{}'", t));
    if (first.schema().at(t) != 1) throw ConfigError(fmt::format("target.{}: absolute errors need a 1-d tap", t));
  }

  OutputDir dir(c.text("output"));
  write_run_log(dir, "probe", c);

  std::string spectrum_csv = "structure,tap,lambda,sigma,projection,normalized\n";
  std::string norms_csv = "structure,tap,total_norm,sum_rule_residual\n";
  std::string errors_csv = "structure,tap,lambda,sigma,equivariance_error,absolute_error\n";
  std::map<std::string, std::map<IrrepLabel, double>> normalized_sum;
  std::map<std::string, double> worst_residual;
  std::map<std::string, std::vector<double>> eq_errors, abs_errors;
  for (size_t s = 0; s < structures.size(); ++s) {
    const auto& x = structures[s];
    auto& f = model->probe(int(x.size()));
    const auto samples = sample_orbit(f, taps, x, grid, nthreads);
    TapValues at_x;
    if (!targets.empty()) {
      std::vector<std::string> tt;
      for (const auto& [t, name] : targets) tt.push_back(t);
      at_x = f.evaluate(x, tt);
    }
    for (const auto& t : taps) {
      const auto report = character_projection(samples.at(t), grid, lmax);
      for (const auto& [label, b] : report.projections) {
        spectrum_csv += fmt::format("{},{},{},{:+d},{},{}\n", s, t, label.lambda(), label.sigma(), format_double(b),
                                    format_double(report.normalized.at(label)));
        normalized_sum[t][label] += report.normalized.at(label);
      }
      const double residual = sum_rule_check(report);
      norms_csv += fmt::format("{},{},{},{}\n", s, t, format_double(report.total_norm), format_double(residual));
      worst_residual[t] = std::max(worst_residual[t], std::abs(residual));
      if (auto it = claims.find(t); it != claims.end()) {
        const double a = equivariance_error(samples.at(t), grid, it->second);
        eq_errors[t].push_back(a);
        std::string ae;
        if (auto tg = targets.find(t); tg != targets.end()) {
          const double e = std::abs(at_x.at(t)(0) - target_value(tg->second, x));
          abs_errors[t].push_back(e);
          ae = format_double(e);
        }
        errors_csv += fmt::format("{},{},{},{:+d},{},{}\n", s, t, it->second.lambda(), it->second.sigma(), format_double(a), ae);
      }
    }
  }

  json summary = {{"structures", structures.size()},
                  {"model", c.text("model")},
                  {"grid", {{"band_limit", grid.band_limit()}, {"scheme", to_string(grid.scheme())}, {"nodes", grid.size()}}},
                  {"lambda_max", lmax},
                  {"taps", json::object()}};
  const double n = double(structures.size());
  for (const auto& t : taps) {
    json entry;
    json normalized = json::object();
    std::vector<std::string> labels;
    std::vector<double> values;
    for (const auto& [label, sum] : normalized_sum[t]) {
      normalized[label_key(label)] = sum / n;
      labels.push_back(label_key(label));
      values.push_back(sum / n);
    }
    entry["mean_normalized_projection"] = normalized;
    entry["max_abs_sum_rule_residual"] = worst_residual[t];
    std::string line = fmt::format("tap {}:", t);
    const auto best = std::max_element(values.begin(), values.end()) - values.begin();
    if (!values.empty()) line += fmt::format(" largest normalized B {} = {:.6g}", labels[best], values[best]);
    if (auto it = claims.find(t); it != claims.end()) {
      entry["claim"] = label_key(it->second);
      entry["median_equivariance_error"] = median(eq_errors[t]);
      line += fmt::format(", median A{} = {:.3e}", label_key(it->second), median(eq_errors[t]));
    }
    if (abs_errors.count(t)) {
      entry["median_absolute_error"] = median(abs_errors[t]);
      line += fmt::format(", median |error| = {:.3e}", median(abs_errors[t]));
    }
    summary["taps"][t] = entry;
    out << line << "\n";

    OutputDir::write(dir.plots() / ("spectrum_" + file_stem(t) + ".svg"),
                     bar_plot(fmt::format("character spectrum of '{}'", t), "mean normalized B", labels, values));
    if (claims.count(t)) {
      std::vector<Sample> dists{{"equivariance error", eq_errors[t]}};
      if (abs_errors.count(t)) dists.insert(dists.begin(), Sample{"absolute error", abs_errors[t]});
      OutputDir::write(dir.plots() / ("errors_" + file_stem(t) + ".svg"),
                       distribution_plot(fmt::format("error distributions of '{}'", t), "error", dists));
    }
  }
  OutputDir::write(dir.reports() / "spectrum.csv", spectrum_csv);
  OutputDir::write(dir.reports() / "norms.csv", norms_csv);
  OutputDir::write(dir.reports() / "equivariance.csv", errors_csv);
  OutputDir::write(dir.reports() / "probe_summary.json", dump_json(summary, 2) + "\n");
  out << fmt::format("probed {} structures on {} grid nodes; reports in {}\n", structures.size(), grid.size(),
                     dir.reports().string());
}

// ---- heatmap --------------------------------------------------------------

void cmd_heatmap(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto grid = make_grid(c);
  const int lmax = spectrum_lambda_max(c, grid);
  const int nthreads = threads(c);
  const auto structures = load_structures(c);

  glob_t found{};
  const int rc = ::glob(c.text("checkpoints").c_str(), 0, nullptr, &found);
  std::vector<std::string> paths(found.gl_pathv, found.gl_pathv + (rc == 0 ? found.gl_pathc : 0));
  ::globfree(&found);
  if (paths.empty()) throw ConfigError(fmt::format("no checkpoints match '{}'", c.text("checkpoints")));

  struct Entry {
    int epoch;
    std::string path;
    ToyNet net;
  };
  std::vector<Entry> entries;
  for (const auto& p : paths) {
    const auto epoch = checkpoint_epoch(p);
    if (!epoch) throw ConfigError(fmt::format("checkpoint {} carries no epoch tag", p));
    if (*epoch < 1 && *epoch != HeatmapTable::kUntrained) throw ConfigError(fmt::format("checkpoint {} has epoch {}", p, *epoch));
    entries.push_back({*epoch, p, load_checkpoint(p)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.epoch < b.epoch; });
  const auto arch = entries.front().net.config().to_json();
  for (size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].net.config().to_json() != arch || entries[k].net.parameters().size() != entries[0].net.parameters().size()) {
      throw ConfigError(fmt::format("checkpoint {} has a different architecture from {}", entries[k].path, entries[0].path));
    }
    if (k > 0 && entries[k].epoch == entries[k - 1].epoch) {
      throw ConfigError(fmt::format("checkpoints {} and {} share epoch {}", entries[k - 1].path, entries[k].path, entries[k].epoch));
    }
  }
  auto taps = c.list("taps");
  const auto schema = entries[0].net.schema(int(structures.front().size()));
  if (taps.empty()) taps = schema_names(schema);
  for (const auto& t : taps) {
    if (!schema.count(t)) throw ConfigError(fmt::format("model has no tap '{}'; available: {}", t, join(schema_names(schema))));
  }

  OutputDir dir(c.text("output"));
  write_run_log(dir, "heatmap", c);
  HeatmapTable table;
  for (const auto& e : entries) {
    for (const auto& x : structures) {
      ToyNetProbe probe(e.net, int(x.size()));
      for (const auto& [tap, report] : character_projections(probe, taps, x, grid, lmax, nthreads)) {
        table.accumulate(e.epoch, tap, report);
      }
    }
    out << fmt::format("column {}: {}\n", e.epoch == HeatmapTable::kUntrained ? "U" : std::to_string(e.epoch), e.path);
  }
  OutputDir::write(dir.reports() / "heatmap.csv", table.to_csv());
  OutputDir::write(dir.reports() / "heatmap.json", dump_json(table.to_json(), 2) + "\n");
  for (const auto& t : taps) {
    const auto epochs = table.epochs(t);
    std::vector<std::string> rows;
    std::vector<std::vector<double>> values;
    for (const auto& label : all_labels(lmax)) {
      rows.push_back(label_key(label));
      std::vector<double> row;
      for (int e : epochs) row.push_back(table.value(t, e, label));
      values.push_back(std::move(row));
    }
    OutputDir::write(dir.plots() / ("heatmap_" + file_stem(t) + ".svg"),
                     heatmap_plot(fmt::format("normalized character spectrum of '{}'", t), epochs, rows, values));
  }
  out << fmt::format("{} columns x {} taps; reports in {}\n", entries.size(), taps.size(), dir.reports().string());
}

// ---- purify ---------------------------------------------------------------

void cmd_purify(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto grid = make_grid(c);
  const int nthreads = threads(c);
  const double holdout = c.real("holdout");
  if (!(holdout > 0.0 && holdout < 1.0)) throw ConfigError("holdout must lie strictly between 0 and 1");
  const double max_increase = c.real("max_rmse_increase");
  if (max_increase < 0.0) throw ConfigError("max_rmse_increase must be >= 0");
  std::vector<double> gammas;
  for (const auto& g : c.list("gammas")) {
    double v = 0.0;
    try {
      size_t used = 0;
      v = std::stod(g, &used);
      if (used != g.size()) throw std::invalid_argument(g);
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("gammas: '{}' is not a number", g));
    }
    if (!(v >= 0.0)) throw ConfigError("gammas must be >= 0");
    gammas.push_back(v);
  }
  if (gammas.empty()) throw ConfigError("gammas is empty");
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end()), gammas.end());

  ContaminatedFixtureSpec fixture_spec;
  fixture_spec.count = int(c.integer("fixture.count"));
  fixture_spec.eta = c.real("fixture.eta");
  fixture_spec.beta = c.real("fixture.beta");
  fixture_spec.noise = c.real("fixture.noise");
  if (fixture_spec.count < 2) throw ConfigError("fixture.count must be >= 2");
  auto model = Model::open(c.text("model"), stream_seed(run_seed(c), "fixture"), fixture_spec);

  std::vector<DecoratedPointCloud> clouds;
  std::vector<Eigen::VectorXd> targets;
  OutputBlocking blocking;
  std::string tap = c.text("tap");
  if (const auto* fx = model->fixture()) {
    clouds = fx->clouds;
    targets = fx->targets;
    blocking = fx->blocking;
    if (tap.empty()) tap = "llf";
  } else {
    clouds = load_structures(c);
    std::string target = c.text("target");
    if (const auto* net = model->net()) {
      const auto& heads = net->config().heads;
      const auto head = c.text("head").empty() ? heads.front().name : c.text("head");
      auto it = std::find_if(heads.begin(), heads.end(), [&](const HeadSpec& h) { return h.name == head; });
      if (it == heads.end()) throw ConfigError(fmt::format("model has no head '{}'", head));
      blocking = {it->label, it->blocks};
      if (tap.empty()) tap = "llf:" + head;
      if (target.empty()) target = head;
    }
    if (tap.empty()) throw ConfigError("set tap to the model's last-layer feature tap");
    if (target.empty()) throw ConfigError("set target to gyration, Q or an info key");
    for (const auto& x : clouds) targets.push_back(Eigen::VectorXd::Constant(1, target_value(target, x)));
  }
  if (c.has("readout.irrep")) blocking = {c.label("readout.irrep"), 1};
  if (!model->fixture() && blocking.dim() != 1) {
    throw ConfigError(fmt::format("readout output {} has dimension {}, but targets are scalars", blocking.label.to_string(),
                                  blocking.dim()));
  }
  auto& first = model->probe(int(clouds.front().size()));
  if (!first.schema().count(tap)) {
    throw ConfigError(fmt::format("model has no last-layer feature tap '{}'; available: {}", tap,
                                  join(schema_names(first.schema()))));
  }
  if (clouds.size() < 2) throw ConfigError("purify needs at least two structures");

  OutputDir dir(c.text("output"));
  write_run_log(dir, "purify", c);

  const auto order = shuffled_indices(clouds.size(), stream_seed(run_seed(c), "split"));
  const size_t n_hold = std::clamp<size_t>(size_t(std::lround(holdout * double(clouds.size()))), 1, clouds.size() - 1);
  std::vector<ReadoutSample> train_samples, held;
  for (size_t k = 0; k < order.size(); ++k) {
    const auto& x = clouds[order[k]];
    auto samples = collect_samples(model->probe(int(x.size())), tap, {x}, {targets[order[k]]}, grid, nthreads);
    (k < n_hold ? held : train_samples).push_back(std::move(samples.front()));
  }
  ReadoutAccumulator acc(grid, first.schema().at(tap), blocking);
  for (const auto& s : train_samples) acc.add(s);
  std::vector<PurifiedReadout> ladder;
  for (double g : gammas) ladder.push_back(solve_readout(acc, g));
  const auto rows = evaluate_tradeoff(ladder, held, grid, blocking);

  size_t chosen = 0;
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].rmse <= (1.0 + max_increase) * rows[0].rmse) chosen = k;
  }
  OutputDir::write(dir.reports() / "tradeoff.csv", tradeoff_csv(rows));
  for (const auto& r : ladder) {
    OutputDir::write(dir.checkpoints() / fmt::format("readout_gamma_{:g}.json", r.gamma),
                     dump_json(r.to_json(), 2) + "\n");
  }
  OutputDir::write(dir.checkpoints() / "purified_readout.json", dump_json(ladder[chosen].to_json(), 2) + "\n");
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"gamma", r.gamma}, {"rmse", r.rmse}, {"equivariance_error", r.equivariance_error},
                     {"train_L_sigma", r.train_L_sigma}});
  }
  const double reduction = rows[chosen].equivariance_error > 0 ? rows[0].equivariance_error / rows[chosen].equivariance_error
                                                               : std::numeric_limits<double>::infinity();
  json summary = {{"model", c.text("model")},
                  {"tap", tap},
                  {"readout_irrep", label_key(blocking.label)},
                  {"train_structures", train_samples.size()},
                  {"heldout_structures", held.size()},
                  {"ladder", table},
                  {"chosen_gamma", rows[chosen].gamma},
                  {"equivariance_error_reduction", reduction},
                  {"relative_rmse_increase", rows[chosen].rmse / rows[0].rmse - 1.0}};
  OutputDir::write(dir.reports() / "purify_summary.json", dump_json(summary, 2) + "\n");
  Curve curve{"gamma ladder", {}, {}};
  for (const auto& r : rows) {
    curve.x.push_back(r.equivariance_error);
    curve.y.push_back(r.rmse);
  }
  OutputDir::write(dir.plots() / "tradeoff.svg",
                   line_plot("accuracy versus equivariance", "held-out equivariance error", "held-out RMSE", {curve}, true, false));
  for (const auto& r : rows) {
    out << fmt::format("gamma {:>8g}: rmse {:.6g}, equivariance error {:.6g}\n", r.gamma, r.rmse,
                       r.equivariance_error);
  }
  out << fmt::format("chosen gamma {:g} reduces the equivariance error {:.3g}x at {:+.3g}% RMSE\n",
                     rows[chosen].gamma, reduction, 100.0 * (rows[chosen].rmse / rows[0].rmse - 1.0));
}

// ---- dataset --------------------------------------------------------------

void cmd_dataset(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto spec = conformer_spec(c);
  const auto name = c.text("name");
  if (name.empty() || name.find('/') != std::string::npos) throw ConfigError("name must be a plain file name");
  const auto conformers = rattled_conformers(spec);
  OutputDir dir(c.text("output"));
  write_run_log(dir, "dataset", c);
  std::vector<DecoratedPointCloud> clouds;
  std::vector<double> qs;
  for (const auto& conf : conformers) {
    clouds.push_back(conf.cloud);
    qs.push_back(conf.q);
  }
  const auto path = dir.data() / (name + ".xyz");
  std::ostringstream text;
  write_xyz(text, clouds);
  OutputDir::write(path, text.str());
  const double mean = std::accumulate(qs.begin(), qs.end(), 0.0) / double(qs.size());
  double var = 0.0, abs_mean = 0.0;
  for (double q : qs) {
    var += (q - mean) * (q - mean);
    abs_mean += std::abs(q);
  }
  json summary = {{"file", path.filename().string()},
                  {"count", clouds.size()},
                  {"rattle", spec.rattle_sigma},
                  {"random_parity", spec.random_parity},
                  {"random_orientation", spec.random_orientation},
                  {"q_mean", mean},
                  {"q_std", std::sqrt(var / double(qs.size()))},
                  {"q_abs_mean", abs_mean / double(qs.size())}};
  OutputDir::write(dir.reports() / "dataset.json", dump_json(summary, 2) + "\n");
  out << fmt::format("wrote {} structures to {}\n", clouds.size(), path.string());
}

// ---- grid -----------------------------------------------------------------

void cmd_grid(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto grid = make_grid(c, "grid.band_limit", c.boolean("grid.parity"));
  long lmax = c.integer("certify.lambda_max");
  if (lmax < 0) lmax = grid.band_limit();
  if (lmax > grid.band_limit()) {
    throw ConfigError(fmt::format("certify.lambda_max {} exceeds grid.band_limit {}", lmax, grid.band_limit()));
  }
  OutputDir dir(c.text("output"));
  write_run_log(dir, "grid", c);
  const double weight_sum = std::accumulate(grid.weights().begin(), grid.weights().end(), 0.0);
  json residuals = json::array();
  double worst = 0.0;
  out << fmt::format("{} grid, band limit {}, {} nodes, weight sum {:.17g}\n", grid.covers_parity() ? "O(3)" : "SO(3)",
                     grid.band_limit(), grid.size(), weight_sum);
  out << "lambda_max  orthogonality residual\n";
  for (int l = 0; l <= lmax; ++l) {
    const double r = orthogonality_residual(grid, l);
    worst = std::max(worst, r);
    residuals.push_back({{"lambda_max", l}, {"residual", r}});
    out << fmt::format("{:>10}  {:.3e}\n", l, r);
  }
  constexpr double kTolerance = 1e-10;
  json report = {{"band_limit", grid.band_limit()},
                 {"scheme", to_string(grid.scheme())},
                 {"covers_parity", grid.covers_parity()},
                 {"nodes", grid.size()},
                 {"weight_sum", weight_sum},
                 {"residuals", residuals},
                 {"max_residual", worst},
                 {"tolerance", kTolerance},
                 {"certified", worst <= kTolerance}};
  OutputDir::write(dir.reports() / "grid.json", dump_json(grid_to_json(grid), 2) + "\n");
  OutputDir::write(dir.reports() / "grid_certification.json", dump_json(report, 2) + "\n");
  if (worst > kTolerance) {
    throw NumericalInconsistency(fmt::format("grid certification failed: residual {:.3e} > {:.0e}", worst, kTolerance));
  }
  out << fmt::format("certified: max residual {:.3e} <= {:.0e}\n", worst, kTolerance);
}

// ---- train ----------------------------------------------------------------

void cmd_train(const RunConfig& c, std::ostream& out) {
  c.validate();
  const auto structures = load_structures(c);
  const auto target = c.text("target");
  const IrrepLabel label = c.has("target.irrep") ? c.label("target.irrep") : IrrepLabel(0, target == "Q" ? -1 : 1);
  if (label.lambda() != 0) throw ConfigError("train fits scalar targets; target.irrep must have lambda 0");
  const double val_fraction = c.real("val_fraction");
  if (!(val_fraction > 0.0 && val_fraction < 1.0)) throw ConfigError("val_fraction must lie strictly between 0 and 1");
  if (structures.size() < 2) throw ConfigError("training needs at least two structures");

  ToyNetConfig mc;
  const auto embedding = c.text("model.embedding");
  if (embedding == "distance_vector") {
    mc.embedding = GeometryEmbedding::distance_vector;
  } else if (embedding == "ssh") {
    mc.embedding = GeometryEmbedding::ssh;
  } else {
    throw ConfigError(fmt::format("model.embedding: expected distance_vector or ssh, got '{}'", embedding));
  }
  const auto pooling = c.text("model.pooling");
  if (pooling == "sum") {
    mc.pooling = Pooling::sum;
  } else if (pooling == "attention") {
    mc.pooling = Pooling::attention;
  } else {
    throw ConfigError(fmt::format("model.pooling: expected sum or attention, got '{}'", pooling));
  }
  mc.lambda_max_emb = int(c.integer("model.lambda_max_emb"));
  mc.hidden_width = int(c.integer("model.width"));
  mc.depth = int(c.integer("model.depth"));
  mc.species_width = int(c.integer("model.species_width"));
  mc.scalar_only = c.boolean("model.scalar_only");
  mc.heads = {{target, label, 1}};
  mc.seed = stream_seed(run_seed(c), "model_init");
  const auto species = c.list("model.species");
  if (species.empty()) {
    std::set<int> seen;
    for (const auto& x : structures) {
      if (auto it = x.scalar_attrs.find("species"); it != x.scalar_attrs.end()) {
        for (Eigen::Index i = 0; i < it->second.rows(); ++i) seen.insert(int(std::lround(it->second(i, 0))));
      }
    }
    mc.species.assign(seen.begin(), seen.end());
  } else {
    for (const auto& s : species) {
      const int z = atomic_number(s) > 0 ? atomic_number(s) : std::atoi(s.c_str());
      if (z < 1) throw ConfigError(fmt::format("model.species: '{}' is neither an element nor an atomic number", s));
      mc.species.push_back(z);
    }
  }

  TrainConfig tc;
  tc.epochs = int(c.integer("train.epochs"));
  tc.batch_size = int(c.integer("train.batch_size"));
  tc.learning_rate = c.real("train.lr");
  tc.final_lr_factor = c.real("train.final_lr_factor");
  tc.weight_decay = c.real("train.weight_decay");
  const auto aug = c.text("train.augmentation");
  if (aug == "none") {
    tc.augmentation = Augmentation::none;
  } else if (aug == "rotations") {
    tc.augmentation = Augmentation::rotations;
  } else if (aug == "rotations_and_inversion") {
    tc.augmentation = Augmentation::rotations_and_inversion;
  } else {
    throw ConfigError(fmt::format("train.augmentation: expected none, rotations or rotations_and_inversion, got '{}'", aug));
  }
  tc.snapshot_stride = int(c.integer("snapshot.stride"));
  tc.snapshot_clouds = int(c.integer("snapshot.clouds"));
  tc.snapshot_band = int(c.integer("snapshot.band"));
  tc.snapshot_lambda_max = int(c.integer("snapshot.lambda_max"));
  tc.seed = stream_seed(run_seed(c), "train");
  try {
    mc.validate();
    tc.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  const long eval_clouds = c.integer("eval.clouds");
  if (eval_clouds < 1) throw ConfigError("eval.clouds must be >= 1");
  const auto eval_grid = make_grid(c, "eval.band_limit");

  std::vector<LabeledCloud> data;
  for (const auto& x : structures) data.push_back({x, {{target, Eigen::VectorXd::Constant(1, target_value(target, x))}}});
  const auto order = shuffled_indices(data.size(), stream_seed(run_seed(c), "split"));
  const size_t n_val = std::clamp<size_t>(size_t(std::lround(val_fraction * double(data.size()))), 1, data.size() - 1);
  std::vector<LabeledCloud> val, train_set;
  for (size_t k = 0; k < order.size(); ++k) (k < n_val ? val : train_set).push_back(data[order[k]]);

  OutputDir dir(c.text("output"));
  write_run_log(dir, "train", c);
  ToyNet net(mc);
  auto checkpoint_name = [](int epoch) {
    return epoch == HeatmapTable::kUntrained ? std::string("epoch_U.json") : fmt::format("epoch_{:04d}.json", epoch);
  };
  TrainResult result;
  try {
    result = train(net, train_set, val, tc, [&](int epoch, const ToyNet& n) {
      save_checkpoint(n, dir.checkpoints() / checkpoint_name(epoch), epoch);
    });
  } catch (const NumericalInconsistency& e) {
    throw NumericalInconsistency(fmt::format("{}; lower train.lr or raise train.batch_size", e.what()));
  }
  save_checkpoint(net, dir.checkpoints() / "final.json", tc.epochs);
  OutputDir::write(dir.logs() / "train.csv", result.log_csv());
  if (!result.snapshots.empty()) OutputDir::write(dir.reports() / "train_heatmap.csv", result.heatmap.to_csv());

  double mean = 0.0, var = 0.0;
  for (const auto& s : val) mean += s.targets.at(target)(0) / double(val.size());
  for (const auto& s : val) var += std::pow(s.targets.at(target)(0) - mean, 2) / double(val.size());
  const double rmse = head_rmse(net, val, target);
  std::vector<double> eq_errors, abs_errors;
  for (size_t k = 0; k < val.size() && long(k) < eval_clouds; ++k) {
    const auto& x = val[k].cloud;
    ToyNetProbe probe(net, int(x.size()));
    eq_errors.push_back(equivariance_error(probe, target, label, x, eval_grid));
    abs_errors.push_back(std::abs(net.forward(x, false).heads.at(target)(0) - val[k].targets.at(target)(0)));
  }
  json summary = {{"target", target},
                  {"target_irrep", label_key(label)},
                  {"train_structures", train_set.size()},
                  {"val_structures", val.size()},
                  {"parameters", net.parameters().size()},
                  {"val_rmse", rmse},
                  {"val_target_std", std::sqrt(var)},
                  {"val_relative_rmse", var > 0 ? rmse / std::sqrt(var) : std::nan("")},
                  {"eval_band_limit", eval_grid.band_limit()},
                  {"median_equivariance_error", median(eq_errors)},
                  {"median_absolute_error", median(abs_errors)},
                  {"final_checkpoint", "checkpoints/final.json"}};
  OutputDir::write(dir.reports() / "train_summary.json", dump_json(summary, 2) + "\n");
  Curve loss{"train loss", {}, {}}, val_curve{"val RMSE", {}, {}};
  for (const auto& e : result.log) {
    loss.x.push_back(e.epoch);
    loss.y.push_back(e.train_loss);
    val_curve.x.push_back(e.epoch);
    val_curve.y.push_back(e.val_rmse.at(target));
  }
  OutputDir::write(dir.plots() / "train_log.svg", line_plot("training", "epoch", "value", {loss, val_curve}, false, true));
  OutputDir::write(dir.plots() / "train_errors.svg",
                   distribution_plot("validation error distributions", "error",
                                     {{"absolute error", abs_errors}, {"equivariance error", eq_errors}}));
  out << fmt::format("trained {} epochs on {} structures; val RMSE {:.4g} ({:.3g} of the target spread)\n", tc.epochs,
                     train_set.size(), rmse, var > 0 ? rmse / std::sqrt(var) : std::nan(""));
  out << fmt::format("median equivariance error {:.3e}, median absolute error {:.3e}\n", median(eq_errors),
                     median(abs_errors));
}

// ---- serve ----------------------------------------------------------------

void cmd_serve(const RunConfig& c, int port, std::ostream& log) {
  c.validate();
  auto model = Model::open(c.text("model"), stream_seed(run_seed(c), "fixture"));
  const long points = c.integer("points");
  if (model->net() && points < 1) throw ConfigError("serving a checkpoint needs points = <cloud size>");
  auto& f = model->probe(int(std::max(points, 1L)));
  if (port < 0) {
    FdChannel channel(STDIN_FILENO, STDOUT_FILENO, false);
    serve_session(f, channel);
    return;
  }
  TcpServer server(port);
  log << fmt::format("serving {} on 127.0.0.1:{}\n", c.text("model"), server.port()) << std::flush;
  server.serve(f, int(c.integer("sessions")));
}

// ---- entry point ----------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"symprobe: O(3) equivariance diagnostics for point-cloud models"};
  app.require_subcommand(1);
  struct Command {
    const char* name;
    const char* help;
    void (*run)(const RunConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"probe", "character spectra and equivariance errors of a model's taps", cmd_probe},
      {"heatmap", "spectra of toy-model checkpoints across training epochs", cmd_heatmap},
      {"purify", "re-solve a linear readout trading accuracy for equivariance", cmd_purify},
      {"dataset", "generate rattled CHBrClF conformers as extended XYZ", cmd_dataset},
      {"grid", "build an O(3) quadrature grid and certify its orthogonality", cmd_grid},
      {"train", "train the toy message-passing model", cmd_train},
      {"serve", "serve a model over the probe protocol", nullptr},
  };
  std::string config_file;
  std::vector<std::string> settings;
  bool stdio = false;
  int port = -1;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("-c,--config", config_file, "key = value config file");
    sub->add_option("settings", settings, "key=value settings; override the config file");
    sub->footer(describe_keys(command_keys(cmd.name)));
    if (std::string(cmd.name) == "serve") {
      auto* s = sub->add_flag("--stdio", stdio, "one session on stdin/stdout");
      auto* p = sub->add_option("--port", port, "TCP port on 127.0.0.1 (0 picks a free one)");
      s->excludes(p);
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  try {
    RunConfig config(command_keys(name));
    if (!config_file.empty()) config.read_file(config_file);
    for (const auto& s : settings) config.set(s);
    if (name == "serve") {
      if (!stdio && port < 0) throw ConfigError("serve needs --stdio or --port");
      cmd_serve(config, stdio ? -1 : port, err);
      return 0;
    }
    for (const auto& cmd : commands) {
      if (name == cmd.name) cmd.run(config, out);
    }
    return 0;
  } catch (const ConfigError& e) {
    err << "symprobe " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const LockBusy& e) {
    err << "symprobe " << name << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "symprobe " << name << ": " << e.what() << "\n";
    return 1;
  }
}

}  // namespace symprobe::cli
