#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "symprobe/metrics.hpp"
#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"
#include "symprobe/probe.hpp"

namespace symprobe {

enum class GeometryEmbedding { distance_vector, ssh };
enum class Pooling { sum, attention };

struct HeadSpec {
  std::string name;
  IrrepLabel label{0, 1};
  int blocks = 1;
  int dim() const { return blocks * label.dim(); }
};

/// A deliberately small message-passing regressor over all ordered point pairs.
///
/// Per edge (i, j) the geometry embedding of r_j - r_i is either [|r|, r] (vector
/// part in (y, z, x) order) or the solid harmonics up to lambda_max_emb. It is
/// concatenated with both species embeddings and fed to the edge MLP; edge
/// features are pooled per receiving node, mixed with the node's species by the
/// node MLP, summed over nodes, and passed to one SiLU layer plus a linear
/// readout per head.
struct ToyNetConfig {
  GeometryEmbedding embedding = GeometryEmbedding::distance_vector;
  int lambda_max_emb = 2;
  int hidden_width = 32;
  int depth = 2;
  Pooling pooling = Pooling::sum;
  std::vector<HeadSpec> heads{{"y", IrrepLabel(0, 1), 1}};
  /// Atomic numbers with their own embedding row; empty means one shared row.
  std::vector<int> species;
  int species_width = 4;
  /// Ablation: keep only rotation-invariant geometry channels (per-order norms).
  bool scalar_only = false;
  std::uint64_t seed = 0;

  void validate() const;
  int geometry_dim() const;
  nlohmann::json to_json() const;
  static ToyNetConfig from_json(const nlohmann::json& doc);
};

struct ParameterGroup {
  std::string name;
  Eigen::Index offset;
  Eigen::Index size;
};

struct ToyOutputs {
  std::map<std::string, Eigen::VectorXd> heads;
  TapValues taps;
};

class ToyNet {
 public:
  explicit ToyNet(ToyNetConfig config);

  const ToyNetConfig& config() const { return config_; }
  const Eigen::VectorXd& parameters() const { return params_; }
  Eigen::VectorXd& parameters() { return params_; }
  const std::vector<ParameterGroup>& parameter_groups() const { return groups_; }

  /// Per-head output affine map; applied after the readout, fixed during training.
  void set_output_scaling(const std::string& head, double scale, Eigen::VectorXd shift);
  double output_scale(const std::string& head) const;
  const Eigen::VectorXd& output_shift(const std::string& head) const;

  /// Tap names for a cloud of n points and their dimensions:
  /// geometry, edge (per edge, flattened), node (per point), pooled, llf:<head>, <head>.
  TapSchema schema(int n) const;

  /// Throws InvalidArgument on an empty cloud or an unknown species.
  ToyOutputs forward(const DecoratedPointCloud& x, bool with_taps = true) const;

  /// Sum over heads of the mean squared scaled residual |(out - y) / scale|^2 / dim,
  /// and its gradient with respect to parameters() (added into grad). Heads
  /// missing from `targets` are skipped.
  double loss_and_gradient(const DecoratedPointCloud& x, const std::map<std::string, Eigen::VectorXd>& targets,
                           Eigen::VectorXd* grad) const;

  nlohmann::json to_json() const;  // config and scaling, not weights
  static ToyNet from_json(const nlohmann::json& doc, Eigen::VectorXd params);

 private:
  struct Linear {
    Eigen::Index offset;
    int in, out;
  };
  struct Cache;

  Linear add_linear(const std::string& name, int in, int out);
  int species_index(const DecoratedPointCloud& x, Eigen::Index i) const;
  Eigen::MatrixXd geometry(const DecoratedPointCloud& x) const;
  void run(const DecoratedPointCloud& x, Cache& c) const;

  ToyNetConfig config_;
  Eigen::VectorXd params_;
  std::vector<ParameterGroup> groups_;
  Eigen::Index species_offset_ = 0;
  std::vector<Linear> edge_layers_;
  Eigen::Index attention_offset_ = -1;
  std::vector<Linear> node_layers_;
  std::vector<Linear> head_hidden_;
  std::vector<Linear> head_out_;
  std::vector<double> scale_;
  std::vector<Eigen::VectorXd> shift_;
};

/// Exposes a net's taps for clouds of a fixed size.
class ToyNetProbe : public ProbeFunction {
 public:
  ToyNetProbe(const ToyNet& net, int points);

  const TapSchema& schema() const override { return schema_; }
  TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) override;
  bool concurrent_safe() const override { return true; }

 private:
  const ToyNet& net_;
  TapSchema schema_;
};

/// `epoch` tags the checkpoint for heatmaps; HeatmapTable::kUntrained marks the initial weights.
void save_checkpoint(const ToyNet& net, const std::filesystem::path& json_path,
                     std::optional<int> epoch = std::nullopt);
/// Weights live next to the JSON file as <stem>.bin: little-endian IEEE-754
/// doubles in parameters() order.
ToyNet load_checkpoint(const std::filesystem::path& json_path);
std::optional<int> checkpoint_epoch(const std::filesystem::path& json_path);

enum class Augmentation { none, rotations, rotations_and_inversion };

struct LabeledCloud {
  DecoratedPointCloud cloud;
  std::map<std::string, Eigen::VectorXd> targets;
};

struct TrainConfig {
  int epochs = 100;
  int batch_size = 16;
  double learning_rate = 3e-3;
  /// The rate decays geometrically per epoch to learning_rate * final_lr_factor.
  double final_lr_factor = 1.0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  /// Decoupled weight decay per step, scaled by the current rate.
  double weight_decay = 0.0;
  Augmentation augmentation = Augmentation::rotations;
  /// Epochs between metric snapshots; 0 disables them.
  int snapshot_stride = 0;
  int snapshot_clouds = 8;
  int snapshot_band = 2;
  int snapshot_lambda_max = 2;
  /// Standardize head outputs from the training targets before the first step.
  bool fit_output_scaling = true;
  std::uint64_t seed = 0;

  void validate() const;
  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& doc);
};

struct EpochLog {
  int epoch;
  double train_loss;
  std::map<std::string, double> val_rmse;  // per head
};

struct Snapshot {
  int epoch;  // HeatmapTable::kUntrained before training
  std::map<std::string, double> val_rmse;
  std::map<std::string, double> median_equivariance_error;  // per head, own label
};

struct TrainResult {
  std::vector<EpochLog> log;
  std::vector<Snapshot> snapshots;
  HeatmapTable heatmap;

  std::string log_csv() const;
};

/// Called with the net at every snapshot epoch, the untrained one included.
using SnapshotHook = std::function<void(int epoch, const ToyNet& net)>;

/// Adam on the mean loss over each shuffled batch, each sample transformed by a
/// fresh random group element (targets by their head irreps). Deterministic for
/// a fixed seed. Throws NumericalInconsistency with the epoch on a non-finite loss.
TrainResult train(ToyNet& net, const std::vector<LabeledCloud>& train_set, const std::vector<LabeledCloud>& val_set,
                  const TrainConfig& config, const SnapshotHook& on_snapshot = {});

/// Root-mean-square error of one head over a set, per output component.
double head_rmse(const ToyNet& net, const std::vector<LabeledCloud>& set, const std::string& head);

}  // namespace symprobe
