#include "symprobe/toy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <optional>
#include <random>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "symprobe/errors.hpp"
#include "symprobe/json_io.hpp"
#include "symprobe/quadrature.hpp"

namespace symprobe {

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

Eigen::MatrixXd silu(const Eigen::MatrixXd& z) {
  return z.unaryExpr([](double v) { return v * sigmoid(v); });
}

Eigen::MatrixXd silu_grad(const Eigen::MatrixXd& z) {
  return z.unaryExpr([](double v) {
    const double s = sigmoid(v);
    return s * (1.0 + v * (1.0 - s));
  });
}

Eigen::VectorXd flatten_rows(const Eigen::MatrixXd& m) {
  Eigen::VectorXd v(m.size());
  Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(v.data(), m.rows(), m.cols()) = m;
  return v;
}

Eigen::MatrixXd head_rho(const HeadSpec& h, const GroupElement& g) {
  const Eigen::MatrixXd d = wigner_d(h.label, g).matrix;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(h.dim(), h.dim());
  for (int k = 0; k < h.blocks; ++k) out.block(k * d.rows(), k * d.rows(), d.rows(), d.rows()) = d;
  return out;
}

const char* name_of(GeometryEmbedding e) { return e == GeometryEmbedding::ssh ? "ssh" : "distance_vector"; }
const char* name_of(Pooling p) { return p == Pooling::attention ? "attention" : "sum"; }
const char* name_of(Augmentation a) {
  switch (a) {
    case Augmentation::none: return "none";
    case Augmentation::rotations: return "rotations";
    case Augmentation::rotations_and_inversion: return "rotations_and_inversion";
  }
  return "none";
}

GeometryEmbedding parse_embedding(const std::string& s) {
  if (s == "distance_vector") return GeometryEmbedding::distance_vector;
  if (s == "ssh") return GeometryEmbedding::ssh;
  throw InvalidArgument(fmt::format("unknown embedding '{}' (expected distance_vector or ssh)", s));
}

Pooling parse_pooling(const std::string& s) {
  if (s == "sum") return Pooling::sum;
  if (s == "attention") return Pooling::attention;
  throw InvalidArgument(fmt::format("unknown pooling '{}' (expected sum or attention)", s));
}

Augmentation parse_augmentation(const std::string& s) {
  if (s == "none") return Augmentation::none;
  if (s == "rotations") return Augmentation::rotations;
  if (s == "rotations_and_inversion") return Augmentation::rotations_and_inversion;
  throw InvalidArgument(fmt::format("unknown augmentation '{}'", s));
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

void ToyNetConfig::validate() const {
  if (hidden_width < 1) throw InvalidArgument("hidden_width must be >= 1");
  if (depth < 1) throw InvalidArgument("depth must be >= 1");
  if (species_width < 1) throw InvalidArgument("species_width must be >= 1");
  if (embedding == GeometryEmbedding::ssh && (lambda_max_emb < 1 || lambda_max_emb > 14)) {
    throw InvalidArgument("lambda_max_emb must be in [1, 14]");
  }
  if (heads.empty()) throw InvalidArgument("at least one head is required");
  for (size_t h = 0; h < heads.size(); ++h) {
    if (heads[h].blocks < 1) throw InvalidArgument(fmt::format("head '{}' needs >= 1 block", heads[h].name));
    const auto& name = heads[h].name;
    if (name.empty() || name == "geometry" || name == "edge" || name == "node" || name == "pooled" ||
        name.rfind("llf:", 0) == 0) {
      throw InvalidArgument(fmt::format("head name '{}' is empty or collides with a tap", name));
    }
    for (size_t k = 0; k < h; ++k) {
      if (heads[k].name == name) throw InvalidArgument(fmt::format("duplicate head '{}'", name));
    }
  }
}

int ToyNetConfig::geometry_dim() const {
  if (embedding == GeometryEmbedding::distance_vector) return scalar_only ? 1 : 4;
  return scalar_only ? lambda_max_emb + 1 : (lambda_max_emb + 1) * (lambda_max_emb + 1);
}

nlohmann::json ToyNetConfig::to_json() const {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : heads) {
    hs.push_back({{"name", h.name}, {"lambda", h.label.lambda()}, {"sigma", h.label.sigma()}, {"blocks", h.blocks}});
  }
  return {{"embedding", name_of(embedding)},
          {"lambda_max_emb", lambda_max_emb},
          {"hidden_width", hidden_width},
          {"depth", depth},
          {"pooling", name_of(pooling)},
          {"heads", hs},
          {"species", species},
          {"species_width", species_width},
          {"scalar_only", scalar_only},
          {"seed", seed}};
}

ToyNetConfig ToyNetConfig::from_json(const nlohmann::json& doc) {
  ToyNetConfig c;
  c.embedding = parse_embedding(doc.at("embedding").get<std::string>());
  c.lambda_max_emb = doc.at("lambda_max_emb").get<int>();
  c.hidden_width = doc.at("hidden_width").get<int>();
  c.depth = doc.at("depth").get<int>();
  c.pooling = parse_pooling(doc.at("pooling").get<std::string>());
  c.heads.clear();
  for (const auto& h : doc.at("heads")) {
    c.heads.push_back({h.at("name").get<std::string>(), IrrepLabel(h.at("lambda").get<int>(), h.at("sigma").get<int>()),
                       h.at("blocks").get<int>()});
  }
  c.species = doc.at("species").get<std::vector<int>>();
  c.species_width = doc.at("species_width").get<int>();
  c.scalar_only = doc.at("scalar_only").get<bool>();
  c.seed = doc.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

struct ToyNet::Cache {
  Eigen::Index n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> species;
  Eigen::MatrixXd geometry;
  std::vector<Eigen::MatrixXd> edge_in, edge_pre;
  Eigen::MatrixXd edge_out;
  Eigen::VectorXd attention;  // per edge weight
  Eigen::MatrixXd messages;
  std::vector<Eigen::MatrixXd> node_in, node_pre;
  Eigen::MatrixXd node_out;
  Eigen::VectorXd pooled;
  std::vector<Eigen::VectorXd> head_pre, llf, raw;
};

ToyNet::Linear ToyNet::add_linear(const std::string& name, int in, int out) {
  const Eigen::Index offset = groups_.empty() ? 0 : groups_.back().offset + groups_.back().size;
  groups_.push_back({name, offset, Eigen::Index(in) * out + out});
  return {offset, in, out};
}

ToyNet::ToyNet(ToyNetConfig config) : config_(std::move(config)) {
  config_.validate();
  const int w = config_.hidden_width;
  const int sw = config_.species_width;
  const int ns = std::max<int>(1, int(config_.species.size()));
  groups_.push_back({"species_embedding", 0, Eigen::Index(ns) * sw});
  species_offset_ = 0;
  for (int l = 0; l < config_.depth; ++l) {
    edge_layers_.push_back(add_linear(fmt::format("edge_mlp.{}", l), l == 0 ? 2 * sw + config_.geometry_dim() : w, w));
  }
  if (config_.pooling == Pooling::attention) {
    attention_offset_ = groups_.back().offset + groups_.back().size;
    groups_.push_back({"attention", attention_offset_, w});
  }
  for (int l = 0; l < config_.depth; ++l) {
    node_layers_.push_back(add_linear(fmt::format("node_mlp.{}", l), l == 0 ? sw + w : w, w));
  }
  for (const auto& h : config_.heads) {
    head_hidden_.push_back(add_linear(fmt::format("head.{}.hidden", h.name), w, w));
    head_out_.push_back(add_linear(fmt::format("head.{}.readout", h.name), w, h.dim()));
    scale_.push_back(1.0);
    shift_.push_back(Eigen::VectorXd::Zero(h.dim()));
  }
  params_ = Eigen::VectorXd::Zero(groups_.back().offset + groups_.back().size);

  std::mt19937_64 rng(config_.seed);
  std::normal_distribution<double> normal;
  for (Eigen::Index k = 0; k < Eigen::Index(ns) * sw; ++k) params_(species_offset_ + k) = normal(rng);
  auto init = [&](const Linear& lin) {
    const double s = 1.0 / std::sqrt(double(lin.in));
    for (Eigen::Index k = 0; k < Eigen::Index(lin.in) * lin.out; ++k) params_(lin.offset + k) = s * normal(rng);
  };
  for (const auto& l : edge_layers_) init(l);
  if (attention_offset_ >= 0) {
    for (int k = 0; k < w; ++k) params_(attention_offset_ + k) = normal(rng) / std::sqrt(double(w));
  }
  for (const auto& l : node_layers_) init(l);
  for (size_t h = 0; h < head_hidden_.size(); ++h) {
    init(head_hidden_[h]);
    init(head_out_[h]);
  }
}

void ToyNet::set_output_scaling(const std::string& head, double scale, Eigen::VectorXd shift) {
  for (size_t h = 0; h < config_.heads.size(); ++h) {
    if (config_.heads[h].name != head) continue;
    if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("output scale must be positive and finite");
    if (shift.size() != config_.heads[h].dim()) throw InvalidArgument("output shift has the wrong dimension");
    if (config_.heads[h].label != IrrepLabel(0, 1) && shift.squaredNorm() > 0.0) {
      throw InvalidArgument(fmt::format("head '{}' is not a proper scalar and cannot be shifted", head));
    }
    scale_[h] = scale;
    shift_[h] = std::move(shift);
    return;
  }
  throw InvalidArgument(fmt::format("unknown head '{}'", head));
}

double ToyNet::output_scale(const std::string& head) const {
  for (size_t h = 0; h < config_.heads.size(); ++h) {
    if (config_.heads[h].name == head) return scale_[h];
  }
  throw InvalidArgument(fmt::format("unknown head '{}'", head));
}

const Eigen::VectorXd& ToyNet::output_shift(const std::string& head) const {
  for (size_t h = 0; h < config_.heads.size(); ++h) {
    if (config_.heads[h].name == head) return shift_[h];
  }
  throw InvalidArgument(fmt::format("unknown head '{}'", head));
}

TapSchema ToyNet::schema(int n) const {
  const int e = n * (n - 1);
  const int w = config_.hidden_width;
  TapSchema s{{"geometry", e * config_.geometry_dim()}, {"edge", e * w}, {"node", n * w}, {"pooled", w}};
  for (const auto& h : config_.heads) {
    s["llf:" + h.name] = w;
    s[h.name] = h.dim();
  }
  return s;
}

int ToyNet::species_index(const DecoratedPointCloud& x, Eigen::Index i) const {
  if (config_.species.empty()) return 0;
  auto it = x.scalar_attrs.find("species");
  if (it == x.scalar_attrs.end()) throw InvalidArgument("cloud has no species attribute");
  const int z = int(std::lround(it->second(i, 0)));
  auto pos = std::find(config_.species.begin(), config_.species.end(), z);
  if (pos == config_.species.end()) throw InvalidArgument(fmt::format("species {} is not known to the model", z));
  return int(pos - config_.species.begin());
}

Eigen::MatrixXd ToyNet::geometry(const DecoratedPointCloud& x) const {
  const auto n = x.size();
  Eigen::MatrixXd g(n * (n - 1), config_.geometry_dim());
  Eigen::Index e = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec3 v = (x.positions.row(j) - x.positions.row(i)).transpose();
      if (config_.embedding == GeometryEmbedding::distance_vector) {
        g(e, 0) = v.norm();
        if (!config_.scalar_only) g.block(e, 1, 1, 3) = cartesian_to_l1(v).transpose();
      } else if (config_.scalar_only) {
        const auto blocks = real_solid_harmonics(v, config_.lambda_max_emb);
        for (int l = 0; l <= config_.lambda_max_emb; ++l) g(e, l) = blocks[size_t(l)].norm();
      } else {
        g.row(e) = real_solid_harmonics_flat(v, config_.lambda_max_emb).transpose();
      }
      ++e;
    }
  }
  return g;
}

void ToyNet::run(const DecoratedPointCloud& x, Cache& c) const {
  c.n = x.size();
  if (c.n == 0) throw InvalidArgument("cannot evaluate the model on an empty cloud");
  const int w = config_.hidden_width;
  const int sw = config_.species_width;
  const int ns = std::max<int>(1, int(config_.species.size()));
  Eigen::Map<const Eigen::MatrixXd> table(params_.data() + species_offset_, ns, sw);
  auto layer = [&](const Linear& lin, const Eigen::MatrixXd& in) -> Eigen::MatrixXd {
    Eigen::Map<const Eigen::MatrixXd> wt(params_.data() + lin.offset, lin.out, lin.in);
    Eigen::Map<const Eigen::VectorXd> b(params_.data() + lin.offset + Eigen::Index(lin.in) * lin.out, lin.out);
    Eigen::MatrixXd z = in * wt.transpose();
    z.rowwise() += b.transpose();
    return z;
  };

  c.species.resize(size_t(c.n));
  for (Eigen::Index i = 0; i < c.n; ++i) c.species[size_t(i)] = species_index(x, i);
  c.edges.clear();
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      if (i != j) c.edges.emplace_back(i, j);
    }
  }
  const auto ne = Eigen::Index(c.edges.size());
  c.geometry = geometry(x);

  Eigen::MatrixXd h(ne, 2 * sw + config_.geometry_dim());
  for (Eigen::Index e = 0; e < ne; ++e) {
    h.block(e, 0, 1, sw) = table.row(c.species[size_t(c.edges[size_t(e)].first)]);
    h.block(e, sw, 1, sw) = table.row(c.species[size_t(c.edges[size_t(e)].second)]);
  }
  h.rightCols(config_.geometry_dim()) = c.geometry;
  c.edge_in.clear();
  c.edge_pre.clear();
  for (const auto& lin : edge_layers_) {
    c.edge_in.push_back(h);
    c.edge_pre.push_back(layer(lin, h));
    h = silu(c.edge_pre.back());
  }
  c.edge_out = h;

  c.messages = Eigen::MatrixXd::Zero(c.n, w);
  if (config_.pooling == Pooling::sum) {
    for (Eigen::Index e = 0; e < ne; ++e) c.messages.row(c.edges[size_t(e)].first) += c.edge_out.row(e);
  } else {
    Eigen::Map<const Eigen::VectorXd> a(params_.data() + attention_offset_, w);
    const Eigen::VectorXd score = c.edge_out * a;
    c.attention.resize(ne);
    // Edges of receiver i are contiguous: e in [i (n-1), (i+1)(n-1)).
    const Eigen::Index per = c.n - 1;
    for (Eigen::Index i = 0; i < c.n && per > 0; ++i) {
      const auto seg = score.segment(i * per, per);
      const Eigen::VectorXd ex = (seg.array() - seg.maxCoeff()).exp();
      c.attention.segment(i * per, per) = ex / ex.sum();
      c.messages.row(i) = c.attention.segment(i * per, per).transpose() * c.edge_out.middleRows(i * per, per);
    }
  }

  Eigen::MatrixXd y(c.n, sw + w);
  for (Eigen::Index i = 0; i < c.n; ++i) y.block(i, 0, 1, sw) = table.row(c.species[size_t(i)]);
  y.rightCols(w) = c.messages;
  c.node_in.clear();
  c.node_pre.clear();
  for (const auto& lin : node_layers_) {
    c.node_in.push_back(y);
    c.node_pre.push_back(layer(lin, y));
    y = silu(c.node_pre.back());
  }
  c.node_out = y;
  c.pooled = c.node_out.colwise().sum().transpose();

  c.head_pre.clear();
  c.llf.clear();
  c.raw.clear();
  for (size_t k = 0; k < config_.heads.size(); ++k) {
    c.head_pre.push_back(layer(head_hidden_[k], c.pooled.transpose()).transpose());
    c.llf.push_back(silu(c.head_pre.back()));
    c.raw.push_back(layer(head_out_[k], c.llf.back().transpose()).transpose());
  }
}

ToyOutputs ToyNet::forward(const DecoratedPointCloud& x, bool with_taps) const {
  Cache c;
  run(x, c);
  ToyOutputs out;
  for (size_t k = 0; k < config_.heads.size(); ++k) {
    out.heads[config_.heads[k].name] = scale_[k] * c.raw[k] + shift_[k];
  }
  if (with_taps) {
    out.taps["geometry"] = flatten_rows(c.geometry);
    out.taps["edge"] = flatten_rows(c.edge_out);
    out.taps["node"] = flatten_rows(c.node_out);
    out.taps["pooled"] = c.pooled;
    for (size_t k = 0; k < config_.heads.size(); ++k) {
      out.taps["llf:" + config_.heads[k].name] = c.llf[k];
      out.taps[config_.heads[k].name] = out.heads[config_.heads[k].name];
    }
  }
  return out;
}

double ToyNet::loss_and_gradient(const DecoratedPointCloud& x, const std::map<std::string, Eigen::VectorXd>& targets,
                                 Eigen::VectorXd* grad) const {
  Cache c;
  run(x, c);
  const int w = config_.hidden_width;
  const int sw = config_.species_width;
  const int ns = std::max<int>(1, int(config_.species.size()));
  if (grad && grad->size() != params_.size()) throw InvalidArgument("gradient buffer has the wrong size");

  auto backward_linear = [&](const Linear& lin, const Eigen::MatrixXd& in, const Eigen::MatrixXd& dz) -> Eigen::MatrixXd {
    Eigen::Map<const Eigen::MatrixXd> wt(params_.data() + lin.offset, lin.out, lin.in);
    Eigen::Map<Eigen::MatrixXd>(grad->data() + lin.offset, lin.out, lin.in) += dz.transpose() * in;
    Eigen::Map<Eigen::VectorXd>(grad->data() + lin.offset + Eigen::Index(lin.in) * lin.out, lin.out) +=
        dz.colwise().sum().transpose();
    return dz * wt;
  };

  double loss = 0.0;
  Eigen::VectorXd dpooled = Eigen::VectorXd::Zero(w);
  for (size_t k = 0; k < config_.heads.size(); ++k) {
    const auto& head = config_.heads[k];
    auto it = targets.find(head.name);
    if (it == targets.end()) continue;
    if (it->second.size() != head.dim()) {
      throw InvalidArgument(fmt::format("target for head '{}' has dimension {}, expected {}", head.name,
                                        it->second.size(), head.dim()));
    }
    const Eigen::VectorXd out = scale_[k] * c.raw[k] + shift_[k];
    const Eigen::VectorXd r = (out - it->second) / scale_[k];
    loss += r.squaredNorm() / head.dim();
    if (!grad) continue;
    const Eigen::MatrixXd draw = (2.0 / head.dim()) * r.transpose();
    const Eigen::MatrixXd dllf = backward_linear(head_out_[k], c.llf[k].transpose(), draw);
    const Eigen::MatrixXd dpre = dllf.cwiseProduct(silu_grad(c.head_pre[k].transpose()));
    dpooled += backward_linear(head_hidden_[k], c.pooled.transpose(), dpre).transpose();
  }
  if (!grad) return loss;

  Eigen::Map<Eigen::MatrixXd> dtable(grad->data() + species_offset_, ns, sw);
  Eigen::MatrixXd dy = dpooled.transpose().replicate(c.n, 1);
  for (int l = config_.depth - 1; l >= 0; --l) {
    const Eigen::MatrixXd dz = dy.cwiseProduct(silu_grad(c.node_pre[size_t(l)]));
    dy = backward_linear(node_layers_[size_t(l)], c.node_in[size_t(l)], dz);
  }
  for (Eigen::Index i = 0; i < c.n; ++i) dtable.row(c.species[size_t(i)]) += dy.block(i, 0, 1, sw);
  const Eigen::MatrixXd dmsg = dy.rightCols(w);

  const auto ne = Eigen::Index(c.edges.size());
  Eigen::MatrixXd dh(ne, w);
  if (config_.pooling == Pooling::sum) {
    for (Eigen::Index e = 0; e < ne; ++e) dh.row(e) = dmsg.row(c.edges[size_t(e)].first);
  } else {
    Eigen::Map<const Eigen::VectorXd> a(params_.data() + attention_offset_, w);
    Eigen::Map<Eigen::VectorXd> da(grad->data() + attention_offset_, w);
    const Eigen::Index per = c.n - 1;
    for (Eigen::Index i = 0; i < c.n && per > 0; ++i) {
      const auto alpha = c.attention.segment(i * per, per);
      const auto h = c.edge_out.middleRows(i * per, per);
      const Eigen::VectorXd dalpha = h * dmsg.row(i).transpose();
      const Eigen::VectorXd dscore = alpha.cwiseProduct((dalpha.array() - alpha.dot(dalpha)).matrix());
      dh.middleRows(i * per, per) = alpha * dmsg.row(i) + dscore * a.transpose();
      da += h.transpose() * dscore;
    }
  }
  for (int l = config_.depth - 1; l >= 0; --l) {
    const Eigen::MatrixXd dz = dh.cwiseProduct(silu_grad(c.edge_pre[size_t(l)]));
    dh = backward_linear(edge_layers_[size_t(l)], c.edge_in[size_t(l)], dz);
  }
  for (Eigen::Index e = 0; e < ne; ++e) {
    dtable.row(c.species[size_t(c.edges[size_t(e)].first)]) += dh.block(e, 0, 1, sw);
    dtable.row(c.species[size_t(c.edges[size_t(e)].second)]) += dh.block(e, sw, 1, sw);
  }
  return loss;
}

nlohmann::json ToyNet::to_json() const {
  nlohmann::json scaling = nlohmann::json::object();
  for (size_t k = 0; k < config_.heads.size(); ++k) {
    scaling[config_.heads[k].name] = {{"scale", scale_[k]},
                                      {"shift", std::vector<double>(shift_[k].data(), shift_[k].data() + shift_[k].size())}};
  }
  return {{"config", config_.to_json()}, {"output_scaling", scaling}, {"parameter_count", params_.size()}};
}

ToyNet ToyNet::from_json(const nlohmann::json& doc, Eigen::VectorXd params) {
  ToyNet net(ToyNetConfig::from_json(doc.at("config")));
  if (params.size() != net.params_.size()) {
    throw InvalidArgument(fmt::format("expected {} parameters, got {}", net.params_.size(), params.size()));
  }
  net.params_ = std::move(params);
  for (const auto& [name, s] : doc.at("output_scaling").items()) {
    const auto shift = s.at("shift").get<std::vector<double>>();
    net.set_output_scaling(name, s.at("scale").get<double>(),
                           Eigen::Map<const Eigen::VectorXd>(shift.data(), Eigen::Index(shift.size())));
  }
  return net;
}

ToyNetProbe::ToyNetProbe(const ToyNet& net, int points) : net_(net), schema_(net.schema(points)) {
  for (const auto& h : net.config().heads) declared_irreps.emplace(h.name, h.label);
}

TapValues ToyNetProbe::evaluate(const DecoratedPointCloud& x, const std::vector<std::string>&) {
  return net_.forward(x, true).taps;
}

void save_checkpoint(const ToyNet& net, const std::filesystem::path& json_path, std::optional<int> epoch) {
  auto bin_path = json_path;
  bin_path.replace_extension(".bin");
  nlohmann::json doc = {{"format", "symprobe.toy_checkpoint"},
                        {"version", 1},
                        {"net", net.to_json()},
                        {"weights", {{"file", bin_path.filename().string()},
                                     {"count", net.parameters().size()},
                                     {"encoding", "f64le"}}}};
  if (epoch) doc["epoch"] = *epoch;
  std::ofstream bin(bin_path, std::ios::binary);
  if (!bin) throw InvalidArgument(fmt::format("cannot write {}", bin_path.string()));
  for (Eigen::Index k = 0; k < net.parameters().size(); ++k) {
    auto bits = std::bit_cast<std::uint64_t>(net.parameters()(k));
    unsigned char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<unsigned char>(bits >> (8 * b));
    bin.write(reinterpret_cast<const char*>(bytes), 8);
  }
  std::ofstream js(json_path);
  if (!js) throw InvalidArgument(fmt::format("cannot write {}", json_path.string()));
  js << dump_json(doc, 2) << "\n";
}

namespace {

nlohmann::json read_checkpoint_doc(const std::filesystem::path& json_path) {
  std::ifstream js(json_path);
  if (!js) throw InvalidArgument(fmt::format("cannot read {}", json_path.string()));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(js);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(fmt::format("{}: {}", json_path.string(), e.what()), 0);
  }
  if (doc.value("format", "") != "symprobe.toy_checkpoint") {
    throw InvalidArgument(fmt::format("{} is not a toy-model checkpoint", json_path.string()));
  }
  return doc;
}

}  // namespace

std::optional<int> checkpoint_epoch(const std::filesystem::path& json_path) {
  const auto doc = read_checkpoint_doc(json_path);
  if (!doc.contains("epoch")) return std::nullopt;
  return doc.at("epoch").get<int>();
}

ToyNet load_checkpoint(const std::filesystem::path& json_path) {
  const auto doc = read_checkpoint_doc(json_path);
  const auto& weights = doc.at("weights");
  if (weights.at("encoding").get<std::string>() != "f64le") throw InvalidArgument("unsupported weight encoding");
  const auto count = weights.at("count").get<Eigen::Index>();
  const auto bin_path = json_path.parent_path() / weights.at("file").get<std::string>();
  std::ifstream bin(bin_path, std::ios::binary);
  if (!bin) throw InvalidArgument(fmt::format("cannot read {}", bin_path.string()));
  Eigen::VectorXd params(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    unsigned char bytes[8];
    if (!bin.read(reinterpret_cast<char*>(bytes), 8)) throw InvalidArgument(fmt::format("{} is truncated", bin_path.string()));
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= std::uint64_t(bytes[b]) << (8 * b);
    params(k) = std::bit_cast<double>(bits);
  }
  if (bin.peek() != std::char_traits<char>::eof()) throw InvalidArgument(fmt::format("{} has trailing bytes", bin_path.string()));
  return ToyNet::from_json(doc.at("net"), std::move(params));
}

void TrainConfig::validate() const {
  if (epochs < 0) throw InvalidArgument("epochs must be >= 0");
  if (batch_size < 1) throw InvalidArgument("batch_size must be >= 1");
  if (!(learning_rate > 0.0)) throw InvalidArgument("learning_rate must be > 0");
  if (!(final_lr_factor > 0.0 && final_lr_factor <= 1.0)) throw InvalidArgument("final_lr_factor must be in (0, 1]");
  if (weight_decay < 0.0) throw InvalidArgument("weight_decay must be >= 0");
  if (snapshot_stride < 0) throw InvalidArgument("snapshot_stride must be >= 0");
  if (snapshot_clouds < 1) throw InvalidArgument("snapshot_clouds must be >= 1");
  if (snapshot_lambda_max > snapshot_band) throw InvalidArgument("snapshot_lambda_max cannot exceed snapshot_band");
}

nlohmann::json TrainConfig::to_json() const {
  return {{"epochs", epochs},
          {"batch_size", batch_size},
          {"learning_rate", learning_rate},
          {"final_lr_factor", final_lr_factor},
          {"beta1", beta1},
          {"beta2", beta2},
          {"epsilon", epsilon},
          {"weight_decay", weight_decay},
          {"augmentation", name_of(augmentation)},
          {"snapshot_stride", snapshot_stride},
          {"snapshot_clouds", snapshot_clouds},
          {"snapshot_band", snapshot_band},
          {"snapshot_lambda_max", snapshot_lambda_max},
          {"fit_output_scaling", fit_output_scaling},
          {"seed", seed}};
}

TrainConfig TrainConfig::from_json(const nlohmann::json& doc) {
  TrainConfig c;
  c.epochs = doc.at("epochs").get<int>();
  c.batch_size = doc.at("batch_size").get<int>();
  c.learning_rate = doc.at("learning_rate").get<double>();
  c.final_lr_factor = doc.at("final_lr_factor").get<double>();
  c.beta1 = doc.at("beta1").get<double>();
  c.beta2 = doc.at("beta2").get<double>();
  c.epsilon = doc.at("epsilon").get<double>();
  c.weight_decay = doc.at("weight_decay").get<double>();
  c.augmentation = parse_augmentation(doc.at("augmentation").get<std::string>());
  c.snapshot_stride = doc.at("snapshot_stride").get<int>();
  c.snapshot_clouds = doc.at("snapshot_clouds").get<int>();
  c.snapshot_band = doc.at("snapshot_band").get<int>();
  c.snapshot_lambda_max = doc.at("snapshot_lambda_max").get<int>();
  c.fit_output_scaling = doc.at("fit_output_scaling").get<bool>();
  c.seed = doc.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

std::string TrainResult::log_csv() const {
  std::vector<std::string> heads;
  if (!log.empty()) {
    for (const auto& [h, v] : log.front().val_rmse) heads.push_back(h);
  }
  std::string out = "epoch,train_loss";
  for (const auto& h : heads) out += ",val_rmse:" + h;
  out += "\n";
  for (const auto& e : log) {
    out += fmt::format("{},{}", e.epoch, format_double(e.train_loss));
    for (const auto& h : heads) out += "," + format_double(e.val_rmse.at(h));
    out += "\n";
  }
  return out;
}

double head_rmse(const ToyNet& net, const std::vector<LabeledCloud>& set, const std::string& head) {
  double sum = 0.0;
  long count = 0;
  for (const auto& s : set) {
    auto it = s.targets.find(head);
    if (it == s.targets.end()) continue;
    sum += (net.forward(s.cloud, false).heads.at(head) - it->second).squaredNorm();
    count += it->second.size();
  }
  if (count == 0) throw InvalidArgument(fmt::format("no targets for head '{}'", head));
  return std::sqrt(sum / double(count));
}

TrainResult train(ToyNet& net, const std::vector<LabeledCloud>& train_set, const std::vector<LabeledCloud>& val_set,
                  const TrainConfig& config, const SnapshotHook& on_snapshot) {
  config.validate();
  if (train_set.empty()) throw InvalidArgument("training set is empty");
  const auto& heads = net.config().heads;

  if (config.fit_output_scaling) {
    for (const auto& h : heads) {
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(h.dim());
      long n = 0;
      for (const auto& s : train_set) {
        if (auto it = s.targets.find(h.name); it != s.targets.end()) {
          mean += it->second;
          ++n;
        }
      }
      if (n == 0) continue;
      mean /= double(n);
      if (h.label != IrrepLabel(0, 1)) mean.setZero();
      double var = 0.0;
      for (const auto& s : train_set) {
        if (auto it = s.targets.find(h.name); it != s.targets.end()) var += (it->second - mean).squaredNorm();
      }
      const double scale = std::sqrt(var / double(n * h.dim()));
      net.set_output_scaling(h.name, scale > 1e-12 ? scale : 1.0, mean);
    }
  }

  TrainResult result;
  const auto& monitor = val_set.empty() ? train_set : val_set;
  auto val_rmse = [&]() {
    std::map<std::string, double> out;
    for (const auto& h : heads) {
      bool any = std::any_of(monitor.begin(), monitor.end(), [&](const LabeledCloud& s) { return s.targets.count(h.name) > 0; });
      if (any) out[h.name] = head_rmse(net, monitor, h.name);
    }
    return out;
  };

  std::optional<O3Grid> grid;
  auto snapshot = [&](int epoch) {
    if (!grid) grid = build_o3_grid(config.snapshot_band);
    Snapshot snap{epoch, val_rmse(), {}};
    std::map<std::string, std::vector<double>> errors;
    const size_t count = std::min(monitor.size(), size_t(config.snapshot_clouds));
    for (size_t s = 0; s < count; ++s) {
      const auto& x = monitor[s].cloud;
      ToyNetProbe probe(net, int(x.size()));
      std::vector<std::string> taps;
      for (const auto& [tap, dim] : probe.schema()) taps.push_back(tap);
      const auto samples = sample_orbit(probe, taps, x, *grid);
      for (const auto& [tap, orbit] : samples) {
        auto report = character_projection(orbit, *grid, config.snapshot_lambda_max);
        report.tap = tap;
        result.heatmap.accumulate(epoch, tap, report);
      }
      for (const auto& h : heads) errors[h.name].push_back(equivariance_error(samples.at(h.name), *grid, h.label));
    }
    for (auto& [h, v] : errors) snap.median_equivariance_error[h] = median(v);
    result.snapshots.push_back(std::move(snap));
    if (on_snapshot) on_snapshot(epoch, net);
  };

  if (config.snapshot_stride > 0) snapshot(HeatmapTable::kUntrained);

  std::mt19937_64 rng(config.seed);
  const auto np = net.parameters().size();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(np), v = Eigen::VectorXd::Zero(np), grad(np);
  std::vector<size_t> order(train_set.size());
  long step = 0;
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);
    const double lr = config.epochs > 1
                          ? config.learning_rate * std::pow(config.final_lr_factor, double(epoch - 1) / (config.epochs - 1))
                          : config.learning_rate;
    double epoch_loss = 0.0;
    for (size_t start = 0; start < order.size(); start += size_t(config.batch_size)) {
      const size_t stop = std::min(order.size(), start + size_t(config.batch_size));
      grad.setZero();
      double batch_loss = 0.0;
      for (size_t b = start; b < stop; ++b) {
        const auto& sample = train_set[order[b]];
        if (config.augmentation == Augmentation::none) {
          batch_loss += net.loss_and_gradient(sample.cloud, sample.targets, &grad);
          continue;
        }
        const auto g = random_group_element(rng, config.augmentation == Augmentation::rotations_and_inversion);
        std::map<std::string, Eigen::VectorXd> targets;
        for (const auto& h : heads) {
          if (auto it = sample.targets.find(h.name); it != sample.targets.end()) targets[h.name] = head_rho(h, g) * it->second;
        }
        batch_loss += net.loss_and_gradient(act(g, sample.cloud), targets, &grad);
      }
      const double size = double(stop - start);
      if (!std::isfinite(batch_loss) || !grad.allFinite()) {
        throw NumericalInconsistency(fmt::format("training diverged at epoch {}", epoch));
      }
      grad /= size;
      epoch_loss += batch_loss;
      ++step;
      m = config.beta1 * m + (1.0 - config.beta1) * grad;
      v = config.beta2 * v + (1.0 - config.beta2) * grad.cwiseAbs2();
      const double c1 = 1.0 - std::pow(config.beta1, double(step));
      const double c2 = 1.0 - std::pow(config.beta2, double(step));
      if (config.weight_decay > 0.0) net.parameters() *= 1.0 - lr * config.weight_decay;
      net.parameters().array() -=
          lr * (m.array() / c1) / ((v.array() / c2).sqrt() + config.epsilon);
    }
    result.log.push_back({epoch, epoch_loss / double(order.size()), val_rmse()});
    if (config.snapshot_stride > 0 && epoch % config.snapshot_stride == 0) snapshot(epoch);
  }
  return result;
}

}  // namespace symprobe
