#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "symprobe/o3.hpp"
#include "symprobe/pointcloud.hpp"

namespace symprobe {

/// Tap name -> flat output dimension.
using TapSchema = std::map<std::string, int>;
using TapValues = std::map<std::string, Eigen::VectorXd>;

/// A model viewed as a black box: cloud in, named flat real vectors out.
///
/// Implementations must be deterministic. Dimensions must match schema() on
/// every call; orbit sampling checks this.
class ProbeFunction {
 public:
  virtual ~ProbeFunction() = default;

  virtual const TapSchema& schema() const = 0;
  /// Must return at least the requested taps; extra entries are ignored.
  virtual TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) = 0;
  /// True when evaluate may be called from several threads at once.
  virtual bool concurrent_safe() const { return false; }

  /// Claimed transformation law of some outputs, if known.
  std::map<std::string, IrrepLabel> declared_irreps;

  int dim(const std::string& tap) const;
};

/// Wraps a plain callable. The callable is assumed pure, hence concurrent-safe.
class FunctionProbe : public ProbeFunction {
 public:
  using Fn = std::function<TapValues(const DecoratedPointCloud&)>;

  FunctionProbe(TapSchema schema, Fn fn) : schema_(std::move(schema)), fn_(std::move(fn)) {}
  /// Single-tap convenience.
  FunctionProbe(const std::string& tap, int dim, std::function<Eigen::VectorXd(const DecoratedPointCloud&)> fn);

  const TapSchema& schema() const override { return schema_; }
  TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) override;
  bool concurrent_safe() const override { return true; }

 private:
  TapSchema schema_;
  Fn fn_;
};

/// Counts evaluate() calls on the wrapped probe.
class CountingProbe : public ProbeFunction {
 public:
  explicit CountingProbe(ProbeFunction& inner) : inner_(inner) { declared_irreps = inner.declared_irreps; }

  const TapSchema& schema() const override { return inner_.schema(); }
  TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) override {
    ++calls_;
    return inner_.evaluate(x, taps);
  }
  bool concurrent_safe() const override { return inner_.concurrent_safe(); }

  long calls() const { return calls_.load(); }
  void reset() { calls_ = 0; }

 private:
  ProbeFunction& inner_;
  std::atomic<long> calls_{0};
};

/// Makes any probe safe for concurrent callers by taking a lock around evaluate().
class SerializingProbe : public ProbeFunction {
 public:
  explicit SerializingProbe(ProbeFunction& inner) : inner_(inner) { declared_irreps = inner.declared_irreps; }

  const TapSchema& schema() const override { return inner_.schema(); }
  TapValues evaluate(const DecoratedPointCloud& x, const std::vector<std::string>& taps) override {
    std::lock_guard lock(mutex_);
    return inner_.evaluate(x, taps);
  }
  bool concurrent_safe() const override { return true; }

 private:
  ProbeFunction& inner_;
  std::mutex mutex_;
};

}  // namespace symprobe
