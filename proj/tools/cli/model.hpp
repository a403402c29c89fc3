#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "symprobe/probe.hpp"
#include "symprobe/purify.hpp"
#include "symprobe/toy.hpp"

namespace symprobe::cli {

/// The model could not be reached; the message says how to fix it.
class ModelUnreachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model named by a source string:
///
///   builtin:Q                     pseudoscalar Q, tap "Q"
///   builtin:oracle:L,S[:order]    exactly (L,S)-equivariant polynomial, tap "y"
///   builtin:constant_vector[:x,y,z]  input-independent vector, tap "y"
///   builtin:gyration              sum of squared centroid distances, tap "y"
///   builtin:fixture:contaminated  contaminated readout features, tap "llf"
///   builtin:echo:N                positions of an N-point cloud, tap "positions"
///   checkpoint:PATH               toy-model checkpoint JSON
///   tcp:HOST:PORT                 probe server over TCP
///   exec:COMMAND [ARGS...]        probe server on a child's stdin/stdout
class Model {
 public:
  /// `seed` only feeds sources that draw random data (the fixture).
  static std::unique_ptr<Model> open(const std::string& source, std::uint64_t seed = 7,
                                     const ContaminatedFixtureSpec& fixture = {});

  /// Probe for clouds of `points` points. Toy models have size-dependent taps.
  ProbeFunction& probe(int points);
  const std::string& source() const { return source_; }
  const ToyNet* net() const { return net_ ? &*net_ : nullptr; }
  const ContaminatedFixture* fixture() const { return fixture_ ? &*fixture_ : nullptr; }

 private:
  std::string source_;
  std::unique_ptr<ProbeFunction> fixed_;
  std::optional<ToyNet> net_;
  std::map<int, std::unique_ptr<ToyNetProbe>> sized_;
  std::optional<ContaminatedFixture> fixture_;
};

}  // namespace symprobe::cli
