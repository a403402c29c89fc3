#include "model.hpp"

#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "config.hpp"
#include "symprobe/errors.hpp"
#include "symprobe/protocol.hpp"
#include "symprobe/targets.hpp"

namespace symprobe::cli {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.compare(0, prefix.size(), prefix) == 0; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

ConfigError bad_source(const std::string& source) {
  return ConfigError(fmt::format(
      "unknown model source '{}'; expected builtin:Q, builtin:oracle:L,S[:order], builtin:constant_vector[:x,y,z], "
      "builtin:gyration, builtin:fixture:contaminated, builtin:echo:N, checkpoint:PATH, tcp:HOST:PORT or exec:COMMAND",
      source));
}

int parse_int(const std::string& s, const std::string& source) {
  try {
    size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw bad_source(source);
}

}  // namespace

std::unique_ptr<Model> Model::open(const std::string& source, std::uint64_t seed, const ContaminatedFixtureSpec& fixture) {
  auto m = std::make_unique<Model>();
  m->source_ = source;
  if (source == "builtin:Q") {
    m->fixed_ = std::make_unique<FunctionProbe>(q_probe());
  } else if (starts_with(source, "builtin:oracle:")) {
    const auto parts = split(source.substr(15), ':');
    if (parts.empty() || parts.size() > 2) throw bad_source(source);
    const auto label = [&] {
      try {
        return IrrepLabel::parse(parts[0]);
      } catch (const InvalidArgument&) {
        throw bad_source(source);
      }
    }();
    const int order = parts.size() == 2 ? parse_int(parts[1], source) : 1;
    m->fixed_ = std::make_unique<FunctionProbe>(oracle_probe(label, order));
  } else if (source == "builtin:constant_vector" || starts_with(source, "builtin:constant_vector:")) {
    Vec3 c(1.0, 2.0, 2.0);
    if (source.size() > 23) {
      const auto parts = split(source.substr(24), ',');
      if (parts.size() != 3) throw bad_source(source);
      for (int k = 0; k < 3; ++k) {
        try {
          c(k) = std::stod(parts[k]);
        } catch (const std::exception&) {
          throw bad_source(source);
        }
      }
    }
    m->fixed_ = std::make_unique<FunctionProbe>(constant_vector_probe(c));
  } else if (source == "builtin:gyration") {
    m->fixed_ = std::make_unique<FunctionProbe>(gyration_probe());
  } else if (source == "builtin:fixture:contaminated") {
    auto spec = fixture;
    spec.seed = seed;
    m->fixture_ = contaminated_fixture(spec);
    m->fixed_ = std::make_unique<FunctionProbe>(m->fixture_->features);
  } else if (starts_with(source, "builtin:echo:")) {
    const int n = parse_int(source.substr(13), source);
    if (n < 1) throw bad_source(source);
    m->fixed_ = std::make_unique<FunctionProbe>(echo_probe(n));
  } else if (starts_with(source, "checkpoint:")) {
    m->net_ = load_checkpoint(source.substr(11));
  } else if (starts_with(source, "tcp:")) {
    const auto rest = source.substr(4);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw bad_source(source);
    const auto host = rest.substr(0, colon);
    const int port = parse_int(rest.substr(colon + 1), source);
    try {
      m->fixed_ = std::make_unique<RemoteProbe>(connect_tcp(host, port));
    } catch (const ProtocolError& e) {
      throw ModelUnreachable(fmt::format("{}: {} (is a server running there? start one with "
                                         "'symprobe serve --port {} model=...')",
                                         source, e.what(), port));
    }
  } else if (starts_with(source, "exec:")) {
    std::vector<std::string> argv;
    std::istringstream in(source.substr(5));
    for (std::string word; in >> word;) argv.push_back(word);
    if (argv.empty()) throw bad_source(source);
    try {
      m->fixed_ = std::make_unique<RemoteProbe>(std::make_unique<ProcessChannel>(argv));
    } catch (const ProtocolError& e) {
      throw ModelUnreachable(fmt::format("{}: {} (the command must speak the probe protocol on stdin/stdout, "
                                         "e.g. 'symprobe serve --stdio model=...')",
                                         source, e.what()));
    }
  } else {
    throw bad_source(source);
  }
  return m;
}

ProbeFunction& Model::probe(int points) {
  if (fixed_) return *fixed_;
  auto& p = sized_[points];
  if (!p) p = std::make_unique<ToyNetProbe>(*net_, points);
  return *p;
}

}  // namespace symprobe::cli
