#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "symprobe/errors.hpp"
#include "symprobe/pointcloud.hpp"

namespace symprobe {

namespace {

const std::array<std::string, 119> kSymbols = {
    "X",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si", "P",  "S",
    "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As",
    "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn",
    "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd", "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho",
    "Er", "Tm", "Yb", "Lu", "Hf", "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm", "Bk", "Cf", "Es", "Fm", "Md",
    "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs", "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og"};

struct Column {
  std::string name;
  char type;
  int width;
};

std::optional<double> to_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// key=value pairs; values may be double-quoted. Bare keys map to "T".
std::vector<std::pair<std::string, std::string>> parse_comment(const std::string& line, int lineno) {
  std::vector<std::pair<std::string, std::string>> out;
  size_t i = 0;
  const size_t n = line.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  auto read_token = [&]() {
    std::string tok;
    if (i < n && line[i] == '"') {
      ++i;
      while (i < n && line[i] != '"') tok += line[i++];
      if (i >= n) throw ParseError("unterminated quote in comment line", lineno);
      ++i;
    } else {
      while (i < n && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '=') tok += line[i++];
    }
    return tok;
  };
  for (skip_ws(); i < n; skip_ws()) {
    std::string key = read_token();
    if (key.empty()) throw ParseError("malformed key in comment line", lineno);
    skip_ws();
    if (i < n && line[i] == '=') {
      ++i;
      skip_ws();
      out.emplace_back(key, read_token());
    } else {
      out.emplace_back(key, "T");
    }
  }
  return out;
}

std::vector<Column> parse_properties(const std::string& spec, int lineno) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() % 3 != 0) throw ParseError("Properties must be name:type:count triples", lineno);
  std::vector<Column> cols;
  for (size_t k = 0; k < parts.size(); k += 3) {
    const std::string& type = parts[k + 1];
    if (type.size() != 1 || std::string_view("SRIL").find(type[0]) == std::string_view::npos) {
      throw ParseError(fmt::format("unknown column type '{}' for '{}'", type, parts[k]), lineno);
    }
    int width = 0;
    auto [ptr, ec] = std::from_chars(parts[k + 2].data(), parts[k + 2].data() + parts[k + 2].size(), width);
    if (ec != std::errc() || width < 1) throw ParseError(fmt::format("bad column count for '{}'", parts[k]), lineno);
    cols.push_back({parts[k], type[0], width});
  }
  return cols;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

int atomic_number(const std::string& symbol) {
  for (size_t z = 1; z < kSymbols.size(); ++z) {
    if (kSymbols[z] == symbol) return int(z);
  }
  return 0;
}

const std::string& element_symbol(int z) {
  if (z < 1 || z >= int(kSymbols.size())) throw InvalidArgument(fmt::format("no element with atomic number {}", z));
  return kSymbols[size_t(z)];
}

std::vector<DecoratedPointCloud> read_xyz(std::istream& in) {
  std::vector<DecoratedPointCloud> clouds;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    long count = 0;
    {
      auto toks = split_ws(line);
      auto [ptr, ec] = std::from_chars(toks[0].data(), toks[0].data() + toks[0].size(), count);
      if (toks.size() != 1 || ec != std::errc() || ptr != toks[0].data() + toks[0].size() || count < 1) {
        throw ParseError(fmt::format("expected a positive point count, got '{}'", line), lineno);
      }
    }
    if (!std::getline(in, line)) throw ParseError("missing comment line", lineno + 1);
    ++lineno;
    const int comment_line = lineno;

    DecoratedPointCloud cloud;
    std::vector<Column> cols = {{"species", 'S', 1}, {"pos", 'R', 3}};
    for (const auto& [key, value] : parse_comment(line, comment_line)) {
      if (key == "Properties") {
        cols = parse_properties(value, comment_line);
      } else if (key == "Lattice") {
        auto toks = split_ws(value);
        if (toks.size() != 9) throw ParseError("Lattice needs 9 numbers", comment_line);
        Mat3 cell;
        for (int k = 0; k < 9; ++k) {
          auto v = to_double(toks[size_t(k)]);
          if (!v) throw ParseError(fmt::format("bad Lattice entry '{}'", toks[size_t(k)]), comment_line);
          cell(k / 3, k % 3) = *v;
        }
        cloud.cell = cell;
      } else if (key == "pbc") {
        auto toks = split_ws(value);
        cloud.periodic = !toks.empty() && (toks[0] == "T" || toks[0] == "True" || toks[0] == "1");
      } else if (auto v = to_double(value)) {
        cloud.info[key] = *v;
      }
    }
    bool has_pos = false;
    for (const auto& c : cols) has_pos |= (c.name == "pos" && c.type == 'R' && c.width == 3);
    if (!has_pos) throw ParseError("Properties must contain pos:R:3", comment_line);

    cloud.positions.resize(count, 3);
    for (const auto& c : cols) {
      if (c.name == "pos") continue;
      if (c.type == 'S') {
        if (c.name != "species" || c.width != 1) {
          throw ParseError(fmt::format("string column '{}' is not supported", c.name), comment_line);
        }
        cloud.scalar_attrs["species"].resize(count, 1);
      } else if (c.type == 'R' && c.width == 3) {
        cloud.vector_attrs[c.name].resize(count, 3);
      } else {
        cloud.scalar_attrs[c.name].resize(count, c.width);
      }
    }

    for (long row = 0; row < count; ++row) {
      if (!std::getline(in, line)) throw ParseError("unexpected end of file", lineno + 1);
      ++lineno;
      auto toks = split_ws(line);
      size_t t = 0;
      for (const auto& c : cols) {
        if (t + size_t(c.width) > toks.size()) throw ParseError("too few columns", lineno);
        if (c.type == 'S') {
          int z = atomic_number(toks[t]);
          if (z == 0) throw ParseError(fmt::format("unknown element '{}'", toks[t]), lineno);
          cloud.scalar_attrs["species"](row, 0) = z;
          ++t;
          continue;
        }
        for (int k = 0; k < c.width; ++k, ++t) {
          double v;
          if (c.type == 'L') {
            v = (toks[t] == "T" || toks[t] == "True") ? 1.0 : 0.0;
          } else {
            auto parsed = to_double(toks[t]);
            if (!parsed) throw ParseError(fmt::format("bad number '{}'", toks[t]), lineno);
            v = *parsed;
          }
          if (c.name == "pos") {
            cloud.positions(row, k) = v;
          } else if (c.type == 'R' && c.width == 3) {
            cloud.vector_attrs[c.name](row, k) = v;
          } else {
            cloud.scalar_attrs[c.name](row, k) = v;
          }
        }
      }
      if (t != toks.size()) throw ParseError("too many columns", lineno);
    }
    clouds.push_back(std::move(cloud));
  }
  return clouds;
}

std::vector<DecoratedPointCloud> read_xyz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument(fmt::format("cannot open '{}'", path));
  return read_xyz(in);
}

void write_xyz(std::ostream& out, const std::vector<DecoratedPointCloud>& clouds) {
  for (const auto& cloud : clouds) {
    cloud.validate();
    const auto n = cloud.size();
    const Eigen::MatrixXd* species = nullptr;
    if (auto it = cloud.scalar_attrs.find("species"); it != cloud.scalar_attrs.end()) species = &it->second;

    std::string props;
    if (species) props += "species:S:1:";
    props += "pos:R:3";
    for (const auto& [name, values] : cloud.scalar_attrs) {
      if (name == "species") continue;
      if (values.cols() == 3) {
        throw InvalidArgument(fmt::format("scalar attribute '{}' has 3 columns and would read back as a vector", name));
      }
      props += fmt::format(":{}:R:{}", name, values.cols());
    }
    for (const auto& [name, values] : cloud.vector_attrs) props += fmt::format(":{}:R:3", name);

    fmt::print(out, "{}\n", n);
    std::string comment;
    if (cloud.cell) {
      const Mat3& c = *cloud.cell;
      comment += fmt::format("Lattice=\"{:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\" ",
                             c(0, 0), c(0, 1), c(0, 2), c(1, 0), c(1, 1), c(1, 2), c(2, 0), c(2, 1), c(2, 2));
    }
    comment += "Properties=" + props;
    for (const auto& [key, value] : cloud.info) comment += fmt::format(" {}={:.17g}", key, value);
    comment += cloud.periodic ? " pbc=\"T T T\"" : " pbc=\"F F F\"";
    fmt::print(out, "{}\n", comment);

    for (Eigen::Index i = 0; i < n; ++i) {
      std::string row;
      if (species) row += element_symbol(int(std::lround((*species)(i, 0)))) + " ";
      row += fmt::format("{:.17g} {:.17g} {:.17g}", cloud.positions(i, 0), cloud.positions(i, 1), cloud.positions(i, 2));
      for (const auto& [name, values] : cloud.scalar_attrs) {
        if (name == "species") continue;
        for (Eigen::Index k = 0; k < values.cols(); ++k) row += fmt::format(" {:.17g}", values(i, k));
      }
      for (const auto& [name, values] : cloud.vector_attrs) {
        row += fmt::format(" {:.17g} {:.17g} {:.17g}", values(i, 0), values(i, 1), values(i, 2));
      }
      fmt::print(out, "{}\n", row);
    }
  }
}

void write_xyz_file(const std::string& path, const std::vector<DecoratedPointCloud>& clouds) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument(fmt::format("cannot write '{}'", path));
  write_xyz(out, clouds);
}

}  // namespace symprobe
