#pragma once

#include <span>
#include <vector>

namespace symprobe::detail {

struct LebedevNode {
  double x, y, z, weight;
};

/// Lebedev rule exact for spherical harmonics of degree <= precision.
struct LebedevTable {
  int precision;
  std::span<const LebedevNode> nodes;
};

/// Embedded tables, ascending precision {3, 5, ..., 19, 23, 29}. Weights sum to 1.
const std::vector<LebedevTable>& lebedev_tables();

}  // namespace symprobe::detail
