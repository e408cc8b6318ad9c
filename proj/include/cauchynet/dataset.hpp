#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cauchynet {

struct Sample {
  std::vector<double> x;
  double y = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct SplitDataset {
  std::vector<Sample> train;
  std::vector<Sample> val;
  std::vector<Sample> test;
  std::size_t m = 0;
  std::string provenance;
};

}  // namespace cauchynet
