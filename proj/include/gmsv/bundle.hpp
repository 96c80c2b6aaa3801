#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmsv/graph.hpp"
#include "gmsv/side_views.hpp"

namespace gmsv {

struct Provenance {
  std::vector<std::string> sources;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
};

/// Graphs, labels and side views for one dataset; every part has n rows.
struct DatasetBundle {
  GraphDataset data;
  std::vector<SideView> views;
  Provenance provenance;

  void validate() const {
    data.validate();
    for (const auto& v : views) v.validate(data.size());
  }
};

}  // namespace gmsv
