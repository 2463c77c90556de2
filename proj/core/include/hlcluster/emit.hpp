#pragma once

#include <string>

#include "json.hpp"

#include "hlcluster/hltable.hpp"
#include "hlcluster/seed.hpp"

namespace hlc {

/// Grid quiver in DOT; frozen vertices rendered as boxes.
std::string grid_dot(const GridQuiver& grid);

/// AR quiver (with the shifted projectives) in DOT; module nodes are
/// labeled by their radical filtration as stacked digit rows.
std::string ar_dot(const ARQuiver& ar);

/// Stacked digit rows of the radical filtration, e.g. "1/22/34".
std::string stacked_label(const ARQuiver& ar, int node);

nlohmann::json matrices_json(const SeedMatrices& s);
nlohmann::json ar_json(const ARQuiver& ar);
nlohmann::json hl_json(const ARQuiver& ar, const std::vector<HLRecord>& records);
nlohmann::json cluster_var_json(const ClusterVarData& data);

}  // namespace hlc
