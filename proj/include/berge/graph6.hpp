#pragma once

#include <string>
#include <string_view>

#include "berge/graph.hpp"

namespace berge {

/// graph6 text encoding (order <= 62), used in error payloads and sweep
/// reports.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace berge
