#pragma once

#include <functional>
#include <optional>

#include "berge/graph.hpp"

namespace berge {

enum class Parity { odd, even, any };

/// Calls `visit` once for every hole of g. Each hole starts at its smallest
/// vertex and is oriented so that its second vertex is smaller than its last.
/// Returning true from `visit` stops the enumeration. Requires order() <= 64.
void for_each_hole(const Graph& g, const std::function<bool(const Path&)>& visit);

/// First hole (in enumeration order) of the requested parity with at least
/// `min_length` vertices. min_length below 4 raises InvalidInput.
std::optional<Path> find_hole(const Graph& g, Parity parity, int min_length = 4);

std::vector<Path> all_holes(const Graph& g);

/// Odd hole of g, or an odd hole of the complement (an odd antihole of g).
bool has_odd_hole(const Graph& g);

}  // namespace berge
