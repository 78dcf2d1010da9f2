#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "berge/graph.hpp"
#include "berge/limits.hpp"

namespace berge {

enum class WheelKind { line, twin, universal, triangle_free, proper };
std::string_view to_string(WheelKind kind);
inline constexpr std::array<WheelKind, 5> kAllWheelKinds = {WheelKind::line, WheelKind::twin, WheelKind::universal,
                                                           WheelKind::triangle_free, WheelKind::proper};

struct Wheel {
  Path hole;
  int center = -1;
  std::vector<int> spokes;  // neighbours of center on the hole, in hole order
  int triangles = 0;        // hole edges with both ends on spokes
  WheelKind kind = WheelKind::proper;

  int arity() const { return static_cast<int>(spokes.size()); }
};

/// Raises InvalidInput unless hole is a hole of g and center is off the hole
/// with at least three neighbours on it. A kind clash raises
/// InternalInconsistency.
Wheel classify_wheel(const Graph& g, const Path& hole, int center);

/// Wheels of the requested kinds in hole enumeration order, then by center.
std::vector<Wheel> find_wheels(const Graph& g, const std::vector<WheelKind>& kinds = {kAllWheelKinds.begin(),
                                                                                     kAllWheelKinds.end()},
                               const Limits& limits = {});

/// Triangles a and b joined by chordless paths paths[i] from a[i] to b[i].
struct Stretcher {
  std::array<int, 3> a{};
  std::array<int, 3> b{};
  std::array<Path, 3> paths;
};

std::optional<Stretcher> find_stretcher(const Graph& g, const Limits& limits = {});
bool is_stretcher(const Graph& g, const Stretcher& s);

}  // namespace berge
