#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace aqm {

/// Dot-separated path into one of the two model trees, e.g.
/// `vehicle.tics.hardware.display.position`. Construction does not validate
/// segments; validate_model reports malformed ones so that arbitrary
/// candidate models can be diagnosed instead of rejected up front.
class NodeId {
 public:
  NodeId() = default;
  explicit NodeId(std::vector<std::string> segments) : segments_(std::move(segments)) {}

  /// Splits on '.'; "a..b" yields an empty middle segment (caught later by
  /// segment validation).
  static NodeId parse(std::string_view dotted);

  [[nodiscard]] const std::vector<std::string>& segments() const { return segments_; }
  [[nodiscard]] bool empty() const { return segments_.empty(); }
  [[nodiscard]] std::string str() const;

  [[nodiscard]] NodeId child(std::string segment) const;
  [[nodiscard]] bool is_prefix_of(const NodeId& other) const;

  auto operator<=>(const NodeId&) const = default;

 private:
  std::vector<std::string> segments_;
};

/// True iff `segment` is non-empty and matches [a-z0-9_]+.
[[nodiscard]] bool is_valid_segment(std::string_view segment);

}  // namespace aqm
