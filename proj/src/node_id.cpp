#include "aqm/node_id.hpp"

namespace aqm {

NodeId NodeId::parse(std::string_view dotted) {
  std::vector<std::string> segments;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = dotted.find('.', start);
    if (dot == std::string_view::npos) {
      segments.emplace_back(dotted.substr(start));
      break;
    }
    segments.emplace_back(dotted.substr(start, dot - start));
    start = dot + 1;
  }
  return NodeId(std::move(segments));
}

std::string NodeId::str() const {
  std::string out;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0) out += '.';
    out += segments_[i];
  }
  return out;
}

NodeId NodeId::child(std::string segment) const {
  std::vector<std::string> segments = segments_;
  segments.push_back(std::move(segment));
  return NodeId(std::move(segments));
}

bool NodeId::is_prefix_of(const NodeId& other) const {
  if (segments_.size() > other.segments_.size()) return false;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i] != other.segments_[i]) return false;
  }
  return true;
}

bool is_valid_segment(std::string_view segment) {
  if (segment.empty()) return false;
  for (const char c : segment) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace aqm
