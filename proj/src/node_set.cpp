#include "stubborn/node_set.hpp"

#include <algorithm>

#include "stubborn/errors.hpp"

namespace stubborn {

NodeSet::NodeSet(std::size_t universe) : flags_(universe, 0) {}

NodeSet::NodeSet(std::size_t universe, std::span<const NodeId> members)
    : flags_(universe, 0) {
  for (NodeId v : members) insert(v);
}

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members)
    : NodeSet(universe, std::span<const NodeId>(members.begin(), members.size())) {}

NodeSet NodeSet::full(std::size_t universe) {
  NodeSet s(universe);
  std::fill(s.flags_.begin(), s.flags_.end(), 1);
  s.count_ = universe;
  return s;
}

void NodeSet::insert(NodeId v) {
  if (v >= flags_.size()) {
    throw InputError("node " + std::to_string(v) + " outside universe of size " +
                     std::to_string(flags_.size()));
  }
  if (!flags_[v]) {
    flags_[v] = 1;
    ++count_;
  }
}

void NodeSet::erase(NodeId v) {
  if (v < flags_.size() && flags_[v]) {
    flags_[v] = 0;
    --count_;
  }
}

NodeSet NodeSet::with(NodeId v) const {
  NodeSet s = *this;
  s.insert(v);
  return s;
}

NodeSet NodeSet::complement() const {
  NodeSet s(flags_.size());
  for (std::size_t i = 0; i < flags_.size(); ++i) s.flags_[i] = flags_[i] ? 0 : 1;
  s.count_ = flags_.size() - count_;
  return s;
}

NodeSet NodeSet::set_union(const NodeSet& other) const {
  if (other.universe() != universe()) throw InputError("universe mismatch in union");
  NodeSet s = *this;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (other.flags_[i]) s.insert(i);
  }
  return s;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  if (other.universe() != universe()) return false;
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i] && !other.flags_[i]) return false;
  }
  return true;
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < flags_.size(); ++i) {
    if (flags_[i]) out.push_back(i);
  }
  return out;
}

bool operator<(const NodeSet& a, const NodeSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string NodeSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (NodeId v : members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace stubborn
