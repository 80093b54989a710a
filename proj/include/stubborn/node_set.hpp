#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stubborn {

using NodeId = std::size_t;

// A subset of {0, ..., universe-1}. Membership is a dense flag array so that
// contains/insert are O(1) and the set algebra is O(N).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::span<const NodeId> members);
  NodeSet(std::size_t universe, std::initializer_list<NodeId> members);

  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return flags_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == flags_.size(); }

  bool contains(NodeId v) const { return v < flags_.size() && flags_[v] != 0; }
  void insert(NodeId v);
  void erase(NodeId v);

  NodeSet with(NodeId v) const;
  NodeSet complement() const;
  NodeSet set_union(const NodeSet& other) const;
  bool is_subset_of(const NodeSet& other) const;

  // Members in increasing id order.
  std::vector<NodeId> members() const;

  // Lexicographic order over the sorted member lists.
  friend bool operator<(const NodeSet& a, const NodeSet& b);
  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.flags_ == b.flags_;
  }

  std::string to_string() const;

 private:
  std::vector<char> flags_;
  std::size_t count_ = 0;
};

}  // namespace stubborn
