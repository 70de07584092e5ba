#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdist {

// Structural problems (malformed tables, index ranges, shape mismatches).
// Semantic verdicts (axiom violations, counterexamples) are returned as
// values, not thrown.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true if the two classes were distinct.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);  // keep the smaller index as root
    parent_[y] = x;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  // Block labels in canonical first-occurrence order.
  std::vector<int> blocks() {
    std::vector<int> out(parent_.size(), -1);
    int next = 0;
    std::vector<int> label(parent_.size(), -1);
    for (int i = 0; i < size(); ++i) {
      int r = find(i);
      if (label[r] < 0) label[r] = next++;
      out[i] = label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

// Relabels an arbitrary block-id vector so ids appear in first-occurrence
// order starting from 0.
inline std::vector<int> canonical_blocks(const std::vector<int>& raw) {
  std::vector<int> out(raw.size(), -1);
  std::vector<int> label;
  int next = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    int id = raw[i];
    require(id >= 0, "negative block id");
    if (static_cast<std::size_t>(id) >= label.size()) label.resize(id + 1, -1);
    if (label[id] < 0) label[id] = next++;
    out[i] = label[id];
  }
  return out;
}

inline int block_count(const std::vector<int>& blocks) {
  int m = -1;
  for (int b : blocks) m = std::max(m, b);
  return m + 1;
}

}  // namespace vdist
