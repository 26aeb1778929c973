#pragma once

#include <cassert>
#include <vector>

#include "nwsp/int128.hpp"

namespace nwsp {

// Addressable min-priority queue over vertex ids with integer keys.
// Binary heap with a position index; every operation the fast integer
// queues support is available here with logarithmic cost instead, which is
// all the correctness contract requires. Ties break towards the lowest
// vertex id so runs are reproducible.
class MinQueue {
 public:
  explicit MinQueue(i64 capacity = 0) { reset(capacity); }

  void reset(i64 capacity) {
    pos_.assign(static_cast<size_t>(capacity), -1);
    heap_.clear();
    keys_.resize(static_cast<size_t>(capacity));
  }

  bool empty() const { return heap_.empty(); }
  i64 size() const { return static_cast<i64>(heap_.size()); }
  bool contains(i64 item) const { return pos_[static_cast<size_t>(item)] != -1; }
  i128 key_of(i64 item) const { return keys_[static_cast<size_t>(item)]; }

  void insert(i128 key, i64 item) {
    assert(!contains(item));
    keys_[static_cast<size_t>(item)] = key;
    pos_[static_cast<size_t>(item)] = static_cast<i64>(heap_.size());
    heap_.push_back(item);
    sift_up(heap_.size() - 1);
  }

  void decrease_key(i128 key, i64 item) {
    assert(contains(item));
    assert(key <= keys_[static_cast<size_t>(item)]);
    keys_[static_cast<size_t>(item)] = key;
    sift_up(static_cast<size_t>(pos_[static_cast<size_t>(item)]));
  }

  // Insert if absent, otherwise lower the key (never raises it).
  void insert_or_decrease(i128 key, i64 item) {
    if (!contains(item)) {
      insert(key, item);
    } else if (key < keys_[static_cast<size_t>(item)]) {
      decrease_key(key, item);
    }
  }

  i64 find_min() const {
    assert(!heap_.empty());
    return heap_[0];
  }

  i64 delete_min() {
    i64 top = find_min();
    erase(top);
    return top;
  }

  // Empties the queue in O(candidates): every present item must be listed in
  // `candidates` (extra entries are fine).
  void drain(const std::vector<i64>& candidates) {
    for (i64 v : candidates) pos_[static_cast<size_t>(v)] = -1;
    heap_.clear();
  }

  void erase(i64 item) {
    assert(contains(item));
    size_t p = static_cast<size_t>(pos_[static_cast<size_t>(item)]);
    size_t last = heap_.size() - 1;
    if (p != last) {
      swap_nodes(p, last);
      heap_.pop_back();
      pos_[static_cast<size_t>(item)] = -1;
      if (!sift_up(p)) sift_down(p);
    } else {
      heap_.pop_back();
      pos_[static_cast<size_t>(item)] = -1;
    }
  }

 private:
  bool less(i64 a, i64 b) const {
    i128 ka = keys_[static_cast<size_t>(a)], kb = keys_[static_cast<size_t>(b)];
    if (ka != kb) return ka < kb;
    return a < b;
  }

  void swap_nodes(size_t i, size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[static_cast<size_t>(heap_[i])] = static_cast<i64>(i);
    pos_[static_cast<size_t>(heap_[j])] = static_cast<i64>(j);
  }

  bool sift_up(size_t i) {
    if (i >= heap_.size()) return false;
    bool moved = false;
    while (i > 0) {
      size_t parent = (i - 1) / 2;
      if (!less(heap_[i], heap_[parent])) break;
      swap_nodes(i, parent);
      i = parent;
      moved = true;
    }
    return moved;
  }

  void sift_down(size_t i) {
    const size_t n = heap_.size();
    for (;;) {
      size_t best = i, l = 2 * i + 1, r = 2 * i + 2;
      if (l < n && less(heap_[l], heap_[best])) best = l;
      if (r < n && less(heap_[r], heap_[best])) best = r;
      if (best == i) break;
      swap_nodes(i, best);
      i = best;
    }
  }

  std::vector<i64> pos_;   // vertex -> heap slot, -1 if absent
  std::vector<i64> heap_;  // heap of vertex ids
  std::vector<i128> keys_;
};

}  // namespace nwsp
