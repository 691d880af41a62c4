#pragma once

#include <cassert>
#include <vector>

namespace eikonal {

/// Binary min-heap over integer ids in [0, capacity) with decrease-key.
/// Ties on equal keys break toward the smaller id, which keeps every
/// solver built on top of it deterministic.
class IndexedMinHeap {
 public:
  explicit IndexedMinHeap(int capacity)
      : key_(capacity, 0.0), pos_(capacity, kAbsent) {}

  bool empty() const { return heap_.empty(); }
  int size() const { return static_cast<int>(heap_.size()); }
  bool contains(int id) const { return pos_[id] != kAbsent; }
  double key(int id) const { return key_[id]; }

  void insert(int id, double key) {
    assert(!contains(id));
    key_[id] = key;
    pos_[id] = size();
    heap_.push_back(id);
    sift_up(pos_[id]);
  }

  void decrease_key(int id, double key) {
    assert(contains(id) && key <= key_[id]);
    key_[id] = key;
    sift_up(pos_[id]);
  }

  /// Remove and return the id with the smallest (key, id) pair.
  int pop_min() {
    assert(!empty());
    int top = heap_[0];
    int last = heap_.back();
    heap_.pop_back();
    pos_[top] = kAbsent;
    if (!heap_.empty()) {
      heap_[0] = last;
      pos_[last] = 0;
      sift_down(0);
    }
    return top;
  }

  /// Back-pointer consistency check, used by the stress tests.
  bool validate() const {
    for (int p = 0; p < size(); ++p) {
      if (pos_[heap_[p]] != p) return false;
      int l = 2 * p + 1, r = 2 * p + 2;
      if (l < size() && less(heap_[l], key_[heap_[l]], heap_[p], key_[heap_[p]]))
        return false;
      if (r < size() && less(heap_[r], key_[heap_[r]], heap_[p], key_[heap_[p]]))
        return false;
    }
    return true;
  }

 private:
  static constexpr int kAbsent = -1;

  static bool less(int id_a, double key_a, int id_b, double key_b) {
    if (key_a != key_b) return key_a < key_b;
    return id_a < id_b;
  }

  void sift_up(int p) {
    int id = heap_[p];
    while (p > 0) {
      int parent = (p - 1) / 2;
      if (!less(id, key_[id], heap_[parent], key_[heap_[parent]])) break;
      heap_[p] = heap_[parent];
      pos_[heap_[p]] = p;
      p = parent;
    }
    heap_[p] = id;
    pos_[id] = p;
  }

  void sift_down(int p) {
    int id = heap_[p];
    const int count = size();
    for (;;) {
      int child = 2 * p + 1;
      if (child >= count) break;
      int right = child + 1;
      if (right < count &&
          less(heap_[right], key_[heap_[right]], heap_[child], key_[heap_[child]]))
        child = right;
      if (!less(heap_[child], key_[heap_[child]], id, key_[id])) break;
      heap_[p] = heap_[child];
      pos_[heap_[p]] = p;
      p = child;
    }
    heap_[p] = id;
    pos_[id] = p;
  }

  std::vector<double> key_;
  std::vector<int> pos_;
  std::vector<int> heap_;
};

}  // namespace eikonal
