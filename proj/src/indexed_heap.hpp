#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spread {

// Binary max-heap over vertex ids with position tracking, supporting
// key updates in place. `Better(a, b)` must be a strict total order
// ("a ranks above b") that reads the current key of a vertex.
template <class Better>
class IndexedMaxHeap {
 public:
  IndexedMaxHeap(int capacity, Better better)
      : pos_(capacity, -1), better_(std::move(better)) {}

  bool empty() const { return heap_.empty(); }
  bool contains(int v) const { return pos_[v] >= 0; }
  int top() const { return heap_.front(); }

  void push(int v) {
    pos_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(pos_[v]);
  }

  void erase(int v) {
    int i = pos_[v];
    pos_[v] = -1;
    int last = heap_.back();
    heap_.pop_back();
    if (i < static_cast<int>(heap_.size())) {
      heap_[i] = last;
      pos_[last] = i;
      sift_up(i);
      sift_down(i);
    }
  }

  // Re-establishes heap order after v's key changed.
  void update(int v) {
    int i = pos_[v];
    if (i < 0) return;
    sift_up(i);
    sift_down(i);
  }

 private:
  void sift_up(int i) {
    while (i > 0) {
      int parent = (i - 1) / 2;
      if (!better_(heap_[i], heap_[parent])) break;
      swap_at(i, parent);
      i = parent;
    }
  }

  void sift_down(int i) {
    int size = static_cast<int>(heap_.size());
    for (;;) {
      int best = i;
      int left = 2 * i + 1, right = 2 * i + 2;
      if (left < size && better_(heap_[left], heap_[best])) best = left;
      if (right < size && better_(heap_[right], heap_[best])) best = right;
      if (best == i) break;
      swap_at(i, best);
      i = best;
    }
  }

  void swap_at(int i, int j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  std::vector<int> heap_;
  std::vector<int> pos_;
  Better better_;
};

// Compares num_a/den_a > num_b/den_b exactly. A zero denominator ranks
// above every finite value (and ties with other zero denominators).
inline bool ratio_greater(std::uint64_t num_a, std::uint64_t den_a, std::uint64_t num_b,
                          std::uint64_t den_b) {
  if (den_a == 0 || den_b == 0) return den_a == 0 && den_b != 0;
  return static_cast<unsigned __int128>(num_a) * den_b >
         static_cast<unsigned __int128>(num_b) * den_a;
}

}  // namespace spread
