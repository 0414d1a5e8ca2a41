#include "eikonal/narrow_band.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>

namespace eikonal {

// ---------------------------------------------------------------------------
// BinaryHeap

BinaryHeap::BinaryHeap(std::size_t cell_count) : pos_(cell_count, kAbsent) {}

void BinaryHeap::place(std::size_t slot, KeyedEntry e) {
  heap_[slot] = e;
  pos_[e.cell] = slot;
}

void BinaryHeap::sift_up(std::size_t slot) {
  KeyedEntry e = heap_[slot];
  while (slot > 0) {
    const std::size_t parent = (slot - 1) / 2;
    if (heap_[parent].key <= e.key) break;
    place(slot, heap_[parent]);
    slot = parent;
  }
  place(slot, e);
}

void BinaryHeap::sift_down(std::size_t slot) {
  KeyedEntry e = heap_[slot];
  const std::size_t n = heap_.size();
  for (;;) {
    std::size_t child = 2 * slot + 1;
    if (child >= n) break;
    if (child + 1 < n && heap_[child + 1].key < heap_[child].key) ++child;
    if (heap_[child].key >= e.key) break;
    place(slot, heap_[child]);
    slot = child;
  }
  place(slot, e);
}

void BinaryHeap::push(Index cell, double key) {
  if (pos_[cell] != kAbsent)
    throw std::logic_error("BinaryHeap: push of a cell already present");
  heap_.push_back(KeyedEntry{cell, key});
  pos_[cell] = heap_.size() - 1;
  sift_up(heap_.size() - 1);
}

void BinaryHeap::decrease(Index cell, double new_key) {
  const std::size_t slot = pos_[cell];
  if (slot == kAbsent)
    throw std::logic_error("BinaryHeap: decrease of an absent cell");
  assert(new_key <= heap_[slot].key);
  heap_[slot].key = new_key;
  sift_up(slot);
}

KeyedEntry BinaryHeap::top() const {
  if (heap_.empty()) throw std::logic_error("BinaryHeap: top on empty heap");
  return heap_.front();
}

KeyedEntry BinaryHeap::pop() {
  if (heap_.empty()) throw std::logic_error("BinaryHeap: pop on empty heap");
  KeyedEntry min = heap_.front();
  pos_[min.cell] = kAbsent;
  KeyedEntry last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    place(0, last);
    sift_down(0);
  }
  return min;
}

// ---------------------------------------------------------------------------
// FibonacciHeap

FibonacciHeap::FibonacciHeap(std::size_t cell_count) : nodes_(cell_count) {}

void FibonacciHeap::add_root(std::int64_t v) {
  Node& node = nodes_[v];
  node.parent = kNil;
  node.marked = false;
  if (min_ == kNil) {
    node.left = node.right = v;
    min_ = v;
    return;
  }
  // Splice v to the right of min_.
  Node& m = nodes_[min_];
  node.left = min_;
  node.right = m.right;
  nodes_[m.right].left = v;
  m.right = v;
  if (node.key < m.key) min_ = v;
}

void FibonacciHeap::remove_from_siblings(std::int64_t v) {
  Node& node = nodes_[v];
  nodes_[node.left].right = node.right;
  nodes_[node.right].left = node.left;
}

// Makes `child` a child of `parent`; both must be roots.
void FibonacciHeap::link(std::int64_t child, std::int64_t parent) {
  remove_from_siblings(child);
  Node& c = nodes_[child];
  Node& p = nodes_[parent];
  c.parent = parent;
  c.marked = false;
  if (p.child == kNil) {
    c.left = c.right = child;
    p.child = child;
  } else {
    Node& first = nodes_[p.child];
    c.left = p.child;
    c.right = first.right;
    nodes_[first.right].left = child;
    first.right = child;
  }
  ++p.degree;
}

// Detaches v from its parent and reattaches it as a root.
void FibonacciHeap::cut(std::int64_t v) {
  Node& node = nodes_[v];
  const std::int64_t parent = node.parent;
  assert(parent != kNil);
  Node& p = nodes_[parent];
  if (p.child == v) p.child = (node.right == v) ? kNil : node.right;
  remove_from_siblings(v);
  --p.degree;
  add_root(v);
}

void FibonacciHeap::cascading_cut(std::int64_t v) {
  for (;;) {
    const std::int64_t parent = nodes_[v].parent;
    if (parent == kNil) return;
    if (!nodes_[v].marked) {
      nodes_[v].marked = true;
      return;
    }
    cut(v);
    v = parent;
  }
}

void FibonacciHeap::push(Index cell, double key) {
  Node& node = nodes_[cell];
  if (node.in_heap)
    throw std::logic_error("FibonacciHeap: push of a cell already present");
  node = Node{};
  node.key = key;
  node.in_heap = true;
  add_root(static_cast<std::int64_t>(cell));
  ++size_;
}

void FibonacciHeap::decrease(Index cell, double new_key) {
  Node& node = nodes_[cell];
  if (!node.in_heap)
    throw std::logic_error("FibonacciHeap: decrease of an absent cell");
  assert(new_key <= node.key);
  node.key = new_key;
  const std::int64_t v = static_cast<std::int64_t>(cell);
  const std::int64_t parent = node.parent;
  if (parent != kNil && new_key < nodes_[parent].key) {
    cut(v);
    cascading_cut(parent);
  }
  if (new_key < nodes_[min_].key) min_ = v;
}

KeyedEntry FibonacciHeap::top() const {
  if (min_ == kNil) throw std::logic_error("FibonacciHeap: top on empty heap");
  return KeyedEntry{static_cast<Index>(min_), nodes_[min_].key};
}

KeyedEntry FibonacciHeap::pop() {
  if (min_ == kNil) throw std::logic_error("FibonacciHeap: pop on empty heap");
  const std::int64_t v = min_;
  Node& node = nodes_[v];

  // Promote all children to roots.
  if (node.child != kNil) {
    std::int64_t c = node.child;
    do {
      nodes_[c].parent = kNil;
      c = nodes_[c].right;
    } while (c != node.child);
    // Splice the child ring into the root ring next to v.
    const std::int64_t child_first = node.child;
    const std::int64_t child_last = nodes_[child_first].left;
    const std::int64_t after = node.right;
    node.right = child_first;
    nodes_[child_first].left = v;
    nodes_[child_last].right = after;
    nodes_[after].left = child_last;
    node.child = kNil;
    node.degree = 0;
  }

  KeyedEntry result{static_cast<Index>(v), node.key};
  if (node.right == v) {
    min_ = kNil;  // v was the only root and had no children
  } else {
    min_ = node.right;
    remove_from_siblings(v);
    consolidate();
  }
  node.in_heap = false;
  --size_;
  return result;
}

void FibonacciHeap::consolidate() {
  // 64 degree slots cover any heap that fits in memory.
  std::array<std::int64_t, 64> by_degree;
  by_degree.fill(kNil);

  // Snapshot the root ring: linking mutates it while we walk.
  std::vector<std::int64_t> roots;
  {
    std::int64_t v = min_;
    do {
      roots.push_back(v);
      v = nodes_[v].right;
    } while (v != min_);
  }

  for (std::int64_t v : roots) {
    std::int32_t d = nodes_[v].degree;
    while (by_degree[d] != kNil) {
      std::int64_t other = by_degree[d];
      if (nodes_[other].key < nodes_[v].key) std::swap(v, other);
      link(other, v);
      by_degree[d] = kNil;
      d = nodes_[v].degree;
    }
    by_degree[d] = v;
  }

  // Rebuild min over the surviving roots.
  min_ = kNil;
  for (std::int64_t v : by_degree) {
    if (v == kNil) continue;
    if (min_ == kNil || nodes_[v].key < nodes_[min_].key) min_ = v;
  }
}

// ---------------------------------------------------------------------------
// UntidyQueue

UntidyQueue::UntidyQueue(std::size_t cell_count, UntidyConfig config)
    : config_(config),
      bucket_head_(config.buckets, kNil),
      bucket_tail_(config.buckets, kNil),
      next_(cell_count, kNil),
      prev_(cell_count, kNil),
      key_(cell_count, 0.0),
      in_queue_(cell_count, 0) {
  if (config_.buckets == 0)
    throw std::invalid_argument("UntidyQueue: bucket count must be positive");
  if (!(config_.t_range > 0.0))
    throw std::invalid_argument("UntidyQueue: t_range must be positive");
  width_ = config_.t_range / static_cast<double>(config_.buckets);
}

std::int64_t UntidyQueue::band_of(double key) const {
  return static_cast<std::int64_t>(std::floor(key / width_));
}

void UntidyQueue::append_to_bucket(std::size_t slot, Index cell) {
  const std::int64_t v = static_cast<std::int64_t>(cell);
  next_[cell] = kNil;
  prev_[cell] = bucket_tail_[slot];
  if (bucket_tail_[slot] != kNil)
    next_[bucket_tail_[slot]] = v;
  else
    bucket_head_[slot] = v;
  bucket_tail_[slot] = v;
}

void UntidyQueue::unlink(Index cell) {
  // The bucket slot is recoverable from the stored key (clamped like push).
  std::int64_t band = band_of(key_[cell]);
  if (band < head_band_) band = head_band_;
  const std::size_t slot = static_cast<std::size_t>(band % static_cast<std::int64_t>(config_.buckets));
  const std::int64_t p = prev_[cell];
  const std::int64_t n = next_[cell];
  if (p != kNil) next_[p] = n; else bucket_head_[slot] = n;
  if (n != kNil) prev_[n] = p; else bucket_tail_[slot] = p;
}

void UntidyQueue::push(Index cell, double key) {
  if (in_queue_[cell])
    throw std::logic_error("UntidyQueue: push of a cell already present");
  std::int64_t band = band_of(key);
  if (head_band_ == kNil) head_band_ = band;
  // A key older than the head bucket files under the head bucket: it will
  // surface next, which is the closest the quantized order can get.
  if (band < head_band_) band = head_band_;
  if (band - head_band_ >= static_cast<std::int64_t>(config_.buckets))
    throw untidy_range_error(
        "UntidyQueue: live key span reaches t_range; increase t_range or bucket count");
  key_[cell] = key;
  in_queue_[cell] = 1;
  append_to_bucket(static_cast<std::size_t>(band % static_cast<std::int64_t>(config_.buckets)), cell);
  ++size_;
}

void UntidyQueue::decrease(Index cell, double new_key) {
  if (!in_queue_[cell])
    throw std::logic_error("UntidyQueue: decrease of an absent cell");
  assert(new_key <= key_[cell]);
  unlink(cell);
  in_queue_[cell] = 0;
  --size_;
  push(cell, new_key);
}

KeyedEntry UntidyQueue::pop() {
  if (size_ == 0) throw std::logic_error("UntidyQueue: pop on empty queue");
  const std::int64_t k = static_cast<std::int64_t>(config_.buckets);
  std::size_t slot = static_cast<std::size_t>(head_band_ % k);
  while (bucket_head_[slot] == kNil) {
    ++head_band_;
    slot = static_cast<std::size_t>(head_band_ % k);
  }
  const Index cell = static_cast<Index>(bucket_head_[slot]);
  unlink(cell);
  in_queue_[cell] = 0;
  --size_;
  return KeyedEntry{cell, key_[cell]};
}

// ---------------------------------------------------------------------------
// DoubleQueue

double update_step(double step, std::size_t first_queue_pushes,
                   std::size_t total_pushes) {
  double fraction = 1.0;
  if (first_queue_pushes > 0)
    fraction = static_cast<double>(first_queue_pushes) /
               static_cast<double>(total_pushes);
  if (fraction <= 0.65) return step * 1.5;
  if (fraction >= 0.75) return step / 2.0;
  return step;
}

DoubleQueue::DoubleQueue(double initial_step)
    : step_(initial_step), threshold_(initial_step) {}

void DoubleQueue::seed(Index cell) { q_[active_].push_back(cell); }

void DoubleQueue::push(Index cell, double key) {
  ++total_pushes_;
  if (key <= threshold_) {
    ++first_pushes_;
    q_[active_].push_back(cell);
  } else {
    q_[1 - active_].push_back(cell);
  }
}

bool DoubleQueue::pop_active(Index& out) {
  if (head_[active_] == q_[active_].size()) return false;
  out = q_[active_][head_[active_]++];
  return true;
}

void DoubleQueue::advance() {
  step_ = update_step(step_, first_pushes_, total_pushes_);
  q_[active_].clear();
  head_[active_] = 0;
  active_ = 1 - active_;
  first_pushes_ = 0;
  total_pushes_ = 0;
  threshold_ += step_;
}

bool DoubleQueue::drained() const {
  return head_[0] == q_[0].size() && head_[1] == q_[1].size();
}

}  // namespace eikonal
