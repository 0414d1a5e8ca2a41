#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

#include "eikonal/grid.hpp"

namespace eikonal {

/// A cell together with the key (tentative arrival time) it was filed under.
struct KeyedEntry {
  Index cell;
  double key;
};

/// Binary min-heap over (cell, key) with decrease-key support. A position
/// map (cell -> heap slot) makes decrease O(log n); each cell may be present
/// at most once.
///
/// Contract violations throw std::logic_error: pop/top on an empty heap,
/// push of a cell already present, decrease of an absent cell.
class BinaryHeap {
public:
  /// cell_count bounds the cell ids that may ever be pushed.
  explicit BinaryHeap(std::size_t cell_count);

  void push(Index cell, double key);
  /// Lowers the key of a present cell. new_key must not exceed the stored key.
  void decrease(Index cell, double new_key);
  KeyedEntry top() const;
  KeyedEntry pop();
  bool contains(Index cell) const { return pos_[cell] != kAbsent; }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  void sift_up(std::size_t slot);
  void sift_down(std::size_t slot);
  void place(std::size_t slot, KeyedEntry e);

  std::vector<KeyedEntry> heap_;
  std::vector<std::size_t> pos_;  // cell -> heap slot, kAbsent when not present
};

/// Fibonacci min-heap over (cell, key): O(1) amortized push and decrease-key,
/// O(log n) amortized pop via degree consolidation with cascading cuts.
/// Nodes live in a flat arena indexed by cell id, so each cell may be present
/// at most once. Same error contract as BinaryHeap.
class FibonacciHeap {
public:
  explicit FibonacciHeap(std::size_t cell_count);

  void push(Index cell, double key);
  void decrease(Index cell, double new_key);
  KeyedEntry top() const;
  KeyedEntry pop();
  bool contains(Index cell) const { return nodes_[cell].in_heap; }
  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

private:
  static constexpr std::int64_t kNil = -1;

  struct Node {
    double key = 0.0;
    std::int64_t parent = kNil;
    std::int64_t child = kNil;  // any one child; siblings form a circular list
    std::int64_t left = kNil;
    std::int64_t right = kNil;
    std::int32_t degree = 0;
    bool marked = false;    // lost a child since becoming a child itself
    bool in_heap = false;
  };

  void add_root(std::int64_t v);
  void remove_from_siblings(std::int64_t v);
  void link(std::int64_t child, std::int64_t parent);
  void cut(std::int64_t v);
  void cascading_cut(std::int64_t v);
  void consolidate();

  std::vector<Node> nodes_;  // cell -> node
  std::int64_t min_ = kNil;
  std::size_t size_ = 0;
};

/// Plain min-priority queue that tolerates duplicate entries for a cell.
/// There is no decrease operation: re-pushing a cell with a smaller key is
/// the intended usage, and the consumer discards entries that are stale by
/// the time they surface. Ties pop in unspecified order.
class StaleQueue {
public:
  void push(Index cell, double key) { q_.push(KeyedEntry{cell, key}); }
  KeyedEntry pop() {
    if (q_.empty()) throw std::logic_error("StaleQueue: pop on empty queue");
    KeyedEntry e = q_.top();
    q_.pop();
    return e;
  }
  bool empty() const { return q_.empty(); }
  std::size_t size() const { return q_.size(); }

private:
  struct KeyGreater {
    bool operator()(const KeyedEntry& a, const KeyedEntry& b) const {
      return a.key > b.key;
    }
  };
  std::priority_queue<KeyedEntry, std::vector<KeyedEntry>, KeyGreater> q_;
};

/// Thrown by UntidyQueue when a pushed key does not fit the configured live
/// key range (the span between the oldest unpopped bucket and the new key
/// reaches or exceeds t_range). The queue cannot represent such a key; the
/// caller must retry with a wider t_range or more buckets.
class untidy_range_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct UntidyConfig {
  std::size_t buckets = 1000;
  double t_range = 2.0;  // live key span covered by the bucket ring
};

/// Untidy priority queue: a circular array of `buckets` FIFO buckets, each
/// covering a key interval of width t_range / buckets. push, decrease and
/// pop are O(1); in exchange pop returns entries in bucket order only, so
/// keys within one bucket width may surface out of order.
///
/// Bucket numbering is absolute (band = floor(key / width)) and wraps onto
/// the ring modulo `buckets`, so the total key range is unbounded as long as
/// the live span stays below t_range. Keys below the current head bucket are
/// clamped into it. Each cell may be present at most once; errors follow the
/// BinaryHeap contract, plus untidy_range_error as described above.
class UntidyQueue {
public:
  UntidyQueue(std::size_t cell_count, UntidyConfig config = {});

  void push(Index cell, double key);
  void decrease(Index cell, double new_key);
  KeyedEntry pop();
  bool contains(Index cell) const { return in_queue_[cell]; }
  bool empty() const { return size_ == 0; }
  std::size_t size() const { return size_; }

private:
  static constexpr std::int64_t kNil = -1;

  std::int64_t band_of(double key) const;
  void append_to_bucket(std::size_t slot, Index cell);
  void unlink(Index cell);

  UntidyConfig config_;
  double width_ = 0.0;
  std::int64_t head_band_ = kNil;  // absolute band popped next; set on first push
  std::size_t size_ = 0;
  std::vector<std::int64_t> bucket_head_;  // per ring slot
  std::vector<std::int64_t> bucket_tail_;
  std::vector<std::int64_t> next_;  // per cell, intrusive FIFO links
  std::vector<std::int64_t> prev_;
  std::vector<double> key_;
  std::vector<std::uint8_t> in_queue_;
};

/// Feedback rule that retunes the double-queue threshold step from the
/// fraction of pushes that landed in the first queue during the last round:
/// at most 65% -> grow the step by 1.5x, at least 75% -> halve it, otherwise
/// keep it. A round with no pushes at all counts as fraction 1.
double update_step(double step, std::size_t first_queue_pushes,
                   std::size_t total_pushes);

/// Two FIFO queues behind a moving threshold. push routes a cell to the
/// first (active) queue when its key is at or below the threshold and to
/// the second queue otherwise, counting pushes for the update_step feedback
/// rule. Once the active queue drains, advance() retunes the step, promotes
/// the second queue to active (an O(1) swap), and raises the threshold.
/// The caller keeps a cell from being enqueued twice.
class DoubleQueue {
public:
  explicit DoubleQueue(double initial_step);

  /// Enqueues onto the active queue without threshold routing or counting.
  /// Used for seeding the initial band.
  void seed(Index cell);

  /// Threshold-routed insert: key <= threshold -> active queue, else second
  /// queue. Increments the total push count, and the first-queue count when
  /// the active queue was chosen.
  void push(Index cell, double key);

  /// Dequeues the next cell of the active queue into `out`. Returns false
  /// when the active queue is exhausted.
  bool pop_active(Index& out);

  /// step = update_step(step, counts); swap queues; reset counts;
  /// threshold += step.
  void advance();

  bool drained() const;  // both queues empty
  double threshold() const { return threshold_; }
  double step() const { return step_; }
  std::size_t first_queue_pushes() const { return first_pushes_; }
  std::size_t total_pushes() const { return total_pushes_; }

private:
  std::vector<Index> q_[2];
  std::size_t head_[2] = {0, 0};
  int active_ = 0;
  double step_;
  double threshold_;
  std::size_t first_pushes_ = 0;
  std::size_t total_pushes_ = 0;
};

}  // namespace eikonal
