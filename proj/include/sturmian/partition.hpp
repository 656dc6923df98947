#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// prev is s_{n-1}, cur is s_n at level n.
enum class BlockLabel { prev, cur };

struct Block {
  BlockLabel label;
  std::int64_t start;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Length of s_k for k >= -1 as a machine integer.
inline std::int64_t block_length(const Alpha& alpha, int k) { return k == -1 ? 1 : alpha.q(k); }

/// The (n-1, n)-partition of a window [lo, hi]. Blocks tile a contiguous sub-range;
/// the uncovered ends of [lo, hi] are margins cut by the window edge.
struct PartitionView {
  int level = 0;
  std::int64_t lo = 0, hi = -1;
  std::int64_t len_prev = 1, len_cur = 1;
  std::vector<Block> blocks;

  std::int64_t length(const Block& b) const { return b.label == BlockLabel::prev ? len_prev : len_cur; }
  std::int64_t end(const Block& b) const { return b.start + length(b); }  // exclusive

  struct Range {
    std::int64_t lo, hi;  // inclusive; empty when lo > hi
    bool empty() const { return lo > hi; }
  };
  Range left_margin() const { return {lo, blocks.empty() ? hi : blocks.front().start - 1}; }
  Range right_margin() const { return {blocks.empty() ? hi + 1 : end(blocks.back()), hi}; }

  std::optional<std::size_t> block_containing(std::int64_t i) const {
    std::size_t a = 0, b = blocks.size();
    while (a < b) {
      std::size_t mid = (a + b) / 2;
      if (end(blocks[mid]) <= i)
        a = mid + 1;
      else
        b = mid;
    }
    if (a < blocks.size() && blocks[a].start <= i) return a;
    return std::nullopt;
  }

  /// Letters of the covered blocks.
  Window expand(const Alpha& alpha) const {
    Word wp = build_sn(alpha, level - 1), wc = build_sn(alpha, level);
    Window w;
    w.start = blocks.empty() ? lo : blocks.front().start;
    for (const auto& b : blocks) w.letters += b.label == BlockLabel::prev ? wp : wc;
    return w;
  }
};

namespace detail {

// One desubstitution step. Each prev block absorbs the `e` cur blocks in front of it;
// one extra cur in front stays standalone. Edge groups that cannot be closed are dropped.
inline PartitionView lift_blocks(const PartitionView& v, std::int64_t e, std::int64_t new_len_prev,
                                 std::int64_t new_len_cur) {
  PartitionView out;
  out.level = v.level + 1;
  out.lo = v.lo;
  out.hi = v.hi;
  out.len_prev = new_len_prev;
  out.len_cur = new_len_cur;
  std::size_t run_begin = 0;  // first cur block of the pending run
  bool at_edge = true;        // the pending run may extend past the left end
  for (std::size_t i = 0; i < v.blocks.size(); ++i) {
    const Block& b = v.blocks[i];
    if (b.label == BlockLabel::cur) continue;
    auto pending = static_cast<std::int64_t>(i - run_begin);
    if (pending < e) {
      if (!at_edge) throw MalformedPartition("run of " + std::to_string(pending) + " s_n blocks before s_{n-1} at " +
                                             std::to_string(b.start) + ", need " + std::to_string(e));
    } else {
      std::int64_t leftover = pending - e;
      if (leftover > 1)
        throw MalformedPartition("run of " + std::to_string(pending) + " s_n blocks at " +
                                 std::to_string(v.blocks[run_begin].start));
      if (leftover == 1) out.blocks.push_back({BlockLabel::prev, v.blocks[run_begin].start});
      out.blocks.push_back({BlockLabel::cur, v.blocks[run_begin + static_cast<std::size_t>(leftover)].start});
    }
    at_edge = false;
    run_begin = i + 1;
  }
  return out;
}

inline void check_level(const Alpha& alpha, int level) {
  if (level < 1) throw std::invalid_argument("partition level must be >= 1");
  if (level > alpha.max_q_index()) throw std::overflow_error("partition level too large");
}

}  // namespace detail

/// Level-n view to level n+1.
inline PartitionView lift(const PartitionView& p, const Alpha& alpha) {
  if (p.level < 1) throw std::invalid_argument("lift expects level >= 1");
  int n = p.level;
  return detail::lift_blocks(p, alpha.coefficient(n + 1), block_length(alpha, n), block_length(alpha, n + 1));
}

/// Level-0 view of a window: every letter is a block, 1 = s_-1, 0 = s_0.
inline PartitionView letters_view(const Window& w) {
  PartitionView v;
  v.level = 0;
  v.lo = w.lo();
  v.hi = w.hi();
  v.blocks.reserve(w.letters.size());
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    v.blocks.push_back({w.letters[i] ? BlockLabel::prev : BlockLabel::cur, w.start + static_cast<std::int64_t>(i)});
  return v;
}

/// Level-n partition of the letters of a finite window, with edge groups trimmed.
inline PartitionView partition_letters(const Window& w, const Alpha& alpha, int level) {
  PartitionView v = letters_view(w);
  v = detail::lift_blocks(v, alpha.coefficient(1) - 1, block_length(alpha, 0), block_length(alpha, 1));
  for (int n = 1; n < level; ++n) v = lift(v, alpha);
  return v;
}

/// Blocks of the level-n partition lying fully inside [lo, hi].
inline PartitionView partition_window(const HullPoint& point, const Alpha& alpha, int level, std::int64_t lo,
                                      std::int64_t hi, const DecisionBudget& budget = {}) {
  detail::check_level(alpha, level);
  if (lo > hi) throw std::invalid_argument("partition window requires lo <= hi");
  HullSequence seq(alpha, point, budget);
  std::int64_t pad = 2 * block_length(alpha, level + 1) + 16;
  for (int attempt = 0; attempt < 12; ++attempt, pad *= 2) {
    PartitionView full = partition_letters(seq.window(lo - pad, hi + pad), alpha, level);
    if (full.blocks.empty() || full.blocks.front().start > lo || full.end(full.blocks.back()) <= hi) continue;
    PartitionView out;
    out.level = level;
    out.lo = lo;
    out.hi = hi;
    out.len_prev = full.len_prev;
    out.len_cur = full.len_cur;
    for (const auto& b : full.blocks)
      if (b.start >= lo && full.end(b) - 1 <= hi) out.blocks.push_back(b);
    return out;
  }
  throw MalformedPartition("could not close the partition around the window");
}

/// Levels 1..max_level over [lo, hi] from one letter window, lifting level by level.
inline std::vector<PartitionView> partition_levels(const HullPoint& point, const Alpha& alpha, int max_level,
                                                   std::int64_t lo, std::int64_t hi, const DecisionBudget& budget = {}) {
  detail::check_level(alpha, max_level);
  if (lo > hi) throw std::invalid_argument("partition window requires lo <= hi");
  HullSequence seq(alpha, point, budget);
  std::int64_t pad = 2 * block_length(alpha, max_level + 1) + 16;
  for (int attempt = 0; attempt < 12; ++attempt, pad *= 2) {
    std::vector<PartitionView> full{partition_letters(seq.window(lo - pad, hi + pad), alpha, 1)};
    for (int n = 2; n <= max_level; ++n) full.push_back(lift(full.back(), alpha));
    const PartitionView& top = full.back();
    if (top.blocks.empty() || top.blocks.front().start > lo || top.end(top.blocks.back()) <= hi) continue;
    std::vector<PartitionView> out;
    for (const auto& f : full) {
      PartitionView v;
      v.level = f.level;
      v.lo = lo;
      v.hi = hi;
      v.len_prev = f.len_prev;
      v.len_cur = f.len_cur;
      for (const auto& b : f.blocks)
        if (b.start >= lo && f.end(b) - 1 <= hi) v.blocks.push_back(b);
      out.push_back(std::move(v));
    }
    return out;
  }
  throw MalformedPartition("could not close the partition around the window");
}

/// Partition of [-radius, radius]; the block containing 0 must be complete.
inline PartitionView partition_around(const HullPoint& point, const Alpha& alpha, int level, std::int64_t radius,
                                      const DecisionBudget& budget = {}) {
  if (radius < 0) throw RadiusTooSmall("negative radius");
  PartitionView v = partition_window(point, alpha, level, -radius, radius, budget);
  if (!v.block_containing(0))
    throw RadiusTooSmall("radius " + std::to_string(radius) + " does not contain the level-" + std::to_string(level) +
                         " block at 0");
  return v;
}

struct IsolationReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::map<std::int64_t, std::int64_t> run_lengths;  // interior s_n run length -> count
};

/// s_{n-1} blocks are isolated and interior s_n runs have length a_{n+1} or a_{n+1} + 1.
inline IsolationReport verify_isolation(const PartitionView& p, const Alpha& alpha) {
  IsolationReport rep;
  std::int64_t a = alpha.coefficient(p.level + 1);
  std::optional<std::size_t> last_prev;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    if (i > 0 && p.blocks[i].start != p.end(p.blocks[i - 1]))
      rep.violations.push_back("gap or overlap before block at " + std::to_string(p.blocks[i].start));
    if (p.blocks[i].label != BlockLabel::prev) continue;
    if (last_prev) {
      std::int64_t run = static_cast<std::int64_t>(i - *last_prev - 1);
      if (run == 0)
        rep.violations.push_back("adjacent s_{n-1} blocks at " + std::to_string(p.blocks[i].start));
      else {
        ++rep.run_lengths[run];
        if (run != a && run != a + 1)
          rep.violations.push_back("s_n run of length " + std::to_string(run) + " ending at " +
                                   std::to_string(p.blocks[i].start));
      }
    }
    last_prev = i;
  }
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace sturmian
