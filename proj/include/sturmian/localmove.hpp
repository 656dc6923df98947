#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/alpha.hpp"
#include "sturmian/errors.hpp"
#include "sturmian/factors.hpp"
#include "sturmian/partition.hpp"
#include "sturmian/words.hpp"

namespace sturmian {

/// E^(i,i+1): swap two adjacent unequal letters.
inline Window exchange(const Window& w, std::int64_t i) {
  if (!w.contains(i) || !w.contains(i + 1)) throw OutOfRange("exchange site " + std::to_string(i) + " outside window");
  if (w.at(i) == w.at(i + 1)) throw EqualLetters("letters at " + std::to_string(i) + " and " + std::to_string(i + 1) + " are equal");
  std::string bits = w.letters.bits();
  auto k = static_cast<std::size_t>(i - w.lo());
  std::swap(bits[k], bits[k + 1]);
  return Window{w.start, Word(std::move(bits))};
}

/// Swap the block at `index` with the next block; they must carry different labels.
inline Window block_exchange(const PartitionView& p, const Alpha& alpha, std::size_t index) {
  if (index + 1 >= p.blocks.size()) throw OutOfRange("block exchange needs two consecutive blocks");
  if (p.blocks[index].label == p.blocks[index + 1].label) throw EqualLetters("blocks carry the same label");
  PartitionView q = p;
  std::swap(q.blocks[index].label, q.blocks[index + 1].label);
  q.blocks[index + 1].start = q.end(q.blocks[index]);
  return q.expand(alpha);
}

namespace detail {

// Suffix automaton over {0, 1}.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const std::string& bits) {
    states_.reserve(2 * bits.size() + 2);
    states_.push_back({0, -1, {-1, -1}});
    for (char c : bits) extend(c - '0');
  }

  /// Length of the longest suffix of text[0..e] that is a factor, for every e.
  std::vector<std::int64_t> matching_statistics(const std::string& text) const {
    std::vector<std::int64_t> ms(text.size());
    int v = 0;
    std::int64_t len = 0;
    for (std::size_t e = 0; e < text.size(); ++e) {
      int c = text[e] - '0';
      while (v != 0 && states_[static_cast<std::size_t>(v)].next[c] == -1) {
        v = states_[static_cast<std::size_t>(v)].link;
        len = states_[static_cast<std::size_t>(v)].len;
      }
      if (states_[static_cast<std::size_t>(v)].next[c] != -1) {
        v = states_[static_cast<std::size_t>(v)].next[c];
        ++len;
      } else {
        v = 0;
        len = 0;
      }
      ms[e] = len;
    }
    return ms;
  }

  bool contains(const std::string& w) const {
    int v = 0;
    for (char ch : w) {
      v = states_[static_cast<std::size_t>(v)].next[ch - '0'];
      if (v == -1) return false;
    }
    return true;
  }

 private:
  struct State {
    std::int64_t len;
    int link;
    std::array<int, 2> next;
  };

  void extend(int c) {
    int cur = static_cast<int>(states_.size());
    states_.push_back({states_[static_cast<std::size_t>(last_)].len + 1, 0, {-1, -1}});
    int p = last_;
    while (p != -1 && states_[static_cast<std::size_t>(p)].next[c] == -1) {
      states_[static_cast<std::size_t>(p)].next[c] = cur;
      p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p != -1) {
      int q = states_[static_cast<std::size_t>(p)].next[c];
      if (states_[static_cast<std::size_t>(p)].len + 1 == states_[static_cast<std::size_t>(q)].len) {
        states_[static_cast<std::size_t>(cur)].link = q;
      } else {
        int clone = static_cast<int>(states_.size());
        State cl = states_[static_cast<std::size_t>(q)];
        cl.len = states_[static_cast<std::size_t>(p)].len + 1;
        states_.push_back(cl);
        while (p != -1 && states_[static_cast<std::size_t>(p)].next[c] == q) {
          states_[static_cast<std::size_t>(p)].next[c] = clone;
          p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[static_cast<std::size_t>(q)].link = clone;
        states_[static_cast<std::size_t>(cur)].link = clone;
      }
    }
    last_ = cur;
  }

  std::vector<State> states_;
  int last_ = 0;
};

inline std::int64_t admissibility_scan_length(const Alpha& alpha, std::int64_t len) {
  return len <= 1 ? alpha.q(2) + 1 : exhausting_point(alpha, len);
}

}  // namespace detail

/// Factors of v_0 up to a length cap, answered from v_0(1..f(cap)).
class FactorIndex {
 public:
  FactorIndex(const Alpha& alpha, std::int64_t cap)
      : cap_(cap), sam_(v0_prefix(alpha, static_cast<std::size_t>(detail::admissibility_scan_length(alpha, cap))).bits()) {
    if (cap < 1) throw std::invalid_argument("factor index cap must be >= 1");
  }

  std::int64_t cap() const { return cap_; }
  bool admissible(const Word& w) const {
    if (static_cast<std::int64_t>(w.size()) > cap_) throw OutOfRange("word longer than the index cap");
    return sam_.contains(w.bits());
  }
  std::vector<std::int64_t> matching_statistics(const Word& text) const { return sam_.matching_statistics(text.bits()); }

 private:
  std::int64_t cap_;
  detail::SuffixAutomaton sam_;
};

/// True iff w occurs in v_0(1..f(|w|)).
inline bool is_admissible(const Alpha& alpha, const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_admissible needs a nonempty word");
  auto N = static_cast<std::size_t>(detail::admissibility_scan_length(alpha, static_cast<std::int64_t>(w.size())));
  return v0_prefix(alpha, N).bits().find(w.bits()) != std::string::npos;
}

struct Witness {
  Word factor;
  std::int64_t start = 0;  // absolute index of the first letter
  std::int64_t cap = 0;
  std::int64_t length() const { return static_cast<std::int64_t>(factor.size()); }
};

/// Shortest factor of u meeting [changed_lo, changed_hi] with length <= cap that is not a factor of v_0.
/// Ties go to the leftmost start. nullopt means none within the cap (inconclusive).
inline std::optional<Witness> find_witness(const Window& u, std::int64_t changed_lo, std::int64_t changed_hi,
                                           const FactorIndex& index) {
  std::int64_t cap = index.cap();
  std::vector<std::int64_t> ms = index.matching_statistics(u.letters);
  std::optional<Witness> best;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    std::int64_t e = u.lo() + static_cast<std::int64_t>(k);
    if (e < changed_lo) continue;
    std::int64_t start = e - ms[k];  // the factor u(start..e) has length ms + 1
    if (start < u.lo() || start > changed_hi) continue;
    std::int64_t len = ms[k] + 1;
    if (len > cap) continue;
    if (!best || len < best->length() || (len == best->length() && start < best->start))
      best = Witness{u.slice(start, e), start, cap};
  }
  return best;
}

/// Witness search for E^(i,i+1) applied to the hull element at `point`.
inline std::optional<Witness> break_witness(const HullPoint& point, const Alpha& alpha, std::int64_t i, std::int64_t cap,
                                            const DecisionBudget& budget = {}) {
  if (cap < 2) throw std::invalid_argument("cap must be >= 2");
  Window w = window(point, alpha, i - cap, i + 1 + cap, budget);
  Window u = exchange(w, i);
  FactorIndex index(alpha, cap);
  return find_witness(u, i, i + 1, index);
}

/// Same search after swapping block `block` of the level-n partition with its right neighbour.
inline std::optional<Witness> block_break_witness(const HullPoint& point, const Alpha& alpha, int level, std::int64_t at,
                                                  std::int64_t cap, const DecisionBudget& budget = {}) {
  if (cap < 2) throw std::invalid_argument("cap must be >= 2");
  std::int64_t span = 2 * block_length(alpha, level);
  PartitionView p = partition_window(point, alpha, level, at - cap - span, at + cap + span, budget);
  auto idx = p.block_containing(at);
  if (!idx || *idx + 1 >= p.blocks.size()) throw RadiusTooSmall("no block pair at " + std::to_string(at));
  Window u = block_exchange(p, alpha, *idx);
  std::int64_t changed_lo = p.blocks[*idx].start, changed_hi = p.end(p.blocks[*idx + 1]) - 1;
  FactorIndex index(alpha, cap);
  return find_witness(u, changed_lo, changed_hi, index);
}

enum class BoundaryForm { a, b, neither };

inline std::string form_name(BoundaryForm f) { return f == BoundaryForm::a ? "a" : (f == BoundaryForm::b ? "b" : "neither"); }

/// Shape of the level-n partition at the boundary right of site m:
/// (a) s_{n-1} s_n | s_n, (b) s_n s_{n-1} | s_n, where the block s_n after | starts at m + 1.
inline BoundaryForm boundary_form(const HullPoint& point, const Alpha& alpha, std::int64_t m, int level,
                                const DecisionBudget& budget = {}) {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  std::int64_t lp = block_length(alpha, level - 1), lc = block_length(alpha, level);
  PartitionView p = partition_window(point, alpha, level, m - 2 * lc - 2 * lp, m + lc + 1, budget);
  auto after = p.block_containing(m + 1);
  if (!after) throw RadiusTooSmall("partition does not reach the boundary");
  const Block& right = p.blocks[*after];
  if (right.start != m + 1 || right.label != BlockLabel::cur) return BoundaryForm::neither;
  if (*after < 2) throw RadiusTooSmall("partition does not reach two blocks left of the boundary");
  BlockLabel near = p.blocks[*after - 1].label, far = p.blocks[*after - 2].label;
  if (near == BlockLabel::cur && far == BlockLabel::prev) return BoundaryForm::a;
  if (near == BlockLabel::prev && far == BlockLabel::cur) return BoundaryForm::b;
  return BoundaryForm::neither;
}

struct FormSequence {
  std::vector<BoundaryForm> forms;  // levels 1..max
  bool alternates = false;         // no "neither" and (a)/(b) switch at every step
};

inline FormSequence boundary_forms(const HullPoint& point, const Alpha& alpha, std::int64_t m, int max_level,
                                  const DecisionBudget& budget = {}) {
  FormSequence fs;
  for (int n = 1; n <= max_level; ++n) fs.forms.push_back(boundary_form(point, alpha, m, n, budget));
  fs.alternates = !fs.forms.empty();
  for (std::size_t i = 0; i < fs.forms.size(); ++i) {
    if (fs.forms[i] == BoundaryForm::neither) fs.alternates = false;
    if (i > 0 && fs.forms[i] == fs.forms[i - 1]) fs.alternates = false;
  }
  return fs;
}

}  // namespace sturmian
