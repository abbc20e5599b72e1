#ifndef RECTWALK_FACTOR_HPP
#define RECTWALK_FACTOR_HPP

#include "rectwalk/numeric.hpp"
#include "rectwalk/walk.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rectwalk {

/// Translation-invariant fingerprint of a walk: its colors plus the
/// x-increments between consecutive vertices. For history walks the
/// h-increments are forced by the colors, so two windows are translates
/// of each other exactly when their keys agree.
struct FactorKey {
    std::vector<Color> colors;
    std::vector<int> x_steps;  // size() == colors.size() - 1

    friend bool operator==(const FactorKey&, const FactorKey&) = default;
};

FactorKey factor_key(const Walk& walk);

/// A forbidden contiguous factor W_0 (nonempty history walk).
class FactorPattern {
public:
    explicit FactorPattern(Walk walk);

    const Walk& walk() const noexcept { return walk_; }
    const FactorKey& key() const noexcept { return key_; }
    std::size_t length() const noexcept { return walk_.size(); }

    friend bool operator==(const FactorPattern& a, const FactorPattern& b) { return a.walk_ == b.walk_; }

private:
    Walk walk_;
    FactorKey key_;
};

/// The window starting at the 1-based index `start` equals the pattern
/// translated by (dh, dx).
struct Occurrence {
    std::size_t start = 0;
    int dh = 0;
    int dx = 0;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Border-table automaton over symbols (color, x-step). Pattern position 0
/// is compared on color alone, every later position on both. State s means
/// the last s symbols read match the first s of the pattern.
class FactorMatcher {
public:
    explicit FactorMatcher(const FactorPattern& pattern);

    std::size_t length() const noexcept { return colors_.size(); }

    /// Next state after reading a vertex of color c whose x-step from the
    /// previous vertex is x_step (ignored for the first vertex of a text,
    /// which is always read in state 0). Returns length() on a full match.
    std::size_t step(std::size_t state, Color c, int x_step) const;

    /// Dense transition table indexed by a compressed x-step class; used by
    /// the counting DP. x-steps that do not occur in the pattern share one class.
    int step_class(int x_step) const noexcept;
    std::size_t step_by_class(std::size_t state, Color c, int cls) const noexcept {
        return table_[(state * 4 + static_cast<std::size_t>(c)) * num_classes_ + static_cast<std::size_t>(cls)];
    }

private:
    bool matches(std::size_t position, Color c, int x_step) const noexcept;

    std::vector<Color> colors_;
    std::vector<int> x_steps_;  // x_steps_[i] for position i >= 1; x_steps_[0] unused
    std::vector<std::size_t> border_;
    std::vector<int> class_values_;
    std::size_t num_classes_ = 0;
    std::vector<std::size_t> table_;
};

/// Reference matcher: compares every window against the translated pattern.
std::vector<Occurrence> find_occurrences_naive(const Walk& walk, const FactorPattern& pattern);
/// Automaton matcher; agrees with the naive one on history walks.
std::vector<Occurrence> find_occurrences(const Walk& walk, const FactorPattern& pattern);
bool avoids(const Walk& walk, const FactorPattern& pattern);

/// Number of walks of `cls` and length n avoiding `pattern`, by a dynamic
/// program over (h, x, color, automaton state).
BigInt count_avoiding(int n, WalkClass cls, const FactorPattern& pattern);

/// counts[n] for 0 <= n <= n_max from one DP sweep. With no pattern the
/// automaton is trivial and the result is the unrestricted class size.
std::vector<BigInt> count_sequence(int n_max, WalkClass cls, const FactorPattern* pattern = nullptr);

/// No proper prefix of the pattern is a translate of the suffix of equal length.
bool is_overlap_free(const FactorPattern& pattern);

/// Prepends j copies of (0,0,r) and appends k copies of (0,0,g), j, k <= cap,
/// choosing the smallest (j + k, then j) that makes the result admissible and
/// overlap-free. Throws InvariantError if no choice works.
FactorPattern extend_overlap_free(const FactorPattern& pattern, int cap);

/// Smallest x-offset at which a copy of `pattern` fits into gap `gap` of
/// `walk` (0 = before the first vertex, size() = after the last), or
/// nullopt when the quadrant and leftmost seam conditions cannot all hold.
std::optional<int> insertion_offset(const Walk& walk, const FactorPattern& pattern, std::size_t gap);

/// Inserts one translated copy of `pattern` per entry of `gaps` (a
/// multiset of gap indices). Throws InvariantError when some gap admits no
/// offset.
Walk insert_copies(const Walk& walk, const FactorPattern& pattern, const std::vector<std::size_t>& gaps);

/// Deletes the leftmost occurrence of `pattern`, q times.
Walk remove_copies(const Walk& walk, const FactorPattern& pattern, int q);

/// Calls fn(gaps) for every multiset of size q drawn from {0, ..., num_gaps - 1},
/// gaps listed in nondecreasing order, in lexicographic order.
template <class Fn>
void for_each_gap_multiset(std::size_t num_gaps, int q, Fn&& fn) {
    std::vector<std::size_t> gaps(static_cast<std::size_t>(q), 0);
    if (q == 0) {
        fn(gaps);
        return;
    }
    if (num_gaps == 0) return;
    for (;;) {
        fn(gaps);
        std::size_t i = gaps.size();
        while (i > 0 && gaps[i - 1] == num_gaps - 1) --i;
        if (i == 0) return;
        const std::size_t next = gaps[i - 1] + 1;
        for (std::size_t j = i - 1; j < gaps.size(); ++j) gaps[j] = next;
    }
}

/// S(W, q): every walk obtained by inserting q copies, deduplicated and sorted.
std::vector<Walk> insertion_set(const Walk& walk, const FactorPattern& pattern, int q);

}  // namespace rectwalk

#endif
