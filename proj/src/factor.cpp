#include "rectwalk/factor.hpp"

#include "rectwalk/error.hpp"

#include <algorithm>
#include <set>

namespace rectwalk {

FactorKey factor_key(const Walk& walk) {
    FactorKey key;
    key.colors.reserve(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i) {
        key.colors.push_back(walk[i].c);
        if (i) key.x_steps.push_back(walk[i].x - walk[i - 1].x);
    }
    return key;
}

FactorPattern::FactorPattern(Walk walk) : walk_(std::move(walk)) {
    if (walk_.empty()) throw DomainError("factor pattern must be nonempty");
    if (!is_history_walk(walk_)) {
        throw DomainError("factor pattern '" + format_walk(walk_) + "' is not a history walk");
    }
    key_ = factor_key(walk_);
}

// ---------------------------------------------------------------------------
// Automaton

FactorMatcher::FactorMatcher(const FactorPattern& pattern)
    : colors_(pattern.key().colors), x_steps_(pattern.length(), 0), border_(pattern.length() + 1, 0) {
    const std::size_t len = colors_.size();
    for (std::size_t i = 1; i < len; ++i) x_steps_[i] = pattern.key().x_steps[i - 1];

    for (std::size_t i = 1; i < len; ++i) {
        std::size_t k = border_[i];
        while (k > 0 && !matches(k, colors_[i], x_steps_[i])) k = border_[k];
        if (matches(k, colors_[i], x_steps_[i])) ++k;
        border_[i + 1] = k;
    }

    class_values_.assign(x_steps_.begin() + 1, x_steps_.end());
    std::sort(class_values_.begin(), class_values_.end());
    class_values_.erase(std::unique(class_values_.begin(), class_values_.end()), class_values_.end());
    num_classes_ = class_values_.size() + 1;
    const int other = class_values_.empty() ? 0 : class_values_.back() + 1;

    table_.assign(len * 4 * num_classes_, 0);
    for (std::size_t s = 0; s < len; ++s) {
        for (Color c : kColors) {
            for (std::size_t k = 0; k < num_classes_; ++k) {
                const int d = k < class_values_.size() ? class_values_[k] : other;
                table_[(s * 4 + static_cast<std::size_t>(c)) * num_classes_ + k] = step(s, c, d);
            }
        }
    }
}

bool FactorMatcher::matches(std::size_t position, Color c, int x_step) const noexcept {
    if (c != colors_[position]) return false;
    return position == 0 || x_steps_[position] == x_step;
}

std::size_t FactorMatcher::step(std::size_t state, Color c, int x_step) const {
    if (state == length()) state = border_[state];
    while (state > 0 && !matches(state, c, x_step)) state = border_[state];
    if (matches(state, c, x_step)) ++state;
    return state;
}

int FactorMatcher::step_class(int x_step) const noexcept {
    const auto it = std::lower_bound(class_values_.begin(), class_values_.end(), x_step);
    if (it != class_values_.end() && *it == x_step) {
        return static_cast<int>(it - class_values_.begin());
    }
    return static_cast<int>(class_values_.size());
}

// ---------------------------------------------------------------------------
// Occurrences

namespace {

void require_history(const Walk& walk) {
    if (!is_history_walk(walk)) {
        throw DomainError("factor matching: '" + format_walk(walk) + "' is not a history walk");
    }
}

Occurrence occurrence_at(const Walk& walk, const FactorPattern& pattern, std::size_t first) {
    return Occurrence{first + 1, walk[first].h - pattern.walk().front().h,
                      walk[first].x - pattern.walk().front().x};
}

}  // namespace

std::vector<Occurrence> find_occurrences_naive(const Walk& walk, const FactorPattern& pattern) {
    require_history(walk);
    std::vector<Occurrence> out;
    const std::size_t len = pattern.length();
    if (walk.size() < len) return out;
    for (std::size_t first = 0; first + len <= walk.size(); ++first) {
        const Occurrence occ = occurrence_at(walk, pattern, first);
        const Walk moved = translate(pattern.walk(), occ.dh, occ.dx);
        if (std::equal(moved.begin(), moved.end(), walk.begin() + static_cast<std::ptrdiff_t>(first))) {
            out.push_back(occ);
        }
    }
    return out;
}

std::vector<Occurrence> find_occurrences(const Walk& walk, const FactorPattern& pattern) {
    require_history(walk);
    const FactorMatcher matcher(pattern);
    const std::size_t len = pattern.length();
    std::vector<Occurrence> out;
    std::size_t state = 0;
    for (std::size_t j = 0; j < walk.size(); ++j) {
        const int step = j ? walk[j].x - walk[j - 1].x : 0;
        state = matcher.step(state, walk[j].c, step);
        if (state == len) out.push_back(occurrence_at(walk, pattern, j + 1 - len));
    }
    return out;
}

bool avoids(const Walk& walk, const FactorPattern& pattern) {
    return find_occurrences(walk, pattern).empty();
}

// ---------------------------------------------------------------------------
// Counting DP

namespace {

class Layer {
public:
    Layer(int max_h, std::size_t states) : side_(static_cast<std::size_t>(max_h) + 1), states_(states) {
        cells_.resize(side_ * side_ * 4 * states_);
    }

    BigInt& at(int h, int x, Color c, std::size_t s) {
        return cells_[((static_cast<std::size_t>(h) * side_ + static_cast<std::size_t>(x)) * 4 +
                       static_cast<std::size_t>(c)) * states_ + s];
    }

    void clear() {
        for (auto& v : cells_) v = 0;
    }

private:
    std::size_t side_;
    std::size_t states_;
    std::vector<BigInt> cells_;
};

bool end_condition(WalkClass cls, const Vertex& v) {
    switch (cls) {
        case WalkClass::lhqwadm: return is_admissible_end(v);
        case WalkClass::lhqe: return v == Vertex{0, 0, Color::w};
        default: return true;
    }
}

// Largest height a vertex at 0-based index m may have and still close by length n_max.
int height_cap(WalkClass cls, int n_max, int m) {
    switch (cls) {
        case WalkClass::lhqwadm: return std::min(m, n_max - m);
        case WalkClass::lhqe: return std::min(m, n_max - 1 - m);
        default: return m;
    }
}

}  // namespace

std::vector<BigInt> count_sequence(int n_max, WalkClass cls, const FactorPattern* pattern) {
    if (n_max < 0) throw DomainError("count_sequence: n_max must be nonnegative");
    std::vector<BigInt> counts(static_cast<std::size_t>(n_max) + 1, 0);
    counts[0] = cls == WalkClass::lhqe ? 0 : 1;
    if (n_max == 0) return counts;

    std::optional<FactorMatcher> matcher;
    if (pattern) matcher.emplace(*pattern);
    const std::size_t accept = matcher ? matcher->length() : 1;
    const std::size_t states = accept;  // live states 0 .. accept-1
    const bool leftmost = cls != WalkClass::hqw;

    const int max_h = n_max;
    Layer cur(max_h, states);
    Layer next(max_h, states);

    for (Color c : kColors) {
        if (cls == WalkClass::lhqwadm && c == Color::w) continue;
        const std::size_t s = matcher ? matcher->step(0, c, 0) : 0;
        if (s == accept) continue;
        cur.at(0, 0, c, s) += 1;
    }

    for (int m = 0; m < n_max; ++m) {
        const int cap = height_cap(cls, n_max, m);
        const int next_cap = height_cap(cls, n_max, m + 1);
        const bool last_layer = m + 1 == n_max;
        if (!last_layer) next.clear();
        BigInt completed = 0;

        for (int h = 0; h <= cap; ++h) {
            for (int x = 0; x <= h; ++x) {
                for (Color c : kColors) {
                    const Vertex v{h, x, c};
                    const bool closes = end_condition(cls, v);
                    const int nh = h + delta(c);
                    const bool extends = !last_layer && nh >= 0 && nh <= next_cap;
                    if (!closes && !extends) continue;
                    for (std::size_t s = 0; s < states; ++s) {
                        const BigInt& ways = cur.at(h, x, c, s);
                        if (ways.is_zero()) continue;
                        if (closes) completed += ways;
                        if (!extends) continue;
                        for (Color nc : kColors) {
                            const int lo = leftmost ? std::max(0, leftmost_lower_bound(v, nc)) : 0;
                            for (int nx = lo; nx <= nh; ++nx) {
                                std::size_t ns = 0;
                                if (matcher) {
                                    ns = matcher->step_by_class(s, nc, matcher->step_class(nx - x));
                                    if (ns == accept) continue;
                                }
                                next.at(nh, nx, nc, ns) += ways;
                            }
                        }
                    }
                }
            }
        }
        counts[static_cast<std::size_t>(m) + 1] = completed;
        if (!last_layer) std::swap(cur, next);
    }
    return counts;
}

BigInt count_avoiding(int n, WalkClass cls, const FactorPattern& pattern) {
    if (n < 0) throw DomainError("count_avoiding: n must be nonnegative");
    return count_sequence(n, cls, &pattern)[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------
// Overlap-freeness and extension

bool is_overlap_free(const FactorPattern& pattern) {
    const Walk& w = pattern.walk();
    const std::size_t len = w.size();
    for (std::size_t k = 1; k < len; ++k) {
        if (factor_key(w.slice(0, k)) == factor_key(w.slice(len - k, k))) return false;
    }
    return true;
}

FactorPattern extend_overlap_free(const FactorPattern& pattern, int cap) {
    if (!is_admissible(pattern.walk())) {
        throw DomainError("extend_overlap_free: pattern '" + format_walk(pattern.walk()) +
                          "' is not admissible");
    }
    if (is_overlap_free(pattern)) return pattern;
    for (int total = 1; total <= 2 * cap; ++total) {
        for (int front = std::max(0, total - cap); front <= std::min(total, cap); ++front) {
            const int back = total - front;
            std::vector<Vertex> vs(static_cast<std::size_t>(front), Vertex{0, 0, Color::r});
            vs.insert(vs.end(), pattern.walk().begin(), pattern.walk().end());
            vs.insert(vs.end(), static_cast<std::size_t>(back), Vertex{0, 0, Color::g});
            Walk candidate(std::move(vs));
            if (!is_admissible(candidate)) continue;
            FactorPattern extended(std::move(candidate));
            if (is_overlap_free(extended)) return extended;
        }
    }
    throw InvariantError("extend_overlap_free: no extension of '" + format_walk(pattern.walk()) +
                         "' with at most " + std::to_string(cap) + " vertices per side is overlap-free");
}

// ---------------------------------------------------------------------------
// Insertion scheme

namespace {

void require_insertion_pattern(const FactorPattern& pattern) {
    const Walk& p = pattern.walk();
    if (!is_admissible(p)) {
        throw DomainError("insertion: pattern '" + format_walk(p) + "' is not admissible");
    }
    if (p.back().h + delta(p.back().c) != 0) {
        throw DomainError("insertion: pattern '" + format_walk(p) + "' does not return to height 0");
    }
    if (!is_overlap_free(pattern)) {
        throw DomainError("insertion: pattern '" + format_walk(p) + "' is not overlap-free");
    }
}

int gap_height(const Walk& walk, std::size_t gap) {
    if (gap == 0) return 0;
    const Vertex& v = walk[gap - 1];
    return v.h + delta(v.c);
}

bool offset_fits(const Walk& walk, const Walk& p, std::size_t gap, int h0, int x0) {
    for (const Vertex& v : p) {
        const Vertex t = translate(v, h0, x0);
        if (t.x < 0 || t.h < t.x) return false;
    }
    const Vertex first = translate(p.front(), h0, x0);
    const Vertex last = translate(p.back(), h0, x0);
    if (gap > 0 && !leftmost_step(walk[gap - 1], first)) return false;
    return gap == walk.size() || leftmost_step(last, walk[gap]);
}

}  // namespace

std::optional<int> insertion_offset(const Walk& walk, const FactorPattern& pattern, std::size_t gap) {
    if (gap > walk.size()) throw DomainError("insertion: gap index out of range");
    const int h0 = gap_height(walk, gap);
    for (int x0 = 0; x0 <= h0; ++x0) {
        if (offset_fits(walk, pattern.walk(), gap, h0, x0)) return x0;
    }
    return std::nullopt;
}

Walk insert_copies(const Walk& walk, const FactorPattern& pattern, const std::vector<std::size_t>& gaps) {
    if (!is_admissible(walk)) {
        throw DomainError("insert_copies: '" + format_walk(walk) + "' is not admissible");
    }
    require_insertion_pattern(pattern);
    std::vector<int> multiplicity(walk.size() + 1, 0);
    for (std::size_t g : gaps) {
        if (g > walk.size()) throw DomainError("insert_copies: gap index out of range");
        ++multiplicity[g];
    }
    std::vector<Vertex> out;
    out.reserve(walk.size() + gaps.size() * pattern.length());
    for (std::size_t g = 0; g <= walk.size(); ++g) {
        if (multiplicity[g] > 0) {
            const auto x0 = insertion_offset(walk, pattern, g);
            if (!x0) {
                throw InvariantError("insert_copies: no x-offset places '" + format_walk(pattern.walk()) +
                                     "' into gap " + std::to_string(g) + " of '" + format_walk(walk) + "'");
            }
            const Walk copy = translate(pattern.walk(), gap_height(walk, g), *x0);
            if (multiplicity[g] > 1 && !leftmost_step(copy.back(), copy.front())) {
                throw InvariantError("insert_copies: consecutive copies of '" + format_walk(pattern.walk()) +
                                     "' violate the leftmost rule");
            }
            for (int k = 0; k < multiplicity[g]; ++k) out.insert(out.end(), copy.begin(), copy.end());
        }
        if (g < walk.size()) out.push_back(walk[g]);
    }
    return Walk(std::move(out));
}

Walk remove_copies(const Walk& walk, const FactorPattern& pattern, int q) {
    if (q < 0) throw DomainError("remove_copies: q must be nonnegative");
    Walk current = walk;
    for (int k = 0; k < q; ++k) {
        const auto occ = find_occurrences(current, pattern);
        if (occ.empty()) {
            throw DomainError("remove_copies: only " + std::to_string(k) + " of " + std::to_string(q) +
                              " copies found");
        }
        const std::size_t first = occ.front().start - 1;
        std::vector<Vertex> vs(current.begin(), current.end());
        vs.erase(vs.begin() + static_cast<std::ptrdiff_t>(first),
                 vs.begin() + static_cast<std::ptrdiff_t>(first + pattern.length()));
        current = Walk(std::move(vs));
    }
    return current;
}

std::vector<Walk> insertion_set(const Walk& walk, const FactorPattern& pattern, int q) {
    if (q < 0) throw DomainError("insertion_set: q must be nonnegative");
    std::set<Walk> out;
    for_each_gap_multiset(walk.size() + 1, q,
                          [&](const std::vector<std::size_t>& gaps) { out.insert(insert_copies(walk, pattern, gaps)); });
    return {out.begin(), out.end()};
}

}  // namespace rectwalk
