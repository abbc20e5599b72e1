// Reference implementations used only by the tests. They share no code with
// the library beyond the Rect/Segment value types.
#ifndef RECTWALK_TESTS_ORACLES_HPP
#define RECTWALK_TESTS_ORACLES_HPP

#include "rectwalk/geometry.hpp"
#include "rectwalk/paving.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

struct V {
    int h, x;
    char c;
};
using Seq = std::vector<V>;

inline int step_of(char c) { return c == 'b' ? 1 : c == 'w' ? -1 : 0; }

inline std::string text(const Seq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(s[i].h) + ',' + std::to_string(s[i].x) + ',' + s[i].c;
    }
    return out;
}

inline bool history(const Seq& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].x < 0 || s[i].x > s[i].h) return false;
        if (i + 1 < s.size() && s[i + 1].h != s[i].h + step_of(s[i].c)) return false;
    }
    return true;
}

inline bool leftmost(const Seq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const bool first = s[i].c == 'b' || s[i].c == 'r';
        const bool second = s[i + 1].c == 'b' || s[i + 1].c == 'g';
        const int need = first && second ? s[i].x : s[i].x - 1;
        if (s[i + 1].x < need) return false;
    }
    return true;
}

inline bool is(const V& v, int h, int x, char c) { return v.h == h && v.x == x && v.c == c; }

inline bool admissible(const Seq& s) {
    if (!history(s) || !leftmost(s)) return false;
    if (s.empty()) return true;
    const V& a = s.front();
    const V& z = s.back();
    const bool start = is(a, 0, 0, 'b') || is(a, 0, 0, 'r') || is(a, 0, 0, 'g');
    const bool end = is(z, 0, 0, 'r') || is(z, 0, 0, 'g') || is(z, 1, 0, 'w') || is(z, 1, 1, 'w');
    return start && end;
}

inline bool excursion(const Seq& s) {
    return !s.empty() && history(s) && leftmost(s) && is(s.back(), 0, 0, 'w') && s.front().h == 0 &&
           s.front().x == 0;
}

/// Every history walk of length n starting at the origin with h_n + step(c_n)
/// able to reach `end_height` (pass -1 for no constraint), leftmost or not.
inline void for_each_rooted(int n, int end_height, const std::function<void(const Seq&)>& visit) {
    Seq s;
    std::function<void(int)> rec = [&](int h) {
        const int remaining = n - static_cast<int>(s.size());
        if (remaining == 0) {
            visit(s);
            return;
        }
        if (end_height >= 0 && h - end_height > remaining) return;
        for (int x = 0; x <= h; ++x) {
            for (char c : {'b', 'r', 'g', 'w'}) {
                if (s.empty() && x != 0) continue;
                s.push_back({h, x, c});
                const int next = h + step_of(c);
                if (next >= 0 || remaining == 1) rec(next);
                s.pop_back();
            }
        }
    };
    rec(0);
}

/// Sorted texts of all excursions of length n, filtered from the superset.
inline std::vector<std::string> excursions(int n) {
    std::vector<std::string> out;
    for_each_rooted(n, 0, [&](const Seq& s) {
        if (excursion(s)) out.push_back(text(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> admissible_walks(int n) {
    std::vector<std::string> out;
    if (n == 0) return {""};
    for_each_rooted(n, -1, [&](const Seq& s) {
        if (admissible(s)) out.push_back(text(s));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline long long count_excursions(int n) {
    long long count = 0;
    for_each_rooted(n, 0, [&](const Seq& s) { count += excursion(s) ? 1 : 0; });
    return count;
}

// ---------------------------------------------------------------------------
// Geometry

struct Seg {
    bool horizontal;
    int axis, lo, hi;
};

/// Maximal interior segments, found as runs of unit edges that separate
/// two different rectangles.
inline std::vector<Seg> segments_of(const std::vector<rectwalk::Rect>& rects) {
    int w = 0, h = 0;
    for (const auto& r : rects) w = std::max(w, r.x_hi), h = std::max(h, r.y_hi);
    auto owner = [&](int i, int j) {
        for (const auto& r : rects) {
            if (r.x_lo <= i && i < r.x_hi && r.y_lo <= j && j < r.y_hi) return r.id;
        }
        return -1;
    };
    std::vector<Seg> out;
    for (int y = 1; y < h; ++y) {
        int start = -1;
        for (int i = 0; i <= w; ++i) {
            const bool wall = i < w && owner(i, y - 1) != owner(i, y);
            if (wall && start < 0) start = i;
            if (!wall && start >= 0) out.push_back({true, y, start, i}), start = -1;
        }
    }
    for (int x = 1; x < w; ++x) {
        int start = -1;
        for (int j = 0; j <= h; ++j) {
            const bool wall = j < h && owner(x - 1, j) != owner(x, j);
            if (wall && start < 0) start = j;
            if (!wall && start >= 0) out.push_back({false, x, start, j}), start = -1;
        }
    }
    return out;
}

inline std::vector<Seg> segments_of(const rectwalk::GeomPattern& p) {
    std::vector<Seg> out;
    for (const auto& s : p.config().segments()) {
        out.push_back({s.dir == rectwalk::Orientation::horizontal, s.axis, s.lo, s.hi});
    }
    return out;
}

/// Coordinate along t where end `hi_end` of s lies strictly inside t, or -1.
inline int touch(const Seg& s, bool hi_end, const Seg& t) {
    if (s.horizontal == t.horizontal) return -1;
    const int e = hi_end ? s.hi : s.lo;
    if (t.axis == e && t.lo < s.axis && s.axis < t.hi) return s.axis;
    return -1;
}

inline bool incident(const Seg& a, const Seg& b) {
    return touch(a, false, b) >= 0 || touch(a, true, b) >= 0 || touch(b, false, a) >= 0 || touch(b, true, a) >= 0;
}

/// Tries every injection of pattern segments into host segments.
inline bool contains(const std::vector<Seg>& host, const std::vector<Seg>& pat, bool induced = false) {
    const std::size_t k = pat.size();
    if (k > host.size()) return false;
    std::vector<int> img(k, -1);
    std::vector<bool> used(host.size(), false);
    auto valid = [&]() {
        for (std::size_t s = 0; s < k; ++s) {
            if (pat[s].horizontal != host[img[s]].horizontal) return false;
        }
        for (std::size_t t = 0; t < k; ++t) {
            std::vector<std::pair<int, int>> along;  // (pattern position, image position)
            for (std::size_t s = 0; s < k; ++s) {
                for (bool e : {false, true}) {
                    const int p = touch(pat[s], e, pat[t]);
                    if (p < 0) continue;
                    const int q = touch(host[img[s]], e, host[img[t]]);
                    if (q < 0) return false;
                    along.emplace_back(p, q);
                }
            }
            std::sort(along.begin(), along.end());
            for (std::size_t i = 1; i < along.size(); ++i) {
                if (along[i].second <= along[i - 1].second) return false;
            }
        }
        if (induced) {
            for (std::size_t a = 0; a < k; ++a) {
                for (std::size_t b = a + 1; b < k; ++b) {
                    if (!incident(pat[a], pat[b]) && incident(host[img[a]], host[img[b]])) return false;
                }
            }
        }
        return true;
    };
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == k) return valid();
        for (std::size_t t = 0; t < host.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            img[depth] = static_cast<int>(t);
            if (rec(depth + 1)) return true;
            used[t] = false;
        }
        img[depth] = -1;
        return false;
    };
    return rec(0);
}

}  // namespace oracle

#endif
