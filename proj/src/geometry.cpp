#include "rectwalk/geometry.hpp"

#include "rectwalk/error.hpp"
#include "rectwalk/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rectwalk {

namespace {

std::string describe(const Segment& s) {
    return std::string(s.dir == Orientation::horizontal ? "h" : "v") + std::to_string(s.id);
}

ContactType contact_type(Orientation dir, End end) {
    if (dir == Orientation::vertical) return end == End::hi ? ContactType::v_top_on_h : ContactType::v_bottom_on_h;
    return end == End::hi ? ContactType::h_right_on_v : ContactType::h_left_on_v;
}

// A neighbor touching its host with this end sits on this side of the host.
Side side_of(End end) { return end == End::hi ? Side::negative : Side::positive; }
End end_for(Side side) { return side == Side::negative ? End::hi : End::lo; }

}  // namespace

// ---------------------------------------------------------------------------
// SegmentConfig

SegmentConfig::SegmentConfig(std::vector<Segment> segments, std::optional<Frame> frame)
    : segments_(std::move(segments)), frame_(frame) {
    const std::size_t n = segments_.size();
    std::set<int> ids;
    for (const Segment& s : segments_) {
        if (s.lo >= s.hi) throw DomainError("segment " + describe(s) + " has an empty span");
        if (!ids.insert(s.id).second) throw DomainError("duplicate segment id " + std::to_string(s.id));
    }
    for (const Segment& s : segments_) dirs_.push_back(s.dir);
    if (frame_) {
        if (frame_->x_lo >= frame_->x_hi || frame_->y_lo >= frame_->y_hi) throw DomainError("degenerate frame");
        for (Orientation d : {Orientation::horizontal, Orientation::vertical, Orientation::horizontal,
                              Orientation::vertical}) {
            dirs_.push_back(d);
        }
    }
    contacts_.assign(dirs_.size(), {});
    hosts_.assign(n, {});

    auto attach = [&](std::size_t seg_index, End end, std::size_t host_node, int position) {
        auto& slot = hosts_[seg_index][static_cast<std::size_t>(end)];
        if (slot) throw DomainError("segment " + describe(segments_[seg_index]) + " has two hosts at one end");
        slot = host_node;
        contacts_[host_node].push_back(Contact{seg_index, side_of(end), position});
    };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Segment& a = segments_[i];
            const Segment& b = segments_[j];
            if (a.dir == b.dir) {
                if (a.axis == b.axis && a.lo <= b.hi && b.lo <= a.hi) {
                    throw DomainError("collinear segments " + describe(a) + " and " + describe(b) + " touch");
                }
                continue;
            }
            const std::size_t hi_index = a.dir == Orientation::horizontal ? i : j;
            const std::size_t vi_index = a.dir == Orientation::horizontal ? j : i;
            const Segment& h = segments_[hi_index];
            const Segment& v = segments_[vi_index];
            if (v.axis < h.lo || v.axis > h.hi || h.axis < v.lo || h.axis > v.hi) continue;
            const bool inside_h = h.lo < v.axis && v.axis < h.hi;
            const bool inside_v = v.lo < h.axis && h.axis < v.hi;
            if (inside_h && inside_v) throw DomainError("segments " + describe(h) + " and " + describe(v) + " cross");
            if (!inside_h && !inside_v) {
                throw DomainError("segments " + describe(h) + " and " + describe(v) + " share an endpoint");
            }
            if (inside_h) {
                attach(vi_index, v.lo == h.axis ? End::lo : End::hi, hi_index, v.axis);
            } else {
                attach(hi_index, h.lo == v.axis ? End::lo : End::hi, vi_index, h.axis);
            }
        }
    }

    if (frame_) {
        const Frame& f = *frame_;
        const std::size_t bottom = n, left = n + 1, top = n + 2, right = n + 3;
        for (std::size_t i = 0; i < n; ++i) {
            const Segment& s = segments_[i];
            if (s.dir == Orientation::horizontal) {
                if (s.axis <= f.y_lo || s.axis >= f.y_hi || s.lo < f.x_lo || s.hi > f.x_hi) {
                    throw DomainError("segment " + describe(s) + " leaves the frame");
                }
                if (s.lo == f.x_lo) attach(i, End::lo, left, s.axis);
                if (s.hi == f.x_hi) attach(i, End::hi, right, s.axis);
            } else {
                if (s.axis <= f.x_lo || s.axis >= f.x_hi || s.lo < f.y_lo || s.hi > f.y_hi) {
                    throw DomainError("segment " + describe(s) + " leaves the frame");
                }
                if (s.lo == f.y_lo) attach(i, End::lo, bottom, s.axis);
                if (s.hi == f.y_hi) attach(i, End::hi, top, s.axis);
            }
        }
    }

    for (auto& list : contacts_) {
        std::sort(list.begin(), list.end(), [](const Contact& a, const Contact& b) { return a.position < b.position; });
        for (std::size_t k = 1; k < list.size(); ++k) {
            if (list[k].position == list[k - 1].position) throw DomainError("segments form a cross junction");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (End e : {End::lo, End::hi}) {
            const auto host_node = hosts_[i][static_cast<std::size_t>(e)];
            if (!host_node || *host_node >= n) continue;
            const Segment& s = segments_[i];
            incidences_.push_back(Incidence{s.id, e, segments_[*host_node].id, contact_type(s.dir, e), s.axis});
        }
    }
}

// ---------------------------------------------------------------------------
// seg(R)

SegmentConfig seg(const Rectangulation& rectangulation) {
    const int width = rectangulation.width();
    const int height = rectangulation.height();
    std::map<int, std::vector<std::pair<int, int>>> rows, cols;
    for (const Rect& r : rectangulation.rects()) {
        for (int y : {r.y_lo, r.y_hi}) {
            if (y > 0 && y < height) rows[y].emplace_back(r.x_lo, r.x_hi);
        }
        for (int x : {r.x_lo, r.x_hi}) {
            if (x > 0 && x < width) cols[x].emplace_back(r.y_lo, r.y_hi);
        }
    }
    std::vector<Segment> out;
    auto emit = [&](Orientation dir, std::map<int, std::vector<std::pair<int, int>>>& lines) {
        for (auto& [axis, spans] : lines) {
            std::sort(spans.begin(), spans.end());
            int lo = spans.front().first, hi = spans.front().second;
            for (std::size_t k = 1; k <= spans.size(); ++k) {
                if (k < spans.size() && spans[k].first <= hi) {
                    hi = std::max(hi, spans[k].second);
                    continue;
                }
                out.push_back(Segment{static_cast<int>(out.size()) + 1, dir, axis, lo, hi});
                if (k < spans.size()) {
                    lo = spans[k].first;
                    hi = spans[k].second;
                }
            }
        }
    };
    emit(Orientation::horizontal, rows);
    emit(Orientation::vertical, cols);
    return SegmentConfig(std::move(out), Frame{0, width, 0, height});
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

class EquivalenceSearch {
public:
    EquivalenceSearch(const SegmentConfig& a, const SegmentConfig& b, bool strong)
        : a_(a), b_(b), strong_(strong), map_(a.node_count(), kUnset), inverse_(b.node_count(), kUnset) {}

    bool run() {
        if (a_.size() != b_.size() || a_.frame().has_value() != b_.frame().has_value()) return false;
        std::vector<std::size_t> queue;
        for (std::size_t k = a_.size(); k < a_.node_count(); ++k) {
            if (!assign(k, k, queue)) return false;
        }
        return propagate(queue) && complete();
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    bool assign(std::size_t u, std::size_t v, std::vector<std::size_t>& queue) {
        if (map_[u] == v) return true;
        if (map_[u] != kUnset || inverse_[v] != kUnset) return false;
        if (a_.orientation(u) != b_.orientation(v) || a_.is_frame(u) != b_.is_frame(v)) return false;
        map_[u] = v;
        inverse_[v] = u;
        trail_.push_back(u);
        queue.push_back(u);
        return true;
    }

    bool match_lists(const std::vector<SegmentConfig::Contact>& x, const std::vector<SegmentConfig::Contact>& y,
                     std::vector<std::size_t>& queue) {
        if (x.size() != y.size()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i].side != y[i].side || !assign(x[i].neighbor, y[i].neighbor, queue)) return false;
        }
        return true;
    }

    static std::vector<SegmentConfig::Contact> on_side(const std::vector<SegmentConfig::Contact>& list, Side side) {
        std::vector<SegmentConfig::Contact> out;
        for (const auto& c : list) {
            if (c.side == side) out.push_back(c);
        }
        return out;
    }

    bool check(std::size_t u, std::vector<std::size_t>& queue) {
        const std::size_t v = map_[u];
        if (!a_.is_frame(u)) {
            for (End e : {End::lo, End::hi}) {
                const auto ha = a_.host(u, e);
                const auto hb = b_.host(v, e);
                if (ha.has_value() != hb.has_value()) return false;
                if (ha && !assign(*ha, *hb, queue)) return false;
            }
        }
        const auto& ca = a_.contacts(u);
        const auto& cb = b_.contacts(v);
        if (strong_) return match_lists(ca, cb, queue);
        return match_lists(on_side(ca, Side::negative), on_side(cb, Side::negative), queue) &&
               match_lists(on_side(ca, Side::positive), on_side(cb, Side::positive), queue);
    }

    bool propagate(std::vector<std::size_t>& queue) {
        while (!queue.empty()) {
            const std::size_t u = queue.back();
            queue.pop_back();
            if (!check(u, queue)) return false;
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const std::size_t u = trail_.back();
            trail_.pop_back();
            inverse_[map_[u]] = kUnset;
            map_[u] = kUnset;
        }
    }

    bool complete() {
        std::size_t u = 0;
        while (u < a_.size() && map_[u] != kUnset) ++u;
        if (u == a_.size()) return true;
        for (std::size_t v = 0; v < b_.size(); ++v) {
            if (inverse_[v] != kUnset) continue;
            const std::size_t mark = trail_.size();
            std::vector<std::size_t> queue;
            if (assign(u, v, queue) && propagate(queue) && complete()) return true;
            undo(mark);
        }
        return false;
    }

    const SegmentConfig& a_;
    const SegmentConfig& b_;
    bool strong_;
    std::vector<std::size_t> map_;
    std::vector<std::size_t> inverse_;
    std::vector<std::size_t> trail_;
};

}  // namespace

bool weak_equivalent(const SegmentConfig& a, const SegmentConfig& b) { return EquivalenceSearch(a, b, false).run(); }

bool strong_equivalent(const SegmentConfig& a, const SegmentConfig& b) { return EquivalenceSearch(a, b, true).run(); }

// ---------------------------------------------------------------------------
// Containment

namespace {

class ContainmentSearch {
public:
    ContainmentSearch(const SegmentConfig& host, const SegmentConfig& pattern, ContainmentOptions options)
        : host_(host), pattern_(pattern), options_(options), image_(pattern.size(), kUnset), used_(host.size(), false) {
        order_ = bfs_order();
    }

    bool run() { return extend(0); }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Pattern segments in breadth-first order over incidences, so most
    // segments are placed next to an already-mapped one.
    std::vector<std::size_t> bfs_order() const {
        const std::size_t k = pattern_.size();
        std::vector<std::vector<std::size_t>> adjacent(k);
        for (std::size_t p = 0; p < k; ++p) {
            for (End e : {End::lo, End::hi}) {
                if (auto h = pattern_.host(p, e)) {
                    adjacent[p].push_back(*h);
                    adjacent[*h].push_back(p);
                }
            }
        }
        std::vector<std::size_t> order;
        std::vector<bool> seen(k, false);
        for (std::size_t root = 0; root < k; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                const std::size_t p = order[head++];
                for (std::size_t q : adjacent[p]) {
                    if (!seen[q]) {
                        seen[q] = true;
                        order.push_back(q);
                    }
                }
            }
        }
        return order;
    }

    bool incident(const SegmentConfig& c, std::size_t s, std::size_t t) const {
        for (End e : {End::lo, End::hi}) {
            if (c.host(s, e) == t || c.host(t, e) == s) return true;
        }
        return false;
    }

    // Mapped neighbors of pattern segment s appear along image_[s] in the
    // same order as along s.
    bool order_preserved(std::size_t s) const {
        if (image_[s] == kUnset) return true;
        bool have = false;
        int last = 0;
        for (const auto& c : pattern_.contacts(s)) {
            const std::size_t t = image_[c.neighbor];
            if (t == kUnset) continue;
            const int position = host_.segments()[t].axis;
            if (have && position <= last) return false;
            have = true;
            last = position;
        }
        return true;
    }

    bool consistent(std::size_t p, std::size_t t) const {
        if (pattern_.orientation(p) != host_.orientation(t)) return false;
        if (host_.contacts(t).size() < pattern_.contacts(p).size()) return false;
        for (End e : {End::lo, End::hi}) {
            const auto ph = pattern_.host(p, e);
            if (!ph) continue;
            const auto th = host_.host(t, e);
            if (!th || host_.is_frame(*th)) return false;
            if (image_[*ph] != kUnset && image_[*ph] != *th) return false;
        }
        for (const auto& c : pattern_.contacts(p)) {
            const std::size_t n = image_[c.neighbor];
            if (n != kUnset && host_.host(n, end_for(c.side)) != t) return false;
        }
        if (options_.induced) {
            for (std::size_t q = 0; q < pattern_.size(); ++q) {
                if (image_[q] == kUnset || incident(pattern_, p, q)) continue;
                if (incident(host_, t, image_[q])) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const std::size_t p = order_[depth];
        for (std::size_t t = 0; t < host_.size(); ++t) {
            if (used_[t] || !consistent(p, t)) continue;
            image_[p] = t;
            used_[t] = true;
            bool ok = order_preserved(p);
            for (End e : {End::lo, End::hi}) {
                if (auto h = pattern_.host(p, e)) ok = ok && order_preserved(*h);
            }
            if (ok && extend(depth + 1)) return true;
            image_[p] = kUnset;
            used_[t] = false;
        }
        return false;
    }

    const SegmentConfig& host_;
    const SegmentConfig& pattern_;
    ContainmentOptions options_;
    std::vector<std::size_t> image_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
};

}  // namespace

bool contains_pattern(const SegmentConfig& host, const GeomPattern& pattern, ContainmentOptions options) {
    if (pattern.size() > host.size()) return false;
    return ContainmentSearch(host, pattern.config(), options).run();
}

bool contains_pattern(const Rectangulation& rectangulation, const GeomPattern& pattern, ContainmentOptions options) {
    return contains_pattern(seg(rectangulation), pattern, options);
}

// ---------------------------------------------------------------------------
// Completion to a rectangulation

namespace {

constexpr int kSpread = 4;

// Re-embeds the pattern with coordinates spread out by kSpread and free
// endpoints nudged one unit outward. A grown endpoint then never lands on
// another segment's endpoint by accident.
std::vector<Segment> spread_embedding(const SegmentConfig& config, Frame& frame) {
    std::vector<int> xs, ys;
    for (const Segment& s : config.segments()) {
        auto& along = s.dir == Orientation::horizontal ? xs : ys;
        auto& across = s.dir == Orientation::horizontal ? ys : xs;
        across.push_back(s.axis);
        along.push_back(s.lo);
        along.push_back(s.hi);
    }
    auto ranks = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::map<int, int> m;
        for (std::size_t i = 0; i < v.size(); ++i) m[v[i]] = static_cast<int>(i + 1) * kSpread;
        return m;
    };
    const auto mx = ranks(xs);
    const auto my = ranks(ys);
    frame = Frame{0, static_cast<int>(mx.size() + 1) * kSpread, 0, static_cast<int>(my.size() + 1) * kSpread};
    std::vector<Segment> out;
    for (std::size_t i = 0; i < config.size(); ++i) {
        Segment s = config.segments()[i];
        const auto& along = s.dir == Orientation::horizontal ? mx : my;
        const auto& across = s.dir == Orientation::horizontal ? my : mx;
        s.axis = across.at(s.axis);
        s.lo = along.at(s.lo) - (config.host(i, End::lo) ? 0 : 1);
        s.hi = along.at(s.hi) + (config.host(i, End::hi) ? 0 : 1);
        out.push_back(s);
    }
    return out;
}

struct FreeEnd {
    std::size_t segment;
    End end;
};

// Grows one endpoint until it meets something; false if it would end on a
// collinear segment or on another segment's endpoint.
bool grow(std::vector<Segment>& segs, const Frame& frame, FreeEnd fe) {
    Segment& s = segs[fe.segment];
    const bool up = fe.end == End::hi;
    const bool horizontal = s.dir == Orientation::horizontal;
    int limit = horizontal ? (up ? frame.x_hi : frame.x_lo) : (up ? frame.y_hi : frame.y_lo);
    const int from = up ? s.hi : s.lo;
    bool blocked_badly = false;
    for (std::size_t j = 0; j < segs.size(); ++j) {
        if (j == fe.segment) continue;
        const Segment& t = segs[j];
        int hit;
        bool bad;
        if (t.dir == s.dir) {
            if (t.axis != s.axis) continue;
            hit = up ? t.lo : t.hi;
            if (up ? hit < from : hit > from) continue;
            bad = true;
        } else {
            if (t.lo > s.axis || t.hi < s.axis) continue;
            hit = t.axis;
            if (up ? hit <= from : hit >= from) continue;
            bad = t.lo == s.axis || t.hi == s.axis;
        }
        if (up ? hit < limit : hit > limit) {
            limit = hit;
            blocked_badly = bad;
        } else if (hit == limit) {
            blocked_badly = blocked_badly || bad;
        }
    }
    if (blocked_badly) return false;
    (up ? s.hi : s.lo) = limit;
    return true;
}

std::optional<Rectangulation> rectangulate(const std::vector<Segment>& segs, const Frame& frame) {
    std::vector<int> xs{frame.x_lo, frame.x_hi}, ys{frame.y_lo, frame.y_hi};
    for (const Segment& s : segs) {
        auto& along = s.dir == Orientation::horizontal ? xs : ys;
        auto& across = s.dir == Orientation::horizontal ? ys : xs;
        across.push_back(s.axis);
        along.push_back(s.lo);
        along.push_back(s.hi);
    }
    auto uniq = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    auto index_of = [](const std::vector<int>& v, int value) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), value) - v.begin());
    };
    const int w = static_cast<int>(xs.size()) - 1;
    const int h = static_cast<int>(ys.size()) - 1;
    // wall_right[i][j]: the edge between cell (i, j) and (i + 1, j) is a segment.
    std::vector<std::vector<bool>> wall_right(static_cast<std::size_t>(w), std::vector<bool>(static_cast<std::size_t>(h)));
    std::vector<std::vector<bool>> wall_up(static_cast<std::size_t>(w), std::vector<bool>(static_cast<std::size_t>(h)));
    for (const Segment& s : segs) {
        if (s.dir == Orientation::vertical) {
            const int i = index_of(xs, s.axis) - 1;
            for (int j = index_of(ys, s.lo); j < index_of(ys, s.hi); ++j) {
                wall_right[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            }
        } else {
            const int j = index_of(ys, s.axis) - 1;
            for (int i = index_of(xs, s.lo); i < index_of(xs, s.hi); ++i) {
                wall_up[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            }
        }
    }
    std::vector<int> parent(static_cast<std::size_t>(w * h));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
        }
        return a;
    };
    auto cell = [&](int i, int j) { return j * w + i; };
    for (int i = 0; i < w; ++i) {
        for (int j = 0; j < h; ++j) {
            if (i + 1 < w && !wall_right[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                parent[static_cast<std::size_t>(find(cell(i, j)))] = find(cell(i + 1, j));
            }
            if (j + 1 < h && !wall_up[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                parent[static_cast<std::size_t>(find(cell(i, j)))] = find(cell(i, j + 1));
            }
        }
    }
    std::map<int, Rect> boxes;
    std::map<int, int> cells;
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            const int root = find(cell(i, j));
            auto [it, fresh] = boxes.try_emplace(root, Rect{0, i, i + 1, j, j + 1});
            if (!fresh) {
                it->second.x_lo = std::min(it->second.x_lo, i);
                it->second.x_hi = std::max(it->second.x_hi, i + 1);
                it->second.y_lo = std::min(it->second.y_lo, j);
                it->second.y_hi = std::max(it->second.y_hi, j + 1);
            }
            ++cells[root];
        }
    }
    std::vector<Rect> rects;
    for (auto& [root, r] : boxes) {
        if ((r.x_hi - r.x_lo) * (r.y_hi - r.y_lo) != cells[root]) return std::nullopt;
        rects.push_back(r);
    }
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
        return std::tie(a.y_lo, a.x_lo) < std::tie(b.y_lo, b.x_lo);
    });
    for (std::size_t k = 0; k < rects.size(); ++k) rects[k].id = static_cast<int>(k) + 1;
    if (has_cross_junction(rects)) return std::nullopt;
    return Rectangulation(std::move(rects));
}

std::optional<Rectangulation> try_completion(const std::vector<Segment>& base, const Frame& frame,
                                             const std::vector<FreeEnd>& order, const GeomPattern& pattern) {
    std::vector<Segment> segs = base;
    for (const FreeEnd& fe : order) {
        if (!grow(segs, frame, fe)) return std::nullopt;
    }
    auto r = rectangulate(segs, frame);
    if (!r || r->size() != pattern.size() + 1) return std::nullopt;
    if (seg(*r).size() != pattern.size() || !contains_pattern(*r, pattern)) return std::nullopt;
    return r;
}

constexpr int kCompletionOrderBudget = 5040;

}  // namespace

Rectangulation complete_pattern(const GeomPattern& pattern) {
    if (pattern.size() == 0) return Rectangulation({Rect{1, 0, 1, 0, 1}});
    Frame frame;
    const auto base = spread_embedding(pattern.config(), frame);
    std::vector<FreeEnd> order;
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (End e : {End::lo, End::hi}) {
            if (!pattern.config().host(i, e)) order.push_back(FreeEnd{i, e});
        }
    }
    auto by_id = [&](const FreeEnd& a, const FreeEnd& b) {
        return std::pair(base[a.segment].id, a.end) < std::pair(base[b.segment].id, b.end);
    };
    std::sort(order.begin(), order.end(), by_id);
    int budget = kCompletionOrderBudget;
    do {
        if (auto r = try_completion(base, frame, order, pattern)) return *r;
    } while (--budget > 0 && std::next_permutation(order.begin(), order.end(), by_id));
    throw InvariantError("complete_pattern: no extension order yields a rectangulation containing the pattern");
}

// ---------------------------------------------------------------------------
// Avoidance counting over pavements

BigInt count_avoiding_rect(int n, const GeomPattern& pattern, const AvoidCountOptions& options) {
    if (n < 1) throw DomainError("count_avoiding_rect: n must be at least 1");
    if (n > options.cap) {
        throw CapExceeded("count_avoiding_rect: n = " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(options.cap));
    }
    const auto prefixes = enumeration_prefixes(n, WalkClass::lhqe, 3);
    std::vector<std::uint64_t> counts(prefixes.size(), 0);
    parallel_for(prefixes.size(), options.threads, [&](std::size_t i) {
        std::uint64_t local = 0;
        for_each_walk_extending(prefixes[i], n, WalkClass::lhqe, [&](const Walk& e) {
            if (!contains_pattern(pave(e), pattern, options.containment)) ++local;
        });
        counts[i] = local;
    });
    BigInt total = 0;
    for (auto c : counts) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// JSON and stock patterns

nlohmann::json to_json(const GeomPattern& pattern) {
    nlohmann::json segs = nlohmann::json::array();
    for (const Segment& s : pattern.config().segments()) {
        segs.push_back({{"id", s.id},
                        {"dir", s.dir == Orientation::horizontal ? "h" : "v"},
                        {"axis", s.axis},
                        {"span", {s.lo, s.hi}}});
    }
    return {{"segments", segs}};
}

GeomPattern pattern_from_json(const nlohmann::json& doc) {
    try {
        std::vector<Segment> segs;
        for (const auto& item : doc.at("segments")) {
            const std::string dir = item.at("dir").get<std::string>();
            if (dir != "h" && dir != "v") throw ParseError("segment dir must be \"h\" or \"v\"");
            const auto& span = item.at("span");
            if (span.size() != 2) throw ParseError("segment span must be [lo, hi]");
            segs.push_back(Segment{item.at("id").get<int>(), dir == "h" ? Orientation::horizontal : Orientation::vertical,
                                   item.at("axis").get<int>(), span[0].get<int>(), span[1].get<int>()});
        }
        return GeomPattern(std::move(segs));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pattern JSON: ") + e.what());
    }
}

GeomPattern horizontal_bar_pattern() { return GeomPattern({Segment{1, Orientation::horizontal, 0, 0, 1}}); }

GeomPattern t_shape_pattern() {
    return GeomPattern({Segment{1, Orientation::horizontal, 1, 0, 2}, Segment{2, Orientation::vertical, 1, 0, 1}});
}

}  // namespace rectwalk
