#include "rectwalk/paving.hpp"

#include "rectwalk/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rectwalk {

// ---------------------------------------------------------------------------
// Rectangulation

bool has_cross_junction(const std::vector<Rect>& rects) {
    std::map<std::pair<int, int>, int> corners;
    for (const Rect& r : rects) {
        ++corners[{r.x_lo, r.y_lo}];
        ++corners[{r.x_lo, r.y_hi}];
        ++corners[{r.x_hi, r.y_lo}];
        ++corners[{r.x_hi, r.y_hi}];
    }
    return std::any_of(corners.begin(), corners.end(), [](const auto& kv) { return kv.second >= 4; });
}

Rectangulation::Rectangulation(std::vector<Rect> rects) : rects_(std::move(rects)) {
    if (rects_.empty()) throw DomainError("rectangulation needs at least one rectangle");
    int x_min = rects_.front().x_lo, y_min = rects_.front().y_lo;
    int x_max = rects_.front().x_hi, y_max = rects_.front().y_hi;
    long long area = 0;
    for (const Rect& r : rects_) {
        if (r.x_lo >= r.x_hi || r.y_lo >= r.y_hi) {
            throw DomainError("rectangle " + std::to_string(r.id) + " is degenerate");
        }
        x_min = std::min(x_min, r.x_lo);
        y_min = std::min(y_min, r.y_lo);
        x_max = std::max(x_max, r.x_hi);
        y_max = std::max(y_max, r.y_hi);
        area += static_cast<long long>(r.x_hi - r.x_lo) * (r.y_hi - r.y_lo);
    }
    if (x_min != 0 || y_min != 0) throw DomainError("rectangulation must start at the origin");
    for (std::size_t i = 0; i < rects_.size(); ++i) {
        for (std::size_t j = i + 1; j < rects_.size(); ++j) {
            const Rect& a = rects_[i];
            const Rect& b = rects_[j];
            if (a.id == b.id) throw DomainError("duplicate rectangle id " + std::to_string(a.id));
            const bool overlap = a.x_lo < b.x_hi && b.x_lo < a.x_hi && a.y_lo < b.y_hi && b.y_lo < a.y_hi;
            if (overlap) {
                throw DomainError("rectangles " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                                  " overlap");
            }
        }
    }
    if (area != static_cast<long long>(x_max) * y_max) {
        throw DomainError("rectangles do not cover the bounding box");
    }
    if (has_cross_junction(rects_)) throw DomainError("rectangulation has a cross junction");
    width_ = x_max;
    height_ = y_max;
}

namespace {

std::map<int, int> rank_map(std::vector<int> values, int scale) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::map<int, int> out;
    for (std::size_t i = 0; i < values.size(); ++i) out[values[i]] = static_cast<int>(i) * scale;
    return out;
}

std::vector<Rect> compact_rects(const std::vector<Rect>& rects, int scale, int width, int height) {
    std::vector<int> xs{0, width}, ys{0, height};
    for (const Rect& r : rects) {
        xs.push_back(r.x_lo);
        xs.push_back(r.x_hi);
        ys.push_back(r.y_lo);
        ys.push_back(r.y_hi);
    }
    const auto mx = rank_map(std::move(xs), scale);
    const auto my = rank_map(std::move(ys), scale);
    std::vector<Rect> out;
    out.reserve(rects.size());
    for (const Rect& r : rects) {
        out.push_back(Rect{r.id, mx.at(r.x_lo), mx.at(r.x_hi), my.at(r.y_lo), my.at(r.y_hi)});
    }
    return out;
}

}  // namespace

Rectangulation Rectangulation::compacted() const {
    return Rectangulation(compact_rects(rects_, 1, width_, height_));
}

// ---------------------------------------------------------------------------
// Staircase

namespace {

// One concave corner of the staircase. Its vertical frontier edge runs from
// (x, y) up to (x, top); its horizontal edge from (x, y) right to (next, y).
struct Corner {
    int x;
    int y;
    int top;
    int next;
};

// Corners listed from the top-left to the bottom-right.
std::vector<Corner> staircase(const std::vector<Rect>& placed, int width, int height) {
    std::vector<int> xs{0, width};
    for (const Rect& r : placed) {
        xs.push_back(r.x_lo);
        xs.push_back(r.x_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Corner> corners;
    int prev_top = height;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        int top = 0;
        for (const Rect& r : placed) {
            if (r.x_lo <= xs[i] && r.x_hi >= xs[i + 1]) top = std::max(top, r.y_hi);
        }
        if (top < prev_top) {
            if (!corners.empty()) corners.back().next = xs[i];
            corners.push_back(Corner{xs[i], top, prev_top, width});
        }
        prev_top = top;
    }
    return corners;
}

// Largest T-junction coordinate strictly inside the corner's horizontal
// (resp. vertical) frontier edge, or the corner coordinate if there is none.
int last_junction_on_horizontal(const std::vector<Rect>& placed, const Corner& c) {
    int last = c.x;
    for (const Rect& r : placed) {
        if (r.y_hi != c.y) continue;
        for (int x : {r.x_lo, r.x_hi}) {
            if (x > c.x && x < c.next) last = std::max(last, x);
        }
    }
    return last;
}

int last_junction_on_vertical(const std::vector<Rect>& placed, const Corner& c) {
    int last = c.y;
    for (const Rect& r : placed) {
        if (r.x_hi != c.x) continue;
        for (int y : {r.y_lo, r.y_hi}) {
            if (y > c.y && y < c.top) last = std::max(last, y);
        }
    }
    return last;
}

constexpr int kGrid = 2;

// Number of unit steps after ranking the coordinates {0, extent} plus the
// given rect sides.
int distinct_count(const std::vector<Rect>& rects, int extent, int Rect::*lo, int Rect::*hi) {
    std::vector<int> v{0, extent};
    for (const Rect& r : rects) {
        v.push_back(r.*lo);
        v.push_back(r.*hi);
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return static_cast<int>(v.size()) - 1;
}

}  // namespace

PaveTrace pave_traced(const Walk& excursion) {
    if (!is_excursion(excursion)) {
        throw DomainError("pave: '" + format_walk(excursion) + "' is not an excursion");
    }
    // Working coordinates live on even integers; a fresh cut takes the odd
    // value just below an edge's far end and everything is re-ranked after
    // each placement.
    int width = kGrid;
    int height = kGrid;
    std::vector<Rect> placed;
    PaveTrace trace;
    for (std::size_t m = 0; m < excursion.size(); ++m) {
        const Vertex& v = excursion[m];
        const auto corners = staircase(placed, width, height);
        trace.slots_before.push_back(static_cast<int>(corners.size()));
        if (static_cast<int>(corners.size()) != v.h + 1) {
            throw InvariantError("pave: staircase has " + std::to_string(corners.size()) +
                                 " slots at step " + std::to_string(m + 1) + ", walk height is " +
                                 std::to_string(v.h));
        }
        const Corner& c = corners[corners.size() - 1 - static_cast<std::size_t>(v.x)];
        const bool full_vertical = v.c == Color::w || v.c == Color::r;
        const bool full_horizontal = v.c == Color::w || v.c == Color::g;
        const int x_hi = full_horizontal ? c.next : c.next - 1;
        const int y_hi = full_vertical ? c.top : c.top - 1;
        if (!full_horizontal && x_hi <= last_junction_on_horizontal(placed, c)) {
            throw InvariantError("pave: no room on the horizontal edge");
        }
        if (!full_vertical && y_hi <= last_junction_on_vertical(placed, c)) {
            throw InvariantError("pave: no room on the vertical edge");
        }
        placed.push_back(Rect{static_cast<int>(m) + 1, c.x, x_hi, c.y, y_hi});

        const int next_width = kGrid * distinct_count(placed, width, &Rect::x_lo, &Rect::x_hi);
        const int next_height = kGrid * distinct_count(placed, height, &Rect::y_lo, &Rect::y_hi);
        placed = compact_rects(placed, kGrid, width, height);
        width = next_width;
        height = next_height;
    }
    if (!staircase(placed, width, height).empty()) {
        throw InvariantError("pave: region not filled after the last step");
    }
    trace.result = Rectangulation(std::move(placed)).compacted();
    return trace;
}

Rectangulation pave(const Walk& excursion) { return pave_traced(excursion).result; }

// ---------------------------------------------------------------------------
// Procedure map

namespace {

class ProcedureSearch {
public:
    explicit ProcedureSearch(const Rectangulation& r)
        : rects_(r.rects()), width_(r.width()), height_(r.height()), used_(rects_.size(), false) {}

    std::vector<Walk> run() {
        Walk walk;
        std::vector<Rect> placed;
        search(walk, placed);
        return found_;
    }

private:
    void search(Walk& walk, std::vector<Rect>& placed) {
        if (found_.size() >= 2) return;
        if (placed.size() == rects_.size()) {
            found_.push_back(walk);
            return;
        }
        const auto corners = staircase(placed, width_, height_);
        const int h = static_cast<int>(corners.size()) - 1;
        for (int slot = 0; slot <= h; ++slot) {
            const Corner& c = corners[corners.size() - 1 - static_cast<std::size_t>(slot)];
            for (std::size_t i = 0; i < rects_.size(); ++i) {
                if (used_[i]) continue;
                const Rect& r = rects_[i];
                if (r.x_lo != c.x || r.y_lo != c.y || r.x_hi > c.next || r.y_hi > c.top) continue;
                const bool full_vertical = r.y_hi == c.top;
                const bool full_horizontal = r.x_hi == c.next;
                if (!full_horizontal && r.x_hi <= last_junction_on_horizontal(placed, c)) continue;
                if (!full_vertical && r.y_hi <= last_junction_on_vertical(placed, c)) continue;
                const Color color = full_vertical ? (full_horizontal ? Color::w : Color::r)
                                                  : (full_horizontal ? Color::g : Color::b);
                const Vertex v{h, slot, color};
                if (!walk.empty() && !leftmost_step(walk.back(), v)) continue;
                used_[i] = true;
                walk.push_back(v);
                placed.push_back(r);
                search(walk, placed);
                placed.pop_back();
                walk.pop_back();
                used_[i] = false;
            }
        }
    }

    const std::vector<Rect>& rects_;
    int width_;
    int height_;
    std::vector<bool> used_;
    std::vector<Walk> found_;
};

}  // namespace

Walk procedure(const Rectangulation& rectangulation) {
    const auto found = ProcedureSearch(rectangulation).run();
    if (found.empty()) throw DomainError("procedure: no leftmost placement order exists");
    if (found.size() > 1) {
        throw InvariantError("procedure: placement order is not unique ('" + format_walk(found[0]) +
                             "' and '" + format_walk(found[1]) + "')");
    }
    return found.front();
}

// ---------------------------------------------------------------------------
// Output

std::string render_ascii(const Rectangulation& rectangulation) {
    constexpr int sx = 4;
    constexpr int sy = 2;
    const int cols = rectangulation.width() * sx + 1;
    const int rows = rectangulation.height() * sy + 1;
    std::vector<std::string> canvas(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), ' '));
    auto put = [&](int row, int col, char ch) {
        char& cell = canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (cell == '+') return;
        if ((cell == '-' && ch == '|') || (cell == '|' && ch == '-')) ch = '+';
        cell = ch;
    };
    const int top = rectangulation.height();
    for (const Rect& r : rectangulation.rects()) {
        const int c0 = r.x_lo * sx, c1 = r.x_hi * sx;
        const int r0 = (top - r.y_hi) * sy, r1 = (top - r.y_lo) * sy;
        for (int c = c0 + 1; c < c1; ++c) {
            put(r0, c, '-');
            put(r1, c, '-');
        }
        for (int row = r0 + 1; row < r1; ++row) {
            put(row, c0, '|');
            put(row, c1, '|');
        }
        for (int row : {r0, r1}) {
            for (int c : {c0, c1}) canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] = '+';
        }
    }
    for (const Rect& r : rectangulation.rects()) {
        const std::string label = std::to_string(r.id);
        const int inner = (r.x_hi - r.x_lo) * sx - 1;
        if (static_cast<int>(label.size()) > inner) continue;
        const int row = ((top - r.y_hi) * sy + (top - r.y_lo) * sy) / 2;
        const int col = r.x_lo * sx + 1 + (inner - static_cast<int>(label.size())) / 2;
        canvas[static_cast<std::size_t>(row)].replace(static_cast<std::size_t>(col), label.size(), label);
    }
    std::string out;
    for (const auto& line : canvas) {
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

std::string half_units(int twice) {
    std::string s = std::to_string(twice / 2);
    if (twice % 2) s += ".5";
    return s;
}

}  // namespace

std::string render_svg(const Rectangulation& rectangulation) {
    constexpr int px = 40;
    const int w = rectangulation.width();
    const int h = rectangulation.height();
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w * px << "\" height=\""
       << h * px << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (const Rect& r : rectangulation.rects()) {
        os << "  <rect x=\"" << r.x_lo << "\" y=\"" << h - r.y_hi << "\" width=\"" << r.x_hi - r.x_lo
           << "\" height=\"" << r.y_hi - r.y_lo << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.05\"/>\n";
    }
    for (const Rect& r : rectangulation.rects()) {
        os << "  <text x=\"" << half_units(r.x_lo + r.x_hi) << "\" y=\"" << half_units(2 * h - r.y_lo - r.y_hi)
           << "\" font-size=\"0.4\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << r.id << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

nlohmann::json to_json(const Rectangulation& rectangulation) {
    nlohmann::json rects = nlohmann::json::array();
    for (const Rect& r : rectangulation.rects()) {
        rects.push_back({{"id", r.id}, {"x", {r.x_lo, r.x_hi}}, {"y", {r.y_lo, r.y_hi}}});
    }
    return {{"bounds", {rectangulation.width(), rectangulation.height()}}, {"rects", rects}};
}

Rectangulation rectangulation_from_json(const nlohmann::json& doc) {
    try {
        std::vector<Rect> rects;
        for (const auto& item : doc.at("rects")) {
            const auto& xs = item.at("x");
            const auto& ys = item.at("y");
            if (xs.size() != 2 || ys.size() != 2) throw ParseError("rect coordinates must be [lo, hi] pairs");
            rects.push_back(Rect{item.at("id").get<int>(), xs[0].get<int>(), xs[1].get<int>(), ys[0].get<int>(),
                                 ys[1].get<int>()});
        }
        Rectangulation out(std::move(rects));
        const auto& bounds = doc.at("bounds");
        if (bounds.size() != 2 || bounds[0].get<int>() != out.width() || bounds[1].get<int>() != out.height()) {
            throw ParseError("bounds do not match the rectangles");
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("rectangulation JSON: ") + e.what());
    }
}

}  // namespace rectwalk
