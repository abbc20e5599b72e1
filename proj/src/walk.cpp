#include "rectwalk/walk.hpp"

#include "rectwalk/error.hpp"
#include "rectwalk/parallel.hpp"

#include <atomic>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

namespace rectwalk {

char to_char(Color c) noexcept {
    switch (c) {
        case Color::b: return 'b';
        case Color::r: return 'r';
        case Color::g: return 'g';
        case Color::w: return 'w';
    }
    return '?';
}

std::optional<Color> color_from_char(char ch) noexcept {
    switch (ch) {
        case 'b': return Color::b;
        case 'r': return Color::r;
        case 'g': return Color::g;
        case 'w': return Color::w;
        default: return std::nullopt;
    }
}

Walk Walk::slice(std::size_t first, std::size_t count) const {
    if (first > size() || count > size() - first) {
        throw DomainError("Walk::slice: window out of range");
    }
    return Walk(std::vector<Vertex>(vertices_.begin() + static_cast<std::ptrdiff_t>(first),
                                    vertices_.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

std::string_view to_string(WalkClass cls) noexcept {
    switch (cls) {
        case WalkClass::hqw: return "hqw";
        case WalkClass::lhqw: return "lhqw";
        case WalkClass::lhqwadm: return "lhqwadm";
        case WalkClass::lhqe: return "lhqe";
    }
    return "?";
}

std::optional<WalkClass> walk_class_from_string(std::string_view name) noexcept {
    if (name == "hqw") return WalkClass::hqw;
    if (name == "lhqw") return WalkClass::lhqw;
    if (name == "lhqwadm") return WalkClass::lhqwadm;
    if (name == "lhqe") return WalkClass::lhqe;
    return std::nullopt;
}

bool is_history_walk(const Walk& walk) noexcept {
    for (std::size_t m = 0; m < walk.size(); ++m) {
        const Vertex& v = walk[m];
        if (v.x < 0 || v.h < v.x) return false;
        if (m + 1 < walk.size() && walk[m + 1].h != v.h + delta(v.c)) return false;
    }
    return true;
}

bool is_leftmost(const Walk& walk) {
    if (!is_history_walk(walk)) {
        throw NotHistoryWalk("is_leftmost: '" + format_walk(walk) + "' is not a history walk");
    }
    for (std::size_t m = 0; m + 1 < walk.size(); ++m) {
        if (!leftmost_step(walk[m], walk[m + 1])) return false;
    }
    return true;
}

namespace {

bool leftmost_history(const Walk& walk) noexcept {
    if (!is_history_walk(walk)) return false;
    for (std::size_t m = 0; m + 1 < walk.size(); ++m) {
        if (!leftmost_step(walk[m], walk[m + 1])) return false;
    }
    return true;
}

constexpr Vertex kClosing{0, 0, Color::w};

}  // namespace

bool is_admissible_start(const Vertex& v) noexcept {
    return v.h == 0 && v.x == 0 && v.c != Color::w;
}

bool is_admissible_end(const Vertex& v) noexcept {
    if (v.h == 0 && v.x == 0) return v.c == Color::r || v.c == Color::g;
    return v.h == 1 && (v.x == 0 || v.x == 1) && v.c == Color::w;
}

bool is_admissible(const Walk& walk) noexcept {
    if (!leftmost_history(walk)) return false;
    return walk.empty() || (is_admissible_start(walk.front()) && is_admissible_end(walk.back()));
}

bool is_excursion(const Walk& walk) noexcept {
    if (walk.empty() || !leftmost_history(walk)) return false;
    return walk.back() == kClosing && walk.front().h == 0 && walk.front().x == 0;
}

bool in_class(const Walk& walk, WalkClass cls) noexcept {
    switch (cls) {
        case WalkClass::hqw: return is_history_walk(walk);
        case WalkClass::lhqw: return leftmost_history(walk);
        case WalkClass::lhqwadm: return is_admissible(walk);
        case WalkClass::lhqe: return is_excursion(walk);
    }
    return false;
}

Walk star(const Walk& excursion) {
    if (!is_excursion(excursion)) {
        throw DomainError("star: '" + format_walk(excursion) + "' is not an excursion");
    }
    return excursion.slice(0, excursion.size() - 1);
}

Walk bar(const Walk& admissible) {
    if (!is_admissible(admissible)) {
        throw DomainError("bar: '" + format_walk(admissible) + "' is not admissible");
    }
    Walk out = admissible;
    out.push_back(kClosing);
    return out;
}

Walk translate(const Walk& walk, int dh, int dx) {
    std::vector<Vertex> out;
    out.reserve(walk.size());
    for (const Vertex& v : walk) out.push_back(translate(v, dh, dx));
    return Walk(std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

bool needs_leftmost(WalkClass cls) { return cls != WalkClass::hqw; }

// Whether v may sit at 0-based index m of a length-n walk of class cls,
// including end conditions and the height pruning bound.
bool vertex_allowed(std::size_t m, const Vertex& v, int n, WalkClass cls) {
    const int remaining = n - 1 - static_cast<int>(m);
    if (m == 0 && (v.h != 0 || v.x != 0)) return false;
    if (remaining > 0 && v.h + delta(v.c) < 0) return false;
    switch (cls) {
        case WalkClass::hqw:
        case WalkClass::lhqw:
            return true;
        case WalkClass::lhqwadm:
            if (m == 0 && !is_admissible_start(v)) return false;
            if (remaining == 0) return is_admissible_end(v);
            return v.h <= remaining + 1;
        case WalkClass::lhqe:
            if (remaining == 0) return v == kClosing;
            return v.h <= remaining;
    }
    return false;
}

class Enumerator {
public:
    Enumerator(int n, WalkClass cls, std::size_t stop_depth, const WalkVisitor& visit)
        : n_(n), cls_(cls), stop_(stop_depth), visit_(visit) {}

    void run(Walk& buf) {
        if (buf.size() == stop_) {
            visit_(buf);
            return;
        }
        const std::size_t m = buf.size();
        if (m == 0) {
            for (Color c : kColors) {
                const Vertex v{0, 0, c};
                if (!vertex_allowed(0, v, n_, cls_)) continue;
                buf.push_back(v);
                run(buf);
                buf.pop_back();
            }
            return;
        }
        const Vertex prev = buf.back();
        const int h = prev.h + delta(prev.c);
        for (int x = 0; x <= h; ++x) {
            for (Color c : kColors) {
                if (needs_leftmost(cls_) && x < leftmost_lower_bound(prev, c)) continue;
                const Vertex v{h, x, c};
                if (!vertex_allowed(m, v, n_, cls_)) continue;
                buf.push_back(v);
                run(buf);
                buf.pop_back();
            }
        }
    }

private:
    int n_;
    WalkClass cls_;
    std::size_t stop_;
    const WalkVisitor& visit_;
};

void check_length(int n) {
    if (n < 0) throw DomainError("walk length must be nonnegative");
}

}  // namespace

void for_each_walk(int n, WalkClass cls, const WalkVisitor& visit) {
    for_each_walk_extending(Walk{}, n, cls, visit);
}

void for_each_walk_extending(const Walk& prefix, int n, WalkClass cls, const WalkVisitor& visit) {
    check_length(n);
    if (n == 0) {
        if (prefix.empty() && cls != WalkClass::lhqe) visit(Walk{});
        return;
    }
    if (prefix.size() > static_cast<std::size_t>(n)) return;
    Walk buf = prefix;
    Enumerator(n, cls, static_cast<std::size_t>(n), visit).run(buf);
}

std::vector<Walk> enumeration_prefixes(int n, WalkClass cls, int k) {
    check_length(n);
    std::vector<Walk> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    const auto depth = static_cast<std::size_t>(std::clamp(k, 0, n));
    Walk buf;
    const WalkVisitor collect = [&](const Walk& w) { out.push_back(w); };
    Enumerator(n, cls, depth, collect).run(buf);
    return out;
}

std::vector<Walk> enumerate_walks(int n, WalkClass cls) {
    std::vector<Walk> out;
    for_each_walk(n, cls, [&](const Walk& w) { out.push_back(w); });
    return out;
}

std::uint64_t count_walks(int n, WalkClass cls, int threads) {
    const auto prefixes = enumeration_prefixes(n, cls, 3);
    std::vector<std::uint64_t> counts(prefixes.size(), 0);
    parallel_for(prefixes.size(), threads, [&](std::size_t i) {
        std::uint64_t local = 0;
        for_each_walk_extending(prefixes[i], n, cls, [&](const Walk&) { ++local; });
        counts[i] = local;
    });
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class WalkParser {
public:
    explicit WalkParser(std::string_view text) : text_(text) {}

    Walk parse() {
        Walk walk;
        if (text_.empty()) return walk;
        for (;;) {
            const int h = number();
            expect(',');
            const int x = number();
            expect(',');
            walk.push_back(Vertex{h, x, color()});
            if (pos_ == text_.size()) break;
            expect(';');
        }
        return walk;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("walk text, position " + std::to_string(pos_) + ": " + what, pos_);
    }

    void expect(char ch) {
        if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "', found end of input");
        if (text_[pos_] != ch) fail(std::string("expected '") + ch + "', found '" + text_[pos_] + "'");
        ++pos_;
    }

    int number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ == start) {
            pos_ = start;
            fail(pos_ < text_.size() ? std::string("expected digit, found '") + text_[pos_] + "'"
                                     : std::string("expected digit, found end of input"));
        }
        int value = 0;
        const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec == std::errc::result_out_of_range) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }

    Color color() {
        if (pos_ >= text_.size()) fail("expected color, found end of input");
        const auto c = color_from_char(text_[pos_]);
        if (!c) fail(std::string("unknown color '") + text_[pos_] + "'");
        ++pos_;
        return *c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Walk parse_walk(std::string_view text) { return WalkParser(text).parse(); }

std::string format_walk(const Walk& walk) {
    std::string out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(walk[i].h);
        out += ',';
        out += std::to_string(walk[i].x);
        out += ',';
        out += to_char(walk[i].c);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Walk& walk) { return os << format_walk(walk); }

}  // namespace rectwalk
