#ifndef RECTWALK_WALK_HPP
#define RECTWALK_WALK_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rectwalk {

/// Step colors of a history quadrant walk, declared in enumeration order.
enum class Color : std::uint8_t { b = 0, r = 1, g = 2, w = 3 };

inline constexpr std::array<Color, 4> kColors{Color::b, Color::r, Color::g, Color::w};

/// Height increment a color imposes on the next vertex.
constexpr int delta(Color c) noexcept {
    switch (c) {
        case Color::b: return 1;
        case Color::w: return -1;
        default: return 0;
    }
}

char to_char(Color c) noexcept;
std::optional<Color> color_from_char(char ch) noexcept;

/// One walk step (h, x, c): staircase height, placement slot, color.
struct Vertex {
    int h = 0;
    int x = 0;
    Color c = Color::b;

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex translate(const Vertex& v, int dh, int dx) noexcept {
    return Vertex{v.h + dh, v.x + dx, v.c};
}

/// A finite vertex sequence. Class membership (history, leftmost,
/// admissible, excursion) is never stored; use the predicates below.
class Walk {
public:
    using const_iterator = std::vector<Vertex>::const_iterator;

    Walk() = default;
    explicit Walk(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
    Walk(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    const Vertex& operator[](std::size_t i) const { return vertices_[i]; }
    const Vertex& front() const { return vertices_.front(); }
    const Vertex& back() const { return vertices_.back(); }
    const_iterator begin() const noexcept { return vertices_.begin(); }
    const_iterator end() const noexcept { return vertices_.end(); }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }

    void push_back(const Vertex& v) { vertices_.push_back(v); }
    void pop_back() { vertices_.pop_back(); }

    /// Contiguous window [first, first + count).
    Walk slice(std::size_t first, std::size_t count) const;

    friend bool operator==(const Walk&, const Walk&) = default;
    friend auto operator<=>(const Walk&, const Walk&) = default;

private:
    std::vector<Vertex> vertices_;
};

enum class WalkClass { hqw, lhqw, lhqwadm, lhqe };

std::string_view to_string(WalkClass cls) noexcept;
std::optional<WalkClass> walk_class_from_string(std::string_view name) noexcept;

bool is_history_walk(const Walk& walk) noexcept;

/// The leftmost constraint on one consecutive pair.
constexpr bool leftmost_step(const Vertex& prev, const Vertex& next) noexcept {
    const bool tight = (prev.c == Color::b || prev.c == Color::r) &&
                       (next.c == Color::b || next.c == Color::g);
    return tight ? next.x >= prev.x : next.x >= prev.x - 1;
}

/// Smallest slot the leftmost rule allows after `prev` for a step of color `next`.
constexpr int leftmost_lower_bound(const Vertex& prev, Color next) noexcept {
    const bool tight = (prev.c == Color::b || prev.c == Color::r) &&
                       (next == Color::b || next == Color::g);
    return tight ? prev.x : prev.x - 1;
}

/// Throws NotHistoryWalk when `walk` is not a history walk.
bool is_leftmost(const Walk& walk);
bool is_admissible(const Walk& walk) noexcept;
bool is_excursion(const Walk& walk) noexcept;
bool in_class(const Walk& walk, WalkClass cls) noexcept;

/// First vertices allowed in an admissible walk: (0,0,b), (0,0,r), (0,0,g).
bool is_admissible_start(const Vertex& v) noexcept;
/// Last vertices allowed in an admissible walk: (0,0,r), (0,0,g), (1,0,w), (1,1,w).
bool is_admissible_end(const Vertex& v) noexcept;

/// Drops the closing (0,0,w) of an excursion.
Walk star(const Walk& excursion);
/// Appends (0,0,w) to an admissible walk.
Walk bar(const Walk& admissible);
Walk translate(const Walk& walk, int dh, int dx);

using WalkVisitor = std::function<void(const Walk&)>;

/// Visits every walk of `cls` with length n once, in lexicographic order
/// (vertices compared by h, then x, then color with b < r < g < w).
///
/// The lhqe and lhqwadm classes are finite as defined. The hqw and lhqw
/// classes are enumerated rooted at the origin (h_1 = x_1 = 0).
void for_each_walk(int n, WalkClass cls, const WalkVisitor& visit);

/// Valid prefixes of length min(k, n), in enumeration order. Running
/// for_each_walk_extending() over each of them, in this order,
/// reproduces for_each_walk() exactly.
std::vector<Walk> enumeration_prefixes(int n, WalkClass cls, int k);
void for_each_walk_extending(const Walk& prefix, int n, WalkClass cls, const WalkVisitor& visit);

std::vector<Walk> enumerate_walks(int n, WalkClass cls);
std::uint64_t count_walks(int n, WalkClass cls, int threads = 1);

/// Text grammar: walk := "" | vertex (";" vertex)*, vertex := uint "," uint "," color.
Walk parse_walk(std::string_view text);
std::string format_walk(const Walk& walk);
std::ostream& operator<<(std::ostream& os, const Walk& walk);

}  // namespace rectwalk

#endif
