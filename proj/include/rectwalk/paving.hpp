#ifndef RECTWALK_PAVING_HPP
#define RECTWALK_PAVING_HPP

#include "rectwalk/walk.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rectwalk {

/// Axis-aligned rectangle on the integer grid; id is the 1-based placement index.
struct Rect {
    int id = 0;
    int x_lo = 0;
    int x_hi = 0;
    int y_lo = 0;
    int y_hi = 0;

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// A tiling of the bounding box [0, width] x [0, height] by rectangles with
/// no point where four of them meet. The constructor validates both.
class Rectangulation {
public:
    Rectangulation() = default;
    explicit Rectangulation(std::vector<Rect> rects);

    const std::vector<Rect>& rects() const noexcept { return rects_; }
    std::size_t size() const noexcept { return rects_.size(); }
    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    /// Same tiling with coordinates renumbered to consecutive integers.
    Rectangulation compacted() const;

    friend bool operator==(const Rectangulation&, const Rectangulation&) = default;

private:
    std::vector<Rect> rects_;
    int width_ = 0;
    int height_ = 0;
};

/// True when four rectangle corners coincide at some point.
bool has_cross_junction(const std::vector<Rect>& rects);

struct PaveTrace {
    Rectangulation result;
    /// slots_before[m]: number of staircase slots when rectangle m + 1 is placed.
    std::vector<int> slots_before;
};

/// Pavement map: builds the rectangulation of an excursion by placing one
/// rectangle per step into the concave corner `x` of the staircase, slots
/// numbered from the bottom-right (0) to the top-left (h).
///
///   w  covers the corner's vertical and horizontal frontier edges entirely
///   r  covers the vertical edge, and a proper left part of the horizontal one
///   g  covers the horizontal edge, and a proper lower part of the vertical one
///   b  covers proper parts of both
///
/// A proper part always reaches past every T-junction already on that edge.
Rectangulation pave(const Walk& excursion);
PaveTrace pave_traced(const Walk& excursion);

/// Procedure map: the unique excursion whose pavement is strongly equivalent
/// to `rectangulation`. Searches placement orders from the bottom-left,
/// keeping those whose walk stays leftmost.
Walk procedure(const Rectangulation& rectangulation);

std::string render_ascii(const Rectangulation& rectangulation);
std::string render_svg(const Rectangulation& rectangulation);

nlohmann::json to_json(const Rectangulation& rectangulation);
Rectangulation rectangulation_from_json(const nlohmann::json& doc);

}  // namespace rectwalk

#endif
