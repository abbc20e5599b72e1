#ifndef RECTWALK_GEOMETRY_HPP
#define RECTWALK_GEOMETRY_HPP

#include "rectwalk/numeric.hpp"
#include "rectwalk/paving.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rectwalk {

enum class Orientation : std::uint8_t { horizontal, vertical };
enum class End : std::uint8_t { lo, hi };

/// Side of a host segment a neighbor sits on: below/left is negative,
/// above/right is positive.
enum class Side : std::int8_t { negative = -1, positive = 1 };

enum class ContactType : std::uint8_t { v_top_on_h, v_bottom_on_h, h_right_on_v, h_left_on_v };

struct Segment {
    int id = 0;
    Orientation dir = Orientation::horizontal;
    int axis = 0;  // y for horizontal, x for vertical
    int lo = 0;
    int hi = 0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Endpoint `end` of segment `segment` lies in the interior of `host`.
struct Incidence {
    int segment = 0;
    End end = End::lo;
    int host = 0;
    ContactType type = ContactType::v_top_on_h;
    int position = 0;  // coordinate of the contact along the host

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Bounding box of a rectangulation.
struct Frame {
    int x_lo = 0;
    int x_hi = 0;
    int y_lo = 0;
    int y_hi = 0;

    friend bool operator==(const Frame&, const Frame&) = default;
};

/// A set of horizontal and vertical segments no two of which cross or share
/// an endpoint, optionally inside a frame.
///
/// Internally every segment and, when present, each frame side is a node;
/// node i < size() is segments()[i], the frame sides follow in the order
/// bottom, left, top, right. Contact lists and endpoint hosts are derived
/// from coordinates at construction and never stored independently.
class SegmentConfig {
public:
    struct Contact {
        std::size_t neighbor;  // node whose endpoint touches this node
        Side side;
        int position;
    };

    SegmentConfig() = default;
    explicit SegmentConfig(std::vector<Segment> segments, std::optional<Frame> frame = std::nullopt);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    const std::optional<Frame>& frame() const noexcept { return frame_; }
    std::size_t size() const noexcept { return segments_.size(); }
    const std::vector<Incidence>& incidences() const noexcept { return incidences_; }

    std::size_t node_count() const noexcept { return dirs_.size(); }
    bool is_frame(std::size_t node) const noexcept { return node >= segments_.size(); }
    Orientation orientation(std::size_t node) const noexcept { return dirs_[node]; }
    /// Contacts along a node, sorted by position.
    const std::vector<Contact>& contacts(std::size_t node) const noexcept { return contacts_[node]; }
    /// Node hosting an endpoint of segment `node` (frame sides included).
    std::optional<std::size_t> host(std::size_t node, End end) const noexcept {
        return hosts_[node][static_cast<std::size_t>(end)];
    }

    /// Same segments without the frame.
    SegmentConfig without_frame() const { return SegmentConfig(segments_); }

private:
    std::vector<Segment> segments_;
    std::optional<Frame> frame_;
    std::vector<Incidence> incidences_;
    std::vector<Orientation> dirs_;
    std::vector<std::vector<Contact>> contacts_;
    std::vector<std::array<std::optional<std::size_t>, 2>> hosts_;
};

/// A geometric pattern: a frameless segment configuration; size = segment count.
class GeomPattern {
public:
    GeomPattern() = default;
    explicit GeomPattern(std::vector<Segment> segments) : config_(std::move(segments)) {}
    explicit GeomPattern(const SegmentConfig& config) : config_(config.without_frame()) {}

    const SegmentConfig& config() const noexcept { return config_; }
    std::size_t size() const noexcept { return config_.size(); }

private:
    SegmentConfig config_;
};

/// Maximal interior segments of a rectangulation, framed by its bounding box.
/// Ids are 1-based: horizontals first by (y, x), then verticals by (x, y).
SegmentConfig seg(const Rectangulation& rectangulation);

bool weak_equivalent(const SegmentConfig& a, const SegmentConfig& b);
bool strong_equivalent(const SegmentConfig& a, const SegmentConfig& b);

struct ContainmentOptions {
    /// Also forbid incidences between image segments that are not incident
    /// in the pattern.
    bool induced = false;
};

/// Backtracking search for an orientation-preserving injection of the
/// pattern's segments into the host's. Every pattern incidence must map to
/// an incidence of the same contact type, and neighbors keep their order
/// along each image segment.
bool contains_pattern(const SegmentConfig& host, const GeomPattern& pattern, ContainmentOptions options = {});
bool contains_pattern(const Rectangulation& rectangulation, const GeomPattern& pattern,
                      ContainmentOptions options = {});

/// An (|P| + 1)-rectangulation obtained by extending the pattern's free
/// endpoints until they hit a segment or the frame.
Rectangulation complete_pattern(const GeomPattern& pattern);

struct AvoidCountOptions {
    int cap = 12;
    int threads = 1;
    ContainmentOptions containment{};
};

/// Number of excursions of length n whose pavement avoids the pattern.
BigInt count_avoiding_rect(int n, const GeomPattern& pattern, const AvoidCountOptions& options = {});

/// Pattern JSON: {"segments":[{"id":k,"dir":"h"|"v","axis":a,"span":[lo,hi]},...]}.
nlohmann::json to_json(const GeomPattern& pattern);
GeomPattern pattern_from_json(const nlohmann::json& doc);

/// One horizontal segment.
GeomPattern horizontal_bar_pattern();
/// A vertical segment whose top end touches the interior of a horizontal one.
GeomPattern t_shape_pattern();

}  // namespace rectwalk

#endif
