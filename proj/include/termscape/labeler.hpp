#pragma once

#include "termscape/spatial_index.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace termscape {

struct FontMetrics
{
    double glyph_width = 7.2; // monospace advance per code point
    double line_height = 14;
    double point_radius = 2;
    double label_offset = 2;
    double font_size = 12; // for the viewer; placement only uses the fields above
};

struct ChartSize
{
    double width = 800;
    double height = 600;
};

enum class Slot { n, s, e, w, ne, sw, nw, se };

// Slots are tried in this order.
inline constexpr std::array<Slot, 8> kSlotOrder{Slot::n, Slot::s, Slot::e, Slot::w,
                                                Slot::ne, Slot::sw, Slot::nw, Slot::se};

std::string_view slot_name(Slot s) noexcept;

struct PixelPoint
{
    double x = 0;
    double y = 0;
};

// x_a runs left to right, x_b bottom to top.
PixelPoint to_pixel(double x_a, double x_b, const ChartSize& chart) noexcept;

Rect marker_rect(PixelPoint p, const FontMetrics& metrics) noexcept;

// Box of |text| * glyph_width by line_height, pushed point_radius +
// label_offset away from the anchor towards the slot. nullopt when the box
// leaves the chart.
std::optional<Rect> estimate_label_box(std::string_view text,
                                       PixelPoint anchor,
                                       Slot slot,
                                       const FontMetrics& metrics,
                                       const ChartSize& chart);

struct LabelPoint
{
    std::string_view text;
    PixelPoint anchor;
    double priority = 0; // higher goes first
};

struct PlacedLabel
{
    std::size_t point; // index into the input span
    Rect rect;
    Slot slot;
};

// Greedy placement: every marker goes into the index first, then points are
// visited by descending priority (ties by text) and take the first free
// in-bounds slot. Result is in visiting order.
std::vector<PlacedLabel> place_labels(std::span<const LabelPoint> points,
                                      const FontMetrics& metrics,
                                      const ChartSize& chart);

} // namespace termscape
