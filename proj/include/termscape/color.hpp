#pragma once

#include "termscape/layout.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace termscape {

struct Rgb
{
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    std::string hex() const;
    static Rgb from_hex(std::string_view hex);

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// 11-class ColorBrewer RdYlBu, red end first.
inline constexpr std::array<std::string_view, 11> kRdYlBuStops{
    "#a50026", "#d73027", "#f46d43", "#fdae61", "#fee090", "#ffffbf",
    "#e0f3f8", "#abd9e9", "#74add1", "#4575b4", "#313695"};

// Query-similarity ramp, light gray (similarity <= 0) to dark purple (1).
inline constexpr std::array<std::string_view, 2> kSimilarityStops{"#d9d9d9", "#3f007d"};

inline constexpr std::string_view kLightGray = "#d3d3d3";
inline constexpr std::string_view kNeutralGray = "#bdbdbd";

// Maps [-1, 1] onto RdYlBu with linear sRGB interpolation between stops:
// -1 darkest red, 0 yellow, +1 darkest blue. Input is clamped.
Rgb diverging_color(double coordinate);

// [0, 1] onto the similarity ramp; negatives clamp to gray, undefined is neutral gray.
Rgb similarity_color(std::optional<double> similarity);

struct ColorScale
{
    bool external = false;
    // External scores are divided by this before mapping; positive scores
    // take the B (blue) end.
    double external_max_abs = 1.0;
};

// The point's association color, or its external score color when the scale
// is external. Zero or missing external scores are light gray.
Rgb color_for(const TermPoint& point, const ColorScale& scale = {});

} // namespace termscape
