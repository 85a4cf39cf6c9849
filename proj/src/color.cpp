#include "termscape/color.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace termscape {

std::string Rgb::hex() const
{
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

Rgb Rgb::from_hex(std::string_view hex)
{
    if (hex.size() != 7 || hex[0] != '#')
        throw std::invalid_argument("bad color: " + std::string(hex));
    auto byte = [&](std::size_t at) {
        return static_cast<std::uint8_t>(std::stoi(std::string(hex.substr(at, 2)), nullptr, 16));
    };
    return Rgb{byte(1), byte(3), byte(5)};
}

namespace {

Rgb lerp(const Rgb& lo, const Rgb& hi, double t)
{
    auto mix = [t](std::uint8_t a, std::uint8_t b) {
        return static_cast<std::uint8_t>(std::lround(a + (b - a) * t));
    };
    return Rgb{mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b)};
}

// t in [0, 1] along equally spaced stops.
template <std::size_t N>
Rgb ramp(const std::array<std::string_view, N>& stops, double t)
{
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * (N - 1);
    const auto lo = std::min(static_cast<std::size_t>(pos), N - 2);
    return lerp(Rgb::from_hex(stops[lo]), Rgb::from_hex(stops[lo + 1]), pos - lo);
}

} // namespace

Rgb diverging_color(double coordinate)
{
    if (std::isnan(coordinate))
        return Rgb::from_hex(kNeutralGray);
    return ramp(kRdYlBuStops, (coordinate + 1.0) / 2.0);
}

Rgb similarity_color(std::optional<double> similarity)
{
    if (!similarity || std::isnan(*similarity))
        return Rgb::from_hex(kNeutralGray);
    return ramp(kSimilarityStops, *similarity);
}

Rgb color_for(const TermPoint& point, const ColorScale& scale)
{
    if (!scale.external)
        return diverging_color(point.color);
    if (!point.external_score || *point.external_score == 0.0)
        return Rgb::from_hex(kLightGray);
    const double denom = scale.external_max_abs > 0 ? scale.external_max_abs : 1.0;
    return diverging_color(*point.external_score / denom);
}

} // namespace termscape
