#include "termscape/labeler.hpp"

#include "termscape/tokenize.hpp"

#include <algorithm>
#include <numeric>

namespace termscape {

std::string_view slot_name(Slot s) noexcept
{
    switch (s)
    {
    case Slot::n: return "N";
    case Slot::s: return "S";
    case Slot::e: return "E";
    case Slot::w: return "W";
    case Slot::ne: return "NE";
    case Slot::sw: return "SW";
    case Slot::nw: return "NW";
    case Slot::se: return "SE";
    }
    return "?";
}

PixelPoint to_pixel(double x_a, double x_b, const ChartSize& chart) noexcept
{
    return PixelPoint{x_a * chart.width, (1.0 - x_b) * chart.height};
}

Rect marker_rect(PixelPoint p, const FontMetrics& m) noexcept
{
    return Rect{p.x - m.point_radius, p.y - m.point_radius, p.x + m.point_radius, p.y + m.point_radius};
}

std::optional<Rect> estimate_label_box(std::string_view text,
                                       PixelPoint anchor,
                                       Slot slot,
                                       const FontMetrics& m,
                                       const ChartSize& chart)
{
    const double w = static_cast<double>(code_point_count(text)) * m.glyph_width;
    const double h = m.line_height;
    const double d = m.point_radius + m.label_offset;

    // Horizontal: -1 left of the anchor, 0 centered, +1 right. Vertical: -1 above.
    int hx = 0;
    int vy = 0;
    switch (slot)
    {
    case Slot::n: vy = -1; break;
    case Slot::s: vy = 1; break;
    case Slot::e: hx = 1; break;
    case Slot::w: hx = -1; break;
    case Slot::ne: hx = 1; vy = -1; break;
    case Slot::sw: hx = -1; vy = 1; break;
    case Slot::nw: hx = -1; vy = -1; break;
    case Slot::se: hx = 1; vy = 1; break;
    }

    Rect r;
    r.x_min = hx == 0 ? anchor.x - w / 2 : hx > 0 ? anchor.x + d : anchor.x - d - w;
    r.y_min = vy == 0 ? anchor.y - h / 2 : vy > 0 ? anchor.y + d : anchor.y - d - h;
    r.x_max = r.x_min + w;
    r.y_max = r.y_min + h;

    if (!Rect{0, 0, chart.width, chart.height}.contains(r))
        return std::nullopt;
    return r;
}

std::vector<PlacedLabel> place_labels(std::span<const LabelPoint> points, const FontMetrics& metrics, const ChartSize& chart)
{
    GridIndex index(Rect{0, 0, chart.width, chart.height}, metrics.line_height);
    for (const auto& p : points)
        index.insert(marker_rect(p.anchor, metrics));

    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        if (points[l].priority != points[r].priority)
            return points[l].priority > points[r].priority;
        return points[l].text < points[r].text;
    });

    std::vector<PlacedLabel> placed;
    for (const std::size_t i : order)
    {
        for (const Slot slot : kSlotOrder)
        {
            const auto box = estimate_label_box(points[i].text, points[i].anchor, slot, metrics, chart);
            if (box && !index.collides(*box))
            {
                index.insert(*box);
                placed.push_back(PlacedLabel{i, *box, slot});
                break;
            }
        }
    }
    return placed;
}

} // namespace termscape
