#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace termscape {

struct Rect
{
    double x_min = 0;
    double y_min = 0;
    double x_max = 0;
    double y_max = 0;

    double width() const noexcept { return x_max - x_min; }
    double height() const noexcept { return y_max - y_min; }

    // True when the overlap has positive area; touching edges do not count.
    bool intersects(const Rect& o) const noexcept
    {
        return x_min < o.x_max && o.x_min < x_max && y_min < o.y_max && o.y_min < y_max;
    }
    bool contains(const Rect& o) const noexcept
    {
        return x_min <= o.x_min && o.x_max <= x_max && y_min <= o.y_min && o.y_max <= y_max;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

// Uniform grid over a bounding region. Rects extending past the region are
// kept in the border cells, so queries anywhere stay exact.
class GridIndex
{
public:
    GridIndex(const Rect& bounds, double cell_size);

    void insert(const Rect& r);
    bool collides(const Rect& r) const;
    // Ids (insertion order) of all rects intersecting r, ascending.
    std::vector<std::size_t> query(const Rect& r) const;

    std::size_t size() const noexcept { return rects_.size(); }
    const Rect& rect(std::size_t id) const { return rects_[id]; }

private:
    struct CellRange
    {
        std::size_t x0, x1, y0, y1;
    };
    CellRange cells_for(const Rect& r) const;

    Rect bounds_;
    double cell_;
    std::size_t cols_;
    std::size_t rows_;
    std::vector<std::vector<std::uint32_t>> cells_;
    std::vector<Rect> rects_;
};

} // namespace termscape
