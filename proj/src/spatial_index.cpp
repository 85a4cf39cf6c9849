#include "termscape/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace termscape {

GridIndex::GridIndex(const Rect& bounds, double cell_size) : bounds_(bounds), cell_(cell_size)
{
    if (!(cell_size > 0) || bounds.width() < 0 || bounds.height() < 0)
        throw std::invalid_argument("grid index needs a positive cell size and valid bounds");
    cols_ = static_cast<std::size_t>(std::floor(bounds.width() / cell_)) + 1;
    rows_ = static_cast<std::size_t>(std::floor(bounds.height() / cell_)) + 1;
    cells_.resize(cols_ * rows_);
}

GridIndex::CellRange GridIndex::cells_for(const Rect& r) const
{
    auto clamp_cell = [this](double v, double origin, std::size_t n) {
        const double c = std::floor((v - origin) / cell_);
        if (!(c > 0))
            return std::size_t{0};
        return std::min(n - 1, static_cast<std::size_t>(c));
    };
    return CellRange{clamp_cell(r.x_min, bounds_.x_min, cols_), clamp_cell(r.x_max, bounds_.x_min, cols_),
                     clamp_cell(r.y_min, bounds_.y_min, rows_), clamp_cell(r.y_max, bounds_.y_min, rows_)};
}

void GridIndex::insert(const Rect& r)
{
    const auto id = static_cast<std::uint32_t>(rects_.size());
    rects_.push_back(r);
    const CellRange c = cells_for(r);
    for (std::size_t y = c.y0; y <= c.y1; ++y)
        for (std::size_t x = c.x0; x <= c.x1; ++x)
            cells_[y * cols_ + x].push_back(id);
}

bool GridIndex::collides(const Rect& r) const
{
    const CellRange c = cells_for(r);
    for (std::size_t y = c.y0; y <= c.y1; ++y)
        for (std::size_t x = c.x0; x <= c.x1; ++x)
            for (const auto id : cells_[y * cols_ + x])
                if (rects_[id].intersects(r))
                    return true;
    return false;
}

std::vector<std::size_t> GridIndex::query(const Rect& r) const
{
    std::vector<std::size_t> hits;
    const CellRange c = cells_for(r);
    for (std::size_t y = c.y0; y <= c.y1; ++y)
        for (std::size_t x = c.x0; x <= c.x1; ++x)
            for (const auto id : cells_[y * cols_ + x])
                if (rects_[id].intersects(r))
                    hits.push_back(id);
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

} // namespace termscape
