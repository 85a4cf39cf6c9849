#pragma once

#include "termscape/error.hpp"

#include <algorithm>

namespace termscape {

template <typename DerivedU, typename DerivedV>
double cosine_similarity(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v)
{
    if (u.size() != v.size())
        throw Error("vector dimensions differ");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw Error("zero vector");
    return std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
}

} // namespace termscape
