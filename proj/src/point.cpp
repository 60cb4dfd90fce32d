#include "trihull/point.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace trihull {

void require_finite(std::span<const double> values, const char* what) {
    for (double x : values) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(what) + ": coordinates must be finite");
        }
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("Point: dimension must be >= 1");
    require_finite(coords_, "Point");
}

Point::Point(std::initializer_list<double> coords) : Point(std::vector<double>(coords)) {}

PointSet::PointSet(std::size_t n, std::size_t m, std::vector<double> row_major)
    : n_(n), m_(m), data_(std::move(row_major)) {
    if (n_ == 0) throw std::invalid_argument("PointSet: need at least one point");
    if (m_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
    if (data_.size() != n_ * m_) {
        throw std::invalid_argument("PointSet: flat size " + std::to_string(data_.size()) +
                                    " does not equal n*m = " + std::to_string(n_ * m_));
    }
    require_finite(data_, "PointSet");
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("PointSet: need at least one point");
    const std::size_t m = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * m);
    for (const auto& r : rows) {
        require_same_dim(r.size(), m, "PointSet row");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return PointSet(rows.size(), m, std::move(flat));
}

PointSet PointSet::from_points(const std::vector<Point>& points) {
    std::vector<std::vector<double>> rows;
    rows.reserve(points.size());
    for (const auto& p : points) rows.push_back(p.coords());
    return from_rows(rows);
}

Point PointSet::point(std::size_t i) const {
    auto r = row(i);
    return Point(std::vector<double>(r.begin(), r.end()));
}

}  // namespace trihull
