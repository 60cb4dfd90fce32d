#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace trihull {

// Dense point in R^m. Coordinates must be finite and m >= 1.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t dim() const { return coords_.size(); }
    const double* data() const { return coords_.data(); }
    double* data() { return coords_.data(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }
    std::span<const double> span() const { return {coords_.data(), coords_.size()}; }
    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const Point&) const = default;

private:
    std::vector<double> coords_;
};

// Ordered set of n points of equal dimension m, stored row-major.
// Order is part of the value: scans and index-based certificates rely on it.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t n, std::size_t m, std::vector<double> row_major);

    static PointSet from_rows(const std::vector<std::vector<double>>& rows);
    static PointSet from_points(const std::vector<Point>& points);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return m_; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * m_, m_}; }
    Point point(std::size_t i) const;
    const std::vector<double>& flat() const { return data_; }
    std::vector<double>& flat() { return data_; }

    bool operator==(const PointSet&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<double> data_;
};

// Throws std::invalid_argument when dimensions disagree or values are not finite.
void require_finite(std::span<const double> values, const char* what);
void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace trihull
