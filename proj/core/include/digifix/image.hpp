#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digifix {

using Coord = std::int64_t;

/// Largest coordinate magnitude accepted in an image.
inline constexpr Coord kMaxCoordinate = 2147483647;

/// A lattice point of Z^n.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Coord> coords) : coords_(coords) {}

    std::size_t dimension() const { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Coord> coords() const { return coords_; }

    auto operator<=>(const Point&) const = default;

    /// "(3,5)"; one-dimensional points print as "(3)".
    std::string to_string() const;

    /// Accepts "(3,5)", "(3)", "(3,)" and a bare "3".
    static Point parse(std::string_view text);

private:
    std::vector<Coord> coords_;
};

/// c_u adjacency: x != y, at most u coordinates differ by exactly 1 and
/// the remaining coordinates agree. Throws InputError on a dimension
/// mismatch or u outside [1, n].
bool adjacent_cu(const Point& x, const Point& y, int u);

/// A finite digital image (X, c_u). Points are kept in lexicographic
/// order; every index-based API refers to that order.
class DigitalImage {
public:
    /// Validates and builds. Throws InputError for an empty point list,
    /// mixed dimensions, duplicates, coordinates beyond kMaxCoordinate, or
    /// u outside [1, n].
    static DigitalImage build(std::vector<Point> points, int u);

    std::size_t size() const { return points_.size(); }
    std::size_t dimension() const { return points_.front().dimension(); }
    int u() const { return u_; }

    const std::vector<Point>& points() const { return points_; }
    const Point& point(std::size_t i) const { return points_.at(i); }

    std::optional<std::size_t> index_of(const Point& p) const;
    /// Like index_of but throws InputError naming the point.
    std::size_t require_index(const Point& p) const;
    bool contains(const Point& p) const { return index_of(p).has_value(); }

    /// Neighbours of point i in ascending index order.
    std::span<const std::size_t> neighbors(std::size_t i) const { return neighbors_.at(i); }
    bool adjacent(std::size_t i, std::size_t j) const;
    /// Edges as (i, j) with i < j, lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(const DigitalImage& other) const
    {
        return u_ == other.u_ && points_ == other.points_;
    }

private:
    DigitalImage() = default;

    std::vector<Point> points_;
    int u_ = 1;
    std::map<Point, std::size_t> index_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

/// Free-function spelling of DigitalImage::build.
inline DigitalImage build_image(std::vector<Point> points, int u)
{
    return DigitalImage::build(std::move(points), u);
}

/// Builds and wraps in a shared pointer, the form maps and tables hold.
std::shared_ptr<const DigitalImage> make_image(std::vector<Point> points, int u);

/// A kappa-path: consecutive vertices adjacent. length() counts edges.
struct Path {
    std::vector<Point> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

bool is_connected(const DigitalImage& image);

/// Component label per point; labels are numbered by smallest member.
std::vector<std::size_t> component_labels(const DigitalImage& image);

/// Breadth-first hop counts from `source`; nullopt for unreachable points.
std::vector<std::optional<std::size_t>> bfs_distances(const DigitalImage& image, std::size_t source);

/// A shortest path from x to y, or nullopt when they lie in different
/// components. Breadth-first search scans neighbours in lexicographic
/// order, so ties resolve the same way on every run.
/// Throws InputError if x or y is not in the image.
std::optional<Path> kappa_path(const DigitalImage& image, const Point& x, const Point& y);

}  // namespace digifix
