#pragma once

// Hand-rolled random generators for property tests. Every generator takes
// the engine explicitly so a failing seed reproduces.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "digifix/image.hpp"
#include "digifix/maps.hpp"

namespace digifix::testkit {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Point random_point(Rng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi)
{
    std::vector<Coord> c(dim);
    for (auto& v : c) v = uniform(rng, lo, hi);
    return Point(std::move(c));
}

/// Distinct points in [0, box)^dim, between min_size and max_size of them.
inline std::vector<Point> random_points(Rng& rng, std::size_t dim, std::int64_t box, std::size_t min_size,
                                        std::size_t max_size)
{
    std::size_t capacity = 1;
    for (std::size_t k = 0; k < dim; ++k) capacity *= static_cast<std::size_t>(box);
    const std::size_t want = std::min<std::size_t>(capacity, static_cast<std::size_t>(uniform(rng, min_size, max_size)));
    std::set<Point> points;
    while (points.size() < want) points.insert(random_point(rng, dim, 0, box - 1));
    std::vector<Point> out(points.begin(), points.end());
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

struct ImageParams {
    std::size_t max_dim = 3;
    std::int64_t box = 3;
    std::size_t min_size = 1;
    std::size_t max_size = 8;
};

inline std::shared_ptr<const DigitalImage> random_image(Rng& rng, const ImageParams& p = {})
{
    const std::size_t dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(p.max_dim)));
    const int u = static_cast<int>(uniform(rng, 1, static_cast<std::int64_t>(dim)));
    return make_image(random_points(rng, dim, p.box, p.min_size, p.max_size), u);
}

/// Random connected image grown from the origin by adjacent steps.
inline std::shared_ptr<const DigitalImage> random_connected_image(Rng& rng, std::size_t max_dim, std::size_t size)
{
    const std::size_t dim = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
    const int u = static_cast<int>(uniform(rng, 1, static_cast<std::int64_t>(dim)));
    std::set<Point> points{Point(std::vector<Coord>(dim, 0))};
    std::vector<Point> order(points.begin(), points.end());
    while (points.size() < size) {
        const Point& base = order[static_cast<std::size_t>(rng() % order.size())];
        std::vector<Coord> c(base.coords().begin(), base.coords().end());
        const std::size_t axis = static_cast<std::size_t>(rng() % dim);
        c[axis] += (rng() % 2) ? 1 : -1;
        Point next(std::move(c));
        if (points.insert(next).second) order.push_back(next);
    }
    return make_image(order, u);
}

inline std::vector<std::size_t> random_table(Rng& rng, std::size_t n)
{
    std::vector<std::size_t> table(n);
    for (auto& v : table) v = static_cast<std::size_t>(rng() % n);
    return table;
}

inline SelfMap random_map(Rng& rng, const std::shared_ptr<const DigitalImage>& image)
{
    return SelfMap(image, random_table(rng, image->size()));
}

/// Random permutation (an onto map).
inline SelfMap random_bijection(Rng& rng, const std::shared_ptr<const DigitalImage>& image)
{
    std::vector<std::size_t> table(image->size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    std::shuffle(table.begin(), table.end(), rng);
    return SelfMap(image, std::move(table));
}

/// Every self-map of an n-point image, lexicographic.
template <class Visit>
void for_each_table(std::size_t n, Visit visit)
{
    std::vector<std::size_t> table(n, 0);
    while (true) {
        visit(table);
        std::size_t k = n;
        while (k > 0) {
            if (++table[k - 1] < n) break;
            table[k - 1] = 0;
            --k;
        }
        if (k == 0) return;
    }
}

}  // namespace digifix::testkit
