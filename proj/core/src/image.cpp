#include "digifix/image.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>

#include "digifix/errors.hpp"

namespace digifix {

std::string Point::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coords_[i]);
    }
    return out + ")";
}

Point Point::parse(std::string_view text)
{
    const std::string original(text);
    auto fail = [&]() -> Point { throw InputError("malformed point '" + original + "'"); };
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') return fail();
        text = text.substr(1, text.size() - 2);
    }
    std::vector<Coord> coords;
    while (true) {
        const std::size_t comma = text.find(',');
        std::string_view field = trim(text.substr(0, comma));
        if (field.empty()) {
            // A single trailing comma is allowed: "(3,)".
            if (comma == std::string_view::npos && !coords.empty()) break;
            return fail();
        }
        Coord value = 0;
        const char* first = field.data();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) return fail();
        coords.push_back(value);
        if (comma == std::string_view::npos) break;
        text = text.substr(comma + 1);
    }
    return Point(std::move(coords));
}

bool adjacent_cu(const Point& x, const Point& y, int u)
{
    const std::size_t n = x.dimension();
    if (n == 0 || y.dimension() != n) {
        throw InputError("adjacency between points of dimension " + std::to_string(n) + " and " +
                         std::to_string(y.dimension()));
    }
    if (u < 1 || static_cast<std::size_t>(u) > n) {
        throw InputError("adjacency parameter u=" + std::to_string(u) + " outside [1," + std::to_string(n) + "]");
    }
    int unit_steps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Coord diff = x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
        if (diff == 1) {
            ++unit_steps;
        } else if (diff != 0) {
            return false;
        }
    }
    return unit_steps >= 1 && unit_steps <= u;
}

DigitalImage DigitalImage::build(std::vector<Point> points, int u)
{
    if (points.empty()) throw InputError("a digital image needs at least one point");
    const std::size_t n = points.front().dimension();
    if (n == 0) throw InputError("points must have dimension >= 1");
    for (const auto& p : points) {
        if (p.dimension() != n) {
            throw InputError("mixed dimensions: " + points.front().to_string() + " and " + p.to_string());
        }
        for (Coord c : p.coords()) {
            if (c > kMaxCoordinate || c < -kMaxCoordinate) {
                throw InputError("coordinate out of range in " + p.to_string());
            }
        }
    }
    if (u < 1 || static_cast<std::size_t>(u) > n) {
        throw InputError("adjacency parameter u=" + std::to_string(u) + " outside [1," + std::to_string(n) + "]");
    }
    std::sort(points.begin(), points.end());
    if (auto dup = std::adjacent_find(points.begin(), points.end()); dup != points.end()) {
        throw InputError("duplicate point " + dup->to_string());
    }

    DigitalImage image;
    image.u_ = u;
    image.points_ = std::move(points);
    image.neighbors_.resize(image.points_.size());
    for (std::size_t i = 0; i < image.points_.size(); ++i) {
        image.index_.emplace(image.points_[i], i);
        for (std::size_t j = i + 1; j < image.points_.size(); ++j) {
            if (adjacent_cu(image.points_[i], image.points_[j], u)) {
                image.neighbors_[i].push_back(j);
                image.neighbors_[j].push_back(i);
            }
        }
    }
    for (auto& list : image.neighbors_) std::sort(list.begin(), list.end());
    return image;
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const
{
    if (auto it = index_.find(p); it != index_.end()) return it->second;
    return std::nullopt;
}

std::size_t DigitalImage::require_index(const Point& p) const
{
    if (auto i = index_of(p)) return *i;
    throw InputError("point " + p.to_string() + " is not in the image");
}

bool DigitalImage::adjacent(std::size_t i, std::size_t j) const
{
    const auto& list = neighbors_.at(i);
    return std::binary_search(list.begin(), list.end(), j);
}

std::vector<std::pair<std::size_t, std::size_t>> DigitalImage::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < neighbors_.size(); ++i) {
        for (std::size_t j : neighbors_[i]) {
            if (i < j) out.emplace_back(i, j);
        }
    }
    return out;
}

std::shared_ptr<const DigitalImage> make_image(std::vector<Point> points, int u)
{
    return std::make_shared<const DigitalImage>(DigitalImage::build(std::move(points), u));
}

std::vector<std::optional<std::size_t>> bfs_distances(const DigitalImage& image, std::size_t source)
{
    std::vector<std::optional<std::size_t>> dist(image.size());
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : image.neighbors(v)) {
            if (!dist[w]) {
                dist[w] = *dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::vector<std::size_t> component_labels(const DigitalImage& image)
{
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(image.size(), unset);
    std::size_t next = 0;
    for (std::size_t s = 0; s < image.size(); ++s) {
        if (label[s] != unset) continue;
        std::deque<std::size_t> queue{s};
        label[s] = next;
        while (!queue.empty()) {
            const std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : image.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_connected(const DigitalImage& image)
{
    const auto dist = bfs_distances(image, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::optional<Path> kappa_path(const DigitalImage& image, const Point& x, const Point& y)
{
    const std::size_t source = image.require_index(x);
    const std::size_t target = image.require_index(y);
    constexpr std::size_t unset = static_cast<std::size_t>(-1);

    // Neighbours are scanned in ascending (lexicographic) order; the first
    // discovery of a vertex fixes its predecessor.
    std::vector<std::size_t> parent(image.size(), unset);
    std::deque<std::size_t> queue{source};
    parent[source] = source;
    while (!queue.empty() && parent[target] == unset) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w : image.neighbors(v)) {
            if (parent[w] == unset) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if (parent[target] == unset) return std::nullopt;

    Path path;
    for (std::size_t v = target;; v = parent[v]) {
        path.vertices.push_back(image.point(v));
        if (v == source) break;
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

}  // namespace digifix
