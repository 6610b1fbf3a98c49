#include "digifix/maps.hpp"

#include <algorithm>
#include <bit>

#include "digifix/errors.hpp"

namespace digifix {

SelfMap::SelfMap(std::shared_ptr<const DigitalImage> image, std::vector<std::size_t> table)
    : image_(std::move(image)), table_(std::move(table))
{
    if (!image_) throw InputError("self-map without an image");
    if (table_.size() != image_->size()) {
        throw InputError("self-map table has " + std::to_string(table_.size()) + " entries for " +
                         std::to_string(image_->size()) + " points");
    }
    for (std::size_t v : table_) {
        if (v >= image_->size()) throw InputError("self-map value index out of range");
    }
}

SelfMap SelfMap::identity(std::shared_ptr<const DigitalImage> image)
{
    std::vector<std::size_t> table(image->size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
    return SelfMap(std::move(image), std::move(table));
}

SelfMap SelfMap::constant(std::shared_ptr<const DigitalImage> image, std::size_t value)
{
    std::vector<std::size_t> table(image->size(), value);
    return SelfMap(std::move(image), std::move(table));
}

bool same_image(const SelfMap& f, const SelfMap& g)
{
    return f.image_ptr() == g.image_ptr() || f.image() == g.image();
}

SelfMap SelfMap::compose(const SelfMap& inner) const
{
    if (!same_image(*this, inner)) throw InputError("cannot compose maps on different images");
    std::vector<std::size_t> table(size());
    for (std::size_t i = 0; i < size(); ++i) table[i] = table_[inner.table_[i]];
    return SelfMap(image_, std::move(table));
}

bool SelfMap::is_constant() const
{
    return std::adjacent_find(table_.begin(), table_.end(), std::not_equal_to<>()) == table_.end();
}

MapCandidate MapCandidate::from_table(std::shared_ptr<const DigitalImage> image,
                                      const std::vector<std::pair<Point, Point>>& entries)
{
    MapCandidate out;
    out.image = std::move(image);
    out.provenance = "table";
    for (const auto& [from, to] : entries) {
        if (!out.assignment.emplace(from, to).second) {
            throw InputError("map table assigns " + from.to_string() + " twice");
        }
    }
    return out;
}

MapCandidate MapCandidate::from_formula(std::shared_ptr<const DigitalImage> image, const Expression& formula)
{
    if (image->dimension() != 1) {
        throw InputError("formula maps are defined only on one-dimensional images");
    }
    MapCandidate out;
    out.image = std::move(image);
    out.provenance = "formula: " + formula.text();
    for (const Point& p : out.image->points()) {
        EvalResult result = formula.evaluate(Real(Rational(p[0])));
        if (auto* failure = std::get_if<EvalFailure>(&result)) {
            std::string reason;
            switch (failure->kind) {
            case EvalFailure::Kind::NotReal: reason = "not real"; break;
            case EvalFailure::Kind::DivisionByZero: reason = "undefined"; break;
            case EvalFailure::Kind::Unsupported: reason = "unsupported"; break;
            }
            out.assignment.emplace(p, NonLatticeValue{failure->detail, reason});
            continue;
        }
        const Real& value = std::get<Real>(result);
        if (!value.is_rational()) {
            out.assignment.emplace(p, NonLatticeValue{value.to_string(), "irrational"});
        } else if (!value.is_integer()) {
            out.assignment.emplace(p, NonLatticeValue{value.to_string(), "non-integral"});
        } else {
            const Rational q = value.to_rational();
            const Integer whole = boost::multiprecision::numerator(q);
            if (whole > kMaxCoordinate || whole < -kMaxCoordinate) {
                out.assignment.emplace(p, NonLatticeValue{whole.str(), "outside image"});
            } else {
                out.assignment.emplace(p, Point{whole.convert_to<Coord>()});
            }
        }
    }
    return out;
}

std::variant<SelfMap, ClosureFailure> validate_selfmap(const MapCandidate& candidate)
{
    const DigitalImage& image = *candidate.image;
    for (const auto& entry : candidate.assignment) {
        if (!image.contains(entry.first)) {
            throw InputError("map assigns a value to " + entry.first.to_string() + ", which is not in the image");
        }
    }
    std::vector<std::size_t> table(image.size());
    ClosureFailure failure{candidate.provenance, {}};
    for (std::size_t i = 0; i < image.size(); ++i) {
        const Point& p = image.point(i);
        auto it = candidate.assignment.find(p);
        if (it == candidate.assignment.end()) {
            throw InputError("map is partial: no value for " + p.to_string());
        }
        if (const auto* bad = std::get_if<NonLatticeValue>(&it->second)) {
            failure.violations.push_back({p, bad->value, bad->reason});
            continue;
        }
        const Point& value = std::get<Point>(it->second);
        if (auto index = image.index_of(value)) {
            table[i] = *index;
        } else {
            failure.violations.push_back({p, value.to_string(), "outside image"});
        }
    }
    if (!failure.violations.empty()) return failure;
    return SelfMap(candidate.image, std::move(table));
}

bool is_continuous_edgewise(const DigitalImage& domain, const DigitalImage& codomain,
                            std::span<const std::size_t> table)
{
    for (auto [i, j] : domain.edges()) {
        if (table[i] != table[j] && !codomain.adjacent(table[i], table[j])) return false;
    }
    return true;
}

std::optional<std::pair<std::size_t, std::size_t>> continuity_violation(const SelfMap& f)
{
    for (auto [i, j] : f.image().edges()) {
        if (f(i) != f(j) && !f.image().adjacent(f(i), f(j))) return std::pair{i, j};
    }
    return std::nullopt;
}

bool is_continuous_edgewise(const SelfMap& f) { return !continuity_violation(f).has_value(); }

ConnectedSubsets::ConnectedSubsets(const DigitalImage& image)
{
    const std::size_t n = image.size();
    if (n > kMaxPoints) {
        throw ResourceError("connected-subset enumeration needs |X| <= " + std::to_string(kMaxPoints) +
                            ", got " + std::to_string(n));
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j : image.neighbors(i)) adj[i] |= std::uint32_t{1} << j;
    }
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    is_connected_.assign(std::size_t{full} + 1, 0);
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        std::uint32_t reach = mask & (~mask + 1);
        while (true) {
            std::uint32_t grow = reach;
            for (std::uint32_t rest = reach; rest; rest &= rest - 1) {
                grow |= adj[static_cast<std::size_t>(std::countr_zero(rest))];
            }
            grow &= mask;
            if (grow == reach) break;
            reach = grow;
        }
        if (reach == mask) {
            is_connected_[mask] = 1;
            connected_.push_back(mask);
        }
    }
}

bool ConnectedSubsets::preserves_connectedness(std::span<const std::size_t> table) const
{
    for (std::uint32_t mask : connected_) {
        std::uint32_t image = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            image |= std::uint32_t{1} << table[static_cast<std::size_t>(std::countr_zero(rest))];
        }
        if (!is_connected_[image]) return false;
    }
    return true;
}

bool is_continuous_global(const SelfMap& f, const ContinuityOptions& options)
{
    const std::size_t n = f.size();
    if (n > options.exhaustive_bound) {
        if (options.force_exhaustive) {
            throw ResourceError("exhaustive connectedness check forced on |X| = " + std::to_string(n) +
                                " above the bound " + std::to_string(options.exhaustive_bound));
        }
        return is_continuous_edgewise(f);
    }
    return ConnectedSubsets(f.image()).preserves_connectedness(f.table());
}

std::vector<std::size_t> fixed_point_indices(const SelfMap& f)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f(i) == i) out.push_back(i);
    }
    return out;
}

std::vector<Point> fixed_points(const SelfMap& f)
{
    std::vector<Point> out;
    for (std::size_t i : fixed_point_indices(f)) out.push_back(f.image().point(i));
    return out;
}

bool is_onto(const SelfMap& f)
{
    std::vector<bool> hit(f.size(), false);
    for (std::size_t v : f.table()) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Coord projection(const Point& x, std::size_t j)
{
    if (j < 1 || j > x.dimension()) {
        throw InputError("projection index " + std::to_string(j) + " outside [1," +
                         std::to_string(x.dimension()) + "]");
    }
    return x[j - 1];
}

}  // namespace digifix
