#include "digifix/metrics.hpp"

#include <cmath>

#include "digifix/errors.hpp"

namespace digifix {

namespace mp = boost::multiprecision;

MetricSpec MetricSpec::lp(unsigned p)
{
    if (p == 0) throw InputError("l_p metric needs p >= 1");
    return MetricSpec(Kind::Lp, p);
}

MetricSpec MetricSpec::lp(const Rational& p)
{
    if (p < 1) {
        throw InputError("l_p with p=" + format_rational(p) + " < 1 violates the triangle inequality");
    }
    if (mp::denominator(p) != 1) {
        throw InputError("l_p with non-integer p=" + format_rational(p) +
                         " is not supported (distances must stay exact radicals)");
    }
    const Integer whole = mp::numerator(p);
    if (whole > 64) throw InputError("l_p exponent p=" + whole.str() + " is too large (max 64)");
    return MetricSpec(Kind::Lp, whole.convert_to<unsigned>());
}

std::string MetricSpec::name() const
{
    if (kind_ == Kind::ShortestPath) return "shortest_path";
    return "l" + std::to_string(p_);
}

double Distance::approx() const
{
    return std::pow(power.convert_to<double>(), 1.0 / index);
}

bool operator==(const Distance& a, const Distance& b)
{
    if (a.index == b.index) return a.power == b.power;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b)
{
    if (a.index == b.index) return compare(a.power, b.power);
    // a^(1/i) vs b^(1/j)  <=>  a^j vs b^i
    const Integer lhs = mp::pow(a.power, b.index);
    const Integer rhs = mp::pow(b.power, a.index);
    return compare(lhs, rhs);
}

Distance lp_distance(const Point& x, const Point& y, unsigned p)
{
    if (p == 0) throw InputError("l_p metric needs p >= 1");
    if (x.dimension() != y.dimension()) {
        throw InputError("distance between points of different dimension: " + x.to_string() + ", " +
                         y.to_string());
    }
    Integer sum = 0;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        const Integer diff = x[i] > y[i] ? Integer(x[i] - y[i]) : Integer(y[i] - x[i]);
        sum += mp::pow(diff, p);
    }
    return {sum, p};
}

Distance lp_distance(const Point& x, const Point& y, const Rational& p)
{
    return lp_distance(x, y, MetricSpec::lp(p).p());
}

std::size_t shortest_path_distance(const DigitalImage& image, const Point& x, const Point& y)
{
    const std::size_t source = image.require_index(x);
    const std::size_t target = image.require_index(y);
    if (!is_connected(image)) {
        throw PreconditionError("shortest-path metric requires a connected image");
    }
    return *bfs_distances(image, source)[target];
}

DistanceTable::DistanceTable(std::shared_ptr<const DigitalImage> image, MetricSpec metric)
    : image_(std::move(image)), metric_(metric), n_(image_->size()), powers_(n_ * n_)
{
    if (metric_.kind() == MetricSpec::Kind::ShortestPath) {
        for (std::size_t i = 0; i < n_; ++i) {
            const auto dist = bfs_distances(*image_, i);
            for (std::size_t j = 0; j < n_; ++j) {
                if (!dist[j]) throw PreconditionError("shortest-path metric requires a connected image");
                powers_[i * n_ + j] = *dist[j];
            }
        }
    } else {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i; j < n_; ++j) {
                const Distance d = lp_distance(image_->point(i), image_->point(j), metric_.p());
                powers_[i * n_ + j] = d.power;
                powers_[j * n_ + i] = d.power;
            }
        }
    }
    for (const auto& power : powers_) {
        if (!values_.contains(power)) values_.emplace(power, Real::root(Rational(power), root_index()));
    }
}

const Real& DistanceTable::value(std::size_t i, std::size_t j) const
{
    return values_.find(power(i, j))->second;
}

Diameter diameter(const DistanceTable& table)
{
    Diameter out{Distance{0, table.root_index()}, std::nullopt};
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (!out.witness || table.power(i, j) > out.value.power) {
                out.value = table.distance(i, j);
                out.witness = IndexPair{i, j};
            }
        }
    }
    return out;
}

DiscretenessGap discreteness_gap(const DistanceTable& table)
{
    DiscretenessGap out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
            if (!out.value || table.power(i, j) < out.value->power) {
                out.value = table.distance(i, j);
                out.witness = IndexPair{i, j};
            }
        }
    }
    return out;
}

MetricAxiomReport check_metric_axioms(const DistanceTable& table)
{
    MetricAxiomReport report;
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const bool zero = table.power(i, j) == 0;
            if (report.identity && zero != (i == j)) {
                report.identity = false;
                report.identity_witness = IndexPair{i, j};
            }
            if (report.symmetry && table.power(i, j) != table.power(j, i)) {
                report.symmetry = false;
                report.symmetry_witness = IndexPair{i, j};
            }
        }
    }
    for (std::size_t x = 0; x < n && report.triangle; ++x) {
        for (std::size_t y = 0; y < n && report.triangle; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (table.value(x, z) > table.value(x, y) + table.value(y, z)) {
                    report.triangle = false;
                    report.triangle_witness = std::vector<std::size_t>{x, y, z};
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace digifix
