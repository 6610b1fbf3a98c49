#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digifix/exact.hpp"
#include "digifix/image.hpp"

namespace digifix {

/// Which metric a digital metric space carries. There is deliberately no
/// default: every operation that needs d names it.
class MetricSpec {
public:
    enum class Kind { Lp, ShortestPath };

    /// l_p for an integer p >= 1. Throws InputError for p == 0.
    static MetricSpec lp(unsigned p);
    /// l_p from an exact rational; rejects p < 1 (not a metric) and
    /// non-integer p.
    static MetricSpec lp(const Rational& p);
    static MetricSpec shortest_path() { return MetricSpec(Kind::ShortestPath, 0); }

    Kind kind() const { return kind_; }
    /// Exponent of an l_p metric; 0 for the shortest-path metric.
    unsigned p() const { return p_; }
    /// Distances are stored as power^(1/root_index()).
    unsigned root_index() const { return kind_ == Kind::Lp ? p_ : 1; }

    /// "l1", "l2", ..., "shortest_path".
    std::string name() const;

    bool operator==(const MetricSpec&) const = default;

private:
    MetricSpec(Kind kind, unsigned p) : kind_(kind), p_(p) {}

    Kind kind_;
    unsigned p_;
};

/// An exact distance power^(1/index). For l_p, power is sum |x_i - y_i|^p;
/// comparisons never take the root.
struct Distance {
    Integer power = 0;
    unsigned index = 1;

    Real value() const { return Real::root(Rational(power), index); }
    double approx() const;
    std::string to_string() const { return value().to_string(); }
    bool is_zero() const { return power == 0; }

    friend bool operator==(const Distance& a, const Distance& b);
    friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);
};

Distance lp_distance(const Point& x, const Point& y, unsigned p);
Distance lp_distance(const Point& x, const Point& y, const Rational& p);

/// Graph distance in the c_u adjacency graph. Throws PreconditionError
/// when the image is disconnected, InputError when x or y is missing.
std::size_t shortest_path_distance(const DigitalImage& image, const Point& x, const Point& y);

/// All-pairs exact distances of one metric on one image. Immutable.
class DistanceTable {
public:
    /// Throws PreconditionError for the shortest-path metric on a
    /// disconnected image.
    DistanceTable(std::shared_ptr<const DigitalImage> image, MetricSpec metric);

    const DigitalImage& image() const { return *image_; }
    const std::shared_ptr<const DigitalImage>& image_ptr() const { return image_; }
    const MetricSpec& metric() const { return metric_; }
    std::size_t size() const { return n_; }
    unsigned root_index() const { return metric_.root_index(); }

    /// d(i, j)^root_index as an exact integer.
    const Integer& power(std::size_t i, std::size_t j) const { return powers_[i * n_ + j]; }
    Distance distance(std::size_t i, std::size_t j) const { return {power(i, j), root_index()}; }
    /// d(i, j) as an exact real.
    const Real& value(std::size_t i, std::size_t j) const;

private:
    std::shared_ptr<const DigitalImage> image_;
    MetricSpec metric_;
    std::size_t n_ = 0;
    std::vector<Integer> powers_;
    std::map<Integer, Real> values_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

struct Diameter {
    Distance value;
    std::optional<IndexPair> witness;  // lexicographically least maximizing pair
};

Diameter diameter(const DistanceTable& table);

/// Smallest positive distance. Every epsilon at or below it witnesses
/// uniform discreteness. A singleton has no positive distance; its gap is
/// reported as infinite (value empty).
struct DiscretenessGap {
    std::optional<Distance> value;
    std::optional<IndexPair> witness;

    bool is_infinite() const { return !value.has_value(); }
};

DiscretenessGap discreteness_gap(const DistanceTable& table);

/// Metric axioms checked on every pair and triple.
struct MetricAxiomReport {
    bool identity = true;  // d(x,x) = 0 and d(x,y) > 0 for x != y
    bool symmetry = true;
    bool triangle = true;
    std::optional<IndexPair> identity_witness;
    std::optional<IndexPair> symmetry_witness;
    std::optional<std::vector<std::size_t>> triangle_witness;  // {x, y, z}

    bool ok() const { return identity && symmetry && triangle; }
};

MetricAxiomReport check_metric_axioms(const DistanceTable& table);

}  // namespace digifix
