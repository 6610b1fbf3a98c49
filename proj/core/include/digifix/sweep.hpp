#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "digifix/exact.hpp"
#include "digifix/maps.hpp"
#include "digifix/metrics.hpp"

namespace digifix {

using MapPredicate = std::function<bool(const SelfMap&)>;

/// Parameters a named premise may read.
struct PredicateParams {
    Rational xi1{1, 5};
    Rational xi2{3, 5};
};

/// Premises: "true", "contraction", "theta", "expansive", "expansive-onto",
/// "rational". Every premise except "true" needs a distance table.
/// Throws InputError for an unknown name or a missing table.
MapPredicate make_premise(const std::string& name, std::shared_ptr<const DistanceTable> table,
                          const PredicateParams& params = {});

/// Conclusions: "constant", "false", "has-fixed-point",
/// "unique-fixed-point", "picard-stabilizes" (from every start),
/// "continuity-agree" (edge criterion equals connected-subset criterion).
MapPredicate make_conclusion(const std::string& name, const DigitalImage& image);

const std::vector<std::string>& premise_names();
const std::vector<std::string>& conclusion_names();

struct Sampling {
    std::uint64_t count = 10000;
    std::uint64_t seed = 1;
};

struct SweepSpec {
    std::shared_ptr<const DigitalImage> image;
    std::optional<MetricSpec> metric;
    std::string premise = "true";
    std::string conclusion = "constant";
    PredicateParams params;
    std::uint64_t budget = 10'000'000;
    std::optional<Sampling> sampling;  // used only when |X|^|X| exceeds the budget
    std::size_t max_counterexamples = 10;
    unsigned workers = 1;
};

struct SweepResult {
    bool exhaustive = true;
    std::uint64_t space = 0;  // |X|^|X|, saturated at UINT64_MAX
    std::uint64_t visited = 0;
    std::uint64_t premise_held = 0;
    std::uint64_t violations = 0;
    /// First counterexamples in enumeration order.
    std::vector<std::vector<std::size_t>> counterexamples;
};

/// |X|^|X| saturated at UINT64_MAX.
std::uint64_t map_space_size(std::size_t n);

/// Table of the map with the given lexicographic rank (entry 0 most
/// significant).
std::vector<std::size_t> map_from_rank(std::size_t n, std::uint64_t rank);

/// Enumerates every self-map in lexicographic table order (or the seeded
/// sample when the space exceeds the budget and sampling is requested),
/// evaluating premise then conclusion. Throws ResourceError when over
/// budget without sampling.
SweepResult sweep(const SweepSpec& spec);

/// Lower-level form taking ready-made predicates.
SweepResult sweep_maps(const std::shared_ptr<const DigitalImage>& image, const MapPredicate& premise,
                       const MapPredicate& conclusion, std::uint64_t budget, const std::optional<Sampling>& sampling,
                       std::size_t max_counterexamples, unsigned workers);

/// Seeded sample of map tables; identical seeds give identical samples.
std::vector<std::vector<std::size_t>> sample_maps(std::size_t n, const Sampling& sampling);

}  // namespace digifix
