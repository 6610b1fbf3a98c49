#include "digifix/sweep.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "digifix/classifiers.hpp"
#include "digifix/errors.hpp"
#include "digifix/solvers.hpp"

namespace digifix {

const std::vector<std::string>& premise_names()
{
    static const std::vector<std::string> names{"true", "contraction", "theta", "expansive", "expansive-onto",
                                                "rational"};
    return names;
}

const std::vector<std::string>& conclusion_names()
{
    static const std::vector<std::string> names{"constant",          "false", "has-fixed-point", "unique-fixed-point",
                                                "picard-stabilizes", "continuity-agree"};
    return names;
}

MapPredicate make_premise(const std::string& name, std::shared_ptr<const DistanceTable> table,
                          const PredicateParams& params)
{
    if (name == "true") return [](const SelfMap&) { return true; };
    if (std::find(premise_names().begin(), premise_names().end(), name) == premise_names().end()) {
        throw InputError("unknown premise '" + name + "'");
    }
    if (!table) throw InputError("premise '" + name + "' needs a metric");
    if (name == "contraction") {
        return [table](const SelfMap& f) { return contraction_certificate(f, *table).feasible; };
    }
    if (name == "theta") {
        return [table](const SelfMap& f) { return theta_envelope(f, *table).feasible; };
    }
    if (name == "expansive") {
        return [table](const SelfMap& f) { return expansive_certificate(f, *table).feasible; };
    }
    if (name == "expansive-onto") {
        return [table](const SelfMap& f) { return is_onto(f) && expansive_certificate(f, *table).feasible; };
    }
    auto rational = std::make_shared<RationalContractionParams>(RationalContractionParams::make(params.xi1, params.xi2));
    return [table, rational](const SelfMap& f) { return rational_contraction_check(f, *table, *rational).holds; };
}

MapPredicate make_conclusion(const std::string& name, const DigitalImage& image)
{
    if (name == "constant") return [](const SelfMap& f) { return f.is_constant(); };
    if (name == "false") return [](const SelfMap&) { return false; };
    if (name == "has-fixed-point") return [](const SelfMap& f) { return !fixed_point_indices(f).empty(); };
    if (name == "unique-fixed-point") {
        return [](const SelfMap& f) { return unique_fixed_point(f).kind == FixedPointClass::Kind::Unique; };
    }
    if (name == "picard-stabilizes") {
        return [](const SelfMap& f) {
            for (std::size_t x = 0; x < f.size(); ++x) {
                if (picard(f, x).status != Orbit::Status::Stabilized) return false;
            }
            return true;
        };
    }
    if (name == "continuity-agree") {
        auto subsets = std::make_shared<ConnectedSubsets>(image);
        return [subsets](const SelfMap& f) {
            return is_continuous_edgewise(f) == subsets->preserves_connectedness(f.table());
        };
    }
    throw InputError("unknown conclusion '" + name + "'");
}

std::uint64_t map_space_size(std::size_t n)
{
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (n != 0 && total > cap / n) return cap;
        total *= n;
    }
    return total;
}

std::vector<std::size_t> map_from_rank(std::size_t n, std::uint64_t rank)
{
    std::vector<std::size_t> table(n, 0);
    for (std::size_t k = n; k-- > 0;) {
        table[k] = static_cast<std::size_t>(rank % n);
        rank /= n;
    }
    return table;
}

std::vector<std::vector<std::size_t>> sample_maps(std::size_t n, const Sampling& sampling)
{
    std::mt19937_64 rng(sampling.seed);
    std::vector<std::vector<std::size_t>> out(sampling.count, std::vector<std::size_t>(n));
    for (auto& table : out) {
        for (auto& v : table) v = static_cast<std::size_t>(rng() % n);
    }
    return out;
}

namespace {

struct Chunk {
    std::uint64_t visited = 0;
    std::uint64_t premise_held = 0;
    std::uint64_t violations = 0;
    std::vector<std::vector<std::size_t>> counterexamples;
};

void visit(const std::shared_ptr<const DigitalImage>& image, const std::vector<std::size_t>& table,
           const MapPredicate& premise, const MapPredicate& conclusion, std::size_t keep, Chunk& chunk)
{
    const SelfMap f(image, table);
    ++chunk.visited;
    if (!premise(f)) return;
    ++chunk.premise_held;
    if (conclusion(f)) return;
    ++chunk.violations;
    if (chunk.counterexamples.size() < keep) chunk.counterexamples.push_back(table);
}

template <class Work>
std::vector<Chunk> run_chunks(std::uint64_t total, unsigned workers, Work work)
{
    workers = std::max(1u, workers);
    if (total < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
    std::vector<Chunk> chunks(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto body = [&](unsigned w) {
        const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t end = begin + total / workers + (w < total % workers ? 1 : 0);
        try {
            work(begin, end, chunks[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(body, w);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return chunks;
}

}  // namespace

SweepResult sweep_maps(const std::shared_ptr<const DigitalImage>& image, const MapPredicate& premise,
                       const MapPredicate& conclusion, std::uint64_t budget, const std::optional<Sampling>& sampling,
                       std::size_t max_counterexamples, unsigned workers)
{
    const std::size_t n = image->size();
    SweepResult result;
    result.space = map_space_size(n);
    std::vector<Chunk> chunks;
    if (result.space <= budget) {
        chunks = run_chunks(result.space, workers, [&](std::uint64_t begin, std::uint64_t end, Chunk& chunk) {
            if (begin >= end) return;
            std::vector<std::size_t> table = map_from_rank(n, begin);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                visit(image, table, premise, conclusion, max_counterexamples, chunk);
                for (std::size_t k = n; k-- > 0;) {
                    if (++table[k] < n) break;
                    table[k] = 0;
                }
            }
        });
    } else if (sampling) {
        result.exhaustive = false;
        const auto samples = sample_maps(n, *sampling);
        chunks = run_chunks(samples.size(), workers, [&](std::uint64_t begin, std::uint64_t end, Chunk& chunk) {
            for (std::uint64_t s = begin; s < end; ++s) visit(image, samples[s], premise, conclusion, max_counterexamples, chunk);
        });
    } else {
        throw ResourceError("map space |X|^|X| = " +
                            (result.space == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                       : std::to_string(result.space)) +
                            " exceeds the budget " + std::to_string(budget) + "; request sampling");
    }
    for (auto& chunk : chunks) {
        result.visited += chunk.visited;
        result.premise_held += chunk.premise_held;
        result.violations += chunk.violations;
        for (auto& table : chunk.counterexamples) {
            if (result.counterexamples.size() < max_counterexamples) result.counterexamples.push_back(std::move(table));
        }
    }
    return result;
}

SweepResult sweep(const SweepSpec& spec)
{
    if (!spec.image) throw InputError("sweep without an image");
    std::shared_ptr<const DistanceTable> table;
    if (spec.metric) table = std::make_shared<const DistanceTable>(spec.image, *spec.metric);
    const MapPredicate premise = make_premise(spec.premise, table, spec.params);
    const MapPredicate conclusion = make_conclusion(spec.conclusion, *spec.image);
    return sweep_maps(spec.image, premise, conclusion, spec.budget, spec.sampling, spec.max_counterexamples,
                      spec.workers);
}

}  // namespace digifix
