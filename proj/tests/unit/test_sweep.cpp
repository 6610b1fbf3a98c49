#include <gtest/gtest.h>

#include "digifix/audit.hpp"
#include "digifix/classifiers.hpp"
#include "digifix/errors.hpp"
#include "digifix/solvers.hpp"
#include "digifix/sweep.hpp"
#include "generators.hpp"

using namespace digifix;

TEST(MapSpace, SizeAndRanks)
{
    EXPECT_EQ(map_space_size(1), 1u);
    EXPECT_EQ(map_space_size(3), 27u);
    EXPECT_EQ(map_space_size(8), 16777216u);
    EXPECT_EQ(map_space_size(40), UINT64_MAX);
    EXPECT_EQ(map_from_rank(3, 0), (std::vector<std::size_t>{0, 0, 0}));
    EXPECT_EQ(map_from_rank(3, 1), (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(map_from_rank(3, 26), (std::vector<std::size_t>{2, 2, 2}));
}

TEST(MapSpace, RanksFollowLexicographicOrder)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        std::uint64_t rank = 0;
        testkit::for_each_table(n, [&](const std::vector<std::size_t>& t) { EXPECT_EQ(map_from_rank(n, rank++), t); });
        EXPECT_EQ(rank, map_space_size(n));
    }
}

TEST(Sweep, ContractionOnTwoPoints)
{
    SweepSpec spec;
    spec.image = segment_image(1);
    spec.metric = MetricSpec::lp(1u);
    spec.premise = "contraction";
    spec.conclusion = "constant";
    const auto r = sweep(spec);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.visited, 4u);
    EXPECT_EQ(r.premise_held, 2u);
    EXPECT_EQ(r.violations, 0u);
}

TEST(Sweep, SwapHasNoFixedPoint)
{
    SweepSpec spec;
    spec.image = segment_image(1);
    spec.premise = "true";
    spec.conclusion = "has-fixed-point";
    const auto r = sweep(spec);
    EXPECT_EQ(r.violations, 1u);
    ASSERT_EQ(r.counterexamples.size(), 1u);
    EXPECT_EQ(r.counterexamples[0], (std::vector<std::size_t>{1, 0}));
}

TEST(Sweep, ExpansiveIsVacuous)
{
    for (int k = 1; k <= 3; ++k) {
        SweepSpec spec;
        spec.image = segment_image(k);
        spec.metric = MetricSpec::lp(2u);
        spec.premise = "expansive";
        spec.conclusion = "false";
        const auto r = sweep(spec);
        EXPECT_EQ(r.premise_held, 0u);
        EXPECT_EQ(r.violations, 0u);
    }
}

TEST(Sweep, ThreePointSegmentHasThreeContractions)
{
    SweepSpec spec;
    spec.image = segment_image(2);
    spec.metric = MetricSpec::lp(1u);
    spec.premise = "contraction";
    spec.conclusion = "constant";
    const auto r = sweep(spec);
    EXPECT_EQ(r.visited, 27u);
    EXPECT_EQ(r.premise_held, 3u);
    EXPECT_EQ(r.violations, 0u);
}

TEST(Sweep, Errors)
{
    SweepSpec spec;
    spec.image = segment_image(2);
    spec.premise = "contraction";
    EXPECT_THROW(sweep(spec), InputError);  // no metric
    spec.metric = MetricSpec::lp(1u);
    spec.premise = "nonsense";
    EXPECT_THROW(sweep(spec), InputError);
    spec.premise = "true";
    spec.conclusion = "nonsense";
    EXPECT_THROW(sweep(spec), InputError);
    spec.conclusion = "constant";
    spec.budget = 10;
    EXPECT_THROW(sweep(spec), ResourceError);
    spec.sampling = Sampling{50, 3};
    const auto r = sweep(spec);
    EXPECT_FALSE(r.exhaustive);
    EXPECT_EQ(r.visited, 50u);
}

TEST(Sweep, SamplingIsSeeded)
{
    const auto a = sample_maps(5, {100, 42});
    const auto b = sample_maps(5, {100, 42});
    const auto c = sample_maps(5, {100, 43});
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (const auto& t : a) {
        ASSERT_EQ(t.size(), 5u);
        for (std::size_t v : t) EXPECT_LT(v, 5u);
    }
}

TEST(Sweep, WorkersDoNotChangeResults)
{
    SweepSpec spec;
    spec.image = segment_image(4);
    spec.premise = "true";
    spec.conclusion = "unique-fixed-point";
    spec.max_counterexamples = 25;
    const auto one = sweep(spec);
    spec.workers = 3;
    const auto three = sweep(spec);
    EXPECT_EQ(one.visited, three.visited);
    EXPECT_EQ(one.violations, three.violations);
    EXPECT_EQ(one.counterexamples, three.counterexamples);
    EXPECT_EQ(one.visited, 3125u);
}

TEST(Sweep, PropertyCountersAndCounterexamplesReverify)
{
    // Sweep completeness (visited == |X|^|X|) and soundness (every
    // counterexample satisfies the premise and fails the conclusion under
    // direct classifier calls).
    testkit::Rng rng(1);
    const std::vector<std::string> premises{"true", "contraction", "theta", "rational"};
    const std::vector<std::string> conclusions{"constant", "has-fixed-point", "unique-fixed-point", "picard-stabilizes"};
    for (int trial = 0; trial < 40; ++trial) {
        const auto img = testkit::random_image(rng, {2, 3, 1, 5});
        const auto table = std::make_shared<const DistanceTable>(img, MetricSpec::lp(1 + rng() % 2));
        SweepSpec spec;
        spec.image = img;
        spec.metric = table->metric();
        spec.premise = premises[rng() % premises.size()];
        spec.conclusion = conclusions[rng() % conclusions.size()];
        spec.max_counterexamples = 1000;
        const auto r = sweep(spec);
        EXPECT_EQ(r.visited, map_space_size(img->size()));

        std::uint64_t held = 0, violations = 0;
        std::vector<std::vector<std::size_t>> violating;
        testkit::for_each_table(img->size(), [&](const std::vector<std::size_t>& t) {
            const SelfMap f(img, t);
            bool p = true;
            if (spec.premise == "contraction") p = contraction_certificate(f, *table).feasible;
            if (spec.premise == "theta") p = theta_envelope(f, *table).feasible;
            if (spec.premise == "rational") {
                p = rational_contraction_check(f, *table, RationalContractionParams::make(Rational(1, 5), Rational(3, 5)))
                        .holds;
            }
            if (!p) return;
            ++held;
            bool c = true;
            if (spec.conclusion == "constant") c = f.is_constant();
            if (spec.conclusion == "has-fixed-point") c = !fixed_point_indices(f).empty();
            if (spec.conclusion == "unique-fixed-point") c = fixed_point_indices(f).size() == 1;
            if (spec.conclusion == "picard-stabilizes") {
                for (std::size_t x = 0; x < img->size(); ++x) c = c && picard(f, x).status == Orbit::Status::Stabilized;
            }
            if (!c) {
                ++violations;
                if (violating.size() < spec.max_counterexamples) violating.push_back(t);
            }
        });
        EXPECT_EQ(r.premise_held, held) << spec.premise;
        EXPECT_EQ(r.violations, violations) << spec.premise << " / " << spec.conclusion;
        EXPECT_EQ(r.counterexamples, violating);
    }
}
