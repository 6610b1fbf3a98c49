#include <gtest/gtest.h>

#include <algorithm>

#include "digifix/classifiers.hpp"
#include "digifix/errors.hpp"
#include "digifix/solvers.hpp"
#include "generators.hpp"

using namespace digifix;

namespace {

std::shared_ptr<const DigitalImage> line(std::initializer_list<Coord> xs)
{
    std::vector<Point> pts;
    for (Coord x : xs) pts.push_back(Point{x});
    return make_image(pts, 1);
}

std::vector<std::size_t> brute_fixed(const SelfMap& f)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f(i) == i) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST(Picard, Examples)
{
    const auto gap = line({0, 1, 3});
    const SelfMap f(gap, {0, 0, 1});
    const Orbit orbit = picard(f, 2);
    EXPECT_EQ(orbit.points, (std::vector<std::size_t>{2, 1, 0, 0}));
    EXPECT_EQ(orbit.status, Orbit::Status::Stabilized);
    EXPECT_EQ(orbit.fixed_point(), 0u);
    EXPECT_EQ(orbit.step, 2u);

    const Orbit id = picard(SelfMap::identity(gap), 1);
    EXPECT_EQ(id.status, Orbit::Status::Stabilized);
    EXPECT_EQ(id.fixed_point(), 1u);
    EXPECT_EQ(id.step, 0u);

    const auto two = line({0, 1});
    const Orbit swap = picard(SelfMap(two, {1, 0}), 0);
    EXPECT_EQ(swap.status, Orbit::Status::Cycle);
    EXPECT_EQ(swap.period, 2u);
    EXPECT_FALSE(swap.fixed_point());
}

TEST(Picard, Budget)
{
    const auto img = line({0, 1, 2, 3});
    const SelfMap shift(img, {1, 2, 3, 3});
    const Orbit cut = picard(shift, 0, 2);
    EXPECT_EQ(cut.status, Orbit::Status::BudgetExhausted);
    EXPECT_EQ(cut.points.size(), 3u);
    EXPECT_EQ(picard(shift, 0).status, Orbit::Status::Stabilized);
    EXPECT_EQ(to_string(Orbit::Status::Stabilized), "STABILIZED");
    EXPECT_EQ(to_string(Orbit::Status::Cycle), "CYCLE");
    EXPECT_EQ(to_string(Orbit::Status::BudgetExhausted), "BUDGET_EXHAUSTED");
}

TEST(Preimage, Examples)
{
    const auto two = line({0, 1});
    const Orbit id = preimage_chain(SelfMap::identity(two), 1);
    EXPECT_EQ(id.status, Orbit::Status::Stabilized);
    EXPECT_EQ(id.fixed_point(), 1u);

    const Orbit swap = preimage_chain(SelfMap(two, {1, 0}), 0);
    EXPECT_EQ(swap.status, Orbit::Status::Cycle);
    EXPECT_EQ(swap.period, 2u);
    EXPECT_EQ((std::vector<std::size_t>(swap.points.begin(), swap.points.begin() + 3)),
              (std::vector<std::size_t>{0, 1, 0}));

    const auto three = line({0, 1, 2});
    const SelfMap cycle(three, {1, 2, 0});
    const Orbit c = preimage_chain(cycle, 0);
    EXPECT_EQ(c.status, Orbit::Status::Cycle);
    EXPECT_EQ(c.period, 3u);
    EXPECT_EQ(c.points[1], 2u);  // inverse cycle
    EXPECT_TRUE(fixed_points(cycle).empty());

    EXPECT_THROW(preimage_chain(SelfMap::constant(two, 0), 0), PreconditionError);
}

TEST(UniqueFixedPoint, Examples)
{
    const auto gap = line({0, 1, 3});
    const auto u = unique_fixed_point(SelfMap(gap, {0, 0, 1}));
    EXPECT_EQ(u.kind, FixedPointClass::Kind::Unique);
    EXPECT_EQ(u.points, std::vector<std::size_t>{0});

    const auto two = line({0, 1});
    EXPECT_EQ(unique_fixed_point(SelfMap::identity(two)).kind, FixedPointClass::Kind::Multiple);
    EXPECT_EQ(unique_fixed_point(SelfMap::identity(two)).points.size(), 2u);
    EXPECT_EQ(unique_fixed_point(SelfMap(two, {1, 0})).kind, FixedPointClass::Kind::None);
    EXPECT_EQ(to_string(FixedPointClass::Kind::Unique), "UNIQUE");
}

TEST(CommonFixedPoints, Examples)
{
    const auto img = line({0, 1, 2});
    EXPECT_EQ(common_fixed_points(SelfMap::identity(img), SelfMap::constant(img, 1)), std::vector<std::size_t>{1});
    EXPECT_EQ(common_fixed_points(SelfMap::constant(img, 2), SelfMap::constant(img, 2)), std::vector<std::size_t>{2});
    const auto two = line({0, 1});
    EXPECT_TRUE(common_fixed_points(SelfMap(two, {1, 0}), SelfMap::identity(two)).empty());
    EXPECT_THROW(common_fixed_points(SelfMap::identity(two), SelfMap::identity(img)), InputError);
}

TEST(Picard, PropertyOrbitInvariants)
{
    testkit::Rng rng(1);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto img = testkit::random_image(rng, {3, 3, 1, 8});
        const SelfMap f = testkit::random_map(rng, img);
        const std::size_t x0 = rng() % img->size();
        const Orbit orbit = picard(f, x0);
        ASSERT_NE(orbit.status, Orbit::Status::BudgetExhausted);
        EXPECT_EQ(orbit.points.front(), x0);
        for (std::size_t k = 0; k + 1 < orbit.points.size(); ++k) EXPECT_EQ(orbit.points[k + 1], f(orbit.points[k]));
        const auto fix = brute_fixed(f);
        if (orbit.status == Orbit::Status::Stabilized) {
            EXPECT_NE(std::find(fix.begin(), fix.end(), *orbit.fixed_point()), fix.end());
        } else {
            EXPECT_GE(orbit.period, 2u);
            EXPECT_EQ(orbit.points[orbit.step], orbit.points[orbit.step + orbit.period]);
        }
        EXPECT_EQ(picard(f, x0).points, orbit.points);  // deterministic
    }
}

TEST(Preimage, PropertyChainOnBijections)
{
    testkit::Rng rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto img = testkit::random_image(rng, {3, 3, 1, 8});
        const SelfMap f = testkit::random_bijection(rng, img);
        const std::size_t x0 = rng() % img->size();
        const Orbit orbit = preimage_chain(f, x0);
        ASSERT_NE(orbit.status, Orbit::Status::BudgetExhausted);
        for (std::size_t k = 0; k + 1 < orbit.points.size(); ++k) EXPECT_EQ(f(orbit.points[k + 1]), orbit.points[k]);
        if (orbit.status == Orbit::Status::Stabilized) EXPECT_EQ(f(*orbit.fixed_point()), *orbit.fixed_point());
    }
}

TEST(Picard, PropertyContractionsConvergeToUniquePoint)
{
    testkit::Rng rng(3);
    std::size_t checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto img = testkit::random_image(rng, {2, 4, 1, 5});
        const DistanceTable table(img, MetricSpec::lp(1 + rng() % 2));
        testkit::for_each_table(img->size(), [&](const std::vector<std::size_t>& t) {
            const SelfMap f(img, t);
            if (!contraction_certificate(f, table).feasible) return;
            ++checked;
            const auto unique = unique_fixed_point(f);
            EXPECT_EQ(unique.kind, FixedPointClass::Kind::Unique);
            for (std::size_t x0 = 0; x0 < img->size(); ++x0) {
                const Orbit orbit = picard(f, x0);
                ASSERT_EQ(orbit.status, Orbit::Status::Stabilized);
                EXPECT_LE(orbit.step, img->size());
                EXPECT_EQ(orbit.fixed_point(), unique.points.front());
                for (std::size_t k = 0; k + 2 < orbit.points.size(); ++k) {
                    EXPECT_GE(table.distance(orbit.points[k], orbit.points[k + 1]),
                              table.distance(orbit.points[k + 1], orbit.points[k + 2]));
                }
            }
        });
        if (trial > 40) break;
    }
    EXPECT_GT(checked, 0u);
}
