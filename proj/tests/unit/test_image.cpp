#include <gtest/gtest.h>

#include "digifix/errors.hpp"
#include "digifix/image.hpp"
#include "digifix/metrics.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace digifix;

namespace {

std::vector<Point> line(std::initializer_list<Coord> xs)
{
    std::vector<Point> out;
    for (Coord x : xs) out.push_back(Point{x});
    return out;
}

}  // namespace

TEST(Point, ParseAndPrint)
{
    EXPECT_EQ(Point::parse("(3,5)"), (Point{3, 5}));
    EXPECT_EQ(Point::parse("(3)"), Point{3});
    EXPECT_EQ(Point::parse("(3,)"), Point{3});
    EXPECT_EQ(Point::parse("3"), Point{3});
    EXPECT_EQ(Point::parse(" ( -2 , 7 ) "), (Point{-2, 7}));
    EXPECT_EQ((Point{3, 5}).to_string(), "(3,5)");
    EXPECT_EQ(Point{3}.to_string(), "(3)");
    EXPECT_THROW(Point::parse("(1.5)"), InputError);
    EXPECT_THROW(Point::parse("(a,b)"), InputError);
    EXPECT_THROW(Point::parse("()"), InputError);
}

TEST(Adjacency, Examples)
{
    EXPECT_TRUE(adjacent_cu({0, 0}, {1, 0}, 1));
    EXPECT_FALSE(adjacent_cu({0, 0}, {1, 1}, 1));
    EXPECT_TRUE(adjacent_cu({0, 0}, {1, 1}, 2));
    EXPECT_FALSE(adjacent_cu({0, 0}, {0, 0}, 1));
    EXPECT_FALSE(adjacent_cu({0, 0}, {2, 0}, 2));
}

TEST(Adjacency, Errors)
{
    EXPECT_THROW(adjacent_cu({0, 0}, {0}, 1), InputError);
    EXPECT_THROW(adjacent_cu({0, 0}, {1, 0}, 0), InputError);
    EXPECT_THROW(adjacent_cu({0, 0}, {1, 0}, 3), InputError);
}

TEST(Adjacency, PropertySymmetricMonotoneMatchesOracle)
{
    testkit::Rng rng(1);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t dim = 1 + rng() % 4;
        const Point x = testkit::random_point(rng, dim, -2, 2);
        const Point y = testkit::random_point(rng, dim, -2, 2);
        for (int u = 1; u <= static_cast<int>(dim); ++u) {
            const bool a = adjacent_cu(x, y, u);
            EXPECT_EQ(a, adjacent_cu(y, x, u));
            EXPECT_EQ(a, oracle::adjacent(x, y, u));
            if (a) {
                for (int w = u; w <= static_cast<int>(dim); ++w) EXPECT_TRUE(adjacent_cu(x, y, w));
            }
        }
    }
}

TEST(BuildImage, Examples)
{
    const auto seg = build_image(line({0, 1, 2}), 1);
    EXPECT_EQ(seg.size(), 3u);
    const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}};
    EXPECT_EQ(seg.edges(), edges);

    const auto diag = build_image({{0, 0}, {1, 1}}, 2);
    EXPECT_EQ(diag.edges().size(), 1u);

    EXPECT_THROW(build_image(line({0, 0}), 1), InputError);
}

TEST(BuildImage, RejectsBadInput)
{
    EXPECT_THROW(build_image({}, 1), InputError);
    EXPECT_THROW(build_image({{0, 0}, {1}}, 1), InputError);
    EXPECT_THROW(build_image(line({0, 1}), 2), InputError);
    EXPECT_THROW(build_image(line({0, 1}), 0), InputError);
    EXPECT_THROW(build_image(line({0, kMaxCoordinate + 1}), 1), InputError);
    EXPECT_NO_THROW(build_image(line({-kMaxCoordinate, kMaxCoordinate}), 1));
}

TEST(BuildImage, SortsPointsLexicographically)
{
    const auto img = build_image({{1, 0}, {0, 1}, {0, 0}}, 1);
    EXPECT_EQ(img.point(0), (Point{0, 0}));
    EXPECT_EQ(img.point(1), (Point{0, 1}));
    EXPECT_EQ(img.point(2), (Point{1, 0}));
    EXPECT_EQ(img.require_index({1, 0}), 2u);
    EXPECT_THROW(img.require_index({5, 5}), InputError);
}

TEST(BuildImage, PropertyAdjacencyIsSymmetricIrreflexive)
{
    testkit::Rng rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const auto img = testkit::random_image(rng);
        const auto adj = oracle::adjacency(img->points(), img->u());
        for (std::size_t i = 0; i < img->size(); ++i) {
            EXPECT_FALSE(img->adjacent(i, i));
            for (std::size_t j = 0; j < img->size(); ++j) {
                EXPECT_EQ(img->adjacent(i, j), img->adjacent(j, i));
                EXPECT_EQ(img->adjacent(i, j), adj[i][j]);
            }
            for (std::size_t j : img->neighbors(i)) EXPECT_TRUE(adj[i][j]);
        }
    }
}

TEST(Connectivity, Examples)
{
    EXPECT_TRUE(is_connected(build_image(line({0, 1, 2}), 1)));
    EXPECT_FALSE(is_connected(build_image(line({0, 2}), 1)));
    EXPECT_TRUE(is_connected(build_image(line({5}), 1)));
}

TEST(Connectivity, PropertyMatchesUnionFind)
{
    testkit::Rng rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const auto img = testkit::random_image(rng);
        EXPECT_EQ(is_connected(*img), oracle::connected(img->points(), img->u()));
        const auto labels = component_labels(*img);
        oracle::UnionFind uf(img->size());
        for (std::size_t i = 0; i < img->size(); ++i) {
            for (std::size_t j = i + 1; j < img->size(); ++j) {
                if (oracle::adjacent(img->point(i), img->point(j), img->u())) uf.join(i, j);
            }
        }
        for (std::size_t i = 0; i < img->size(); ++i) {
            for (std::size_t j = 0; j < img->size(); ++j) {
                EXPECT_EQ(labels[i] == labels[j], uf.find(i) == uf.find(j));
            }
        }
    }
}

TEST(KappaPath, Examples)
{
    const auto seg = build_image(line({0, 1, 2}), 1);
    const auto path = kappa_path(seg, Point{0}, Point{2});
    ASSERT_TRUE(path);
    EXPECT_EQ(path->vertices, line({0, 1, 2}));
    EXPECT_EQ(path->length(), 2u);

    const auto self = kappa_path(seg, Point{1}, Point{1});
    ASSERT_TRUE(self);
    EXPECT_EQ(self->vertices, line({1}));
    EXPECT_EQ(self->length(), 0u);

    EXPECT_FALSE(kappa_path(build_image(line({0, 2}), 1), Point{0}, Point{2}));
    EXPECT_THROW(kappa_path(seg, Point{0}, Point{7}), InputError);
}

TEST(KappaPath, TieBreakIsLexicographic)
{
    // Two shortest paths from (0,0) to (1,1) under c_1; the lexicographic
    // neighbour (0,1) comes first.
    const auto sq = build_image({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 1);
    const auto path = kappa_path(sq, {0, 0}, {1, 1});
    ASSERT_TRUE(path);
    EXPECT_EQ(path->vertices[1], (Point{0, 1}));
}

TEST(KappaPath, PropertyShortestValidAndMatchesFloydWarshall)
{
    testkit::Rng rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const auto img = testkit::random_image(rng);
        const auto hops = oracle::floyd_warshall(img->points(), img->u());
        for (std::size_t i = 0; i < img->size(); ++i) {
            for (std::size_t j = 0; j < img->size(); ++j) {
                const auto path = kappa_path(*img, img->point(i), img->point(j));
                if (hops[i][j] == oracle::kInf) {
                    EXPECT_FALSE(path);
                    continue;
                }
                ASSERT_TRUE(path);
                EXPECT_EQ(path->length(), hops[i][j]);
                EXPECT_EQ(path->vertices.front(), img->point(i));
                EXPECT_EQ(path->vertices.back(), img->point(j));
                for (std::size_t k = 0; k + 1 < path->vertices.size(); ++k) {
                    EXPECT_TRUE(img->contains(path->vertices[k]));
                    EXPECT_TRUE(oracle::adjacent(path->vertices[k], path->vertices[k + 1], img->u()));
                }
            }
        }
    }
}

TEST(KappaPath, PropertyLengthEqualsShortestPathDistance)
{
    testkit::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto img = testkit::random_connected_image(rng, 3, 1 + rng() % 10);
        for (std::size_t i = 0; i < img->size(); ++i) {
            for (std::size_t j = 0; j < img->size(); ++j) {
                const auto path = kappa_path(*img, img->point(i), img->point(j));
                ASSERT_TRUE(path);
                EXPECT_EQ(path->length(), shortest_path_distance(*img, img->point(i), img->point(j)));
            }
        }
    }
}

TEST(Bfs, UnreachableIsEmpty)
{
    const auto img = build_image(line({0, 1, 5}), 1);
    const auto d = bfs_distances(img, 0);
    EXPECT_EQ(d[0], 0u);
    EXPECT_EQ(d[1], 1u);
    EXPECT_FALSE(d[2]);
}
