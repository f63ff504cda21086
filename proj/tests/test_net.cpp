#include "ballmapper/error.hpp"
#include "ballmapper/net.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ballmapper;

namespace {

PointCloud line(std::vector<double> xs) {
    std::vector<std::vector<double>> rows;
    for (double x : xs) rows.push_back({x});
    return PointCloud::from_rows({"x"}, rows);
}

void expect_valid_cover(const PointCloud& cloud, const BallCover& cover) {
    ASSERT_EQ(cover.point_count(), cloud.size());
    for (std::size_t p = 0; p < cloud.size(); ++p) {
        ASSERT_FALSE(cover.membership[p].empty()) << "point " << p << " uncovered";
        for (std::size_t b : cover.membership[p])
            ASSERT_TRUE(std::binary_search(cover.members[b].begin(), cover.members[b].end(), p));
    }
    for (std::size_t b = 0; b < cover.ball_count(); ++b)
        for (std::size_t p : cover.members[b])
            ASSERT_TRUE(std::binary_search(cover.membership[p].begin(), cover.membership[p].end(), b));
    for (std::size_t a = 0; a < cover.ball_count(); ++a)
        for (std::size_t b = a + 1; b < cover.ball_count(); ++b)
            ASSERT_GT(pairwise_distance(cloud, cover.centers[a], cover.centers[b], cover.metric), cover.epsilon);
}

}  // namespace

TEST(PairwiseDistance, Examples) {
    auto cloud = PointCloud::from_rows({"x", "y"}, {{0, 0}, {3, 4}, {3, 4}});
    EXPECT_DOUBLE_EQ(pairwise_distance(cloud, 0, 1, Metric::euclidean), 5.0);
    EXPECT_DOUBLE_EQ(pairwise_distance(cloud, 0, 1, Metric::manhattan), 7.0);
    EXPECT_EQ(pairwise_distance(cloud, 1, 2, Metric::euclidean), 0.0);
    EXPECT_EQ(pairwise_distance(cloud, 1, 0, Metric::euclidean), pairwise_distance(cloud, 0, 1, Metric::euclidean));
    EXPECT_THROW(pairwise_distance(cloud, 0, 3, Metric::euclidean), ArgumentError);
}

TEST(GreedyNet, SmallRadiusGivesSingletons) {
    auto cover = greedy_net(line({0, 1, 2}), 0.5);
    ASSERT_EQ(cover.ball_count(), 3u);
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(cover.members[b], std::vector<std::size_t>{b});
}

TEST(GreedyNet, HandTraceUnitRadius) {
    // Pick 0: covers {0,1}. First uncovered is 2: covers {1,2}.
    auto cover = greedy_net(line({0, 1, 2}), 1.0);
    EXPECT_EQ(cover.centers, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(cover.members[0], (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(cover.members[1], (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(cover.membership[1], (std::vector<std::size_t>{0, 1}));
}

TEST(GreedyNet, RadiusAtLeastDiameterGivesOneBall) {
    auto cloud = oracle::random_cloud(200, 3, 5);
    double diameter = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            diameter = std::max(diameter, pairwise_distance(cloud, i, j, Metric::euclidean));
    auto cover = greedy_net(cloud, diameter);
    ASSERT_EQ(cover.ball_count(), 1u);
    EXPECT_EQ(cover.members[0].size(), cloud.size());
}

TEST(GreedyNet, BoundaryPointIsCovered) {
    auto cover = greedy_net(line({0, 0.75}), 0.75);
    EXPECT_EQ(cover.ball_count(), 1u);
}

TEST(GreedyNet, DuplicatesShareEveryBall) {
    auto cloud = line({0, 0.5, 0.5, 1.2, 0.5, 3});
    for (double eps : {0.1, 0.6, 0.8, 5.0}) {
        auto cover = greedy_net(cloud, eps);
        EXPECT_EQ(cover.membership[1], cover.membership[2]);
        EXPECT_EQ(cover.membership[1], cover.membership[4]);
    }
}

TEST(GreedyNet, Errors) {
    auto cloud = line({0, 1});
    EXPECT_THROW(greedy_net(cloud, 0.0), ArgumentError);
    EXPECT_THROW(greedy_net(cloud, -1.0), ArgumentError);
    EXPECT_THROW(greedy_net(cloud, std::nan("")), ArgumentError);
}

TEST(GreedyNet, MembersMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto cloud = oracle::random_cloud(50 + seed * 12, 1 + seed % 5, seed);
        for (double eps : {0.3, 0.9, 1.7}) {
            for (auto metric : {Metric::euclidean, Metric::manhattan}) {
                auto cover = greedy_net(cloud, eps, metric);
                auto expect = oracle::ball_members(cloud, cover.centers, eps, metric == Metric::manhattan);
                ASSERT_EQ(cover.members, expect);
                expect_valid_cover(cloud, cover);
            }
        }
    }
}

TEST(GreedyNet, RandomPickOrderIsValidAndDeterministic) {
    auto cloud = oracle::random_cloud(300, 4, 77);
    NetPolicy policy{PickOrder::random_with_seed, 1234};
    auto a = greedy_net(cloud, 1.0, Metric::euclidean, policy);
    auto b = greedy_net(cloud, 1.0, Metric::euclidean, policy);
    EXPECT_EQ(a.centers, b.centers);
    EXPECT_EQ(a.members, b.members);
    expect_valid_cover(cloud, a);

    auto c = greedy_net(cloud, 1.0, Metric::euclidean, {PickOrder::random_with_seed, 1235});
    expect_valid_cover(cloud, c);
    EXPECT_NE(a.centers, c.centers);
    auto first = greedy_net(cloud, 1.0);
    EXPECT_EQ(first.centers.front(), 0u);
}

TEST(GreedyNet, SingletonsBelowMinimumDistance) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto cloud = oracle::random_cloud(120, 3, seed);
        double min_d = std::numeric_limits<double>::max();
        for (std::size_t i = 0; i < cloud.size(); ++i)
            for (std::size_t j = i + 1; j < cloud.size(); ++j)
                min_d = std::min(min_d, pairwise_distance(cloud, i, j, Metric::euclidean));
        auto cover = greedy_net(cloud, min_d * 0.999);
        EXPECT_EQ(cover.ball_count(), cloud.size());
    }
}

TEST(GreedyNet, CoverInvariantsOnLargeClouds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto cloud = oracle::random_cloud(1000, 6, 1000 + seed);
        for (double eps : {0.5, 1.0, 2.0}) expect_valid_cover(cloud, greedy_net(cloud, eps));
    }
}

TEST(Metric, ParseAndPrint) {
    EXPECT_EQ(parse_metric("manhattan"), Metric::manhattan);
    EXPECT_EQ(to_string(Metric::euclidean), "euclidean");
    EXPECT_THROW(parse_metric("cosine"), ArgumentError);
    EXPECT_EQ(parse_pick_order("random"), PickOrder::random_with_seed);
}
