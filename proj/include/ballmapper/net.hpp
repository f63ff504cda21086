#pragma once

#include "ballmapper/cloud.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ballmapper {

enum class Metric { euclidean, manhattan };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view text);

enum class PickOrder { first_uncovered_by_row, random_with_seed };

std::string_view to_string(PickOrder p);
PickOrder parse_pick_order(std::string_view text);

// How Algorithm "pick an uncovered point" chooses among candidates.
struct NetPolicy {
    PickOrder pick_order = PickOrder::first_uncovered_by_row;
    std::uint64_t seed = 0;  // random_with_seed only
};

double distance(std::span<const double> a, std::span<const double> b, Metric metric);
double pairwise_distance(const PointCloud& cloud, std::size_t i, std::size_t j, Metric metric);

/// Greedy epsilon-net cover of a point cloud.
///
/// Points are positions 0..n-1 in the cloud. Ball b is centred on point
/// centers[b]; members[b] lists, ascending, every point within epsilon of
/// that centre (closed ball). membership[p] lists, ascending, every ball
/// containing p. Ball ids follow centre creation order.
struct BallCover {
    double epsilon = 0.0;
    Metric metric = Metric::euclidean;
    NetPolicy policy;
    std::vector<std::size_t> centers;
    std::vector<std::vector<std::size_t>> membership;
    std::vector<std::vector<std::size_t>> members;

    std::size_t ball_count() const { return centers.size(); }
    std::size_t point_count() const { return membership.size(); }
};

BallCover greedy_net(const PointCloud& cloud, double epsilon, Metric metric = Metric::euclidean,
                     NetPolicy policy = {});

}  // namespace ballmapper
