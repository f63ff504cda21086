#include "ballmapper/net.hpp"

#include "ballmapper/error.hpp"
#include "ballmapper/random.hpp"

#include <cmath>
#include <numeric>

namespace ballmapper {

std::string_view to_string(Metric m) {
    return m == Metric::euclidean ? "euclidean" : "manhattan";
}

Metric parse_metric(std::string_view text) {
    if (text == "euclidean") return Metric::euclidean;
    if (text == "manhattan") return Metric::manhattan;
    throw ArgumentError("unknown metric '" + std::string(text) + "'");
}

std::string_view to_string(PickOrder p) {
    return p == PickOrder::first_uncovered_by_row ? "first_uncovered_by_row" : "random_with_seed";
}

PickOrder parse_pick_order(std::string_view text) {
    if (text == "first_uncovered_by_row" || text == "first") return PickOrder::first_uncovered_by_row;
    if (text == "random_with_seed" || text == "random") return PickOrder::random_with_seed;
    throw ArgumentError("unknown pick order '" + std::string(text) + "'");
}

double distance(std::span<const double> a, std::span<const double> b, Metric metric) {
    double acc = 0.0;
    if (metric == Metric::euclidean) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
    return acc;
}

double pairwise_distance(const PointCloud& cloud, std::size_t i, std::size_t j, Metric metric) {
    if (i >= cloud.size() || j >= cloud.size()) throw ArgumentError("row index out of range");
    return distance(cloud.row(i), cloud.row(j), metric);
}

BallCover greedy_net(const PointCloud& cloud, double epsilon, Metric metric, NetPolicy policy) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw ArgumentError("epsilon must be a positive finite number");
    const std::size_t n = cloud.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (policy.pick_order == PickOrder::random_with_seed) {
        Rng rng(policy.seed);
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    }

    BallCover cover;
    cover.epsilon = epsilon;
    cover.metric = metric;
    cover.policy = policy;
    cover.membership.resize(n);

    std::vector<bool> covered(n, false);
    for (std::size_t candidate : order) {
        if (covered[candidate]) continue;
        const std::size_t ball = cover.centers.size();
        cover.centers.push_back(candidate);
        std::vector<std::size_t> inside;
        const auto c = cloud.row(candidate);
        for (std::size_t p = 0; p < n; ++p) {
            if (distance(cloud.row(p), c, metric) <= epsilon) {
                inside.push_back(p);
                cover.membership[p].push_back(ball);
                covered[p] = true;
            }
        }
        cover.members.push_back(std::move(inside));
    }
    return cover;
}

}  // namespace ballmapper
