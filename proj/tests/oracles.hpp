#pragma once

// Brute-force reference computations used to check the library. Nothing
// here calls into the code under test beyond reading PointCloud values.

#include "ballmapper/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

inline double euclid(const ballmapper::PointCloud& c, std::size_t i, std::size_t j) {
    long double acc = 0;
    for (std::size_t a = 0; a < c.dims(); ++a) {
        const long double d = static_cast<long double>(c(i, a)) - c(j, a);
        acc += d * d;
    }
    return static_cast<double>(std::sqrt(acc));
}

inline double manhattan(const ballmapper::PointCloud& c, std::size_t i, std::size_t j) {
    long double acc = 0;
    for (std::size_t a = 0; a < c.dims(); ++a) acc += std::fabs(static_cast<long double>(c(i, a)) - c(j, a));
    return static_cast<double>(acc);
}

// {p : d(p, center) <= eps} for every centre, ascending.
inline std::vector<std::vector<std::size_t>> ball_members(const ballmapper::PointCloud& c,
                                                          const std::vector<std::size_t>& centers,
                                                          double eps, bool use_manhattan = false) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t ctr : centers) {
        std::vector<std::size_t> m;
        for (std::size_t p = 0; p < c.size(); ++p) {
            double d = 0.0;
            if (use_manhattan) {
                d = 0.0;
                for (std::size_t a = 0; a < c.dims(); ++a) d += std::fabs(c(p, a) - c(ctr, a));
            } else {
                double s = 0.0;
                for (std::size_t a = 0; a < c.dims(); ++a) s += (c(p, a) - c(ctr, a)) * (c(p, a) - c(ctr, a));
                d = std::sqrt(s);
            }
            if (d <= eps) m.push_back(p);
        }
        out.push_back(std::move(m));
    }
    return out;
}

// Pairs (a, b), a < b, whose member sets intersect, with intersection size.
inline std::set<std::tuple<std::size_t, std::size_t, std::size_t>> intersecting_pairs(
    const std::vector<std::vector<std::size_t>>& members) {
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(),
                                  members[b].end(), std::back_inserter(common));
            if (!common.empty()) out.insert({a, b, common.size()});
        }
    }
    return out;
}

struct Moments {
    double mean;
    double sd;
    std::optional<double> skew;
};

// Two-pass evaluation of one window in extended precision.
inline Moments window_moments(const std::vector<double>& w) {
    const long double n = static_cast<long double>(w.size());
    long double sum = 0;
    for (double x : w) sum += x;
    const long double mean = sum / n;
    long double m2 = 0, m3 = 0;
    for (double x : w) {
        const long double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    const bool constant = std::all_of(w.begin(), w.end(), [&](double x) { return x == w.front(); });
    Moments m{static_cast<double>(mean), static_cast<double>(std::sqrt(m2 / (n - 1))), std::nullopt};
    if (!constant) {
        const long double pm2 = m2 / n, pm3 = m3 / n;
        m.skew = static_cast<double>(pm3 / std::pow(pm2, 1.5L));
    }
    return m;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const long double n = static_cast<long double>(a.size());
    long double ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    long double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return static_cast<double>(sab / std::sqrt(saa * sbb));
}

inline double mean_of(const std::vector<double>& v, const std::vector<std::size_t>& idx) {
    long double s = 0;
    for (auto i : idx) s += v[i];
    return static_cast<double>(s / idx.size());
}

// L1 distance between a member set's axis means and the reference rows'
// axis means, recomputed from raw coordinates.
inline double l1_to_reference(const ballmapper::PointCloud& c, const std::vector<std::size_t>& members,
                              const std::vector<std::size_t>& reference) {
    long double total = 0;
    for (std::size_t a = 0; a < c.dims(); ++a) {
        long double bm = 0, rm = 0;
        for (auto p : members) bm += c(p, a);
        for (auto p : reference) rm += c(p, a);
        total += std::fabs(bm / members.size() - rm / reference.size());
    }
    return static_cast<double>(total);
}

// Standard normal cloud with axes a0, a1, ...
inline ballmapper::PointCloud random_cloud(std::size_t n, std::size_t d, std::uint64_t seed,
                                           double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, scale);
    std::vector<std::vector<double>> rows(n, std::vector<double>(d));
    for (auto& r : rows)
        for (auto& x : r) x = dist(rng);
    std::vector<std::string> names;
    for (std::size_t a = 0; a < d; ++a) names.push_back("a" + std::to_string(a));
    return ballmapper::PointCloud::from_rows(names, rows);
}

}  // namespace oracle
