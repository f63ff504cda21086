#include "ballmapper/cloud.hpp"
#include "ballmapper/error.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

using namespace ballmapper;

namespace {

LoadResult parse(const std::string& text, std::vector<std::string> axes, std::vector<std::string> meta = {}) {
    std::istringstream in(text);
    return read_csv(in, axes, meta);
}

}  // namespace

TEST(LoadCsv, DropsRowWithMissingAxisValue) {
    auto r = parse("x,y,year\n1,2,1900\n3,,1901\n5,6,1902\n", {"x", "y"}, {"year"});
    EXPECT_EQ(r.cloud.size(), 2u);
    EXPECT_EQ(r.report.rows_dropped_missing, 1u);
    EXPECT_EQ(r.report.rows_in, 3u);
    EXPECT_EQ(r.report.rows_out, 2u);
    EXPECT_TRUE(r.report.balanced());
    EXPECT_EQ(r.cloud.row_ids(), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(r.cloud.meta_column("year")->values, (std::vector<std::string>{"1900", "1902"}));
}

TEST(LoadCsv, AllNumericKeepsEveryRow) {
    auto r = parse("a,b\n1,2\n3,4\n5,6\n7,8\n", {"a", "b"});
    EXPECT_EQ(r.report.rows_dropped_missing, 0u);
    EXPECT_EQ(r.cloud.size(), 4u);  // line count - 1
}

TEST(LoadCsv, NonNumericAndNonFiniteCountAsMissing) {
    auto r = parse("a\n1\nNA\nabc\ninf\nnan\n2.5\n", {"a"});
    EXPECT_EQ(r.cloud.size(), 2u);
    EXPECT_EQ(r.report.rows_dropped_missing, 4u);
    EXPECT_DOUBLE_EQ(r.cloud(1, 0), 2.5);
}

TEST(LoadCsv, QuotedFieldsAndCrlf) {
    auto r = parse("name,x\r\n\"Smith, J\",1\r\n\"say \"\"hi\"\"\",2\r\n", {"x"}, {"name"});
    ASSERT_EQ(r.cloud.size(), 2u);
    EXPECT_EQ(r.cloud.meta_column("name")->values[0], "Smith, J");
    EXPECT_EQ(r.cloud.meta_column("name")->values[1], "say \"hi\"");
}

TEST(LoadCsv, Errors) {
    EXPECT_THROW(parse("a,b\n1,2\n", {"c"}), DataError);
    EXPECT_THROW(parse("a,b\n1,2\n", {"a"}, {"zz"}), DataError);
    EXPECT_THROW(parse("a\nx\n\n", {"a"}), DataError);  // empty after dropping
    EXPECT_THROW(parse("", {"a"}), DataError);
    try {
        parse("a,b\n1,2\n3\n", {"a"});
        FAIL() << "expected a malformed-row error";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    try {
        parse("a,b\n1,2\n\"3,4\n", {"a"});
        FAIL() << "expected an unterminated quote error";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    EXPECT_THROW(load_csv("/nonexistent/file.csv", {"a"}, {}), IoError);
}

TEST(LoadCsv, WriteThenLoadIsValueIdentical) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<double>> rows(37, std::vector<double>(4));
        for (auto& row : rows)
            for (auto& x : row) x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
        std::vector<std::string> country;
        for (std::size_t i = 0; i < rows.size(); ++i) country.push_back(i % 3 ? "SWE" : "USA, \"x\"");
        auto cloud = PointCloud::from_rows({"a", "b", "c", "d"}, rows, {{"country", country}});
        std::stringstream buf;
        write_csv(cloud, buf);
        auto back = read_csv(buf, {"a", "b", "c", "d"}, {"country"});
        ASSERT_EQ(back.cloud.size(), cloud.size());
        for (std::size_t i = 0; i < cloud.size(); ++i)
            for (std::size_t a = 0; a < 4; ++a) ASSERT_EQ(back.cloud(i, a), cloud(i, a));
        EXPECT_EQ(back.cloud.meta_column("country")->values, country);
    }
}

TEST(PointCloud, RejectsInvalidConstruction) {
    EXPECT_THROW(PointCloud({}, {}, {}), DataError);
    EXPECT_THROW(PointCloud({"a"}, {}, {}), DataError);
    EXPECT_THROW(PointCloud({"a", "a"}, {1, 2}, {0}), DataError);
    EXPECT_THROW(PointCloud({"a"}, {1, 2}, {0, 0}), DataError);
    EXPECT_THROW(PointCloud({"a"}, {std::nan("")}, {0}), DataError);
    EXPECT_THROW(PointCloud({""}, {1}, {0}), DataError);
}

TEST(PointCloud, FingerprintTracksRowsAndAxes) {
    auto a = PointCloud::from_rows({"x"}, {{1}, {2}});
    auto b = PointCloud::from_rows({"x"}, {{5}, {7}});
    auto c = PointCloud::from_rows({"y"}, {{1}, {2}});
    EXPECT_EQ(a.fingerprint(), b.fingerprint());  // values are not part of it
    EXPECT_NE(a.fingerprint(), c.fingerprint());
    std::vector<std::size_t> first{0};
    EXPECT_NE(a.fingerprint(), a.subset(first).fingerprint());
}

TEST(FilterRange, KeepsInclusiveBand) {
    auto cloud = PointCloud::from_rows({"growth"}, {{-0.6}, {0.1}, {0.7}});
    auto r = filter_range(cloud, "growth", -0.5, 0.5);
    ASSERT_EQ(r.cloud.size(), 1u);
    EXPECT_DOUBLE_EQ(r.cloud(0, 0), 0.1);
    EXPECT_EQ(r.report.rows_dropped_filter, 2u);
    EXPECT_TRUE(r.report.balanced());
}

TEST(FilterRange, BoundaryIsRetained) {
    auto cloud = PointCloud::from_rows({"g"}, {{-0.5}, {0.5}, {0.5000001}});
    EXPECT_EQ(filter_range(cloud, "g", -0.5, 0.5).cloud.size(), 2u);
}

TEST(FilterRange, InfiniteBoundsAreIdentity) {
    auto cloud = oracle::random_cloud(50, 2, 3);
    const double inf = std::numeric_limits<double>::infinity();
    auto r = filter_range(cloud, "a0", -inf, inf);
    EXPECT_EQ(r.cloud.row_ids(), cloud.row_ids());
    EXPECT_EQ(r.report.rows_dropped_filter, 0u);
}

TEST(FilterRange, MetaColumnAndErrors) {
    auto cloud = PointCloud::from_rows({"x"}, {{1}, {2}, {3}},
                                       {{"year", {"1929", "1950", "1935"}}, {"country", {"A", "B", "C"}}});
    auto r = filter_range(cloud, "year", 1929, 1939);
    EXPECT_EQ(r.cloud.row_ids(), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(filter_range(cloud, "country", 0, 1), DataError);
    EXPECT_THROW(filter_range(cloud, "x", 2, 1), ArgumentError);
    EXPECT_THROW(filter_range(cloud, "nope", 0, 1), DataError);
}

TEST(FilterRange, OutputIsSubsetOfInput) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto cloud = oracle::random_cloud(100, 2, seed);
        auto r = filter_range(cloud, "a1", -0.5, 0.8);
        for (std::size_t i = 0; i < r.cloud.size(); ++i) {
            const auto id = r.cloud.row_ids()[i];
            EXPECT_EQ(r.cloud(i, 1), cloud(id, 1));
            EXPECT_GE(r.cloud(i, 1), -0.5);
            EXPECT_LE(r.cloud(i, 1), 0.8);
        }
        EXPECT_TRUE(r.report.balanced());
    }
}

TEST(RollingMoments, HandEvaluatedWindow) {
    std::vector<double> s{1, 2, 3};
    auto m = rolling_moments(s, 3);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_DOUBLE_EQ(m[0].mean, 2.0);
    EXPECT_DOUBLE_EQ(m[0].sd, 1.0);
    ASSERT_TRUE(m[0].skewness.has_value());
    EXPECT_NEAR(*m[0].skewness, 0.0, 1e-15);
}

TEST(RollingMoments, ConstantWindowHasUndefinedSkewness) {
    std::vector<double> s{5, 5, 5, 5};
    auto m = rolling_moments(s, 4);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].mean, 5.0);
    EXPECT_EQ(m[0].sd, 0.0);
    EXPECT_FALSE(m[0].skewness.has_value());
}

TEST(RollingMoments, SymmetricWindowHasZeroSkewness) {
    std::vector<double> s{0, 1, 2, 3, 4};
    auto m = rolling_moments(s, 5);
    EXPECT_NEAR(*m[0].skewness, 0.0, 1e-15);
    // {0,0,3}: deviations -1,-1,2 give m2 = 2, m3 = 2, g1 = 2 / 2^1.5.
    std::vector<double> t{0, 0, 3};
    EXPECT_NEAR(*rolling_moments(t, 3)[0].skewness, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(RollingMoments, OutputLengthAndAlignment) {
    std::vector<double> s(30);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<double>(i * i % 7);
    auto m = rolling_moments(s, 10);
    EXPECT_EQ(m.size(), 21u);
    // Last triple covers the final ten observations.
    std::vector<double> tail(s.end() - 10, s.end());
    EXPECT_NEAR(m.back().mean, oracle::window_moments(tail).mean, 1e-12);
}

TEST(RollingMoments, Errors) {
    std::vector<double> s{1, 2, 3};
    EXPECT_THROW(rolling_moments(s, 1), ArgumentError);
    EXPECT_THROW(rolling_moments(s, 4), ArgumentError);
    std::vector<double> bad{1, std::numeric_limits<double>::infinity(), 3};
    EXPECT_THROW(rolling_moments(bad, 2), DataError);
}

TEST(RollingMoments, MatchesFromScratchOracle) {
    std::mt19937_64 rng(99);
    std::normal_distribution<double> nd(0.05, 0.2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(120);
        for (auto& x : s) x = nd(rng);
        for (std::size_t w : {2u, 5u, 10u, 30u}) {
            auto m = rolling_moments(s, w);
            for (std::size_t k = 0; k < m.size(); ++k) {
                std::vector<double> win(s.begin() + k, s.begin() + k + w);
                auto o = oracle::window_moments(win);
                ASSERT_NEAR(m[k].mean, o.mean, 1e-10);
                ASSERT_NEAR(m[k].sd, o.sd, 1e-10);
                ASSERT_EQ(m[k].skewness.has_value(), o.skew.has_value());
                if (o.skew) ASSERT_NEAR(*m[k].skewness, *o.skew, 1e-10);
            }
        }
    }
}

TEST(NormalizeMinMax, MapsEndpoints) {
    auto cloud = PointCloud::from_rows({"x"}, {{2}, {4}, {6}});
    auto r = normalize_minmax(cloud);
    EXPECT_EQ(r.cloud(0, 0), 0.0);
    EXPECT_EQ(r.cloud(1, 0), 0.5);
    EXPECT_EQ(r.cloud(2, 0), 1.0);
    ASSERT_EQ(r.ranges.size(), 1u);
    EXPECT_EQ(r.ranges[0].min, 2.0);
    EXPECT_EQ(r.ranges[0].max, 6.0);
}

TEST(NormalizeMinMax, UnitAxisUnchangedAndIdempotent) {
    auto unit = PointCloud::from_rows({"x"}, {{0}, {0.25}, {1}});
    auto once = normalize_minmax(unit).cloud;
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(once(i, 0), unit(i, 0));

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto cloud = oracle::random_cloud(40, 3, seed, 7.0);
        auto a = normalize_minmax(cloud).cloud;
        auto b = normalize_minmax(a).cloud;
        for (std::size_t ax = 0; ax < 3; ++ax) {
            auto v = a.axis_values(ax);
            EXPECT_EQ(*std::min_element(v.begin(), v.end()), 0.0);
            EXPECT_EQ(*std::max_element(v.begin(), v.end()), 1.0);
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t ax = 0; ax < 3; ++ax) ASSERT_EQ(a(i, ax), b(i, ax));
    }
}

TEST(NormalizeMinMax, ConstantAxisIsRejectedByName) {
    auto cloud = PointCloud::from_rows({"x", "flat"}, {{1, 3}, {2, 3}});
    try {
        normalize_minmax(cloud);
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("flat"), std::string::npos);
    }
}

TEST(PrepReport, JsonHasTheFourCounters) {
    PrepReport r{10, 2, 3, 5};
    EXPECT_EQ(r.to_json(),
              "{\"rows_in\": 10, \"rows_dropped_missing\": 2, \"rows_dropped_filter\": 3, \"rows_out\": 5}");
}

TEST(Groups, SelectAndEnumerate) {
    auto cloud = PointCloud::from_rows({"x"}, {{1}, {2}, {3}, {4}}, {{"country", {"SWE", "USA", "SWE", "AUS"}}});
    EXPECT_EQ(group_values(cloud, "country"), (std::vector<std::string>{"SWE", "USA", "AUS"}));
    auto swe = select_group(cloud, "country", "SWE");
    EXPECT_EQ(swe.row_ids(), (std::vector<std::size_t>{0, 2}));
    EXPECT_THROW(select_group(cloud, "country", "JPN"), DataError);
}
