#include <vector>

#include <gtest/gtest.h>

#include <hookdist/hilbert.hpp>
#include <hookdist/partitions.hpp>

using namespace hookdist;

namespace {

// P_n(T) summed over partitions: a partition with l parts contributes T^{2(n - l)}.
std::vector<long> goettsche_by_partitions(int n)
{
    std::vector<long> poly(static_cast<std::size_t>(2 * n + 1), 0);
    for_each_partition(n, [&](const Partition& p) { ++poly[static_cast<std::size_t>(2 * (n - static_cast<int>(p.parts.size())))]; });
    return poly;
}

std::vector<long> as_longs(const std::vector<Integer>& v)
{
    std::vector<long> out;
    for (const auto& x : v) {
        out.push_back(x.get_si());
    }
    return out;
}

} // namespace

TEST(Goettsche, KnownCoefficients)
{
    const PoincareSeries g = goettsche_series(4);
    EXPECT_EQ(as_longs(g.polynomial(4)), (std::vector<long>{1, 0, 1, 0, 2, 0, 1}));
    EXPECT_EQ(as_longs(g.polynomial(2)), (std::vector<long>{1, 0, 1}));
}

TEST(Goettsche, MatchesPartitionLengthStatistic)
{
    const PoincareSeries g = goettsche_series(25);
    for (int n = 1; n <= 25; ++n) {
        auto expected = goettsche_by_partitions(n);
        auto got = as_longs(g.polynomial(static_cast<std::size_t>(n)));
        got.resize(expected.size(), 0);
        EXPECT_EQ(got, expected) << "n=" << n;
    }
}

TEST(Goettsche, AtOneIsPartitionCount)
{
    const PoincareSeries g = goettsche_series(100);
    const IntSeries p = partition_series(100);
    for (std::size_t n = 0; n <= 100; ++n) {
        EXPECT_EQ(g.at_one(n), p[n]);
    }
}

TEST(BuryakFeigin, KnownCoefficients)
{
    const PoincareSeries s = buryak_feigin_series(2, 3, 7);
    EXPECT_EQ(s.betti(5, 0), 6);
    EXPECT_EQ(s.betti(5, 2), 1);
    EXPECT_EQ(s.degree_bound(5), 2u);
    EXPECT_EQ(s.betti(7, 0), 13);
    EXPECT_EQ(s.betti(7, 2), 2);
    EXPECT_EQ(s.betti(7, 4), 0);
}

TEST(BuryakFeigin, AtOneAndCoprimality)
{
    const PoincareSeries s = buryak_feigin_series(2, 3, 100);
    const IntSeries p = partition_series(100);
    for (std::size_t n = 0; n <= 100; ++n) {
        EXPECT_EQ(s.at_one(n), p[n]);
    }
    EXPECT_THROW(buryak_feigin_series(2, 4, 10), std::invalid_argument);
}

TEST(PoincareSeries, NonNegativeEvenDegrees)
{
    for (const auto& s : {goettsche_series(200), buryak_feigin_series(2, 3, 200), buryak_feigin_series(1, 1, 200)}) {
        for (std::size_t n = 0; n <= 200; ++n) {
            const auto poly = s.polynomial(n);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                EXPECT_GE(sgn(poly[d]), 0);
                if (d % 2 == 1) {
                    EXPECT_EQ(sgn(poly[d]), 0);
                }
            }
        }
    }
}

TEST(BettiSum, Examples)
{
    const PoincareSeries g = goettsche_series(50);
    EXPECT_EQ(betti_sum(g, 0, 3, 4), 2);
    EXPECT_EQ(betti_sum(g, 1, 3, 4), 2);
    EXPECT_EQ(betti_sum(g, 2, 3, 4), 1);
    EXPECT_EQ(betti_proportion(g, 0, 3, 2), Rational(1, 2));
    EXPECT_EQ(betti_proportion(g, 2, 3, 2), Rational(1, 2));
    for (std::int64_t b : {2, 4, 6}) {
        for (std::int64_t a = 1; a < b; a += 2) {
            for (std::size_t n = 0; n <= 50; ++n) {
                EXPECT_EQ(betti_sum(g, a, b, n), 0);
            }
        }
    }
    EXPECT_THROW(betti_sum(g, 3, 3, 4), std::invalid_argument);
    EXPECT_THROW(betti_sum(g, 0, 3, 51), std::out_of_range);
}

TEST(BettiSum, RootsOfUnityRouteAgrees)
{
    const PoincareSeries g = goettsche_series(40);
    const PoincareSeries q = buryak_feigin_series(2, 3, 40);
    for (std::int64_t b : {2, 3, 4, 5}) {
        for (std::int64_t a = 0; a < b; ++a) {
            for (std::size_t n : {1u, 7u, 20u, 40u}) {
                EXPECT_LT(to_double(betti_sum_roots_of_unity_deviation(g, a, b, n)), 1e-40);
                EXPECT_LT(to_double(betti_sum_roots_of_unity_deviation(q, a, b, n)), 1e-40);
            }
        }
    }
}

TEST(BettiSum, DecompositionBothFamilies)
{
    const PoincareSeries g = goettsche_series(200);
    const PoincareSeries q = buryak_feigin_series(2, 3, 200);
    for (const auto* s : {&g, &q}) {
        for (std::int64_t b : {2, 3, 4, 5}) {
            for (std::size_t n = 0; n <= 200; ++n) {
                Integer sum = 0;
                for (std::int64_t a = 0; a < b; ++a) {
                    sum += betti_sum(*s, a, b, n);
                }
                EXPECT_EQ(sum, s->at_one(n));
            }
        }
    }
}

TEST(Delta, ProportionsAndSums)
{
    EXPECT_EQ(delta(0, 3, 1), 1);
    const Rational d20 = delta(0, 3, 20);
    EXPECT_NEAR(d20.get_d(), 0.3333, 5e-5);
    EXPECT_NEAR(delta_quasi(2, 3, 1, 3, 100).get_d(), 0.2658, 5e-5);
    EXPECT_EQ(delta(0, 3, 20) + delta(1, 3, 20) + delta(2, 3, 20), 1);
}

TEST(Delta, ApproachesOneThirdOnAverage)
{
    const PoincareSeries g = goettsche_series(200);
    auto window_dev = [&](std::size_t centre) {
        double s = 0;
        for (std::size_t n = centre - 5; n <= centre + 5; ++n) {
            for (std::int64_t a = 0; a < 3; ++a) {
                s += std::abs(betti_proportion(g, a, 3, n).get_d() - 1.0 / 3);
            }
        }
        return s;
    };
    EXPECT_GT(window_dev(55), window_dev(120));
    EXPECT_GT(window_dev(120), window_dev(195));
}
