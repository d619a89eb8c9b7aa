#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "nbodymat/nbodymat.hpp"
#include "oracles.hpp"

using namespace nbodymat;

TEST(PairIndex, CanonicalOrder) {
    EXPECT_EQ(PairIndex(2, 0), PairIndex(0, 2));
    EXPECT_EQ(PairIndex(2, 0).i(), 0);
    EXPECT_EQ(PairIndex(2, 0).j(), 2);
    EXPECT_EQ(PairIndex(0, 2).label(), "1,3");
    EXPECT_THROW(PairIndex(1, 1), DomainError);
}

TEST(PairSpace, ThreePointOrder) {
    const PairSpace s(3);
    EXPECT_EQ(s.labels(), (std::vector<std::string>{"1,2", "1,3", "2,3"}));
}

TEST(PairSpace, SizeAndLexicographicEnumeration) {
    for (int n = 1; n <= 12; ++n) {
        const PairSpace s(n);
        EXPECT_EQ(s.size(), static_cast<std::size_t>(n * (n - 1) / 2));
        std::vector<PairIndex> expect;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) expect.emplace_back(i, j);
        EXPECT_EQ(s.pairs(), expect);
        for (std::size_t k = 0; k < s.size(); ++k) {
            EXPECT_EQ(s.rank(s.unrank(k)), k);
            EXPECT_EQ(s.rank(s.unrank(k).j(), s.unrank(k).i()), k);
        }
    }
}

TEST(PairSpace, RejectsPairsOutsideRange) {
    const PairSpace s(3);
    EXPECT_THROW(s.rank(PairIndex(0, 3)), DomainError);
}

TEST(DistanceVector, RejectsNegativeEntries) {
    EXPECT_THROW(DistanceVector<double>::from_distances(2, {-1.0}), DomainError);
    EXPECT_THROW(DistanceVector<Rational>::from_squared(2, {Rational(-1)}), DomainError);
}

TEST(DistanceVector, RejectsWrongLength) {
    EXPECT_THROW(DistanceVector<double>::from_distances(3, {1.0, 2.0}), DimensionError);
}

TEST(DistanceVector, SymmetricAccess) {
    const auto r = DistanceVector<Rational>::from_distances(3, {Rational(3), Rational(7), Rational(4)});
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(r.squared(i, i), 0);
        for (int j = 0; j < 3; ++j) EXPECT_EQ(r.squared(i, j), r.squared(j, i));
    }
    EXPECT_EQ(r.squared(PairIndex(2, 1)), 16);
}

TEST(Distances, PointsOnALine) {
    const PointConfiguration<Rational> cfg({{Rational(0)}, {Rational(3)}, {Rational(7)}});
    const auto r = distances(cfg);
    EXPECT_EQ(r.squared_entries(), (std::vector<Rational>{9, 49, 16}));
    EXPECT_DOUBLE_EQ(r.distance(0, 1), 3.0);
    EXPECT_DOUBLE_EQ(r.distance(0, 2), 7.0);
    EXPECT_DOUBLE_EQ(r.distance(1, 2), 4.0);
}

TEST(Distances, UnitEquilateralTriangle) {
    const PointConfiguration<double> cfg({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
    const auto r = distances(cfg);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) EXPECT_NEAR(r.distance(i, j), 1.0, 1e-15);
}

TEST(Distances, MatchesPerPairNormLoop) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto cfg = random_rational_config(rng, 4, 3);
        const auto r = distances(cfg);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                EXPECT_EQ(r.squared(i, j), oracle::squared_norm_diff(cfg.point(i), cfg.point(j)));
    }
}

TEST(Distances, CoincidentPointsAllowed) {
    const PointConfiguration<Rational> cfg({{Rational(1), Rational(2)}, {Rational(1), Rational(2)}});
    EXPECT_EQ(distances(cfg).squared(0, 1), 0);
    EXPECT_TRUE(is_singular(cfg));
}

TEST(Distances, RigidMotionInvariantExactly) {
    Rng rng(5);
    for (int n = 2; n <= 8; ++n) {
        const int d = std::max(2, n - 1);
        const auto cfg = random_rational_config(rng, n, d);
        std::vector<Rational> shift;
        for (int c = 0; c < d; ++c) shift.push_back(rng.rational(20));
        const auto moved = oracle::rigid_motion(cfg.points(), 0, static_cast<std::size_t>(d - 1), shift);
        EXPECT_EQ(distances(PointConfiguration<Rational>(moved)), distances(cfg));
    }
}

TEST(Distances, TriangleInequalityOnSamples) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto cfg = random_double_config(rng, 5, 3);
        const auto r = distances(cfg);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    EXPECT_LE(r.distance(i, j), r.distance(i, k) + r.distance(k, j) + 1e-12);
    }
}

TEST(IsSingular, CollinearTriple) {
    EXPECT_TRUE(is_singular(PointConfiguration<Rational>({{0, 0}, {1, 0}, {2, 0}})));
    EXPECT_TRUE(is_singular(PointConfiguration<double>({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}})));
}

TEST(IsSingular, Triangle) {
    EXPECT_FALSE(is_singular(PointConfiguration<double>({{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}})));
}

TEST(IsSingular, CoplanarQuadrupleInSpace) {
    // z = x + y plane
    const PointConfiguration<Rational> cfg({{0, 0, 0}, {1, 0, 1}, {0, 1, 1}, {2, 3, 5}});
    EXPECT_EQ(affine_rank(cfg), 2u);
    EXPECT_TRUE(is_singular(cfg));
}

TEST(IsSingular, SinglePointIsNotSingular) {
    EXPECT_FALSE(is_singular(PointConfiguration<Rational>({{1, 2}})));
}

TEST(IsSingular, NearlyCollinearWithinTolerance) {
    const PointConfiguration<double> cfg({{0.0, 0.0}, {1.0, 0.0}, {2.0, 1e-13}});
    EXPECT_TRUE(is_singular(cfg));
    EXPECT_FALSE(is_singular(cfg, 1e-16));
}

TEST(IsSingular, PermutationInvariant) {
    Rng rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + trial % 4;
        const bool singular = trial % 2 == 0;
        const auto cfg = singular ? random_singular_config<Rational>(rng, n, n - 2) : random_nonsingular_config(rng, n);
        auto pts = cfg.points();
        std::reverse(pts.begin(), pts.end());
        std::rotate(pts.begin(), pts.begin() + 1, pts.end());
        EXPECT_EQ(is_singular(PointConfiguration<Rational>(pts)), is_singular(cfg));
        EXPECT_EQ(is_singular(cfg), singular);
    }
}

TEST(ElementarySymmetric, Examples) {
    EXPECT_EQ(elementary_symmetric(2, std::vector<Rational>{1, 1, 1}), 3);
    EXPECT_EQ(elementary_symmetric(0, std::vector<Rational>{4, 9}), 1);
    EXPECT_EQ(elementary_symmetric(2, std::vector<Rational>{2, 3, 5}), 31);
}

TEST(ElementarySymmetric, RangeChecked) {
    EXPECT_THROW(elementary_symmetric(4, std::vector<Rational>{1, 2, 3}), DomainError);
    EXPECT_THROW(elementary_symmetric(-1, std::vector<Rational>{1, 2, 3}), DomainError);
}

TEST(ElementarySymmetric, AgreesWithSubsetEnumeration) {
    Rng rng(21);
    for (int n = 0; n <= 7; ++n) {
        const auto a = random_rational_vector(rng, n);
        for (int k = 0; k <= n; ++k) EXPECT_EQ(elementary_symmetric(k, a), oracle::esp_by_subsets(k, a));
    }
}

TEST(MassParams, FromMassesInverts) {
    const auto exact = MassParams<Rational>::from_masses({Rational(2), Rational(1, 3), Rational(-5, 7)});
    const std::vector<Rational> masses{Rational(2), Rational(1, 3), Rational(-5, 7)};
    for (int i = 0; i < 3; ++i) EXPECT_EQ(exact[i] * masses[static_cast<std::size_t>(i)], 1);
    const auto num = MassParams<double>::from_masses({3.0, 7.0});
    EXPECT_NEAR(num[0] * 3.0, 1.0, 1e-16);
    EXPECT_NEAR(num[1] * 7.0, 1.0, 1e-16);
    EXPECT_THROW(MassParams<Rational>::from_masses({Rational(0)}), DomainError);
}

TEST(PointConfiguration, RejectsRaggedInput) {
    EXPECT_THROW(PointConfiguration<double>({{0.0, 1.0}, {2.0}}), DimensionError);
    EXPECT_THROW(PointConfiguration<double>(std::vector<std::vector<double>>{}), DomainError);
}
