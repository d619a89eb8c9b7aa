#include <gtest/gtest.h>

#include "nbodymat/nbodymat.hpp"
#include "oracles.hpp"

using namespace nbodymat;

namespace {

DistanceVector<Rational> unit_triangle() {
    return DistanceVector<Rational>::from_distances(3, {Rational(1), Rational(1), Rational(1)});
}

Matrix<Rational> rows(const std::vector<std::vector<Rational>>& r) { return Matrix<Rational>::from_rows(r); }

}  // namespace

TEST(Edm, UnitTriangle) {
    EXPECT_EQ(edm(unit_triangle()), rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(Edm, CollinearTripleSquaresEntries) {
    const auto r = DistanceVector<Rational>::from_distances(3, {Rational(3), Rational(7), Rational(4)});
    EXPECT_EQ(edm(r), rows({{0, 9, 49}, {9, 0, 16}, {49, 16, 0}}));
}

TEST(Edm, SinglePoint) {
    const auto r = DistanceVector<Rational>::from_squared(1, {});
    EXPECT_EQ(edm(r), rows({{0}}));
}

TEST(CayleyMenger, UnitTriangle) {
    EXPECT_EQ(cayley_menger(unit_triangle()), rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
}

TEST(CayleyMenger, TwoPoints) {
    const auto r = DistanceVector<Rational>::from_distances(2, {Rational(2)});
    EXPECT_EQ(cayley_menger(r), rows({{0, 4, 1}, {4, 0, 1}, {1, 1, 0}}));
}

TEST(CayleyMenger, SymbolicThreePointLayout) {
    const auto sym = make_nbody_symbols(3);
    const auto m = cayley_menger(sym.r);
    const auto r12 = SparsePoly::variable(sym.vars, "r_1_2");
    const auto r13 = SparsePoly::variable(sym.vars, "r_1_3");
    const auto r23 = SparsePoly::variable(sym.vars, "r_2_3");
    const SparsePoly zero(sym.vars, 0);
    const SparsePoly one(sym.vars, 1);
    const auto expect = Matrix<SparsePoly>::from_rows(
        {{zero, r12, r13, one}, {r12, zero, r23, one}, {r13, r23, zero, one}, {one, one, one, zero}});
    EXPECT_EQ(m, expect);
}

TEST(CayleyMenger, EqualsBorderedEdm) {
    Rng rng(2);
    for (int n = 1; n <= 6; ++n) {
        const auto r = distances(random_rational_config(rng, n, 3));
        EXPECT_EQ(bordered(EntryTable<Rational>(edm(r))), cayley_menger(r));
    }
}

TEST(ReducedEdm, UnitTriangleAtLastPoint) {
    const auto m = reduced_edm(unit_triangle(), 2);
    EXPECT_EQ(m, rows({{2, 1}, {1, 2}}));
    EXPECT_EQ(m.labels(), (std::vector<std::string>{"1", "2"}));
}

TEST(ReducedEdm, SymbolicThreePointsBaseOne) {
    const auto sym = make_nbody_symbols(3);
    const auto r12 = SparsePoly::variable(sym.vars, "r_1_2");
    const auto r13 = SparsePoly::variable(sym.vars, "r_1_3");
    const auto r23 = SparsePoly::variable(sym.vars, "r_2_3");
    const auto expect = Matrix<SparsePoly>::from_rows({{2 * r12, r12 + r13 - r23}, {r12 + r13 - r23, 2 * r13}});
    EXPECT_EQ(reduced_edm(sym.r, 0), expect);
    EXPECT_EQ(reduced_edm(sym.r, 0).labels(), (std::vector<std::string>{"2", "3"}));
}

TEST(ReducedEdm, BaseOutOfRange) {
    EXPECT_THROW(reduced_edm(unit_triangle(), 3), DomainError);
    EXPECT_THROW(reduced_edm(unit_triangle(), -1), DomainError);
}

TEST(ReducedEdm, EqualsTwiceGramOfEdgeVectors) {
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto cfg = random_rational_config(rng, 4, 3);
        const auto r = distances(cfg);
        for (int k = 0; k < 4; ++k) {
            const auto a = cfg.difference_matrix(k);
            EXPECT_EQ(reduced_edm(r, k), Rational(2) * (a.transpose() * a));
        }
    }
}

TEST(NBodyMatrix, UnitTriangleUnitMasses) {
    const MassParams<Rational> alpha({1, 1, 1});
    EXPECT_EQ(nbody_matrix(alpha, unit_triangle()), rows({{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}));
}

TEST(NBodyMatrix, SymbolicThreeBodyLayout) {
    const auto sym = make_nbody_symbols(3);
    auto v = [&](const char* name) { return SparsePoly::variable(sym.vars, name); };
    const auto a1 = v("alpha_1"), a2 = v("alpha_2"), a3 = v("alpha_3");
    const auto r12 = v("r_1_2"), r13 = v("r_1_3"), r23 = v("r_2_3");
    // rows/cols {1,2}, {1,3}, {2,3}
    const auto expect = Matrix<SparsePoly>::from_rows({
        {2 * (a1 + a2) * r12, a1 * (r12 + r13 - r23), a2 * (r12 + r23 - r13)},
        {a1 * (r12 + r13 - r23), 2 * (a1 + a3) * r13, a3 * (r13 + r23 - r12)},
        {a2 * (r12 + r23 - r13), a3 * (r13 + r23 - r12), 2 * (a2 + a3) * r23},
    });
    const auto b = nbody_matrix(sym.alpha, sym.r);
    EXPECT_EQ(b, expect);
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"1,2", "1,3", "2,3"}));
}

TEST(NBodyMatrix, DimensionMismatch) {
    EXPECT_THROW(nbody_matrix(MassParams<Rational>({1, 1}), unit_triangle()), DimensionError);
}

TEST(NBodyMatrix, SingleMassGivesLiftedReducedEdm) {
    Rng rng(6);
    const auto r = distances(random_rational_config(rng, 4, 3));
    const MassParams<Rational> alpha({1, 0, 0, 0});
    EXPECT_EQ(nbody_matrix(alpha, r), lift(reduced_edm(r, 0), 0, 4));
}

TEST(NBodyMatrix, SymmetricWithDisjointPairsZero) {
    Rng rng(8);
    for (int n = 2; n <= 6; ++n) {
        const auto r = distances(random_rational_config(rng, n, n));
        const auto b = nbody_matrix(random_positive_masses(rng, n), r);
        EXPECT_TRUE(b.is_symmetric());
        const auto pairs = PairSpace(n).pairs();
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t q = 0; q < pairs.size(); ++q) {
                const bool disjoint = !pairs[p].contains(pairs[q].i()) && !pairs[p].contains(pairs[q].j());
                if (disjoint) EXPECT_EQ(b(p, q), 0);
            }
    }
}

TEST(NBodyMatrix, DecomposesOverBasePoints) {
    Rng rng(10);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            const auto r = distances(random_rational_config(rng, n, n - 1));
            const auto alpha = random_positive_masses(rng, n);
            auto sum = Matrix<Rational>::square(PairSpace(n).size());
            for (int k = 0; k < n; ++k) sum = sum + alpha[k] * lift(reduced_edm(r, k), k, n);
            EXPECT_EQ(sum, nbody_matrix(alpha, r));
        }
}

TEST(Bordered, OneByOne) {
    EntryTable<Rational> h(1);
    h(0, 0) = Rational(7, 3);
    EXPECT_EQ(bordered(h), rows({{Rational(7, 3), 1}, {1, 0}}));
}

TEST(Bordered, DiagonalMasses) {
    const auto h = EntryTable<Rational>::diagonal({2, 3});
    EXPECT_EQ(bordered(h), rows({{2, 0, 1}, {0, 3, 1}, {1, 1, 0}}));
}

TEST(WMatrix, MinusNBodyMatrix) {
    Rng rng(12);
    for (int n = 2; n <= 6; ++n) {
        const auto r = distances(random_rational_config(rng, n, n - 1));
        const auto alpha = random_positive_masses(rng, n);
        const auto w = w_matrix(squared_distance_table(r), EntryTable<Rational>::diagonal(alpha.values()));
        EXPECT_EQ(w, -nbody_matrix(alpha, r));
    }
}

TEST(WMatrix, ZeroTables) {
    const EntryTable<Rational> z(4);
    EXPECT_EQ(w_matrix(z, z), Matrix<Rational>::square(6));
}

TEST(WMatrix, TwoPointsIsOneByOne) {
    const auto sym = make_w_symbols(2);
    const auto w = w_matrix(sym.s, sym.t);
    ASSERT_EQ(w.rows(), 1u);
    const auto& s = sym.s;
    const auto& t = sym.t;
    EXPECT_EQ(w(0, 0), (t(1, 0) + t(0, 1) - t(0, 0) - t(1, 1)) * (s(1, 0) + s(0, 1) - s(0, 0) - s(1, 1)));
}

TEST(WMatrix, IndependentOfPairRepresentative) {
    Rng rng(14);
    for (int n = 2; n <= 5; ++n) {
        const auto s = random_entry_table(rng, n);
        const auto t = random_entry_table(rng, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (i == j || k == l) continue;
                        const Rational w = w_entry(s, t, i, j, k, l);
                        EXPECT_EQ(w, w_entry(s, t, j, i, k, l));
                        EXPECT_EQ(w, w_entry(s, t, i, j, l, k));
                        EXPECT_EQ(w, w_entry(s, t, j, i, l, k));
                    }
    }
}

TEST(WMatrix, EntriesAreProductsOfBorderedMinors) {
    // Each entry is det C_{S[j,i|l,k]} * det C_{T[j,i|l,k]}, where the 2x2
    // block has rows (j, i) and columns (l, k).
    Rng rng(15);
    const int n = 3;
    const auto s = random_entry_table(rng, n);
    const auto t = random_entry_table(rng, n);
    auto minor = [](const EntryTable<Rational>& h, int a, int b, int c, int d) {
        EntryTable<Rational> sub(2);
        sub(0, 0) = h(a, c);
        sub(0, 1) = h(a, d);
        sub(1, 0) = h(b, c);
        sub(1, 1) = h(b, d);
        return oracle::leibniz_det(bordered(sub));
    };
    const auto w = w_matrix(s, t);
    const auto pairs = PairSpace(n).pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            const int i = pairs[p].i(), j = pairs[p].j(), k = pairs[q].i(), l = pairs[q].j();
            EXPECT_EQ(w(p, q), minor(s, j, i, l, k) * minor(t, j, i, l, k));
        }
}

TEST(WMatrix, SizeMismatch) {
    EXPECT_THROW(w_matrix(EntryTable<Rational>(3), EntryTable<Rational>(4)), DimensionError);
}

TEST(Lift, ShapeChecked) {
    EXPECT_THROW(lift(Matrix<Rational>::square(3), 0, 3), DimensionError);
}
