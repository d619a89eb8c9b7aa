#include <gtest/gtest.h>

#include "nbodymat/nbodymat.hpp"
#include "oracles.hpp"

using namespace nbodymat;

namespace {

struct XY {
    VarTablePtr vars = make_var_table({"x", "y", "z"});
    SparsePoly x = SparsePoly::variable(vars, "x");
    SparsePoly y = SparsePoly::variable(vars, "y");
    SparsePoly z = SparsePoly::variable(vars, "z");
};

SparsePoly random_poly(Rng& rng, const VarTablePtr& vars, int terms, unsigned max_exp) {
    SparsePoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (std::size_t v = 0; v < vars->size(); ++v) m.set(v, static_cast<unsigned>(rng.uniform_int(0, max_exp)));
        p += SparsePoly::monomial(vars, m, rng.rational(9, 3));
    }
    return p;
}

}  // namespace

TEST(SparsePoly, DifferenceOfSquares) {
    XY v;
    EXPECT_EQ((v.x + v.y) * (v.x - v.y), v.x * v.x - v.y * v.y);
}

TEST(SparsePoly, AdditiveInverseIsEmpty) {
    XY v;
    const auto p = 3 * v.x * v.y - Rational(1, 2) * v.z + 7;
    const auto zero = p + (-p);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.size(), 0u);
    EXPECT_EQ(zero.to_string(), "0");
}

TEST(SparsePoly, DegreeIsAdditive) {
    Rng rng(50);
    XY v;
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_poly(rng, v.vars, 4, 3);
        const auto q = random_poly(rng, v.vars, 4, 3);
        if (p.is_zero() || q.is_zero()) continue;
        EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    }
}

TEST(SparsePoly, RingAxioms) {
    Rng rng(51);
    XY v;
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, v.vars, 3, 2);
        const auto b = random_poly(rng, v.vars, 3, 2);
        const auto c = random_poly(rng, v.vars, 3, 2);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
    }
}

TEST(SparsePoly, MixingTablesRejected) {
    XY v;
    const auto other = make_var_table({"x", "w"});
    EXPECT_THROW(v.x + SparsePoly::variable(other, "w"), VarTableMismatch);
}

TEST(SparsePoly, UnknownVariableName) {
    XY v;
    EXPECT_THROW(SparsePoly::variable(v.vars, "q"), DomainError);
}

TEST(SparsePoly, DuplicateVariableNames) {
    EXPECT_THROW(make_var_table({"a", "a"}), DomainError);
}

TEST(SparsePoly, TextFormatIsGradedLexDescending) {
    XY v;
    const auto p = v.z + 2 * v.x * v.y * v.y - 3 * v.x * v.x + 5;
    EXPECT_EQ(p.to_string(), "2 * x * y^2 + -3 * x^2 + 1 * z + 5");
    EXPECT_EQ(SparsePoly::parse(p.to_string(), v.vars), p);
}

TEST(SparsePoly, ParseRoundTripRandom) {
    Rng rng(52);
    XY v;
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_poly(rng, v.vars, 5, 4);
        EXPECT_EQ(SparsePoly::parse(p.to_string(), v.vars), p);
    }
}

TEST(SparsePoly, ParseRejectsGarbage) {
    XY v;
    EXPECT_THROW(SparsePoly::parse("2 * q", v.vars), ParseError);
    EXPECT_THROW(SparsePoly::parse("2 ** x", v.vars), ParseError);
}

TEST(ExactDivide, DifferenceOfSquares) {
    XY v;
    const auto q = exact_divide(v.x * v.x - v.y * v.y, v.x - v.y);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, v.x + v.y);
}

TEST(ExactDivide, NotDivisible) {
    XY v;
    EXPECT_FALSE(exact_divide(v.x * v.x, v.y).has_value());
    EXPECT_FALSE(exact_divide(v.x * v.x + 1, v.x).has_value());
}

TEST(ExactDivide, ByZeroRejected) {
    XY v;
    EXPECT_THROW(exact_divide(v.x, SparsePoly(v.vars)), DomainError);
}

TEST(ExactDivide, RecoversFactor) {
    Rng rng(53);
    XY v;
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_poly(rng, v.vars, 4, 3);
        const auto b = random_poly(rng, v.vars, 3, 2);
        if (b.is_zero()) continue;
        const auto q = exact_divide(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
    }
}

TEST(Content, Examples) {
    XY v;
    EXPECT_EQ(content(6 * v.x + 9 * v.y), 3);
    EXPECT_EQ(content(SparsePoly(v.vars)), 0);
    const auto delta = symbolic_cm_det(3);
    EXPECT_EQ(content(delta), 1);
    EXPECT_EQ(content(2 * delta), 2);
}

TEST(Evaluate, Examples) {
    const auto sym = make_nbody_symbols(3);
    const auto delta = symbolic_cm_det(sym);
    std::map<std::string, Rational> at{{"r_1_2", 1}, {"r_1_3", 1}, {"r_2_3", 1}};
    EXPECT_EQ(delta.evaluate(at), -3);
    EXPECT_EQ(SparsePoly(sym.vars).evaluate(std::map<std::string, Rational>{}), 0);
    const auto big = symbolic_nbody_det(sym);
    at["alpha_1"] = at["alpha_2"] = at["alpha_3"] = 1;
    EXPECT_EQ(big.evaluate(at), 54);
    EXPECT_EQ(big.evaluate(at), determinant(nbody_matrix(MassParams<Rational>({1, 1, 1}),
                                                         DistanceVector<Rational>::from_squared(3, {1, 1, 1}))));
}

TEST(Evaluate, MissingVariable) {
    XY v;
    EXPECT_THROW((v.x * v.y).evaluate(std::map<std::string, Rational>{{"x", 1}}), DomainError);
}

TEST(PolyDet, BorderedMassesTwoPoints) {
    const auto sym = make_nbody_symbols(2);
    const auto a1 = SparsePoly::variable(sym.vars, "alpha_1");
    const auto a2 = SparsePoly::variable(sym.vars, "alpha_2");
    EXPECT_EQ(poly_det(bordered(EntryTable<SparsePoly>::diagonal(sym.alpha.values()))), -a1 - a2);
}

TEST(PolyDet, CayleyMengerThreePoints) {
    const auto sym = make_nbody_symbols(3);
    const auto a = SparsePoly::variable(sym.vars, "r_1_2");
    const auto b = SparsePoly::variable(sym.vars, "r_1_3");
    const auto c = SparsePoly::variable(sym.vars, "r_2_3");
    const auto expect = a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c;
    EXPECT_EQ(poly_det(cayley_menger(sym.r)), expect);
}

TEST(PolyDet, OneByOne) {
    XY v;
    const auto p = v.x * v.y + 3;
    EXPECT_EQ(poly_det(Matrix<SparsePoly>::from_rows({{p}})), p);
}

TEST(PolyDet, NonSquare) {
    XY v;
    EXPECT_THROW(poly_det(Matrix<SparsePoly>::from_rows({{v.x, v.y}})), DimensionError);
}

TEST(PolyDet, MethodsAgree) {
    for (int n = 2; n <= 4; ++n) {
        const auto sym = make_nbody_symbols(n);
        const auto b = nbody_matrix(sym.alpha, sym.r);
        const auto auto_det = poly_det(b);
        EXPECT_EQ(poly_det(b, DetMethod::bareiss), auto_det);
        EXPECT_EQ(poly_det(b, DetMethod::minor_expansion), auto_det);
        if (b.rows() <= 6) EXPECT_EQ(poly_det(b, DetMethod::cofactor), auto_det);
    }
    const auto w = make_w_symbols(3);
    const auto m = w_matrix(w.s, w.t);
    EXPECT_EQ(poly_det(m, DetMethod::bareiss), poly_det(m, DetMethod::minor_expansion));
}

TEST(PolyDet, EvaluationCommutesWithDeterminant) {
    Rng rng(54);
    for (int n = 2; n <= 4; ++n) {
        const auto sym = make_nbody_symbols(n);
        const auto b = nbody_matrix(sym.alpha, sym.r);
        const auto det = poly_det(b);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rational> point;
            for (std::size_t v = 0; v < sym.vars->size(); ++v) point.push_back(rng.rational(7));
            const auto numeric = b.map([&](const SparsePoly& p) { return p.evaluate(point); });
            EXPECT_EQ(det.evaluate(point), oracle::leibniz_det(numeric));
        }
    }
}

TEST(Monomial, LimitsEnforced) {
    std::vector<std::string> names;
    for (int i = 0; i < 65; ++i) names.push_back("v" + std::to_string(i));
    EXPECT_THROW(make_var_table(names), ResourceCapExceeded);
}
