#include "glts/algebra.hpp"
#include "glts/catalog.hpp"
#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace glts;
using glts::testing::e;
using glts::testing::vec;

namespace {

// so3 is (Q^3, cross product). Used as an oracle independent of the
// structure-constant machinery.
Vector cross(const Vector& a, const Vector& b) {
    Vector out(3);
    out[0] = a[1] * b[2] - a[2] * b[1];
    out[1] = a[2] * b[0] - a[0] * b[2];
    out[2] = a[0] * b[1] - a[1] * b[0];
    return out;
}

std::vector<Algebra> catalog() {
    return {make_abelian(3), make_so3(), make_sl2(), make_m7(), make_nc3()};
}

}  // namespace

TEST(Bracket, So3BasisEntries) {
    const auto so3 = make_so3();
    EXPECT_EQ(so3.bracket(e(3, 1), e(3, 2)), e(3, 3));
    EXPECT_EQ(so3.bracket(e(3, 2), e(3, 3)), e(3, 1));
    EXPECT_EQ(so3.bracket(e(3, 3), e(3, 1)), e(3, 2));
}

TEST(Bracket, SelfBracketVanishes) {
    std::mt19937_64 rng(3);
    for (const auto& a : catalog()) {
        for (int t = 0; t < 5; ++t) {
            const auto x = glts::testing::random_rational_vector(rng, a.dim());
            EXPECT_TRUE(a.bracket(x, x).is_zero()) << a.name();
        }
    }
}

TEST(Bracket, BilinearExpansionOnSo3) {
    // [e1+e2, e2] = [e1,e2] + [e2,e2] = e3
    const auto so3 = make_so3();
    EXPECT_EQ(so3.bracket(e(3, 1) + e(3, 2), e(3, 2)), e(3, 3));
}

TEST(Bracket, MatchesCrossProductOnRandomVectors) {
    const auto so3 = make_so3();
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        const auto x = glts::testing::random_rational_vector(rng, 3);
        const auto y = glts::testing::random_rational_vector(rng, 3);
        EXPECT_EQ(so3.bracket(x, y), cross(x, y));
    }
}

TEST(Bracket, DimensionMismatchNamesOperand) {
    const auto so3 = make_so3();
    try {
        (void)so3.bracket(e(3, 1), vec({1, 0}));
        FAIL() << "expected ContractViolation";
    } catch (const ContractViolation& err) {
        EXPECT_NE(std::string(err.what()).find("operand y"), std::string::npos) << err.what();
    }
    EXPECT_THROW((void)yamaguti(so3, vec({1}), e(3, 1), e(3, 1)), ContractViolation);
    EXPECT_THROW((void)left_translation(so3, vec({1, 2, 3, 4})), ContractViolation);
    EXPECT_THROW((void)yamagutian(so3, e(3, 1), vec({1})), ContractViolation);
}

TEST(Bracket, AntisymmetricOnAllBasisPairs) {
    for (const auto& a : catalog()) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            for (std::size_t j = 0; j < a.dim(); ++j) {
                const auto ei = Vector::basis(a.dim(), i);
                const auto ej = Vector::basis(a.dim(), j);
                EXPECT_EQ(a.bracket(ei, ej), -a.bracket(ej, ei)) << a.name();
            }
        }
    }
}

TEST(Bracket, LinearInFirstArgument) {
    std::mt19937_64 rng(5);
    for (const auto& a : catalog()) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar alpha = glts::testing::random_rational(rng);
                    const Scalar beta = glts::testing::random_rational(rng);
                    const auto x = Vector::basis(n, i);
                    const auto x2 = Vector::basis(n, j);
                    const auto y = Vector::basis(n, k);
                    EXPECT_EQ(a.bracket(alpha * x + beta * x2, y), alpha * a.bracket(x, y) + beta * a.bracket(x2, y));
                }
            }
        }
    }
}

TEST(Yamaguti, So3Value) {
    // Lie algebra: [x,y,z] = 2[[x,y],z]; 2[e3,e1] = 2 e2.
    const auto so3 = make_so3();
    EXPECT_EQ(yamaguti(so3, e(3, 1), e(3, 2), e(3, 1)), vec({0, 2, 0}));
}

TEST(Yamaguti, AntisymmetricInFirstTwoArguments) {
    std::mt19937_64 rng(8);
    for (const auto& a : catalog()) {
        const auto x = glts::testing::random_rational_vector(rng, a.dim());
        const auto z = glts::testing::random_rational_vector(rng, a.dim());
        EXPECT_TRUE(yamaguti(a, x, x, z).is_zero()) << a.name();
    }
}

TEST(Yamaguti, AbelianIsZero) {
    const auto ab = make_abelian(4);
    std::mt19937_64 rng(9);
    const auto x = glts::testing::random_rational_vector(rng, 4);
    const auto y = glts::testing::random_rational_vector(rng, 4);
    const auto z = glts::testing::random_rational_vector(rng, 4);
    EXPECT_TRUE(yamaguti(ab, x, y, z).is_zero());
}

TEST(Yamaguti, JacobiCollapseOnLieAlgebras) {
    for (const auto& a : {make_so3(), make_sl2(), make_abelian(3)}) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const auto x = Vector::basis(n, i), y = Vector::basis(n, j), z = Vector::basis(n, k);
                    EXPECT_EQ(yamaguti(a, x, y, z), Scalar(2) * a.bracket(a.bracket(x, y), z)) << a.name();
                }
            }
        }
    }
}

TEST(LeftTranslation, Examples) {
    const auto so3 = make_so3();
    EXPECT_EQ(left_translation(so3, e(3, 3)).apply(e(3, 1)), e(3, 2));
    EXPECT_TRUE(left_translation(so3, Vector::zero(3)).is_zero());
    EXPECT_TRUE(left_translation(make_abelian(5), Vector::basis(5, 2)).is_zero());
}

TEST(LeftTranslation, AppliesAsBracket) {
    std::mt19937_64 rng(13);
    for (const auto& a : catalog()) {
        const auto x = glts::testing::random_rational_vector(rng, a.dim());
        const auto y = glts::testing::random_rational_vector(rng, a.dim());
        EXPECT_EQ(left_translation(a, x).apply(y), a.bracket(x, y)) << a.name();
    }
}

TEST(Commutator, Examples) {
    const auto so3 = make_so3();
    const auto p = left_translation(so3, e(3, 1));
    const auto q = left_translation(so3, e(3, 2));
    EXPECT_TRUE(commutator(p, p).is_zero());
    EXPECT_TRUE(commutator(Operator::identity(3), q).is_zero());
    // Adjoint representation of a Lie algebra: [ad e1, ad e2] = ad [e1,e2].
    EXPECT_EQ(commutator(p, q), left_translation(so3, e(3, 3)));
    EXPECT_THROW((void)commutator(p, Operator::identity(2)), ContractViolation);
}

TEST(Commutator, JacobiOfOperatorsHoldsIdentically) {
    const auto m7 = make_m7();
    const auto a = left_translation(m7, Vector::basis(7, 0));
    const auto b = yamagutian(m7, Vector::basis(7, 1), Vector::basis(7, 3));
    const auto c = yamagutian(m7, Vector::basis(7, 2) + Vector::basis(7, 6), Vector::basis(7, 4));
    const auto sum = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                     commutator(commutator(c, a), b);
    EXPECT_TRUE(sum.is_zero());
}

TEST(Yamagutian, So3Values) {
    const auto so3 = make_so3();
    const auto y12 = yamagutian(so3, e(3, 1), e(3, 2));
    EXPECT_EQ(y12, Scalar(1, 3) * left_translation(so3, e(3, 3)));
    EXPECT_EQ(y12.apply(e(3, 1)), Scalar(1, 3) * e(3, 2));
    // Columns computed by the reference script: (0,1/3,0), (-1/3,0,0), 0.
    Operator expected(3);
    expected(1, 0) = Scalar(1, 3);
    expected(0, 1) = Scalar(-1, 3);
    EXPECT_EQ(y12, expected);
}

TEST(Yamagutian, DiagonalVanishes) {
    std::mt19937_64 rng(21);
    for (const auto& a : catalog()) {
        const auto x = glts::testing::random_rational_vector(rng, a.dim());
        EXPECT_TRUE(yamagutian(a, x, x).is_zero()) << a.name();
    }
}

TEST(Yamagutian, OperatorFormulaAgreesWithTernaryBracket) {
    for (const auto& a : catalog()) {
        const std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto x = Vector::basis(n, i), y = Vector::basis(n, j);
                const auto yop = yamagutian(a, x, y);
                EXPECT_EQ(yop, -yamagutian(a, y, x)) << a.name();
                for (std::size_t k = 0; k < n; ++k) {
                    const auto z = Vector::basis(n, k);
                    EXPECT_EQ(yop.apply(z), Scalar(1, 6) * yamaguti(a, x, y, z)) << a.name();
                }
            }
        }
    }
}

TEST(Validate, CatalogEntriesAreValid) {
    for (const auto& a : catalog()) EXPECT_TRUE(validate(a).ok()) << a.name() << validate(a).summary();
}

TEST(Validate, ReportsLocations) {
    AlgebraTable t{"bad", {"a", "b", "c"}, {{0, 1, vec({1, 0})}, {2, 1, vec({0, 0, 1})}, {0, 5, vec({0, 0, 0})}}};
    const auto r = validate(t);
    ASSERT_FALSE(r.ok());
    ASSERT_EQ(r.violations.size(), 3u);
    EXPECT_EQ(r.violations[0].location, "entries[0].result");
    EXPECT_EQ(r.violations[1].message, "i must be < j");
    EXPECT_EQ(r.violations[2].location, "entries[2]");
    EXPECT_THROW((void)Algebra::create(t), ContractViolation);

    EXPECT_FALSE(validate(AlgebraTable{"empty", {}, {}}).ok());
    EXPECT_FALSE(validate(AlgebraTable{"dup", {"a", "a"}, {}}).ok());
    EXPECT_FALSE(validate(AlgebraTable{"pair", {"a", "b"}, {{0, 1, vec({1, 0})}, {0, 1, vec({0, 1})}}}).ok());
}
