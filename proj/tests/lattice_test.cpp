#include <gtest/gtest.h>

#include "k3lat/errors.hpp"
#include "k3lat/lattice.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

GramMatrix T0() { return {{4, 1, 0}, {1, 4, 0}, {0, 0, -2}}; }
GramMatrix T1() { return {{10, 4, 0}, {4, 10, 0}, {0, 0, -2}}; }

RationalVector rv(std::initializer_list<char const *> xs)
{
    RationalVector v;
    for (auto const * x : xs)
        v.push_back(parse_rational(x));
    return v;
}

bool is_unimodular(IntMatrix const & m)
{
    Integer const d = determinant(m);
    return d == 1 || d == -1;
}

void expect_snf_valid(IntMatrix const & m, SnfResult const & s)
{
    ASSERT_EQ(s.U * m * s.V, s.D);
    EXPECT_TRUE(is_unimodular(s.U));
    EXPECT_TRUE(is_unimodular(s.V));
    std::size_t const k = std::min(s.D.rows(), s.D.cols());
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j)
                EXPECT_EQ(s.D(i, j), 0);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        EXPECT_GE(s.D(i, i), 0);
        if (s.D(i, i) == 0)
            EXPECT_EQ(s.D(i + 1, i + 1), 0);
        else
            EXPECT_EQ(s.D(i + 1, i + 1) % s.D(i, i), 0);
    }
}

TEST(Determinant, Constants)
{
    EXPECT_EQ(determinant(lattices::U()), -1);
    EXPECT_EQ(determinant(lattices::E8()), 1);
    EXPECT_EQ(determinant(T0()), -30);
    EXPECT_EQ(determinant(T1()), -168);
    EXPECT_EQ(determinant(lattices::K3()), -1);
    EXPECT_EQ(determinant(lattices::T_hess()), 48);
    EXPECT_EQ(lattices::K3().rank(), 22u);
}

TEST(Determinant, SingularNeedsPivotSearch)
{
    EXPECT_EQ(determinant(IntMatrix{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}}), -2);
    EXPECT_EQ(determinant(IntMatrix{{0, 0}, {0, 5}}), 0);
}

TEST(Determinant, MatchesCofactorExpansion)
{
    oracle::Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        std::size_t const n = 1 + t % 6;
        IntMatrix const m = oracle::random_matrix(rng, n, n, 10);
        ASSERT_EQ(determinant(m), oracle::laplace_det(m)) << m;
    }
}

TEST(Signature, Constants)
{
    EXPECT_EQ(signature(lattices::U()), (Signature{1, 1}));
    EXPECT_EQ(signature(lattices::E8()), (Signature{8, 0}));
    EXPECT_EQ(signature(T1()), (Signature{2, 1}));
    EXPECT_EQ(signature(lattices::K3()), (Signature{3, 19}));
    // zero diagonal forces the e_i + e_j pivot
    EXPECT_EQ(signature(GramMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), (Signature{1, 2}));
}

TEST(Signature, Degenerate)
{
    EXPECT_THROW(signature(GramMatrix{{2, 2}, {2, 2}}), DegenerateLattice);
}

TEST(Signature, PropertyAgreesWithDescartesAndTwist)
{
    oracle::Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        std::size_t const n = 1 + t % 6;
        GramMatrix const g = oracle::random_nondegenerate(rng, n, 10, t % 2 == 0);
        Signature const s = signature(g);
        ASSERT_EQ(s.positive + s.negative, n);
        ASSERT_EQ(s, oracle::descartes_signature(g.matrix())) << g;
        Signature const sn = signature(twist(g, -1));
        ASSERT_EQ(sn.positive, s.negative);
        ASSERT_EQ(sn.negative, s.positive);
    }
}

TEST(Snf, Examples)
{
    auto const id = smith_normal_form(IntMatrix::identity(3));
    EXPECT_EQ(id.D, IntMatrix::identity(3));
    auto const d24 = smith_normal_form(IntMatrix{{2, 0}, {0, 4}});
    EXPECT_EQ(d24.D, (IntMatrix{{2, 0}, {0, 4}}));
    IntMatrix const a{{4, 1}, {1, 4}};
    auto const s = smith_normal_form(a);
    expect_snf_valid(a, s);
    EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 15}}));
    auto const swapped = smith_normal_form(IntMatrix{{4, 0}, {0, 6}});
    EXPECT_EQ(swapped.D, (IntMatrix{{2, 0}, {0, 12}}));
}

TEST(Snf, PropertyRandomRectangular)
{
    oracle::Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        std::size_t const r = 1 + oracle::uniform(rng, 0, 4);
        std::size_t const c = 1 + oracle::uniform(rng, 0, 4);
        IntMatrix const m = oracle::random_matrix(rng, r, c, 12);
        auto const s = smith_normal_form(m);
        expect_snf_valid(m, s);
        if (::testing::Test::HasFatalFailure())
            return;
    }
}

TEST(DiscriminantGroup, Examples)
{
    EXPECT_TRUE(discriminant_group(lattices::E8()).invariant_factors.empty());
    auto const a = discriminant_group(GramMatrix{{4, 1}, {1, 4}});
    EXPECT_EQ(a.invariant_factors, std::vector<Integer>{15});
    auto const t0 = discriminant_group(T0());
    EXPECT_EQ(t0.invariant_factors, std::vector<Integer>{30});
    auto const t1 = discriminant_group(T1());
    EXPECT_EQ(t1.invariant_factors, (std::vector<Integer>{2, 2, 42}));
    EXPECT_THROW(discriminant_group(GramMatrix{{1, 1}, {1, 1}}), DegenerateLattice);
}

// Order of L^v / L equals |det| and each generator has exactly its
// invariant factor as order.
TEST(DiscriminantGroup, PropertyOrderEqualsAbsDet)
{
    oracle::Rng rng(14);
    for (int t = 0; t < 300; ++t) {
        std::size_t const n = 1 + t % 6;
        GramMatrix const g = oracle::random_nondegenerate(rng, n, 10, t % 3 == 0);
        auto const dg = discriminant_group(g);
        Integer prod = 1;
        for (std::size_t i = 0; i < dg.invariant_factors.size(); ++i) {
            prod *= dg.invariant_factors[i];
            ASSERT_TRUE(is_dual_vector(g, dg.generators[i]));
            ASSERT_EQ(order_in_quotient(g, dg.generators[i]), dg.invariant_factors[i]);
            if (i + 1 < dg.invariant_factors.size())
                ASSERT_EQ(dg.invariant_factors[i + 1] % dg.invariant_factors[i], 0);
        }
        Integer const d = oracle::laplace_det(g.matrix());
        ASSERT_EQ(prod, d < 0 ? Integer(-d) : d) << g;
    }
}

TEST(Dual, Membership)
{
    EXPECT_FALSE(is_dual_vector(lattices::U(), rv({"1/2", "0"})));
    EXPECT_TRUE(is_dual_vector(T0(), rv({"4/15", "-1/15", "1/2"})));
    EXPECT_TRUE(is_dual_vector(GramMatrix{{4, 1}, {1, 4}}, rv({"4/15", "-1/15"})));
    EXPECT_THROW(is_dual_vector(T0(), rv({"1", "0"})), DimensionMismatch);
}

TEST(Dual, NormsAndPairings)
{
    auto const f1 = rv({"4/15", "-1/15", "1/2"});
    EXPECT_EQ(qnorm_mod2(T0(), f1), parse_rational("53/30"));
    EXPECT_EQ(qnorm_mod2(T1(), rv({"8/21", "-19/42", "0"})), parse_rational("5/42"));
    EXPECT_EQ(qnorm_mod2(T1(), rv({"1/2", "0", "1/2"})), 0);
    EXPECT_EQ(qnorm_mod2(T1(), rv({"0", "1/2", "1/2"})), 0);
    EXPECT_THROW(qnorm_mod2(lattices::U(), rv({"1/2", "0"})), NotInDual);

    RationalVector const zero(3);
    EXPECT_EQ(pairing_mod1(T0(), zero, zero), 0);
    GramMatrix const a{{4, 1}, {1, 4}};
    auto const g = rv({"4/15", "-1/15"});
    EXPECT_EQ(qnorm_mod2(a, g), parse_rational("4/15"));
    // b(v, v) and q(v) agree mod Z
    EXPECT_EQ(pairing_mod1(a, g, g), mod1(qnorm_mod2(a, g)));

    EXPECT_EQ(order_in_quotient(T0(), integer_vector({1, 2, 3})), 1);
    EXPECT_EQ(order_in_quotient(T0(), f1), 30);
    EXPECT_EQ(order_in_quotient(T1(), rv({"8/21", "-19/42", "0"})), 42);
}

TEST(Dual, PropertyNormWellDefinedOnQuotient)
{
    oracle::Rng rng(15);
    for (int t = 0; t < 250; ++t) {
        std::size_t const n = 1 + t % 4;
        GramMatrix const g = oracle::random_nondegenerate(rng, n, 10, true);
        auto const dg = discriminant_group(g);
        if (dg.generators.empty())
            continue;
        RationalVector v = dg.generators[oracle::uniform(rng, 0, dg.generators.size() - 1)];
        Rational const q = qnorm_mod2(g, v);
        for (auto & x : v)
            x += oracle::uniform(rng, -5, 5);
        ASSERT_EQ(qnorm_mod2(g, v), q);
    }
}

TEST(IndexLaw, Examples)
{
    auto const id = sublattice_index_law(T0(), IntMatrix::identity(3));
    EXPECT_EQ(id.index, 1);
    EXPECT_TRUE(id.verified);
    auto const u = sublattice_index_law(lattices::U(), IntMatrix{{2, 0}, {0, 1}});
    EXPECT_EQ(u.index, 2);
    EXPECT_EQ(u.det_sub, -4);
    EXPECT_TRUE(u.verified);
    auto const one = sublattice_index_law(GramMatrix{{2}}, IntMatrix{{3}});
    EXPECT_EQ(one.index, 3);
    EXPECT_EQ(one.det_sub, 18);
    EXPECT_TRUE(one.verified);
    EXPECT_THROW(sublattice_index_law(lattices::U(), IntMatrix{{1, 2}, {2, 4}}),
                 DegenerateSublattice);
}

TEST(IndexLaw, PropertyRandomSublattices)
{
    oracle::Rng rng(16);
    int checked = 0;
    while (checked < 250) {
        std::size_t const n = 1 + checked % 5;
        GramMatrix const g = oracle::random_nondegenerate(rng, n, 8, checked % 2 == 0);
        IntMatrix const b = oracle::random_matrix(rng, n, n, 6);
        Integer const db = oracle::laplace_det(b);
        if (db == 0)
            continue;
        auto const r = sublattice_index_law(g, b);
        ASSERT_EQ(r.index, db < 0 ? Integer(-db) : db);
        ASSERT_EQ(r.det_sub, oracle::laplace_det(b.transpose() * g.matrix() * b));
        ASSERT_TRUE(r.verified) << g << " " << b;
        ++checked;
    }
}

TEST(Constructions, SumAndTwist)
{
    EXPECT_EQ(twist(lattices::U(), 2), (GramMatrix{{0, 2}, {2, 0}}));
    EXPECT_THROW(twist(lattices::U(), 0), ZeroTwist);
    EXPECT_EQ(direct_sum(GramMatrix{{4, 1}, {1, 4}}, GramMatrix{{-2}}), T0());
    EXPECT_EQ(lattices::A2(), (GramMatrix{{2, -1}, {-1, 2}}));
    EXPECT_TRUE(lattices::K3().is_even());
}

TEST(Gram, RejectsBadShapes)
{
    EXPECT_THROW(GramMatrix(IntMatrix{{1, 2}, {3, 4}}), NotSymmetric);
    EXPECT_THROW(GramMatrix(IntMatrix(2, 3)), DimensionMismatch);
}

} // namespace
} // namespace k3lat
