#include <gtest/gtest.h>

#include <set>

#include "k3lat/errors.hpp"
#include "k3lat/ns_verify.hpp"
#include "oracles.hpp"

namespace k3lat {
namespace {

CurveConfig disjoint_curves(std::size_t k)
{
    std::vector<std::string> names;
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        names.push_back("M" + std::to_string(i + 1));
        m(i, i) = -2;
    }
    return CurveConfig(names, GramMatrix(m), true);
}

std::vector<Integer> iv(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// Subgroup of L^v/L generated by the given dual vectors, by closing the set
// of fractional parts under addition.
std::size_t brute_subgroup_order(std::vector<RationalVector> const & gens)
{
    auto frac = [](RationalVector v) {
        for (auto & x : v)
            x = mod1(x);
        return v;
    };
    std::size_t const n = gens.empty() ? 0 : gens[0].size();
    std::set<RationalVector> seen{RationalVector(n)};
    std::vector<RationalVector> todo{RationalVector(n)};
    while (!todo.empty()) {
        RationalVector const v = todo.back();
        todo.pop_back();
        for (auto const & g : gens) {
            RationalVector w(n);
            for (std::size_t i = 0; i < n; ++i)
                w[i] = v[i] + g[i];
            w = frac(w);
            if (seen.insert(w).second)
                todo.push_back(w);
        }
    }
    return seen.size();
}

TEST(NsVerify, ThreeDisjointCurves)
{
    auto const r = check_divisible_class(disjoint_curves(3), iv({1, 1, 1}), 2);
    EXPECT_TRUE(r.in_dual);
    EXPECT_TRUE(r.failures.empty());
    ASSERT_TRUE(r.norm);
    EXPECT_EQ(*r.norm, Rational(1, 2));
    EXPECT_EQ(r.order, 2);
}

TEST(NsVerify, SingleCurve)
{
    auto const r = check_divisible_class(disjoint_curves(1), iv({1}), 2);
    EXPECT_TRUE(r.in_dual);
    EXPECT_EQ(*r.norm, Rational(3, 2));
    auto const g = generators_report(disjoint_curves(1), {{iv({1}), 2}});
    EXPECT_EQ(g.subgroup_order, 2);
    EXPECT_TRUE(g.generates);
}

TEST(NsVerify, ZeroClass)
{
    auto const r = check_divisible_class(disjoint_curves(4), iv({0, 0, 0, 0}), 5);
    EXPECT_TRUE(r.in_dual);
    EXPECT_EQ(*r.norm, 0);
    EXPECT_EQ(r.order, 1);
}

TEST(NsVerify, FailuresAreListed)
{
    CurveConfig const cfg({"A", "B"}, GramMatrix{{-2, 1}, {1, -2}}, true);
    auto const r = check_divisible_class(cfg, iv({1, 0}), 2);
    EXPECT_FALSE(r.in_dual);
    EXPECT_FALSE(r.norm);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0], "pairing with B is 1/2");
    EXPECT_EQ(r.order, 2);
}

TEST(NsVerify, Errors)
{
    EXPECT_THROW(check_divisible_class(disjoint_curves(2), iv({1}), 2), DimensionMismatch);
    EXPECT_THROW(check_divisible_class(disjoint_curves(2), iv({1, 1}), 0), InvalidArgument);
    EXPECT_THROW(CurveConfig({"A"}, GramMatrix{{-4}}, true), InvalidArgument);
    EXPECT_THROW(CurveConfig({"A", "B"}, GramMatrix{{-2}}), DimensionMismatch);
}

TEST(NsVerify, GeneratorOfFifteen)
{
    CurveConfig const cfg({"e1", "e2"}, GramMatrix{{4, 1}, {1, 4}});
    auto const g = generators_report(cfg, {{iv({4, -1}), 15}});
    ASSERT_EQ(g.classes.size(), 1u);
    EXPECT_TRUE(g.classes[0].in_dual);
    EXPECT_EQ(g.classes[0].order, 15);
    EXPECT_EQ(g.subgroup_order, 15);
    EXPECT_EQ(g.group_order, 15);
    EXPECT_TRUE(g.generates);
}

TEST(NsVerify, SixtyFromTwoGenerators)
{
    CurveConfig const cfg({"e1", "e2"}, GramMatrix{{6, 0}, {0, 10}});
    // (1/2, 0) and (1/3, 1/10)
    auto const g = generators_report(cfg, {{iv({1, 0}), 2}, {iv({10, 3}), 30}});
    EXPECT_EQ(g.classes[1].vector, (RationalVector{Rational(1, 3), Rational(1, 10)}));
    EXPECT_EQ(g.subgroup_order, 60);
    EXPECT_TRUE(g.generates);
    auto const half = generators_report(cfg, {{iv({10, 3}), 30}});
    EXPECT_EQ(half.subgroup_order, 30);
    EXPECT_FALSE(half.generates);
}

TEST(NsVerify, Parsing)
{
    auto const cfg = CurveConfig::parse("# three curves\nM1 M2 M3\n-2 0 0\n0 -2 0\n0 0 -2\n", true);
    EXPECT_EQ(cfg.names, (std::vector<std::string>{"M1", "M2", "M3"}));
    EXPECT_EQ(cfg.gram, (GramMatrix{{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}}));
    auto const cands = parse_candidates("1 1 1 / 2\n(1, 0, 0)/2\n0 0 1\n");
    ASSERT_EQ(cands.size(), 3u);
    EXPECT_EQ(cands[0].coeffs, iv({1, 1, 1}));
    EXPECT_EQ(cands[0].n, 2);
    EXPECT_EQ(cands[1].coeffs, iv({1, 0, 0}));
    EXPECT_EQ(cands[2].n, 1);
    EXPECT_THROW(parse_candidates("1 2 / 2 3"), ParseError);
    EXPECT_THROW(CurveConfig::parse("A B\n-2 0\n"), DimensionMismatch);
}

// n = 1 is always an integral class of order 1.
TEST(NsVerify, PropertyUndividedIsTrivial)
{
    oracle::Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        std::size_t const k = oracle::uniform(rng, 1, 4);
        GramMatrix const g = oracle::random_nondegenerate(rng, k, 5, true);
        std::vector<std::string> names(k, "C");
        std::vector<Integer> c;
        for (std::size_t i = 0; i < k; ++i)
            c.push_back(oracle::uniform(rng, -9, 9));
        auto const r = check_divisible_class(CurveConfig(names, g), c, 1);
        ASSERT_TRUE(r.in_dual);
        ASSERT_EQ(r.order, 1);
    }
}

// Dual membership is exactly integrality of every pairing with the basis,
// and the norm only depends on coeffs mod n.
TEST(NsVerify, PropertyDualAndNormStability)
{
    oracle::Rng rng(52);
    int dual = 0;
    for (int t = 0; t < 300; ++t) {
        std::size_t const k = oracle::uniform(rng, 1, 3);
        GramMatrix const g = oracle::random_nondegenerate(rng, k, 6, true);
        CurveConfig const cfg(std::vector<std::string>(k, "C"), g);
        Integer const n = oracle::uniform(rng, 2, 6);
        std::vector<Integer> c, shifted;
        for (std::size_t i = 0; i < k; ++i) {
            c.push_back(oracle::uniform(rng, -6, 6));
            shifted.push_back(c.back() + n * oracle::uniform(rng, -3, 3));
        }
        bool integral = true;
        for (std::size_t i = 0; i < k; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < k; ++j)
                s += g(i, j) * c[j];
            integral = integral && s % n == 0;
        }
        auto const r = check_divisible_class(cfg, c, n);
        ASSERT_EQ(r.in_dual, integral) << g;
        ASSERT_EQ(r.failures.empty(), integral);
        if (!integral)
            continue;
        ++dual;
        ASSERT_EQ(*r.norm, *check_divisible_class(cfg, shifted, n).norm);
    }
    EXPECT_GT(dual, 30);
}

TEST(NsVerify, PropertySubgroupOrderMatchesClosure)
{
    oracle::Rng rng(53);
    int checked = 0;
    for (int t = 0; t < 250; ++t) {
        std::size_t const k = oracle::uniform(rng, 1, 3);
        GramMatrix const g = oracle::random_nondegenerate(rng, k, 5, true);
        Integer const det = abs(determinant(g));
        if (det > 300)
            continue;
        CurveConfig const cfg(std::vector<std::string>(k, "C"), g);
        DiscriminantGroup const dg = discriminant_group(g);
        std::vector<ClassCandidate> cands;
        std::vector<RationalVector> dual_vectors;
        std::size_t const m = oracle::uniform(rng, 0, 3);
        for (std::size_t s = 0; s < m; ++s) {
            // mostly dual vectors built from the group generators, sometimes noise
            RationalVector v(k);
            for (auto const & gen : dg.generators) {
                std::int64_t const a = oracle::uniform(rng, -4, 4);
                for (std::size_t i = 0; i < k; ++i)
                    v[i] += a * gen[i];
            }
            if (oracle::uniform(rng, 0, 4) == 0)
                v[0] += Rational(1, det);
            ClassCandidate c;
            c.n = det;
            for (std::size_t i = 0; i < k; ++i)
                c.coeffs.push_back(numerator(v[i] * det));
            cands.push_back(c);
            auto const r = check_divisible_class(cfg, c.coeffs, c.n);
            if (r.in_dual)
                dual_vectors.push_back(r.vector);
        }
        auto const rep = generators_report(cfg, cands);
        ASSERT_EQ(rep.group_order, det);
        ASSERT_EQ(rep.subgroup_order, brute_subgroup_order(dual_vectors)) << g;
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

} // namespace
} // namespace k3lat
