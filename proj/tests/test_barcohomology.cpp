#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gctqft/barcohomology.hpp"

using namespace gctqft;

namespace {

B2Cochain3 random_mu(const FiniteAbelianGroup& g, Int level, std::mt19937& rng)
{
    const Int m = torsion_unit_order(level);
    B2Cochain3 mu(g, level);
    for (const auto& a : enumerate(g))
        for (const auto& b : enumerate(g)) mu.set(torsion_unit_generator(level).pow(static_cast<Int>(rng() % m)), a, b);
    return mu;
}

} // namespace

TEST_CASE("bar boundary formulas")
{
    FiniteAbelianGroup g({6});
    GroupElement a(g, {2}), b(g, {3}), c(g, {5});

    SECTION("boundary of a 1-tuple vanishes")
    {
        auto ch = bar_boundary(std::vector<GroupElement>{a});
        CHECK(ch.empty()); // ( ) - ( ) = 0
    }
    SECTION("boundary of (a,b)")
    {
        auto ch = bar_boundary(std::vector<GroupElement>{a, b});
        BarChain expect;
        bar_chain_add(expect, {b}, 1);
        bar_chain_add(expect, {a + b}, -1);
        bar_chain_add(expect, {a}, 1);
        CHECK(ch == expect);
    }
    SECTION("dd = 0 exhaustively for small groups")
    {
        for (auto orders : std::vector<std::vector<Int>>{{2}, {3}, {4}, {5}, {6}, {2, 2}}) {
            FiniteAbelianGroup h(orders);
            auto elems = enumerate(h);
            for (const auto& x : elems)
                for (const auto& y : elems)
                    for (const auto& z : elems) {
                        BarChain start;
                        bar_chain_add(start, {x, y, z}, 1);
                        CHECK(bar_boundary(bar_boundary(start)).empty());
                    }
            // degree 4 spot check on a few tuples
            for (std::size_t t = 0; t < std::min<std::size_t>(elems.size(), 3); ++t) {
                BarChain start;
                bar_chain_add(start, {elems[t], elems[(t + 1) % elems.size()], elems[0], elems[t]}, 1);
                CHECK(bar_boundary(bar_boundary(start)).empty());
            }
        }
    }
}

TEST_CASE("3-cocycle checks")
{
    FiniteAbelianGroup g({2});
    SECTION("constant one")
    {
        BarCochain3 c(g, 4);
        CHECK(is_3cocycle(c));
    }
    SECTION("presentation alpha is a cocycle")
    {
        CategoryPresentation p(g, 4, {root_of_unity(4, 1)});
        CHECK(is_3cocycle(BarCochain3::from_presentation(p)));
    }
    SECTION("flipped value breaks it, with a witness")
    {
        CategoryPresentation p(g, 4, {root_of_unity(4, 1)});
        auto c = BarCochain3::from_presentation(p);
        GroupElement e = GroupElement::identity(g), x = GroupElement::generator(g, 0);
        c.set(RingElement::integer(4, -1) * c.at(e, x, x), e, x, x);
        auto w = find_3cocycle_violation(c);
        REQUIRE(w.has_value());
        CHECK(w->size() == 4);
        CHECK_FALSE(is_3cocycle(c));
    }
}

TEST_CASE("coboundaries of 2-cochains")
{
    FiniteAbelianGroup g({2});
    SECTION("trivial mu")
    {
        B2Cochain3 mu(g, 4);
        auto c = coboundary_of_2cochain(mu);
        for (const auto& a : enumerate(g))
            for (const auto& b : enumerate(g))
                for (const auto& x : enumerate(g)) CHECK(c.at(a, b, x) == RingElement::one(4));
    }
    SECTION("single nontrivial value stays a cocycle")
    {
        B2Cochain3 mu(g, 4);
        GroupElement x = GroupElement::generator(g, 0);
        mu.set(root_of_unity(4, 1), x, x);
        CHECK(is_3cocycle(coboundary_of_2cochain(mu)));
    }
    SECTION("delta is multiplicative in mu")
    {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            auto m1 = random_mu(g, 4, rng);
            auto m2 = random_mu(g, 4, rng);
            B2Cochain3 prod(g, 4);
            for (const auto& a : enumerate(g))
                for (const auto& b : enumerate(g)) prod.set(m1.at(a, b) * m2.at(a, b), a, b);
            auto d1 = coboundary_of_2cochain(m1);
            auto d2 = coboundary_of_2cochain(m2);
            auto dp = coboundary_of_2cochain(prod);
            for (const auto& a : enumerate(g))
                for (const auto& b : enumerate(g))
                    for (const auto& c : enumerate(g)) CHECK(dp.at(a, b, c) == d1.at(a, b, c) * d2.at(a, b, c));
        }
    }
}

TEST_CASE("B^2 4-cocycle checks")
{
    FiniteAbelianGroup g({2});
    SECTION("trivial pair")
    {
        B2Cochain4 c(g, 4);
        CHECK(is_b2_4cocycle(c));
    }
    SECTION("presentation images are cocycles")
    {
        for (Int k = 0; k < 4; ++k) {
            CategoryPresentation p(g, 4, {root_of_unity(4, k)});
            CHECK(is_b2_4cocycle(B2Cochain4::from_presentation(p)));
        }
    }
    SECTION("presentation images with off-diagonals are cocycles")
    {
        FiniteAbelianGroup h({2, 2});
        for (Int e1 = 0; e1 < 4; ++e1)
            for (Int e21 = 0; e21 < 2; ++e21) {
                std::map<std::pair<std::size_t, std::size_t>, RingElement> off;
                off.emplace(std::make_pair<std::size_t, std::size_t>(1, 0), root_of_unity(4, 2 * e21));
                CategoryPresentation p(h, 4, {root_of_unity(4, e1), root_of_unity(4, 3)}, off);
                REQUIRE(p.valid());
                CHECK(is_b2_4cocycle(B2Cochain4::from_presentation(p)));
            }
    }
    SECTION("presentation images are cocycles across group shapes up to order 12")
    {
        for (auto orders : std::vector<std::vector<Int>>{{3}, {4}, {6}, {12}, {2, 4}, {3, 3}, {2, 2, 2}}) {
            FiniteAbelianGroup h(orders);
            Int level = CategoryPresentation::standard_level(h);
            auto reps = classify_braided(h, level, ClassifyMode::presentation).representatives;
            // spot-check a deterministic spread of presentations
            for (std::size_t i = 0; i < reps.size(); i += std::max<std::size_t>(1, reps.size() / 6)) {
                INFO("group order " << h.order() << " presentation " << i);
                CHECK(is_b2_4cocycle(B2Cochain4::from_presentation(reps[i])));
            }
        }
    }
    SECTION("flipped sigma value breaks it")
    {
        CategoryPresentation p(g, 4, {root_of_unity(4, 1)});
        auto c = B2Cochain4::from_presentation(p);
        GroupElement x = GroupElement::generator(g, 0), e = GroupElement::identity(g);
        c.sigma.set(RingElement::integer(4, -1) * c.sigma.at(e, x), e, x);
        CHECK_FALSE(is_b2_4cocycle(c));
        CHECK(find_b2_4cocycle_violation(c).has_value());
    }
}

TEST_CASE("b2 coboundaries are cocycles")
{
    SECTION("trivial mu gives the trivial pair")
    {
        FiniteAbelianGroup g({2});
        B2Cochain3 mu(g, 4);
        auto c = b2_coboundary(mu);
        for (const auto& a : enumerate(g))
            for (const auto& b : enumerate(g)) CHECK(c.sigma.at(a, b) == RingElement::one(4));
    }
    SECTION("symmetric mu kills the sigma part")
    {
        FiniteAbelianGroup g({3});
        std::mt19937 rng(17);
        auto mu = random_mu(g, 3, rng);
        // symmetrize
        for (const auto& a : enumerate(g))
            for (const auto& b : enumerate(g))
                if (element_index(a) < element_index(b)) mu.set(mu.at(b, a), a, b);
        auto c = b2_coboundary(mu);
        for (const auto& a : enumerate(g))
            for (const auto& b : enumerate(g)) CHECK(c.sigma.at(a, b) == RingElement::one(3));
    }
    SECTION("random mu outputs pass the cocycle check")
    {
        std::mt19937 rng(31);
        for (auto orders : std::vector<std::vector<Int>>{{2}, {3}, {2, 2}}) {
            FiniteAbelianGroup g(orders);
            Int level = CategoryPresentation::standard_level(g);
            for (int trial = 0; trial < 25; ++trial) CHECK(is_b2_4cocycle(b2_coboundary(random_mu(g, level, rng))));
        }
    }
}

TEST_CASE("classification counts")
{
    SECTION("Z/2 at level 4: four braided classes, two symmetric")
    {
        auto full = classify_braided(FiniteAbelianGroup({2}), 4, ClassifyMode::full);
        CHECK(full.mode == "full");
        CHECK(full.representatives.size() == 4);
        auto sym = classify_symmetric(FiniteAbelianGroup({2}), 4, ClassifyMode::full);
        CHECK(sym.representatives.size() == 2);

        // the four classes carry distinct invariants sigma in mu_4
        std::set<RingElement> sigmas;
        for (const auto& p : full.representatives) sigmas.insert(p.sigma_diag()[0]);
        CHECK(sigmas.size() == 4);
    }
    SECTION("trivial group: one class")
    {
        auto r = classify_braided(FiniteAbelianGroup::trivial(), 4);
        CHECK(r.representatives.size() == 1);
        CHECK(classify_symmetric(FiniteAbelianGroup::trivial(), 4).representatives.size() == 1);
    }
    SECTION("Z/3 at level 3: three braided classes, one symmetric")
    {
        auto full = classify_braided(FiniteAbelianGroup({3}), 3, ClassifyMode::full);
        CHECK(full.representatives.size() == 3);
        CHECK(classify_symmetric(FiniteAbelianGroup({3}), 3, ClassifyMode::full).representatives.size() == 1);
    }
    SECTION("cyclic counts match Prop-style formula and both modes agree")
    {
        for (Int n : {2, 3, 4}) {
            auto full = classify_braided(FiniteAbelianGroup({n}), 2 * n, ClassifyMode::full);
            auto pres = classify_braided(FiniteAbelianGroup({n}), 2 * n, ClassifyMode::presentation);
            Int expect = (n % 2 == 0) ? 2 * n : n;
            CHECK(static_cast<Int>(full.representatives.size()) == expect);
            CHECK(static_cast<Int>(pres.representatives.size()) == expect);

            // invariants of the full-mode classes are pairwise distinct and
            // match the presentation-mode set
            std::set<std::vector<Int>> inv_full, inv_pres;
            for (const auto& p : full.representatives) inv_full.insert({p.diag_exponent(0)});
            for (const auto& p : pres.representatives) inv_pres.insert({p.diag_exponent(0)});
            CHECK(inv_full == inv_pres);
            CHECK(inv_full.size() == static_cast<std::size_t>(expect));
        }
    }
    SECTION("infeasible full mode is refused with a bound")
    {
        CHECK_THROWS_AS(classify_braided(FiniteAbelianGroup({12}), 24, ClassifyMode::full), InfeasibleError);
    }
}

TEST_CASE("presentation cocycles represent distinct classes")
{
    // Z/2 x Z/2 at level 4, presentation mode: 4 * 4 * 2 = 32 classes,
    // all invariant tuples distinct.
    FiniteAbelianGroup g({2, 2});
    auto r = classify_braided(g, 4, ClassifyMode::presentation);
    CHECK(r.representatives.size() == 32);
    std::set<std::vector<Int>> invs;
    for (const auto& p : r.representatives)
        invs.insert({p.diag_exponent(0), p.diag_exponent(1), p.off_exponent(1, 0)});
    CHECK(invs.size() == 32);
}
