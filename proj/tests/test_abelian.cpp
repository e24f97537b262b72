#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "gctqft/abelian.hpp"

using namespace gctqft;

namespace {

IntegerMatrix random_matrix(Int rows, Int cols, Int bound, std::mt19937& rng)
{
    std::uniform_int_distribution<Int> dist(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (Int i = 0; i < rows; ++i)
        for (Int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_snf_contract(const IntegerMatrix& a)
{
    SmithDecomposition s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(s.u * s.u_inv == IntegerMatrix::identity(a.rows()));
    CHECK(s.v * s.v_inv == IntegerMatrix::identity(a.cols()));
    CHECK(std::abs(determinant(s.u)) == 1);
    CHECK(std::abs(determinant(s.v)) == 1);
    auto diag = s.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] != 0)
            CHECK(diag[i + 1] % diag[i] == 0);
        else
            CHECK(diag[i + 1] == 0);
    }
    // off-diagonal zero
    for (Int i = 0; i < s.d.rows(); ++i)
        for (Int j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
}

// Brute-force cokernel order for a full-row-rank matrix: pick a nonzero
// maximal minor T (so T * Z^r lies in the column lattice), then count the
// subgroup generated by the columns inside (Z/T)^r by closure.
std::optional<Int> brute_force_cokernel_order(const IntegerMatrix& a)
{
    const Int r = a.rows(), c = a.cols();
    if (r == 0) return 1;
    if (c < r) return std::nullopt;
    // Laplace-expansion determinant of an r x r column selection.
    std::vector<Int> cols_sel(static_cast<std::size_t>(r));
    std::function<Int(std::vector<std::vector<Int>>)> det = [&](std::vector<std::vector<Int>> m) -> Int {
        if (m.empty()) return 1;
        if (m.size() == 1) return m[0][0];
        Int acc = 0, sign = 1;
        for (std::size_t k = 0; k < m.size(); ++k) {
            std::vector<std::vector<Int>> sub;
            for (std::size_t i = 1; i < m.size(); ++i) {
                std::vector<Int> row;
                for (std::size_t j = 0; j < m.size(); ++j)
                    if (j != k) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            acc += sign * m[0][k] * det(sub);
            sign = -sign;
        }
        return acc;
    };
    Int t = 0;
    std::function<bool(Int, Int)> pick = [&](Int start, Int depth) -> bool {
        if (depth == r) {
            std::vector<std::vector<Int>> sub(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(r)));
            for (Int i = 0; i < r; ++i)
                for (Int j = 0; j < r; ++j) sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, cols_sel[static_cast<std::size_t>(j)]);
            Int d = det(sub);
            if (d != 0) {
                t = std::abs(d);
                return true;
            }
            return false;
        }
        for (Int j = start; j < c; ++j) {
            cols_sel[static_cast<std::size_t>(depth)] = j;
            if (pick(j + 1, depth + 1)) return true;
        }
        return false;
    };
    if (!pick(0, 0)) return std::nullopt; // not full row rank
    // closure of the column images in (Z/t)^r
    auto key = [&](const std::vector<Int>& v) { return v; };
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> frontier;
    std::vector<Int> zero(static_cast<std::size_t>(r), 0);
    seen.insert(zero);
    frontier.push_back(zero);
    std::vector<std::vector<Int>> gens;
    for (Int j = 0; j < c; ++j) {
        std::vector<Int> g(static_cast<std::size_t>(r));
        for (Int i = 0; i < r; ++i) g[static_cast<std::size_t>(i)] = ((a.at(i, j) % t) + t) % t;
        gens.push_back(g);
    }
    while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            std::vector<Int> nx(static_cast<std::size_t>(r));
            for (Int i = 0; i < r; ++i) nx[static_cast<std::size_t>(i)] = (cur[static_cast<std::size_t>(i)] + g[static_cast<std::size_t>(i)]) % t;
            if (seen.insert(key(nx)).second) frontier.push_back(nx);
        }
    }
    Int tr = 1;
    for (Int i = 0; i < r; ++i) tr *= t;
    return tr / static_cast<Int>(seen.size());
}

} // namespace

TEST_CASE("group elements and operations")
{
    FiniteAbelianGroup g({2, 3});
    GroupElement a(g, {1, 2});
    CHECK(a + a == GroupElement(g, {0, 1}));
    CHECK(-GroupElement::identity(g) == GroupElement::identity(g));
    CHECK(enumerate(g).size() == 6);

    FiniteAbelianGroup h({4});
    CHECK_THROWS_AS(a + GroupElement(h, {1}), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and indexable")
{
    FiniteAbelianGroup g({2, 3});
    auto all = enumerate(g);
    REQUIRE(all.size() == 6);
    CHECK(all[0] == GroupElement(g, {0, 0}));
    CHECK(all[1] == GroupElement(g, {0, 1}));
    CHECK(all[3] == GroupElement(g, {1, 0}));
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(element_index(all[i]) == static_cast<Int>(i));

    CHECK(enumerate(FiniteAbelianGroup::trivial()).size() == 1);
}

TEST_CASE("group laws exhaustively on small groups")
{
    for (auto orders : std::vector<std::vector<Int>>{{6}, {2, 3}, {2, 2, 2}, {4, 3}}) {
        FiniteAbelianGroup g(orders);
        auto all = enumerate(g);
        Int l = 1;
        for (Int n : orders) l = std::lcm(l, n);
        for (const auto& a : all) {
            // order divides lcm(n_i)
            GroupElement acc = GroupElement::identity(g);
            for (Int k = 0; k < l; ++k) acc = acc + a;
            CHECK(acc == GroupElement::identity(g));
            for (const auto& b : all) {
                CHECK(a + b == b + a);
                CHECK(a + (-a) == GroupElement::identity(g));
            }
        }
    }
}

TEST_CASE("smith normal form examples")
{
    SECTION("identity")
    {
        auto s = smith_normal_form(IntegerMatrix::identity(2));
        CHECK(s.d == IntegerMatrix::identity(2));
        CHECK(s.rank == 2);
    }
    SECTION("diag(2,3) becomes diag(1,6)")
    {
        IntegerMatrix a = IntegerMatrix::from_rows({{2, 0}, {0, 3}});
        auto s = smith_normal_form(a);
        CHECK(s.diagonal() == std::vector<Int>{1, 6});
        CHECK(s.u * a * s.v == s.d);
        check_snf_contract(a);
    }
    SECTION("zero matrix")
    {
        auto s = smith_normal_form(IntegerMatrix(2, 3));
        CHECK(s.d == IntegerMatrix(2, 3));
        CHECK(s.rank == 0);
    }
}

TEST_CASE("smith normal form contract on random matrices")
{
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        Int r = 1 + static_cast<Int>(rng() % 5);
        Int c = 1 + static_cast<Int>(rng() % 5);
        check_snf_contract(random_matrix(r, c, 4, rng));
    }
}

TEST_CASE("cokernel presentations")
{
    SECTION("Z/2 from [2]")
    {
        auto p = cokernel(IntegerMatrix::from_rows({{2}}));
        CHECK(p.torsion_orders == std::vector<Int>{2});
        CHECK(p.free_rank == 0);
    }
    SECTION("trivial from identity")
    {
        auto p = cokernel(IntegerMatrix::identity(3));
        CHECK(p.torsion_orders.empty());
        CHECK(p.free_rank == 0);
    }
    SECTION("Z/6 from diag(2,3)")
    {
        auto p = cokernel(IntegerMatrix::from_rows({{2, 0}, {0, 3}}));
        CHECK(p.torsion_orders == std::vector<Int>{6});
    }
    SECTION("free rank appears for short matrices")
    {
        auto p = cokernel(IntegerMatrix(2, 0));
        CHECK(p.free_rank == 2);
    }
}

TEST_CASE("cokernel order matches brute-force coset counting")
{
    std::mt19937 rng(2024);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 80; ++trial) {
        Int r = 1 + static_cast<Int>(rng() % 3);
        Int c = 1 + static_cast<Int>(rng() % 3);
        auto a = random_matrix(r, c, 3, rng);
        auto brute = brute_force_cokernel_order(a);
        if (!brute) continue; // not full row rank
        ++tested;
        auto p = cokernel(a);
        REQUIRE(p.free_rank == 0);
        Int order = 1;
        for (Int d : p.torsion_orders) order *= d;
        CHECK(order == *brute);
    }
    CHECK(tested >= 40);
}

TEST_CASE("mod-m subquotient computes homology-style quotients")
{
    SECTION("Z/m as lattice quotient with no conditions")
    {
        // c = 1, no conditions, relations = [3]: Z/gcd(3, m=6) ... rather
        // {x in Z : } / (3Z + 6Z) = Z/3
        ModMSubquotient q(IntegerMatrix(0, 1), IntegerMatrix::from_rows({{3}}), 6);
        CHECK(q.orders() == std::vector<Int>{3});
        auto gen = q.generator(0);
        auto coords = q.coordinates(gen);
        CHECK(coords == std::vector<Int>{1});
    }
    SECTION("conditions cut the lattice")
    {
        // {(x,y) : x + y = 0 mod 2} / (2 Z^2): order 2 group generated by (1,1)
        ModMSubquotient q(IntegerMatrix::from_rows({{1, 1}}), IntegerMatrix(2, 0), 2);
        CHECK(q.orders() == std::vector<Int>{2});
        CHECK(q.coordinates({1, 1}) == std::vector<Int>{1});
        CHECK(q.coordinates({0, 0}) == std::vector<Int>{0});
        CHECK_THROWS_AS(q.coordinates({1, 0}), std::domain_error);
    }
    SECTION("relations must satisfy conditions")
    {
        CHECK_THROWS_AS(ModMSubquotient(IntegerMatrix::from_rows({{1, 0}}), IntegerMatrix::from_rows({{1}, {0}}), 2),
                        std::invalid_argument);
    }
    SECTION("representative and coordinates round-trip")
    {
        ModMSubquotient q(IntegerMatrix::from_rows({{1, 1, 1}}), IntegerMatrix(3, 0), 4);
        auto all_coords = enumerate(q.group());
        for (const auto& e : all_coords) {
            auto rep = q.representative(e.exps());
            CHECK(q.coordinates(rep) == e.exps());
        }
    }
}
