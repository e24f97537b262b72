#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gctqft/abelian.hpp"
#include "gctqft/cyclotomic.hpp"
#include "gctqft/groupcat.hpp"

namespace gctqft {

// ---------------------------------------------------------------------------
// Bar chain complex of B_G
// ---------------------------------------------------------------------------

/// Formal integer combination of bar cells (tuples over G).
using BarChain = std::map<std::vector<GroupElement>, Int>;

inline void bar_chain_add(BarChain& chain, const std::vector<GroupElement>& cell, Int coeff)
{
    if (coeff == 0) return;
    auto it = chain.find(cell);
    if (it == chain.end()) {
        chain.emplace(cell, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) chain.erase(it);
    }
}

/// Boundary of an n-tuple: the alternating sum with d_0 dropping the first
/// entry, d_n dropping the last, and d_i multiplying adjacent entries.
inline BarChain bar_boundary(const std::vector<GroupElement>& cell)
{
    if (cell.empty()) throw std::invalid_argument("bar_boundary: need an n-tuple with n >= 1");
    BarChain out;
    const std::size_t n = cell.size();
    Int sign = 1;
    for (std::size_t i = 0; i <= n; ++i, sign = -sign) {
        std::vector<GroupElement> face;
        face.reserve(n - 1);
        if (i == 0) {
            face.assign(cell.begin() + 1, cell.end());
        } else if (i == n) {
            face.assign(cell.begin(), cell.end() - 1);
        } else {
            face.assign(cell.begin(), cell.begin() + static_cast<std::ptrdiff_t>(i) - 1);
            face.push_back(cell[i - 1] + cell[i]);
            face.insert(face.end(), cell.begin() + static_cast<std::ptrdiff_t>(i) + 1, cell.end());
        }
        bar_chain_add(out, face, sign);
    }
    return out;
}

inline BarChain bar_boundary(const BarChain& chain)
{
    BarChain out;
    for (const auto& [cell, coeff] : chain) {
        if (cell.empty()) continue; // the 0-cell has no boundary
        for (const auto& [face, s] : bar_boundary(cell)) bar_chain_add(out, face, coeff * s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

namespace detail {

template <int Arity>
class Cochain {
public:
    Cochain(FiniteAbelianGroup group, Int level)
        : group_(std::move(group)), level_(level), order_(group_.order()),
          values_(static_cast<std::size_t>(pow_order_()), RingElement::one(level))
    {
    }

    const FiniteAbelianGroup& group() const { return group_; }
    Int level() const { return level_; }

    template <typename... E>
    const RingElement& at(const E&... elems) const
    {
        return values_[flat_index_(elems...)];
    }

    template <typename... E>
    void set(const RingElement& v, const E&... elems)
    {
        if (v.level() != level_) throw std::invalid_argument("Cochain: value level mismatch");
        values_[flat_index_(elems...)] = v;
    }

private:
    Int pow_order_() const
    {
        Int t = 1;
        for (int i = 0; i < Arity; ++i) t *= order_;
        return t;
    }

    template <typename... E>
    std::size_t flat_index_(const E&... elems) const
    {
        static_assert(sizeof...(elems) == Arity);
        Int idx = 0;
        ((idx = idx * order_ + element_index(elems)), ...);
        return static_cast<std::size_t>(idx);
    }

    FiniteAbelianGroup group_;
    Int level_;
    Int order_;
    std::vector<RingElement> values_;
};

} // namespace detail

/// A 3-cochain on B_G: a total function G^3 -> R.
class BarCochain3 : public detail::Cochain<3> {
public:
    using Cochain::Cochain;

    static BarCochain3 from_presentation(const CategoryPresentation& p)
    {
        BarCochain3 c(p.group(), p.level());
        for (const auto& a : enumerate(p.group()))
            for (const auto& b : enumerate(p.group()))
                for (const auto& x : enumerate(p.group())) c.set(alpha(p, a, b, x), a, b, x);
        return c;
    }
};

/// A 3-cochain on B^2_G: a function mu on the one nontrivial 3-cell family.
class B2Cochain3 : public detail::Cochain<2> {
public:
    using Cochain::Cochain;
};

/// A 4-cochain on B^2_G: alpha on the Delta^1 x Delta^3 family, sigma on the
/// Delta^2 x (Delta^1 x Delta^1) family.
struct B2Cochain4 {
    BarCochain3 alpha;
    B2Cochain3 sigma;

    B2Cochain4(FiniteAbelianGroup group, Int level) : alpha(group, level), sigma(std::move(group), level) {}

    static B2Cochain4 from_presentation(const CategoryPresentation& p)
    {
        B2Cochain4 c(p.group(), p.level());
        c.alpha = BarCochain3::from_presentation(p);
        for (const auto& a : enumerate(p.group()))
            for (const auto& b : enumerate(p.group())) c.sigma.set(sigma_pair(p, a, b), a, b);
        return c;
    }
};

// ---------------------------------------------------------------------------
// Cocycle conditions and coboundaries
// ---------------------------------------------------------------------------

/// Witness for a failed multiplicative identity: the tuple where it breaks.
using Witness = std::vector<GroupElement>;

/// Pentagon violation search; nullopt means alpha is a 3-cocycle. Written
/// without inverses so it also works on junk values.
inline std::optional<Witness> find_3cocycle_violation(const BarCochain3& c)
{
    auto elems = enumerate(c.group());
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& x : elems)
                for (const auto& d : elems) {
                    auto lhs = c.at(b, x, d) * c.at(a, b + x, d) * c.at(a, b, x);
                    auto rhs = c.at(a + b, x, d) * c.at(a, b, x + d);
                    if (lhs != rhs) return Witness{a, b, x, d};
                }
    return std::nullopt;
}

inline bool is_3cocycle(const BarCochain3& c) { return !find_3cocycle_violation(c).has_value(); }

/// (delta mu)(a,b,c) = mu(b,c) mu(ab,c)^{-1} mu(a,bc) mu(a,b)^{-1}.
inline BarCochain3 coboundary_of_2cochain(const B2Cochain3& mu)
{
    BarCochain3 out(mu.group(), mu.level());
    auto elems = enumerate(mu.group());
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                out.set(mu.at(b, c) * unit_inverse(mu.at(a + b, c)) * mu.at(a, b + c) * unit_inverse(mu.at(a, b)), a,
                        b, c);
    return out;
}

/// Violation search for the three 5-cell families of B^2_G: the pentagon for
/// alpha, and the two shuffle families
///   alpha(a,b,c) - alpha(b,a,c) + alpha(b,c,a) + sigma(a,c) - sigma(a,bc) + sigma(a,b) = 0
///   alpha(a,b,c) - alpha(a,c,b) + alpha(c,a,b) + sigma(ab,c) - sigma(b,c) - sigma(a,c) = 0
/// written multiplicatively and cross-multiplied to avoid inverses.
inline std::optional<Witness> find_b2_4cocycle_violation(const B2Cochain4& c)
{
    if (auto w = find_3cocycle_violation(c.alpha)) return w;
    auto elems = enumerate(c.alpha.group());
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& x : elems) {
                auto lhs = c.alpha.at(a, b, x) * c.alpha.at(b, x, a) * c.sigma.at(a, x) * c.sigma.at(a, b);
                auto rhs = c.alpha.at(b, a, x) * c.sigma.at(a, b + x);
                if (lhs != rhs) return Witness{a, b, x};
                auto lhs2 = c.alpha.at(a, b, x) * c.alpha.at(x, a, b) * c.sigma.at(a + b, x);
                auto rhs2 = c.alpha.at(a, x, b) * c.sigma.at(b, x) * c.sigma.at(a, x);
                if (lhs2 != rhs2) return Witness{a, b, x};
            }
    return std::nullopt;
}

inline bool is_b2_4cocycle(const B2Cochain4& c) { return !find_b2_4cocycle_violation(c).has_value(); }

/// Coboundary of a 3-cochain on B^2_G: alpha changes as in the monoidal case,
/// sigma by the antisymmetric twist mu(a,b) mu(b,a)^{-1}.
inline B2Cochain4 b2_coboundary(const B2Cochain3& mu)
{
    B2Cochain4 out(mu.group(), mu.level());
    out.alpha = coboundary_of_2cochain(mu);
    auto elems = enumerate(mu.group());
    for (const auto& a : elems)
        for (const auto& b : elems) out.sigma.set(mu.at(a, b) * unit_inverse(mu.at(b, a)), a, b);
    return out;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class ClassifyMode { automatic, full, presentation };

struct ClassificationResult {
    std::vector<CategoryPresentation> representatives;
    std::string mode; // "full" or "presentation"
};

/// Thrown when an enumeration would exceed the configured budget.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Admissible exponents for a torsion unit of order dividing each given bound,
/// inside the cyclic unit group of order m.
inline std::vector<Int> admissible_exponents(Int m, const std::vector<Int>& order_divisors)
{
    std::vector<Int> out;
    for (Int e = 0; e < m; ++e) {
        bool ok = true;
        for (Int d : order_divisors)
            if ((e * d) % m != 0) ok = false;
        if (ok) out.push_back(e);
    }
    return out;
}

/// Presentation-form enumeration: every admissible invariant tuple, in
/// lexicographic exponent order.
inline std::vector<CategoryPresentation> enumerate_presentations(const FiniteAbelianGroup& g, Int level)
{
    const Int m = torsion_unit_order(level);
    const auto& orders = g.orders();
    const std::size_t k = g.rank();
    std::vector<std::vector<Int>> choices;
    for (std::size_t i = 0; i < k; ++i) {
        Int n = orders[i];
        if (n % 2 == 1)
            choices.push_back(admissible_exponents(m, {n}));
        else
            choices.push_back(admissible_exponents(m, {2 * n}));
    }
    std::vector<std::pair<std::size_t, std::size_t>> off_keys;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            off_keys.emplace_back(i, j);
            choices.push_back(admissible_exponents(m, {orders[i], orders[j]}));
        }

    std::vector<CategoryPresentation> out;
    std::vector<std::size_t> pick(choices.size(), 0);
    for (;;) {
        std::vector<RingElement> diag;
        for (std::size_t i = 0; i < k; ++i)
            diag.push_back(torsion_unit_generator(level).pow(choices[i][pick[i]]));
        std::map<std::pair<std::size_t, std::size_t>, RingElement> off;
        for (std::size_t t = 0; t < off_keys.size(); ++t)
            off.emplace(off_keys[t], torsion_unit_generator(level).pow(choices[k + t][pick[k + t]]));
        CategoryPresentation p(g, level, std::move(diag), std::move(off));
        if (!p.valid()) throw std::logic_error("enumerate_presentations: admissible data failed order check");
        out.push_back(std::move(p));

        std::size_t i = choices.size();
        bool done = choices.empty();
        while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
            if (i == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

/// Full cochain-lattice classification: compute the group of 4-cocycles on
/// B^2_G with coefficients in the torsion units mu_M = Z/M modulo
/// coboundaries, via the mod-M subquotient engine, and read presentation
/// invariants off one representative per class.
inline std::vector<CategoryPresentation> classify_full(const FiniteAbelianGroup& g, Int level)
{
    const Int m = torsion_unit_order(level);
    auto elems = enumerate(g);
    const Int n = static_cast<Int>(elems.size());
    const Int alpha_cells = n * n * n;
    const Int sigma_cells = n * n;
    const Int vars = alpha_cells + sigma_cells;

    auto aidx = [&](Int a, Int b, Int c) { return (a * n + b) * n + c; };
    auto sidx = [&](Int a, Int b) { return alpha_cells + a * n + b; };
    std::vector<Int> add(static_cast<std::size_t>(n) * n);
    for (Int x = 0; x < n; ++x)
        for (Int y = 0; y < n; ++y)
            add[static_cast<std::size_t>(x * n + y)] =
                element_index(elems[static_cast<std::size_t>(x)] + elems[static_cast<std::size_t>(y)]);
    auto sum = [&](Int x, Int y) { return add[static_cast<std::size_t>(x * n + y)]; };

    // Cocycle conditions, written additively in Z/M.
    const Int rows = n * n * n * n + 2 * n * n * n;
    IntegerMatrix cond(rows, vars);
    Int row = 0;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            for (Int c = 0; c < n; ++c) {
                for (Int d = 0; d < n; ++d) {
                    cond.at(row, aidx(b, c, d)) += 1;
                    cond.at(row, aidx(a, sum(b, c), d)) += 1;
                    cond.at(row, aidx(a, b, c)) += 1;
                    cond.at(row, aidx(sum(a, b), c, d)) -= 1;
                    cond.at(row, aidx(a, b, sum(c, d))) -= 1;
                    ++row;
                }
                // alpha(a,b,c) - alpha(b,a,c) + alpha(b,c,a) + sigma(a,c) - sigma(a,bc) + sigma(a,b)
                cond.at(row, aidx(a, b, c)) += 1;
                cond.at(row, aidx(b, a, c)) -= 1;
                cond.at(row, aidx(b, c, a)) += 1;
                cond.at(row, sidx(a, c)) += 1;
                cond.at(row, sidx(a, sum(b, c))) -= 1;
                cond.at(row, sidx(a, b)) += 1;
                ++row;
                // alpha(a,b,c) - alpha(a,c,b) + alpha(c,a,b) + sigma(ab,c) - sigma(b,c) - sigma(a,c)
                cond.at(row, aidx(a, b, c)) += 1;
                cond.at(row, aidx(a, c, b)) -= 1;
                cond.at(row, aidx(c, a, b)) += 1;
                cond.at(row, sidx(sum(a, b), c)) += 1;
                cond.at(row, sidx(b, c)) -= 1;
                cond.at(row, sidx(a, c)) -= 1;
                ++row;
            }

    // Coboundaries of 3-cochains mu(a,b).
    IntegerMatrix rel(vars, n * n);
    for (Int ma = 0; ma < n; ++ma)
        for (Int mb = 0; mb < n; ++mb) {
            Int col = ma * n + mb;
            for (Int a = 0; a < n; ++a)
                for (Int b = 0; b < n; ++b) {
                    for (Int c = 0; c < n; ++c) {
                        // delta mu (a,b,c) = mu(b,c) - mu(ab,c) + mu(a,bc) - mu(a,b)
                        if (b == ma && c == mb) rel.at(aidx(a, b, c), col) += 1;
                        if (sum(a, b) == ma && c == mb) rel.at(aidx(a, b, c), col) -= 1;
                        if (a == ma && sum(b, c) == mb) rel.at(aidx(a, b, c), col) += 1;
                        if (a == ma && b == mb) rel.at(aidx(a, b, c), col) -= 1;
                    }
                    // delta sigma (a,b) = mu(a,b) - mu(b,a)
                    if (a == ma && b == mb) rel.at(sidx(a, b), col) += 1;
                    if (b == ma && a == mb) rel.at(sidx(a, b), col) -= 1;
                }
        }

    ModMSubquotient h4(cond, rel, m);

    std::vector<CategoryPresentation> out;
    for (const auto& cls : enumerate(h4.group())) {
        auto vec = h4.representative(cls.exps());
        // presentation invariants of the class
        const std::size_t k = g.rank();
        std::vector<RingElement> diag;
        for (std::size_t i = 0; i < k; ++i) {
            Int gi = element_index(GroupElement::generator(g, i));
            diag.push_back(torsion_unit_generator(level).pow(
                ((vec[static_cast<std::size_t>(sidx(gi, gi))] % m) + m) % m));
        }
        std::map<std::pair<std::size_t, std::size_t>, RingElement> off;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                Int gi = element_index(GroupElement::generator(g, i));
                Int gj = element_index(GroupElement::generator(g, j));
                Int e = vec[static_cast<std::size_t>(sidx(gi, gj))] + vec[static_cast<std::size_t>(sidx(gj, gi))];
                off.emplace(std::make_pair(i, j), torsion_unit_generator(level).pow(((e % m) + m) % m));
            }
        CategoryPresentation p(g, level, std::move(diag), std::move(off));
        if (!p.valid())
            throw std::logic_error("classify_full: class representative has invalid invariants");
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace detail

/// Equivalence classes of braided-commutative structures on R[G] with values
/// in the torsion units of Z[zeta_level].
inline ClassificationResult classify_braided(const FiniteAbelianGroup& g, Int level,
                                             ClassifyMode mode = ClassifyMode::automatic,
                                             Int max_enum = 10'000'000)
{
    const Int n = g.order();
    // Full-mode work is dominated by the SNF over the condition lattice:
    // ~rows^2 * (rows + vars) with rows = n^4 + 2n^3, vars = n^3 + n^2.
    // Estimated in floating point only to avoid overflow on absurd inputs.
    const long double rows = static_cast<long double>(n) * n * n * n + 2.0L * n * n * n;
    const long double vars = static_cast<long double>(n) * n * n + static_cast<long double>(n) * n;
    const long double full_work = rows * rows * (rows + vars);
    const long double full_budget = 50.0L * static_cast<long double>(max_enum);
    if (mode == ClassifyMode::automatic)
        mode = (full_work <= full_budget) ? ClassifyMode::full : ClassifyMode::presentation;

    ClassificationResult result;
    if (mode == ClassifyMode::full) {
        if (full_work > full_budget) {
            char msg[160];
            std::snprintf(msg, sizeof(msg),
                          "classify_braided: full lattice computation needs ~%.3Lg operations, above the "
                          "budget of %.3Lg; use presentation mode or raise the cap",
                          full_work, full_budget);
            throw InfeasibleError(msg);
        }
        result.representatives = detail::classify_full(g, level);
        result.mode = "full";
    } else {
        // count admissible presentations exactly before enumerating
        const Int m = torsion_unit_order(level);
        const auto& ords = g.orders();
        Int count = 1;
        for (std::size_t i = 0; i < g.rank() && count <= max_enum; ++i) {
            Int bound = (ords[i] % 2 == 1) ? ords[i] : 2 * ords[i];
            count *= static_cast<Int>(detail::admissible_exponents(m, {bound}).size());
            for (std::size_t j = 0; j < i && count <= max_enum; ++j)
                count *= static_cast<Int>(detail::admissible_exponents(m, {ords[i], ords[j]}).size());
        }
        if (count > max_enum)
            throw InfeasibleError("classify_braided: presentation enumeration exceeds the cap of " +
                                  std::to_string(max_enum));
        result.representatives = detail::enumerate_presentations(g, level);
        result.mode = "presentation";
    }
    return result;
}

/// Symmetric classes: braided classes whose double braiding is trivial.
inline ClassificationResult classify_symmetric(const FiniteAbelianGroup& g, Int level,
                                               ClassifyMode mode = ClassifyMode::automatic,
                                               Int max_enum = 10'000'000)
{
    ClassificationResult braided = classify_braided(g, level, mode, max_enum);
    ClassificationResult out;
    out.mode = braided.mode;
    for (auto& p : braided.representatives)
        if (is_symmetric(p)) out.representatives.push_back(std::move(p));
    return out;
}

} // namespace gctqft
