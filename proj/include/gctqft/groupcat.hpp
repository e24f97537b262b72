#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gctqft/abelian.hpp"
#include "gctqft/cyclotomic.hpp"

namespace gctqft {

/// Order of the group of roots of unity in Z[zeta_N]: N for even N (since -1
/// is already a power of zeta_N), 2N for odd N.
inline Int torsion_unit_order(Int level)
{
    return (level % 2 == 0) ? level : 2 * level;
}

/// A generator of the torsion units: zeta_N for even N, -zeta_N for odd N.
inline RingElement torsion_unit_generator(Int level)
{
    if (level % 2 == 0) return root_of_unity(level, 1);
    return -root_of_unity(level, 1);
}

/// Discrete log of a root of unity against torsion_unit_generator; nullopt if
/// the element is not a root of unity at this level.
inline std::optional<Int> unit_exponent(const RingElement& u)
{
    const Int m = torsion_unit_order(u.level());
    RingElement gen = torsion_unit_generator(u.level());
    RingElement acc = RingElement::one(u.level());
    for (Int e = 0; e < m; ++e) {
        if (acc == u) return e;
        acc = acc * gen;
    }
    return std::nullopt;
}

/// One violated order condition, for reports.
struct OrderViolation {
    std::string condition;
    RingElement value;
};

struct OrderReport {
    bool valid = true;
    std::vector<OrderViolation> violations;
    explicit operator bool() const { return valid; }
};

/// Numerical presentation of a braided-commutative group-category: the
/// underlying group, a ring level, the self-commuting units sigma_i and the
/// mixed units sigma_{i,j} for i > j.
class CategoryPresentation {
public:
    CategoryPresentation(FiniteAbelianGroup group, Int level, std::vector<RingElement> sigma_diag,
                         std::map<std::pair<std::size_t, std::size_t>, RingElement> sigma_off = {})
        : group_(std::move(group)), level_(level), sigma_diag_(std::move(sigma_diag)), sigma_off_(std::move(sigma_off))
    {
        const std::size_t k = group_.rank();
        if (sigma_diag_.size() != k)
            throw std::invalid_argument("CategoryPresentation: need one sigma_i per generator");
        for (const auto& s : sigma_diag_)
            if (s.level() != level_) throw std::invalid_argument("CategoryPresentation: sigma_i level mismatch");
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (!sigma_off_.count({i, j})) sigma_off_.emplace(std::make_pair(i, j), RingElement::one(level_));
        for (const auto& [key, s] : sigma_off_) {
            if (key.first <= key.second || key.first >= k)
                throw std::invalid_argument("CategoryPresentation: sigma_off keys must have i > j");
            if (s.level() != level_) throw std::invalid_argument("CategoryPresentation: sigma_{i,j} level mismatch");
        }
        compute_order_report_();
    }

    /// The universal level for this group: lcm over 2 n_i. Every structure
    /// constant is a root of unity of order dividing some 2 n_i, so this level
    /// always suffices.
    static Int standard_level(const FiniteAbelianGroup& g)
    {
        Int l = 1;
        for (Int n : g.orders()) l = std::lcm(l, 2 * n);
        return l;
    }

    const FiniteAbelianGroup& group() const { return group_; }
    Int level() const { return level_; }
    const std::vector<RingElement>& sigma_diag() const { return sigma_diag_; }
    const RingElement& sigma_off(std::size_t i, std::size_t j) const { return sigma_off_.at({i, j}); }
    const std::map<std::pair<std::size_t, std::size_t>, RingElement>& sigma_off_map() const { return sigma_off_; }

    const OrderReport& order_report() const { return report_; }
    bool valid() const { return report_.valid; }

    /// Exponent of sigma_i against the torsion unit generator. Only available
    /// on valid presentations.
    Int diag_exponent(std::size_t i) const
    {
        require_valid();
        return diag_exp_[i];
    }

    Int off_exponent(std::size_t i, std::size_t j) const
    {
        require_valid();
        return off_exp_.at({i, j});
    }

    Int unit_order() const { return torsion_unit_order(level_); }

    RingElement unit_from_exponent(Int e) const
    {
        Int m = unit_order();
        return torsion_unit_generator(level_).pow(((e % m) + m) % m);
    }

    void require_valid() const
    {
        if (!report_.valid) throw std::domain_error("CategoryPresentation: order conditions violated");
    }

private:
    void compute_order_report_()
    {
        const auto& orders = group_.orders();
        for (std::size_t i = 0; i < sigma_diag_.size(); ++i) {
            Int n = orders[i];
            const RingElement& s = sigma_diag_[i];
            if (s.pow(2 * n) != RingElement::one(level_))
                report_.violations.push_back({"sigma_" + std::to_string(i + 1) + "^(2n) != 1", s});
            else if (n % 2 == 1 && s.pow(n) != RingElement::one(level_))
                report_.violations.push_back({"sigma_" + std::to_string(i + 1) + "^n != 1 (n odd)", s});
        }
        for (const auto& [key, s] : sigma_off_) {
            Int ni = orders[key.first], nj = orders[key.second];
            std::string name = "sigma_" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1);
            if (s.pow(ni) != RingElement::one(level_))
                report_.violations.push_back({name + "^n_i != 1", s});
            if (s.pow(nj) != RingElement::one(level_))
                report_.violations.push_back({name + "^n_j != 1", s});
        }
        report_.valid = report_.violations.empty();
        if (!report_.valid) return;
        for (const auto& s : sigma_diag_) {
            auto e = unit_exponent(s);
            if (!e) throw std::logic_error("CategoryPresentation: unit passed order check but has no exponent");
            diag_exp_.push_back(*e);
        }
        for (const auto& [key, s] : sigma_off_) {
            auto e = unit_exponent(s);
            if (!e) throw std::logic_error("CategoryPresentation: unit passed order check but has no exponent");
            off_exp_[key] = *e;
        }
    }

    FiniteAbelianGroup group_;
    Int level_;
    std::vector<RingElement> sigma_diag_;
    std::map<std::pair<std::size_t, std::size_t>, RingElement> sigma_off_;
    OrderReport report_;
    std::vector<Int> diag_exp_;
    std::map<std::pair<std::size_t, std::size_t>, Int> off_exp_;
};

inline OrderReport check_order_conditions(const CategoryPresentation& p) { return p.order_report(); }

// ---------------------------------------------------------------------------
// Closed forms (the defining data of the twisted structure)
// ---------------------------------------------------------------------------

/// Exponent of alpha(a,b,c): per generator, sigma_i^{n_i a_i} when the i-th
/// exponents of b and c overflow, else 1.
inline Int alpha_exponent(const CategoryPresentation& p, const GroupElement& a, const GroupElement& b,
                          const GroupElement& c)
{
    p.require_valid();
    const Int m = p.unit_order();
    Int e = 0;
    for (std::size_t i = 0; i < p.group().rank(); ++i) {
        Int n = p.group().orders()[i];
        if (b.exp(i) + c.exp(i) >= n) e += p.diag_exponent(i) * n % m * a.exp(i);
    }
    return ((e % m) + m) % m;
}

/// Exponent of sigma(a,b) = prod_{i<=j} sigma_{i,j}^{a_i b_j}, where the i < j
/// factor uses the stored sigma_{j,i}.
inline Int sigma_exponent(const CategoryPresentation& p, const GroupElement& a, const GroupElement& b)
{
    p.require_valid();
    const Int m = p.unit_order();
    Int e = 0;
    const std::size_t k = p.group().rank();
    for (std::size_t i = 0; i < k; ++i) {
        e += p.diag_exponent(i) * a.exp(i) % m * b.exp(i);
        for (std::size_t j = i + 1; j < k; ++j) e += p.off_exponent(j, i) * a.exp(i) % m * b.exp(j);
    }
    return ((e % m) + m) % m;
}

inline RingElement alpha(const CategoryPresentation& p, const GroupElement& a, const GroupElement& b,
                         const GroupElement& c)
{
    return p.unit_from_exponent(alpha_exponent(p, a, b, c));
}

inline RingElement sigma_pair(const CategoryPresentation& p, const GroupElement& a, const GroupElement& b)
{
    return p.unit_from_exponent(sigma_exponent(p, a, b));
}

namespace detail {

/// Precomputed exponent tables for exhaustive checks: all alpha and sigma
/// values plus the group addition table, everything indexed by element index.
struct ExponentTables {
    Int m = 1;
    Int order = 1;
    std::vector<Int> add;   // order x order
    std::vector<Int> alpha; // order^3
    std::vector<Int> sigma; // order^2

    Int sum(Int x, Int y) const { return add[static_cast<std::size_t>(x * order + y)]; }
    Int a(Int x, Int y, Int z) const { return alpha[static_cast<std::size_t>((x * order + y) * order + z)]; }
    Int s(Int x, Int y) const { return sigma[static_cast<std::size_t>(x * order + y)]; }
};

inline ExponentTables build_tables(const CategoryPresentation& p)
{
    p.require_valid();
    ExponentTables t;
    t.m = p.unit_order();
    auto elems = enumerate(p.group());
    t.order = static_cast<Int>(elems.size());
    t.add.resize(static_cast<std::size_t>(t.order) * t.order);
    for (Int x = 0; x < t.order; ++x)
        for (Int y = 0; y < t.order; ++y)
            t.add[static_cast<std::size_t>(x * t.order + y)] =
                element_index(elems[static_cast<std::size_t>(x)] + elems[static_cast<std::size_t>(y)]);
    t.sigma.resize(static_cast<std::size_t>(t.order) * t.order);
    for (Int x = 0; x < t.order; ++x)
        for (Int y = 0; y < t.order; ++y)
            t.sigma[static_cast<std::size_t>(x * t.order + y)] =
                sigma_exponent(p, elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]);
    t.alpha.resize(static_cast<std::size_t>(t.order) * t.order * t.order);
    for (Int x = 0; x < t.order; ++x)
        for (Int y = 0; y < t.order; ++y)
            for (Int z = 0; z < t.order; ++z)
                t.alpha[static_cast<std::size_t>((x * t.order + y) * t.order + z)] =
                    alpha_exponent(p, elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)],
                                   elems[static_cast<std::size_t>(z)]);
    return t;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Coherence checks (exhaustive, exact)
// ---------------------------------------------------------------------------

/// Pentagon over all of G^4:
/// alpha(b,c,d) alpha(a,bc,d) alpha(a,b,c) = alpha(ab,c,d) alpha(a,b,cd).
inline bool check_pentagon(const CategoryPresentation& p)
{
    if (!p.valid()) return false;
    auto t = detail::build_tables(p);
    const Int n = t.order;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b) {
            Int ab = t.sum(a, b);
            for (Int c = 0; c < n; ++c) {
                Int bc = t.sum(b, c);
                for (Int d = 0; d < n; ++d) {
                    Int cd = t.sum(c, d);
                    Int lhs = t.a(b, c, d) + t.a(a, bc, d) + t.a(a, b, c);
                    Int rhs = t.a(ab, c, d) + t.a(a, b, cd);
                    if ((lhs - rhs) % t.m != 0) return false;
                }
            }
        }
    return true;
}

/// Both hexagon axioms for (alpha, sigma), over all of G^3:
///   alpha(a,b,c) sigma(a,bc) alpha(b,c,a) = sigma(a,b) alpha(b,a,c) sigma(a,c)
/// and the variant with sigma replaced by the reversed inverse braiding.
inline bool check_hexagons(const CategoryPresentation& p)
{
    if (!p.valid()) return false;
    auto t = detail::build_tables(p);
    const Int n = t.order;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            for (Int c = 0; c < n; ++c) {
                Int bc = t.sum(b, c);
                Int lhs = t.a(a, b, c) + t.s(a, bc) + t.a(b, c, a);
                Int rhs = t.s(a, b) + t.a(b, a, c) + t.s(a, c);
                if ((lhs - rhs) % t.m != 0) return false;
                // second hexagon: sigma(x,y) -> sigma(y,x)^{-1}
                Int lhs2 = t.a(a, b, c) - t.s(bc, a) + t.a(b, c, a);
                Int rhs2 = -t.s(b, a) + t.a(b, a, c) - t.s(c, a);
                if ((lhs2 - rhs2) % t.m != 0) return false;
            }
    return true;
}

/// Balance identity sigma(ab,ab) = sigma(a,a) sigma(b,b) sigma(a,b) sigma(b,a)
/// over all of G^2.
inline bool check_balance(const CategoryPresentation& p)
{
    if (!p.valid()) return false;
    auto t = detail::build_tables(p);
    const Int n = t.order;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b) {
            Int ab = t.sum(a, b);
            Int lhs = t.s(ab, ab);
            Int rhs = t.s(a, a) + t.s(b, b) + t.s(a, b) + t.s(b, a);
            if ((lhs - rhs) % t.m != 0) return false;
        }
    return true;
}

/// True iff sigma(a,b) sigma(b,a) = 1 for all pairs; equivalently sigma_i^2 = 1
/// and sigma_{i,j} = 1.
inline bool is_symmetric(const CategoryPresentation& p)
{
    if (!p.valid()) return false;
    auto t = detail::build_tables(p);
    const Int n = t.order;
    for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
            if ((t.s(a, b) + t.s(b, a)) % t.m != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Word reduction
// ---------------------------------------------------------------------------

/// Binary bracketing over a word in the generators; leaves carry 0-based
/// generator indices.
class AssociationTree {
public:
    static AssociationTree leaf(std::size_t generator)
    {
        AssociationTree t;
        t.generator_ = generator;
        return t;
    }

    static AssociationTree node(AssociationTree left, AssociationTree right)
    {
        AssociationTree t;
        t.left_ = std::make_shared<AssociationTree>(std::move(left));
        t.right_ = std::make_shared<AssociationTree>(std::move(right));
        return t;
    }

    /// Left comb over a letter list: (((l1 l2) l3) ... ).
    static AssociationTree left_comb(const std::vector<std::size_t>& letters)
    {
        if (letters.empty()) throw std::invalid_argument("AssociationTree: empty word");
        AssociationTree t = leaf(letters[0]);
        for (std::size_t i = 1; i < letters.size(); ++i) t = node(std::move(t), leaf(letters[i]));
        return t;
    }

    bool is_leaf() const { return !left_; }
    std::size_t generator() const { return generator_; }
    const AssociationTree& left() const { return *left_; }
    const AssociationTree& right() const { return *right_; }

    std::vector<std::size_t> letters() const
    {
        std::vector<std::size_t> out;
        collect_(out);
        return out;
    }

private:
    void collect_(std::vector<std::size_t>& out) const
    {
        if (is_leaf()) {
            out.push_back(generator_);
            return;
        }
        left_->collect_(out);
        right_->collect_(out);
    }

    std::size_t generator_ = 0;
    std::shared_ptr<AssociationTree> left_, right_;
};

namespace detail {

// Exponent of the associativity composite left_comb(letters(T)) -> T. The
// merge step walks alpha(X, s_1...s_{k-1}, s_k) factors, with X the prefix
// product; group elements stay reduced along the way.
inline Int assoc_exponent(const CategoryPresentation& p, const AssociationTree& t, GroupElement& product_out)
{
    const auto& g = p.group();
    if (t.is_leaf()) {
        product_out = GroupElement::generator(g, t.generator());
        return 0;
    }
    GroupElement left_prod = GroupElement::identity(g), right_prod = GroupElement::identity(g);
    Int e = assoc_exponent(p, t.left(), left_prod) + assoc_exponent(p, t.right(), right_prod);
    // merge: left_comb(X . s_1 ... s_k) -> X (left comb of right letters)
    auto right_letters = t.right().letters();
    GroupElement prefix = GroupElement::identity(g);
    for (std::size_t k = 1; k < right_letters.size(); ++k) {
        prefix = prefix + GroupElement::generator(g, right_letters[k - 1]);
        e += alpha_exponent(p, left_prod, prefix, GroupElement::generator(g, right_letters[k]));
    }
    product_out = left_prod + right_prod;
    return e;
}

} // namespace detail

/// The group element of a word together with the unit of the morphism from
/// the standard representative into the word's product: sigma^{-1} factors
/// from bubbling generators into index order, alpha factors from the
/// association pattern, and Lambda reductions at unit cost 1.
inline std::pair<GroupElement, RingElement> reduce_word(const CategoryPresentation& p, const AssociationTree& w)
{
    p.require_valid();
    const Int m = p.unit_order();
    auto letters = w.letters();
    Int e = 0;
    // bubble into index order: each hi-past-lo transposition costs sigma_{hi,lo}^{-1}
    for (std::size_t x = 0; x < letters.size(); ++x)
        for (std::size_t y = x + 1; y < letters.size(); ++y)
            if (letters[x] > letters[y]) e -= p.off_exponent(letters[x], letters[y]);
    GroupElement product = GroupElement::identity(p.group());
    e += detail::assoc_exponent(p, w, product);
    return {product, p.unit_from_exponent(((e % m) + m) % m)};
}

// ---------------------------------------------------------------------------
// Tortile twist
// ---------------------------------------------------------------------------

/// The standard twist theta(a) = sigma(a,a).
inline RingElement twist(const CategoryPresentation& p, const GroupElement& a) { return sigma_pair(p, a, a); }

/// Scale the standard twist by a homomorphism G -> units(R), given by its
/// values on the generators. Validates that the values define a homomorphism.
inline std::map<GroupElement, RingElement> scale_twist(const CategoryPresentation& p,
                                                       const std::vector<RingElement>& hom_values)
{
    p.require_valid();
    if (hom_values.size() != p.group().rank())
        throw std::invalid_argument("scale_twist: one value per generator required");
    std::vector<Int> exps;
    for (std::size_t i = 0; i < hom_values.size(); ++i) {
        auto e = unit_exponent(hom_values[i]);
        if (!e) throw std::invalid_argument("scale_twist: values must be roots of unity");
        Int n = p.group().orders()[i];
        if (hom_values[i].pow(n) != RingElement::one(p.level()))
            throw std::invalid_argument("scale_twist: value order must divide the generator order");
        exps.push_back(*e);
    }
    const Int m = p.unit_order();
    std::map<GroupElement, RingElement> out;
    for (const auto& a : enumerate(p.group())) {
        Int e = sigma_exponent(p, a, a);
        for (std::size_t i = 0; i < exps.size(); ++i) e += exps[i] * a.exp(i);
        out.emplace(a, p.unit_from_exponent(((e % m) + m) % m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauss sums and the anomaly
// ---------------------------------------------------------------------------

/// tau = sum over G of sigma(g,g), tau-bar the sum of inverses.
inline std::pair<RingElement, RingElement> gauss_sums(const CategoryPresentation& p)
{
    p.require_valid();
    RingElement tau = RingElement::zero(p.level());
    RingElement tau_bar = RingElement::zero(p.level());
    for (const auto& g : enumerate(p.group())) {
        Int e = sigma_exponent(p, g, g);
        tau += p.unit_from_exponent(e);
        tau_bar += p.unit_from_exponent(-e);
    }
    return {tau, tau_bar};
}

/// The closed-form product tau tau-bar for cyclic G of order n with sigma of
/// exact order l: n^2/l for odd l, 2n^2/l when 4 | l, and 0 otherwise.
inline Int anomaly_product_closed_form(Int n, Int l)
{
    if (n < 1 || l < 1) throw std::invalid_argument("anomaly_product_closed_form: orders must be positive");
    bool admissible = (2 * n) % l == 0 && (n % 2 == 0 || n % l == 0);
    if (!admissible) throw std::invalid_argument("anomaly_product_closed_form: inadmissible (n, l) pair");
    if (l % 2 == 1) return n * n / l;
    if (l % 4 == 0) return 2 * n * n / l;
    return 0;
}

/// Normalizability of the associated theory: whether r^2 tau tau-bar = 1 can
/// be solved after a ring extension, and what has to be adjoined.
struct NormalizabilityReport {
    RingElement tau, tau_bar, product;
    bool normalizable = false;
    std::string extension; // required ring extension, symbolic
    bool anomalous = false; // index-sensitivity of the normalized theory
};

inline NormalizabilityReport normalizability_report(const CategoryPresentation& p)
{
    NormalizabilityReport r;
    auto [tau, tau_bar] = gauss_sums(p);
    r.tau = tau;
    r.tau_bar = tau_bar;
    r.product = tau * tau_bar;
    r.normalizable = !r.product.is_zero();
    r.anomalous = r.normalizable && tau != tau_bar;
    if (!r.normalizable) {
        r.extension = "none (tau tau-bar = 0; no extended theory exists)";
        return r;
    }
    // If the product is a rational integer, name the extension concretely.
    bool is_int = true;
    for (std::size_t i = 1; i < r.product.coeffs().size(); ++i)
        if (r.product.coeffs()[i] != 0) is_int = false;
    if (is_int) {
        Int v = r.product.coeffs()[0];
        Int s = 0;
        while ((s + 1) * (s + 1) <= v) ++s;
        if (v > 0 && s * s == v)
            r.extension = "R[1/" + std::to_string(s) + "]";
        else
            r.extension = "R[1/sqrt(" + std::to_string(v) + ")]";
    } else {
        r.extension = "R[(tau tau-bar)^(-1/2)] with tau tau-bar = " + r.product.to_string();
    }
    return r;
}

} // namespace gctqft
