#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gctqft/abelian.hpp"

namespace gctqft {

/// Finite CW complex as named cells per dimension plus integer boundary
/// matrices (rows = (d-1)-cells, cols = d-cells). dd = 0 is checked at
/// construction.
class CWComplex {
public:
    CWComplex(std::string name, std::vector<std::vector<std::string>> cells, std::vector<IntegerMatrix> boundary)
        : name_(std::move(name)), cells_(std::move(cells)), boundary_(std::move(boundary))
    {
        if (boundary_.size() != cells_.size())
            throw std::invalid_argument("CWComplex: need one boundary matrix per dimension");
        std::set<std::string> seen;
        for (const auto& dim : cells_)
            for (const auto& cname : dim)
                if (!seen.insert(cname).second) throw std::invalid_argument("CWComplex: duplicate cell name " + cname);
        for (std::size_t d = 0; d < cells_.size(); ++d) {
            Int expect_rows = d == 0 ? 0 : static_cast<Int>(cells_[d - 1].size());
            if (boundary_[d].rows() != expect_rows || boundary_[d].cols() != static_cast<Int>(cells_[d].size()))
                throw std::invalid_argument("CWComplex: boundary matrix shape mismatch at dimension " +
                                            std::to_string(d));
        }
        for (std::size_t d = 2; d < cells_.size(); ++d) {
            IntegerMatrix dd = boundary_[d - 1] * boundary_[d];
            for (Int i = 0; i < dd.rows(); ++i)
                for (Int j = 0; j < dd.cols(); ++j)
                    if (dd.at(i, j) != 0)
                        throw std::invalid_argument("CWComplex: dd != 0 at dimension " + std::to_string(d));
        }
        for (std::size_t d = 0; d < cells_.size(); ++d)
            for (std::size_t i = 0; i < cells_[d].size(); ++i)
                index_[cells_[d][i]] = {static_cast<Int>(d), static_cast<Int>(i)};
    }

    const std::string& name() const { return name_; }
    Int top_dimension() const { return static_cast<Int>(cells_.size()) - 1; }

    Int cell_count(Int d) const
    {
        if (d < 0 || d > top_dimension()) return 0;
        return static_cast<Int>(cells_[static_cast<std::size_t>(d)].size());
    }

    const std::vector<std::string>& cells(Int d) const
    {
        static const std::vector<std::string> empty;
        if (d < 0 || d > top_dimension()) return empty;
        return cells_[static_cast<std::size_t>(d)];
    }

    const IntegerMatrix& boundary(Int d) const
    {
        static const IntegerMatrix empty;
        if (d < 1 || d > top_dimension()) return empty;
        return boundary_[static_cast<std::size_t>(d)];
    }

    bool has_cell(const std::string& cname) const { return index_.count(cname) > 0; }

    std::pair<Int, Int> locate(const std::string& cname) const
    {
        auto it = index_.find(cname);
        if (it == index_.end()) throw std::invalid_argument("CWComplex: unknown cell " + cname);
        return it->second;
    }

    void add_subcomplex(const std::string& sub_name, const std::vector<std::string>& cell_names)
    {
        subcomplexes_[sub_name] = cell_names;
    }

    const std::map<std::string, std::vector<std::string>>& subcomplex_table() const { return subcomplexes_; }
    bool has_subcomplex(const std::string& sub_name) const { return subcomplexes_.count(sub_name) > 0; }

    /// Disjoint union; cell and subcomplex names get "l:"/"r:" prefixes.
    static CWComplex disjoint_union(const CWComplex& a, const CWComplex& b, const std::string& name)
    {
        Int top = std::max(a.top_dimension(), b.top_dimension());
        std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top) + 1);
        std::vector<IntegerMatrix> bnd(static_cast<std::size_t>(top) + 1);
        for (Int d = 0; d <= top; ++d) {
            for (const auto& c : a.cells(d)) cells[static_cast<std::size_t>(d)].push_back("l:" + c);
            for (const auto& c : b.cells(d)) cells[static_cast<std::size_t>(d)].push_back("r:" + c);
            Int rows = d == 0 ? 0 : static_cast<Int>(cells[static_cast<std::size_t>(d - 1)].size());
            IntegerMatrix mat(rows, static_cast<Int>(cells[static_cast<std::size_t>(d)].size()));
            if (d >= 1) {
                Int ar = a.cell_count(d - 1), ac = a.cell_count(d);
                for (Int i = 0; i < ar; ++i)
                    for (Int j = 0; j < ac; ++j) mat.at(i, j) = a.boundary(d).at(i, j);
                for (Int i = 0; i < b.cell_count(d - 1); ++i)
                    for (Int j = 0; j < b.cell_count(d); ++j) mat.at(ar + i, ac + j) = b.boundary(d).at(i, j);
            }
            bnd[static_cast<std::size_t>(d)] = std::move(mat);
        }
        CWComplex out(name, std::move(cells), std::move(bnd));
        for (const auto& [sname, scells] : a.subcomplex_table()) {
            std::vector<std::string> pref;
            for (const auto& c : scells) pref.push_back("l:" + c);
            out.add_subcomplex("l:" + sname, pref);
        }
        for (const auto& [sname, scells] : b.subcomplex_table()) {
            std::vector<std::string> pref;
            for (const auto& c : scells) pref.push_back("r:" + c);
            out.add_subcomplex("r:" + sname, pref);
        }
        return out;
    }

private:
    std::string name_;
    std::vector<std::vector<std::string>> cells_;
    std::vector<IntegerMatrix> boundary_;
    std::map<std::string, std::pair<Int, Int>> index_;
    std::map<std::string, std::vector<std::string>> subcomplexes_;
};

/// A subcomplex: per-dimension membership flags over a parent complex, closed
/// under the boundary.
class Subcomplex {
public:
    Subcomplex() : parent_(nullptr) {}

    Subcomplex(const CWComplex& parent, const std::vector<std::string>& cell_names) : parent_(&parent)
    {
        member_.resize(static_cast<std::size_t>(parent.top_dimension()) + 1);
        for (Int d = 0; d <= parent.top_dimension(); ++d)
            member_[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(parent.cell_count(d)), false);
        for (const auto& cname : cell_names) {
            auto [d, i] = parent.locate(cname);
            member_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = true;
        }
        for (Int d = parent.top_dimension(); d >= 1; --d)
            for (Int j = 0; j < parent.cell_count(d); ++j) {
                if (!contains(d, j)) continue;
                for (Int i = 0; i < parent.cell_count(d - 1); ++i)
                    if (parent.boundary(d).at(i, j) != 0 && !contains(d - 1, i))
                        throw std::invalid_argument("Subcomplex: not closed under boundary (cell " +
                                                    parent.cells(d)[static_cast<std::size_t>(j)] + ")");
            }
    }

    static Subcomplex empty(const CWComplex& parent) { return Subcomplex(parent, {}); }

    static Subcomplex full(const CWComplex& parent)
    {
        std::vector<std::string> all;
        for (Int d = 0; d <= parent.top_dimension(); ++d)
            for (const auto& c : parent.cells(d)) all.push_back(c);
        return Subcomplex(parent, all);
    }

    /// Named lookup; "" or "none" is the empty subcomplex, "all" or the
    /// complex's own name is the whole complex.
    static Subcomplex named(const CWComplex& parent, const std::string& sub_name)
    {
        if (sub_name.empty() || sub_name == "none") return empty(parent);
        if (sub_name == "all" || sub_name == parent.name()) return full(parent);
        auto it = parent.subcomplex_table().find(sub_name);
        if (it == parent.subcomplex_table().end())
            throw std::invalid_argument("Subcomplex: unknown subcomplex " + sub_name);
        return Subcomplex(parent, it->second);
    }

    const CWComplex& parent() const
    {
        if (!parent_) throw std::logic_error("Subcomplex: unbound");
        return *parent_;
    }

    bool bound() const { return parent_ != nullptr; }

    bool contains(Int d, Int i) const
    {
        if (d < 0 || d >= static_cast<Int>(member_.size())) return false;
        return member_[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
    }

    bool contains_all(const Subcomplex& other) const
    {
        for (Int d = 0; d < static_cast<Int>(member_.size()); ++d)
            for (Int i = 0; i < parent().cell_count(d); ++i)
                if (other.contains(d, i) && !contains(d, i)) return false;
        return true;
    }

    bool is_empty() const
    {
        for (const auto& dim : member_)
            for (bool b : dim)
                if (b) return false;
        return true;
    }

    Subcomplex set_union(const Subcomplex& other) const
    {
        check_parent_(other);
        Subcomplex out = *this;
        for (std::size_t d = 0; d < member_.size(); ++d)
            for (std::size_t i = 0; i < member_[d].size(); ++i)
                if (other.member_[d][i]) out.member_[d][i] = true;
        return out;
    }

    Subcomplex set_intersection(const Subcomplex& other) const
    {
        check_parent_(other);
        Subcomplex out = *this;
        for (std::size_t d = 0; d < member_.size(); ++d)
            for (std::size_t i = 0; i < member_[d].size(); ++i) out.member_[d][i] = member_[d][i] && other.member_[d][i];
        return out;
    }

    bool operator==(const Subcomplex& o) const { return parent_ == o.parent_ && member_ == o.member_; }

    std::vector<std::string> cell_names() const
    {
        std::vector<std::string> out;
        for (Int d = 0; d < static_cast<Int>(member_.size()); ++d)
            for (Int i = 0; i < parent().cell_count(d); ++i)
                if (contains(d, i)) out.push_back(parent().cells(d)[static_cast<std::size_t>(i)]);
        return out;
    }

private:
    void check_parent_(const Subcomplex& other) const
    {
        if (parent_ != other.parent_) throw std::invalid_argument("Subcomplex: different parents");
    }

    const CWComplex* parent_;
    std::vector<std::vector<bool>> member_;
};

namespace detail {

/// Cell indexing for a pair (Y, W) of subcomplexes: per dimension, the cells
/// of Y not in W, with maps between absolute and relative indices.
struct RelativeCells {
    const CWComplex* x = nullptr;
    std::vector<std::vector<Int>> abs_of_rel;
    std::vector<std::vector<Int>> rel_of_abs;

    RelativeCells() = default;

    RelativeCells(const CWComplex& xc, const Subcomplex& y, const Subcomplex& w) : x(&xc)
    {
        Int top = xc.top_dimension();
        abs_of_rel.resize(static_cast<std::size_t>(top) + 1);
        rel_of_abs.resize(static_cast<std::size_t>(top) + 1);
        for (Int d = 0; d <= top; ++d) {
            rel_of_abs[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(xc.cell_count(d)), -1);
            for (Int i = 0; i < xc.cell_count(d); ++i)
                if (y.contains(d, i) && !w.contains(d, i)) {
                    rel_of_abs[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] =
                        static_cast<Int>(abs_of_rel[static_cast<std::size_t>(d)].size());
                    abs_of_rel[static_cast<std::size_t>(d)].push_back(i);
                }
        }
    }

    Int count(Int d) const
    {
        if (d < 0 || d >= static_cast<Int>(abs_of_rel.size())) return 0;
        return static_cast<Int>(abs_of_rel[static_cast<std::size_t>(d)].size());
    }

    IntegerMatrix boundary(Int d) const
    {
        IntegerMatrix out(count(d - 1), count(d));
        if (d < 1 || d > x->top_dimension()) return out;
        const IntegerMatrix& full = x->boundary(d);
        for (Int j = 0; j < count(d); ++j) {
            Int aj = abs_of_rel[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
            for (Int i = 0; i < count(d - 1); ++i) {
                Int ai = abs_of_rel[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(i)];
                out.at(i, j) = full.at(ai, aj);
            }
        }
        return out;
    }
};

} // namespace detail

/// H_n(Y, W; G) for a pair of subcomplexes W <= Y of one ambient complex,
/// computed one cyclic coefficient factor at a time through the mod-m
/// subquotient engine and assembled as a direct sum. Carries generator chains
/// and exact coordinates: elements can be enumerated, represented by relative
/// cycles, and classified back.
class HomologyPresentation {
public:
    HomologyPresentation() = default;

    HomologyPresentation(const CWComplex& x, const Subcomplex& y, const Subcomplex& w, Int n,
                         FiniteAbelianGroup coefficients)
        : x_(&x), y_(y), w_(w), n_(n), coeffs_(std::move(coefficients)), rel_(x, y, w)
    {
        if (&y.parent() != &x || &w.parent() != &x)
            throw std::invalid_argument("HomologyPresentation: subcomplexes of a different complex");
        if (!y.contains_all(w)) throw std::invalid_argument("HomologyPresentation: W must lie inside Y");
        IntegerMatrix dn = rel_.boundary(n);
        IntegerMatrix dn1 = rel_.boundary(n + 1);
        std::vector<Int> orders;
        for (Int m : coeffs_.orders()) {
            factors_.emplace_back(dn, dn1, m);
            factor_offsets_.push_back(orders.size());
            for (Int d : factors_.back().orders()) orders.push_back(d);
        }
        factor_offsets_.push_back(orders.size());
        group_ = FiniteAbelianGroup(std::move(orders));
    }

    const CWComplex& complex() const { return *x_; }
    const Subcomplex& pair_space() const { return y_; }
    const Subcomplex& pair_relative() const { return w_; }
    Int dimension() const { return n_; }
    const FiniteAbelianGroup& coefficients() const { return coeffs_; }

    const FiniteAbelianGroup& group() const { return group_; }

    std::vector<GroupElement> elements() const { return enumerate(group_); }

    /// Chain representative: one integer vector over the relative n-cells per
    /// cyclic coefficient factor.
    std::vector<std::vector<Int>> chain(const GroupElement& h) const
    {
        if (h.group() != group_) throw std::invalid_argument("HomologyPresentation: element of a different group");
        std::vector<std::vector<Int>> out;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            std::vector<Int> coords(h.exps().begin() + static_cast<std::ptrdiff_t>(factor_offsets_[f]),
                                    h.exps().begin() + static_cast<std::ptrdiff_t>(factor_offsets_[f + 1]));
            out.push_back(factors_[f].representative(coords));
        }
        return out;
    }

    /// Class of a relative cycle given per-factor chain vectors; throws if a
    /// vector is not a relative cycle mod the factor order.
    GroupElement classify(const std::vector<std::vector<Int>>& chains) const
    {
        if (chains.size() != factors_.size()) throw std::invalid_argument("HomologyPresentation: factor count");
        std::vector<Int> exps;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            auto coords = factors_[f].coordinates(chains[f]);
            exps.insert(exps.end(), coords.begin(), coords.end());
        }
        return GroupElement(group_, std::move(exps));
    }

    const detail::RelativeCells& relative_cells() const { return rel_; }

private:
    const CWComplex* x_ = nullptr;
    Subcomplex y_, w_;
    Int n_ = 0;
    FiniteAbelianGroup coeffs_;
    detail::RelativeCells rel_;
    std::vector<ModMSubquotient> factors_;
    std::vector<std::size_t> factor_offsets_;
    FiniteAbelianGroup group_;
};

/// H_n(X, A; G) with A a subcomplex of X; empty A gives absolute homology.
inline HomologyPresentation relative_homology(const CWComplex& x, const Subcomplex& a, Int n,
                                              const FiniteAbelianGroup& coefficients)
{
    return HomologyPresentation(x, Subcomplex::full(x), a, n, coefficients);
}

inline HomologyPresentation absolute_homology(const CWComplex& x, Int n, const FiniteAbelianGroup& coefficients)
{
    return HomologyPresentation(x, Subcomplex::full(x), Subcomplex::empty(x), n, coefficients);
}

/// Homomorphism between computed homology groups, stored as images of the
/// source presentation's cyclic generators.
class HomologyMap {
public:
    HomologyMap(const HomologyPresentation& source, const HomologyPresentation& target,
                std::vector<GroupElement> generator_images)
        : source_(&source), target_(&target), gen_images_(std::move(generator_images))
    {
        if (gen_images_.size() != source.group().rank())
            throw std::invalid_argument("HomologyMap: need one image per source generator");
        for (std::size_t j = 0; j < gen_images_.size(); ++j) {
            Int d = source.group().orders()[j];
            GroupElement acc = GroupElement::identity(target.group());
            for (Int t = 0; t < d; ++t) acc = acc + gen_images_[j];
            if (!acc.is_identity()) throw std::invalid_argument("HomologyMap: images do not respect relations");
        }
    }

    const HomologyPresentation& source() const { return *source_; }
    const HomologyPresentation& target() const { return *target_; }

    GroupElement apply(const GroupElement& x) const
    {
        if (x.group() != source_->group()) throw std::invalid_argument("HomologyMap: wrong source group");
        GroupElement out = GroupElement::identity(target_->group());
        for (std::size_t j = 0; j < gen_images_.size(); ++j)
            for (Int t = 0; t < x.exp(j); ++t) out = out + gen_images_[j];
        return out;
    }

    /// Cardinality of the image subgroup (closure of generator images).
    Int image_order() const
    {
        std::set<GroupElement> seen;
        std::vector<GroupElement> frontier;
        GroupElement zero = GroupElement::identity(target_->group());
        seen.insert(zero);
        frontier.push_back(zero);
        while (!frontier.empty()) {
            GroupElement cur = frontier.back();
            frontier.pop_back();
            for (const auto& g : gen_images_) {
                GroupElement nx = cur + g;
                if (seen.insert(nx).second) frontier.push_back(nx);
            }
        }
        return static_cast<Int>(seen.size());
    }

    bool surjective() const { return image_order() == target_->group().order(); }

private:
    const HomologyPresentation* source_;
    const HomologyPresentation* target_;
    std::vector<GroupElement> gen_images_;
};

namespace detail {

/// Restrict/extend a relative chain between pairs over the same ambient
/// complex: coefficients of cells absent from the target pair are dropped.
inline std::vector<Int> reindex_chain(const RelativeCells& from, Int d, const std::vector<Int>& chain,
                                      const RelativeCells& to)
{
    std::vector<Int> out(static_cast<std::size_t>(to.count(d)), 0);
    for (Int j = 0; j < from.count(d); ++j) {
        Int coeff = chain[static_cast<std::size_t>(j)];
        if (coeff == 0) continue;
        Int abs_idx = from.abs_of_rel[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
        Int rel_idx = to.rel_of_abs[static_cast<std::size_t>(d)][static_cast<std::size_t>(abs_idx)];
        if (rel_idx >= 0) out[static_cast<std::size_t>(rel_idx)] += coeff;
    }
    return out;
}

} // namespace detail

/// Map induced by an inclusion of pairs (Y, W) -> (Y', W') over one ambient
/// complex, with Y <= Y' and W <= W'.
inline HomologyMap inclusion_induced(const HomologyPresentation& source, const HomologyPresentation& target)
{
    if (&source.complex() != &target.complex())
        throw std::invalid_argument("inclusion_induced: presentations over different complexes");
    if (source.dimension() != target.dimension()) throw std::invalid_argument("inclusion_induced: dimension mismatch");
    if (source.coefficients() != target.coefficients())
        throw std::invalid_argument("inclusion_induced: coefficient mismatch");
    if (!target.pair_space().contains_all(source.pair_space()) ||
        !target.pair_relative().contains_all(source.pair_relative()))
        throw std::invalid_argument("inclusion_induced: pair nesting violated");

    const Int n = source.dimension();
    std::vector<GroupElement> images;
    for (std::size_t j = 0; j < source.group().rank(); ++j) {
        std::vector<Int> exps(source.group().rank(), 0);
        exps[j] = 1;
        auto chains = source.chain(GroupElement(source.group(), exps));
        std::vector<std::vector<Int>> pushed;
        for (const auto& ch : chains)
            pushed.push_back(detail::reindex_chain(source.relative_cells(), n, ch, target.relative_cells()));
        images.push_back(target.classify(pushed));
    }
    return HomologyMap(source, target, images);
}

/// Connecting homomorphism: the boundary of a relative cycle of the source
/// pair, restricted into the target pair one dimension down. For the triple
/// B <= A <= Y this is H_k(Y, A) -> H_{k-1}(A, B); the target pair may also
/// be a sub-pair of (A, W) when the restriction stays a cycle (validated).
inline HomologyMap connecting(const HomologyPresentation& source, const HomologyPresentation& target)
{
    if (&source.complex() != &target.complex()) throw std::invalid_argument("connecting: different complexes");
    if (target.dimension() != source.dimension() - 1) throw std::invalid_argument("connecting: dimension mismatch");
    if (source.coefficients() != target.coefficients()) throw std::invalid_argument("connecting: coefficient mismatch");
    if (!source.pair_relative().contains_all(target.pair_space()))
        throw std::invalid_argument("connecting: target space must lie in the source pair's relative part");

    const CWComplex& x = source.complex();
    const Int k = source.dimension();
    std::vector<GroupElement> images;
    for (std::size_t j = 0; j < source.group().rank(); ++j) {
        std::vector<Int> exps(source.group().rank(), 0);
        exps[j] = 1;
        auto chains = source.chain(GroupElement(source.group(), exps));
        std::vector<std::vector<Int>> bchains;
        for (const auto& ch : chains) {
            std::vector<Int> full(static_cast<std::size_t>(x.cell_count(k)), 0);
            for (Int r = 0; r < source.relative_cells().count(k); ++r)
                full[static_cast<std::size_t>(
                    source.relative_cells().abs_of_rel[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)])] =
                    ch[static_cast<std::size_t>(r)];
            std::vector<Int> bd = (k >= 1 && k <= x.top_dimension())
                                      ? x.boundary(k).apply(full)
                                      : std::vector<Int>(static_cast<std::size_t>(x.cell_count(k - 1)), 0);
            std::vector<Int> rel(static_cast<std::size_t>(target.relative_cells().count(k - 1)), 0);
            for (Int r = 0; r < target.relative_cells().count(k - 1); ++r)
                rel[static_cast<std::size_t>(r)] = bd[static_cast<std::size_t>(
                    target.relative_cells().abs_of_rel[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r)])];
            bchains.push_back(std::move(rel));
        }
        images.push_back(target.classify(bchains));
    }
    return HomologyMap(source, target, images);
}

inline Int image_order(const HomologyMap& f) { return f.image_order(); }
inline bool surjective(const HomologyMap& f) { return f.surjective(); }

} // namespace gctqft
