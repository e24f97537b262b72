#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gctqft/cellular.hpp"
#include "gctqft/cyclotomic.hpp"

namespace gctqft {

/// Free module R[H_n(Y, W; G)] with the deterministic element enumeration as
/// basis. Y and W are subcomplexes of an ambient complex. When the homology
/// group is trivial (in particular for the empty boundary object) the zero
/// class is still a basis element, so closed bordisms act on a rank-one
/// module and yield 1x1 matrices.
class StateSpace {
public:
    StateSpace() = default;

    StateSpace(const CWComplex& ambient, const Subcomplex& y, const Subcomplex& w, Int n, FiniteAbelianGroup coeffs,
               Int level)
        : pres_(ambient, y, w, n, std::move(coeffs)), level_(level), basis_(pres_.elements())
    {
    }

    const HomologyPresentation& presentation() const { return pres_; }
    Int level() const { return level_; }
    Int rank() const { return static_cast<Int>(basis_.size()); }
    const std::vector<GroupElement>& basis() const { return basis_; }

    Int index_of(const GroupElement& e) const { return element_index(e); }

    /// Per-coefficient-factor chain coefficient of a named cell in the
    /// representative of a basis element.
    std::vector<Int> cell_coefficients(const GroupElement& e, const std::string& cell) const
    {
        auto [d, abs_idx] = pres_.complex().locate(cell);
        if (d != pres_.dimension()) throw std::invalid_argument("StateSpace: cell has the wrong dimension");
        Int rel = pres_.relative_cells().rel_of_abs[static_cast<std::size_t>(d)][static_cast<std::size_t>(abs_idx)];
        auto chains = pres_.chain(e);
        std::vector<Int> out;
        for (const auto& ch : chains) out.push_back(rel >= 0 ? ch[static_cast<std::size_t>(rel)] : 0);
        return out;
    }

    /// Class of the relative cycle with the given per-cell coefficients (one
    /// integer per coefficient factor for each named cell).
    GroupElement class_from_cells(const std::map<std::string, std::vector<Int>>& cell_coeffs) const
    {
        std::size_t factors = pres_.coefficients().rank();
        std::vector<std::vector<Int>> chains(factors);
        for (std::size_t f = 0; f < factors; ++f)
            chains[f].assign(static_cast<std::size_t>(pres_.relative_cells().count(pres_.dimension())), 0);
        for (const auto& [cell, coeffs] : cell_coeffs) {
            if (coeffs.size() != factors) throw std::invalid_argument("StateSpace: coefficient factor mismatch");
            auto [d, abs_idx] = pres_.complex().locate(cell);
            if (d != pres_.dimension()) throw std::invalid_argument("StateSpace: cell has the wrong dimension");
            Int rel = pres_.relative_cells().rel_of_abs[static_cast<std::size_t>(d)][static_cast<std::size_t>(abs_idx)];
            if (rel < 0) throw std::invalid_argument("StateSpace: cell " + cell + " is relative");
            for (std::size_t f = 0; f < factors; ++f) chains[f][static_cast<std::size_t>(rel)] = coeffs[f];
        }
        return pres_.classify(chains);
    }

private:
    HomologyPresentation pres_;
    Int level_ = 1;
    std::vector<GroupElement> basis_;
};

/// Matrix of ring elements between two state spaces, indexed (target basis,
/// source basis).
class InducedMap {
public:
    InducedMap() = default;

    InducedMap(StateSpace source, StateSpace target)
        : source_(std::move(source)), target_(std::move(target)),
          m_(static_cast<std::size_t>(target_.rank()),
             std::vector<RingElement>(static_cast<std::size_t>(source_.rank()), RingElement::zero(target_.level())))
    {
        if (source_.level() != target_.level()) throw std::invalid_argument("InducedMap: level mismatch");
    }

    const StateSpace& source() const { return source_; }
    const StateSpace& target() const { return target_; }
    Int level() const { return target_.level(); }

    RingElement& entry(Int ti, Int si) { return m_[static_cast<std::size_t>(ti)][static_cast<std::size_t>(si)]; }
    const RingElement& entry(Int ti, Int si) const
    {
        return m_[static_cast<std::size_t>(ti)][static_cast<std::size_t>(si)];
    }

    bool same_matrix(const InducedMap& o) const
    {
        if (source_.rank() != o.source_.rank() || target_.rank() != o.target_.rank()) return false;
        return m_ == o.m_;
    }

    /// Matrix product this . inner (apply inner first). Basis compatibility is
    /// the caller's responsibility; ranks are checked.
    InducedMap compose(const InducedMap& inner) const
    {
        if (inner.target_.rank() != source_.rank()) throw std::invalid_argument("InducedMap: rank mismatch in compose");
        InducedMap out(inner.source_, target_);
        for (Int i = 0; i < target_.rank(); ++i)
            for (Int j = 0; j < inner.source_.rank(); ++j) {
                RingElement acc = RingElement::zero(level());
                for (Int k = 0; k < source_.rank(); ++k) acc += entry(i, k) * inner.entry(k, j);
                out.entry(i, j) = acc;
            }
        return out;
    }

    /// Conjugate by basis reindexings: out[ti][si] = this[tperm[ti]][sperm[si]].
    InducedMap reindexed(const std::vector<Int>& tperm, const std::vector<Int>& sperm, StateSpace new_source,
                         StateSpace new_target) const
    {
        InducedMap out(std::move(new_source), std::move(new_target));
        if (static_cast<Int>(tperm.size()) != out.target().rank() ||
            static_cast<Int>(sperm.size()) != out.source().rank())
            throw std::invalid_argument("InducedMap: permutation size mismatch");
        for (std::size_t i = 0; i < tperm.size(); ++i)
            for (std::size_t j = 0; j < sperm.size(); ++j)
                out.m_[i][j] = m_[static_cast<std::size_t>(tperm[i])][static_cast<std::size_t>(sperm[j])];
        return out;
    }

    bool is_identity() const
    {
        if (source_.rank() != target_.rank()) return false;
        for (Int i = 0; i < target_.rank(); ++i)
            for (Int j = 0; j < source_.rank(); ++j) {
                const RingElement& e = entry(i, j);
                if (i == j ? !e.is_one() : !e.is_zero()) return false;
            }
        return true;
    }

private:
    StateSpace source_, target_;
    std::vector<std::vector<RingElement>> m_;
};

/// A bordism inside an ambient complex: the support subcomplex together with
/// incoming and outgoing boundary objects sharing the corner w. The
/// admissibility condition y0 n y1 = w (literal cell sets) makes the
/// splitting of H_n(y0 u y1, w) a direct sum of chain complexes.
struct BordismData {
    const CWComplex* ambient = nullptr;
    Subcomplex total, y0, y1, w;
    Int n = 0;
    FiniteAbelianGroup coeffs;
    Int level = 1;

    BordismData(const CWComplex& amb, Subcomplex total_, Subcomplex y0_, Subcomplex y1_, Subcomplex w_, Int n_,
                FiniteAbelianGroup coeffs_, Int level_)
        : ambient(&amb), total(std::move(total_)), y0(std::move(y0_)), y1(std::move(y1_)), w(std::move(w_)), n(n_),
          coeffs(std::move(coeffs_)), level(level_)
    {
        if (!(y0.set_intersection(y1) == w))
            throw std::invalid_argument("BordismData: y0 n y1 != w");
        if (!total.contains_all(y0) || !total.contains_all(y1))
            throw std::invalid_argument("BordismData: boundary objects must lie in the bordism");
    }

    /// Whole-complex bordism with named subcomplexes.
    static BordismData named(const CWComplex& amb, const std::string& y0_name, const std::string& y1_name,
                             const std::string& w_name, Int n, FiniteAbelianGroup coeffs, Int level)
    {
        return BordismData(amb, Subcomplex::full(amb), Subcomplex::named(amb, y0_name),
                           Subcomplex::named(amb, y1_name), Subcomplex::named(amb, w_name), n, std::move(coeffs),
                           level);
    }

    StateSpace incoming() const { return StateSpace(*ambient, y0, w, n, coeffs, level); }
    StateSpace outgoing() const { return StateSpace(*ambient, y1, w, n, coeffs, level); }
};

/// The defining sum: Z_X(y) = sum over x in H_{n+1}(X, y0 u y1; G) with
/// d0 x = -y of d1 x, entries accumulated as non-negative integer counts.
inline InducedMap induced_hom(const BordismData& b)
{
    StateSpace src = b.incoming();
    StateSpace tgt = b.outgoing();
    InducedMap out(src, tgt);

    HomologyPresentation rel(*b.ambient, b.total, b.y0.set_union(b.y1), b.n + 1, b.coeffs);
    HomologyMap d0 = connecting(rel, src.presentation());
    HomologyMap d1 = connecting(rel, tgt.presentation());
    RingElement one = RingElement::one(b.level);
    for (const auto& x : rel.elements()) {
        GroupElement y = -d0.apply(x);
        GroupElement z = d1.apply(x);
        out.entry(tgt.index_of(z), src.index_of(y)) += one;
    }
    return out;
}

/// The explicit form: Z_X(y) = k * sum of the y1 with i(y1) = i(y), where i
/// includes boundary objects into H_n(X, w) and k is the order of the image
/// of H_{n+1}(X, w) in H_{n+1}(X, y0 u y1). Coincides with the paper's
/// absolute statement when w is empty.
inline InducedMap induced_hom_explicit(const BordismData& b)
{
    StateSpace src = b.incoming();
    StateSpace tgt = b.outgoing();
    InducedMap out(src, tgt);

    HomologyPresentation rel(*b.ambient, b.total, b.y0.set_union(b.y1), b.n + 1, b.coeffs);
    HomologyPresentation upper(*b.ambient, b.total, b.w, b.n + 1, b.coeffs);
    Int k = inclusion_induced(upper, rel).image_order();

    HomologyPresentation ambient_n(*b.ambient, b.total, b.w, b.n, b.coeffs);
    HomologyMap i0 = inclusion_induced(src.presentation(), ambient_n);
    HomologyMap i1 = inclusion_induced(tgt.presentation(), ambient_n);

    RingElement weight = RingElement::integer(b.level, k);
    for (const auto& y : src.basis()) {
        GroupElement iy = i0.apply(y);
        for (const auto& z : tgt.basis())
            if (i1.apply(z) == iy) out.entry(tgt.index_of(z), src.index_of(y)) += weight;
    }
    return out;
}

/// Kronecker product, with the target/source bases ordered row-major
/// (a-index major, b-index minor).
inline std::vector<std::vector<RingElement>> kronecker(const InducedMap& a, const InducedMap& b)
{
    std::vector<std::vector<RingElement>> out(
        static_cast<std::size_t>(a.target().rank() * b.target().rank()),
        std::vector<RingElement>(static_cast<std::size_t>(a.source().rank() * b.source().rank()),
                                 RingElement::zero(a.level())));
    for (Int i = 0; i < a.target().rank(); ++i)
        for (Int j = 0; j < a.source().rank(); ++j)
            for (Int k = 0; k < b.target().rank(); ++k)
                for (Int l = 0; l < b.source().rank(); ++l)
                    out[static_cast<std::size_t>(i * b.target().rank() + k)]
                       [static_cast<std::size_t>(j * b.source().rank() + l)] = a.entry(i, j) * b.entry(k, l);
    return out;
}

/// Basis transfer between state spaces whose representative chains live on
/// cells related by a name translation (identity for sub-pairs of one
/// complex). Returns, for each source basis index, the matching target index.
inline std::vector<Int> basis_transfer(const StateSpace& from, const StateSpace& to,
                                       const std::function<std::string(const std::string&)>& rename)
{
    const auto& fp = from.presentation();
    const auto& tp = to.presentation();
    if (fp.dimension() != tp.dimension()) throw std::invalid_argument("basis_transfer: dimension mismatch");
    if (fp.coefficients() != tp.coefficients()) throw std::invalid_argument("basis_transfer: coefficient mismatch");
    const Int d = fp.dimension();
    std::vector<Int> out;
    for (const auto& e : from.basis()) {
        auto chains = fp.chain(e);
        std::vector<std::vector<Int>> pushed(chains.size());
        for (std::size_t f = 0; f < chains.size(); ++f) {
            pushed[f].assign(static_cast<std::size_t>(tp.relative_cells().count(d)), 0);
            for (Int r = 0; r < fp.relative_cells().count(d); ++r) {
                Int coeff = chains[f][static_cast<std::size_t>(r)];
                if (coeff == 0) continue;
                Int abs_idx = fp.relative_cells().abs_of_rel[static_cast<std::size_t>(d)][static_cast<std::size_t>(r)];
                std::string cname = rename(fp.complex().cells(d)[static_cast<std::size_t>(abs_idx)]);
                auto [td, ti] = tp.complex().locate(cname);
                if (td != d) throw std::invalid_argument("basis_transfer: dimension changed for " + cname);
                Int rel = tp.relative_cells().rel_of_abs[static_cast<std::size_t>(td)][static_cast<std::size_t>(ti)];
                if (rel >= 0) pushed[f][static_cast<std::size_t>(rel)] += coeff;
            }
        }
        out.push_back(to.index_of(tp.classify(pushed)));
    }
    return out;
}

/// Composition hypothesis for a bordism piece: the connecting map
/// H_{n+2}(X, Y1 u Y2; G) -> H_{n+1}(Y1, W; G) is onto, where Y1 is the
/// interface of the decomposition.
inline bool check_composition_criterion(const CWComplex& ambient, const Subcomplex& total, const Subcomplex& y1,
                                        const Subcomplex& y2, const Subcomplex& w, Int n,
                                        const FiniteAbelianGroup& coeffs)
{
    HomologyPresentation src(ambient, total, y1.set_union(y2), n + 2, coeffs);
    HomologyPresentation tgt(ambient, y1, w, n + 1, coeffs);
    return connecting(src, tgt).surjective();
}

// ---------------------------------------------------------------------------
// Gluing
// ---------------------------------------------------------------------------

/// A boundary-object gluing: the unglued complex Y with disjoint marked
/// pieces W1, W2 (the copies to identify) and V (the untouched boundary),
/// the glued complex, and the cell-level quotient map. The quotient must be
/// a chain map that folds W2 onto W1's image and is bijective elsewhere.
struct GluingData {
    const CWComplex* unglued = nullptr;
    Subcomplex w1, w2, v;
    const CWComplex* glued = nullptr;
    std::map<std::string, std::string> quotient;
    Subcomplex w_glued, v_glued; // images of the marked pieces

    GluingData(const CWComplex& y, const std::string& w1_name, const std::string& w2_name, const std::string& v_name,
               const CWComplex& glued_complex, std::map<std::string, std::string> quotient_map)
        : unglued(&y), w1(Subcomplex::named(y, w1_name)), w2(Subcomplex::named(y, w2_name)),
          v(Subcomplex::named(y, v_name)), glued(&glued_complex), quotient(std::move(quotient_map))
    {
        if (!w1.set_intersection(w2).is_empty() || !w1.set_intersection(v).is_empty() ||
            !w2.set_intersection(v).is_empty())
            throw std::invalid_argument("GluingData: W1, W2, V must be pairwise disjoint");

        // quotient must be total, dimension preserving, and fold W2 onto the
        // image of W1 while staying injective elsewhere
        std::map<std::string, std::vector<std::string>> preimages;
        for (Int d = 0; d <= y.top_dimension(); ++d)
            for (const auto& cname : y.cells(d)) {
                auto it = quotient.find(cname);
                if (it == quotient.end()) throw std::invalid_argument("GluingData: quotient missing cell " + cname);
                auto [td, ti] = glued_complex.locate(it->second);
                if (td != d) throw std::invalid_argument("GluingData: quotient changes dimension of " + cname);
                preimages[it->second].push_back(cname);
            }
        std::vector<std::string> w_cells, v_cells;
        for (Int d = 0; d <= glued_complex.top_dimension(); ++d)
            for (const auto& gname : glued_complex.cells(d)) {
                auto it = preimages.find(gname);
                if (it == preimages.end()) throw std::invalid_argument("GluingData: glued cell " + gname + " not hit");
                std::size_t in_w1 = 0, in_w2 = 0, outside = 0;
                for (const auto& cname : it->second) {
                    auto [cd, ci] = y.locate(cname);
                    if (w1.contains(cd, ci))
                        ++in_w1;
                    else if (w2.contains(cd, ci))
                        ++in_w2;
                    else
                        ++outside;
                }
                if (in_w1 == 1 && in_w2 == 1 && outside == 0) {
                    w_cells.push_back(gname);
                } else if (in_w1 == 0 && in_w2 == 0 && outside == 1) {
                    // plain cell
                } else {
                    throw std::invalid_argument("GluingData: glued cell " + gname +
                                                " is not a clean identification of one W1 and one W2 cell");
                }
                for (const auto& cname : it->second) {
                    auto [cd, ci] = y.locate(cname);
                    if (v.contains(cd, ci)) v_cells.push_back(gname);
                }
            }
        w_glued = Subcomplex(glued_complex, w_cells);
        v_glued = Subcomplex(glued_complex, v_cells);

        // chain-map property: Q_{d-1} dY_d = dG_d Q_d
        for (Int d = 1; d <= y.top_dimension(); ++d) {
            IntegerMatrix q_d(glued_complex.cell_count(d), y.cell_count(d));
            IntegerMatrix q_dm1(glued_complex.cell_count(d - 1), y.cell_count(d - 1));
            for (Int j = 0; j < y.cell_count(d); ++j) {
                auto [td, ti] = glued_complex.locate(quotient.at(y.cells(d)[static_cast<std::size_t>(j)]));
                q_d.at(ti, j) = 1;
            }
            for (Int j = 0; j < y.cell_count(d - 1); ++j) {
                auto [td, ti] = glued_complex.locate(quotient.at(y.cells(d - 1)[static_cast<std::size_t>(j)]));
                q_dm1.at(ti, j) = 1;
            }
            if (!(q_dm1 * y.boundary(d) == glued_complex.boundary(d) * q_d))
                throw std::invalid_argument("GluingData: quotient is not a chain map at dimension " +
                                            std::to_string(d));
        }
    }

    /// Identified W2 cell for a W1 cell's glued image (or the other way).
    std::string partner_in_w1(const std::string& w2_cell) const
    {
        const std::string& image = quotient.at(w2_cell);
        for (const auto& [cname, gname] : quotient) {
            if (gname != image || cname == w2_cell) continue;
            auto [d, i] = unglued->locate(cname);
            if (w1.contains(d, i)) return cname;
        }
        throw std::invalid_argument("GluingData: no W1 partner for " + w2_cell);
    }
};

/// Modularity hypothesis: H_{n+1}(glued, V) -> H_n(W) is onto, realized as
/// the quotient map to the pair (glued, V u W) followed by the connecting
/// homomorphism into (W, W n V).
inline bool check_modularity_criterion(const GluingData& g, Int n, const FiniteAbelianGroup& coeffs)
{
    const CWComplex& gc = *g.glued;
    HomologyPresentation rel_v(gc, Subcomplex::full(gc), g.v_glued, n + 1, coeffs);
    HomologyPresentation rel_vw(gc, Subcomplex::full(gc), g.v_glued.set_union(g.w_glued), n + 1, coeffs);
    HomologyPresentation h_w(gc, g.w_glued, g.w_glued.set_intersection(g.v_glued), n, coeffs);
    HomologyMap quot = inclusion_induced(rel_v, rel_vw);
    HomologyMap del = connecting(rel_vw, h_w);
    // image of the composite
    std::set<GroupElement> image;
    for (const auto& e : rel_v.elements()) image.insert(del.apply(quot.apply(e)));
    // close under addition (images of a generating set already closed here
    // since we map every element)
    return static_cast<Int>(image.size()) == h_w.group().order();
}

struct GlueCompareReport {
    Int algebraic_size = 0; // basis elements with matching corner boundaries
    Int geometric_size = 0; // |H_n(glued, V)|
    bool iso = false;
    Int defect = 0; // geometric minus algebraic cardinality
};

/// Compare the algebraic gluing (coequalizer of the two corner-algebra module
/// actions: basis elements y with d_{W1} y = -d_{W2} y) with the geometric
/// state space of the glued object.
inline GlueCompareReport glue_compare(const GluingData& g, Int n, const FiniteAbelianGroup& coeffs, Int level)
{
    const CWComplex& y = *g.unglued;
    const CWComplex& gc = *g.glued;

    Subcomplex boundary_all = g.w1.set_union(g.w2).set_union(g.v);
    StateSpace unglued_state(y, Subcomplex::full(y), boundary_all, n, coeffs, level);
    HomologyPresentation h_w1(y, g.w1, Subcomplex::empty(y), n - 1, coeffs);
    HomologyPresentation h_w2(y, g.w2, Subcomplex::empty(y), n - 1, coeffs);
    HomologyMap d_w1 = connecting(unglued_state.presentation(), h_w1);
    HomologyMap d_w2 = connecting(unglued_state.presentation(), h_w2);

    // transport H_{n-1}(W2) -> H_{n-1}(W1) along the identification
    StateSpace w2_state(y, g.w2, Subcomplex::empty(y), n - 1, coeffs, level);
    StateSpace w1_state(y, g.w1, Subcomplex::empty(y), n - 1, coeffs, level);
    std::vector<Int> w2_to_w1 = basis_transfer(w2_state, w1_state, [&](const std::string& cname) {
        return g.partner_in_w1(cname);
    });

    // algebraic side: basis elements with d_{W1} y = -(transported d_{W2} y)
    std::vector<GroupElement> algebraic;
    for (const auto& e : unglued_state.basis()) {
        GroupElement b1 = d_w1.apply(e);
        GroupElement b2 = d_w2.apply(e);
        Int transported = w2_to_w1[static_cast<std::size_t>(element_index(b2))];
        GroupElement b2_in_w1 = w1_state.basis()[static_cast<std::size_t>(transported)];
        if (b1 == -b2_in_w1) algebraic.push_back(e);
    }

    // geometric side and the natural map through H_n(glued, V u W)
    StateSpace geometric(gc, Subcomplex::full(gc), g.v_glued, n, coeffs, level);
    HomologyPresentation mid(gc, Subcomplex::full(gc), g.v_glued.set_union(g.w_glued), n, coeffs);
    HomologyMap pi = inclusion_induced(geometric.presentation(), mid);

    // push unglued chains through the quotient map into the mid pair
    StateSpace mid_state(gc, Subcomplex::full(gc), g.v_glued.set_union(g.w_glued), n, coeffs, level);
    std::vector<Int> push = basis_transfer(unglued_state, mid_state, [&](const std::string& cname) {
        return g.quotient.at(cname);
    });

    GlueCompareReport rep;
    rep.algebraic_size = static_cast<Int>(algebraic.size());
    rep.geometric_size = geometric.rank();

    // the natural map is a bijection iff every algebraic basis element has a
    // unique geometric preimage of its mid-class and all preimages are distinct
    std::set<Int> hit;
    bool ok = true;
    for (const auto& e : algebraic) {
        Int mid_idx = push[static_cast<std::size_t>(unglued_state.index_of(e))];
        const GroupElement& mid_class = mid_state.basis()[static_cast<std::size_t>(mid_idx)];
        std::vector<Int> preimages;
        for (const auto& z : geometric.basis())
            if (pi.apply(z) == mid_class) preimages.push_back(geometric.index_of(z));
        if (preimages.size() != 1) {
            ok = false;
            break;
        }
        if (!hit.insert(preimages.front()).second) {
            ok = false;
            break;
        }
    }
    rep.iso = ok && static_cast<Int>(hit.size()) == rep.geometric_size;
    rep.defect = rep.geometric_size - rep.algebraic_size;
    return rep;
}

// ---------------------------------------------------------------------------
// Corner algebra
// ---------------------------------------------------------------------------

/// The ring Z(W x I, W x dI) for a discrete corner W, with the product
/// computed from the (W x I) x I bordism and checked against the pointwise
/// rule v w = delta_{v,w} v.
struct CornerAlgebra {
    FiniteAbelianGroup basis_group; // H_n(W x I, W x dI; G)
    Int level = 1;
    /// product[v][w] = list of (coefficient, basis index) with nonzero entries
    std::vector<std::vector<std::vector<std::pair<RingElement, Int>>>> product;
    bool pointwise = false;

    std::vector<std::pair<RingElement, Int>> multiply(Int v, Int w) const
    {
        return product[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
    }
};

/// Build the corner algebra from a W x I complex whose components are single
/// marked edges (W discrete, as rel-corner theories on complexes have). The
/// multiplication bordism is assembled as one two-faced square per component.
CornerAlgebra corner_algebra(const CWComplex& w_times_i, const Subcomplex& ends, Int n,
                             const FiniteAbelianGroup& coeffs, Int level);

// ---------------------------------------------------------------------------
// Trimodule and the reconstructed product
// ---------------------------------------------------------------------------

struct TrimoduleReport {
    bool actions_pointwise = false;  // each module action picks out one coordinate
    bool product_is_group_law = false; // R[g] . R[h] = R[g+h] for all pairs
    bool unit_law = false;
    bool commutes_trivially = false; // swapping inputs gives the same class
    std::map<std::pair<Int, Int>, Int> table; // (g, h) indices -> product index
};

/// Compute the product on simples R[g] . R[h] from the state space of the
/// cone on three points and its three corner-algebra module structures (the
/// first two converted to right modules by the inverse antiinvolution).
TrimoduleReport trimodule_product(const FiniteAbelianGroup& g, Int level);

} // namespace gctqft

#include "gctqft/corpus.hpp"

namespace gctqft {

inline CornerAlgebra corner_algebra(const CWComplex& w_times_i, const Subcomplex& ends, Int n,
                                    const FiniteAbelianGroup& coeffs, Int level)
{
    if (n != 1) throw std::invalid_argument("corner_algebra: implemented for the n = 1 theory (discrete corners)");
    if (w_times_i.top_dimension() > 1)
        throw std::invalid_argument("corner_algebra: W x I must be one-dimensional");
    // identify components: each must be a single edge with both endpoints in ends
    const Int edges = w_times_i.cell_count(1);
    for (Int j = 0; j < edges; ++j) {
        Int end_count = 0;
        for (Int i = 0; i < w_times_i.cell_count(0); ++i)
            if (w_times_i.boundary(1).at(i, j) != 0) {
                if (!ends.contains(0, i))
                    throw std::invalid_argument("corner_algebra: edge endpoint not marked as an end");
                ++end_count;
            }
        if (end_count != 2) throw std::invalid_argument("corner_algebra: component is not an interval");
    }
    const Int k = edges;
    if (k == 0) throw std::invalid_argument("corner_algebra: empty corner");

    // base state space: basis is G^k through the edge coefficients
    StateSpace base(w_times_i, Subcomplex::full(w_times_i), ends, 1, coeffs, level);

    // multiplication bordism: disjoint union of k two-faced squares
    CWComplex m = corpus::mult_square();
    std::vector<std::string> prefix(1, "");
    CWComplex acc = m;
    for (Int c = 1; c < k; ++c) {
        acc = CWComplex::disjoint_union(acc, m, "mult_" + std::to_string(c + 1));
        for (auto& p : prefix) p = "l:" + p;
        prefix.push_back("r:");
    }
    auto sub_cells = [&](const std::string& base_name) {
        std::vector<std::string> cells;
        CWComplex single = corpus::mult_square();
        auto base_list = single.subcomplex_table().at(base_name);
        for (const auto& p : prefix)
            for (const auto& cname : base_list) cells.push_back(p + cname);
        return cells;
    };
    Subcomplex y0(acc, sub_cells("y0")), y1(acc, sub_cells("y1")), w(acc, sub_cells("w"));
    BordismData b(acc, Subcomplex::full(acc), y0, y1, w, 1, coeffs, level);
    InducedMap zm = induced_hom(b);

    // read tuples off chains: source (v, w) via b1/b2 per component, target via t1
    auto tuple_of = [&](const StateSpace& s, const GroupElement& e, const char* edge) {
        std::vector<std::vector<Int>> tup;
        for (Int c = 0; c < k; ++c) tup.push_back(s.cell_coefficients(e, prefix[static_cast<std::size_t>(c)] + edge));
        return tup;
    };

    // basis of the algebra: base-state basis elements as edge-coefficient tuples
    std::vector<std::vector<std::vector<Int>>> base_tuples;
    {
        std::vector<std::string> base_edges = w_times_i.cells(1);
        for (const auto& e : base.basis()) {
            std::vector<std::vector<Int>> tup;
            for (const auto& en : base_edges) tup.push_back(base.cell_coefficients(e, en));
            base_tuples.push_back(tup);
        }
    }
    auto base_index_of_tuple = [&](const std::vector<std::vector<Int>>& tup) {
        for (std::size_t i = 0; i < base_tuples.size(); ++i)
            if (base_tuples[i] == tup) return static_cast<Int>(i);
        throw std::logic_error("corner_algebra: tuple not in basis");
    };

    StateSpace src = b.incoming(), tgt = b.outgoing();
    CornerAlgebra alg;
    alg.basis_group = base.presentation().group();
    alg.level = level;
    const Int rank = base.rank();
    alg.product.assign(static_cast<std::size_t>(rank),
                       std::vector<std::vector<std::pair<RingElement, Int>>>(static_cast<std::size_t>(rank)));

    // index the bordism source/target bases by tuples
    std::map<std::pair<std::vector<std::vector<Int>>, std::vector<std::vector<Int>>>, Int> src_index;
    for (const auto& e : src.basis())
        src_index[{tuple_of(src, e, "b1"), tuple_of(src, e, "b2")}] = src.index_of(e);
    std::map<std::vector<std::vector<Int>>, Int> tgt_index;
    for (const auto& e : tgt.basis()) tgt_index[tuple_of(tgt, e, "t1")] = tgt.index_of(e);
    if (static_cast<Int>(src_index.size()) != src.rank() || static_cast<Int>(tgt_index.size()) != tgt.rank())
        throw std::logic_error("corner_algebra: basis tuples are not distinct");

    bool pointwise = true;
    for (Int vi = 0; vi < rank; ++vi)
        for (Int wi = 0; wi < rank; ++wi) {
            Int sidx = src_index.at({base_tuples[static_cast<std::size_t>(vi)],
                                     base_tuples[static_cast<std::size_t>(wi)]});
            auto& cell = alg.product[static_cast<std::size_t>(vi)][static_cast<std::size_t>(wi)];
            for (const auto& [tup, tidx] : tgt_index) {
                const RingElement& c = zm.entry(tidx, sidx);
                if (!c.is_zero()) cell.emplace_back(c, base_index_of_tuple(tup));
            }
            if (vi == wi) {
                if (cell.size() != 1 || cell[0].second != vi || !cell[0].first.is_one()) pointwise = false;
            } else if (!cell.empty()) {
                pointwise = false;
            }
        }
    alg.pointwise = pointwise;
    return alg;
}

inline TrimoduleReport trimodule_product(const FiniteAbelianGroup& g, Int level)
{
    TrimoduleReport rep;
    CWComplex c3 = corpus::cone3();
    CWComplex pr = corpus::prism();

    StateSpace t_state(c3, Subcomplex::full(c3), Subcomplex::named(c3, "feet"), 1, g, level);

    // triple (a, b, c) of each basis element via the leg coefficients;
    // entries are per-factor exponent vectors turned into group elements
    auto triple_of = [&](const StateSpace& s, const GroupElement& e, const std::vector<std::string>& legs) {
        std::vector<GroupElement> out;
        for (const auto& leg : legs) out.emplace_back(g, s.cell_coefficients(e, leg));
        return out;
    };
    std::vector<std::vector<GroupElement>> triples;
    for (const auto& e : t_state.basis()) triples.push_back(triple_of(t_state, e, {"e1", "e2", "e3"}));

    // module actions from the prism bordisms: action[i][t][u] = image index or -1
    const Int rank = t_state.rank();
    const Int gsize = g.order();
    auto elems = enumerate(g);
    std::vector<std::vector<std::vector<Int>>> action(3);
    for (int leg = 1; leg <= 3; ++leg) {
        std::string s = std::to_string(leg);
        BordismData b = BordismData::named(pr, "act" + s + "_y0", "act" + s + "_y1", "act" + s + "_w", 1, g, level);
        InducedMap zm = induced_hom(b);
        StateSpace src = b.incoming(), tgt = b.outgoing();
        // src basis: (triple via e10/e20/e30, ring element via w_leg)
        std::map<std::pair<std::vector<GroupElement>, GroupElement>, Int> src_index;
        for (const auto& e : src.basis()) {
            auto tri = triple_of(src, e, {"e10", "e20", "e30"});
            GroupElement u(g, src.cell_coefficients(e, "w" + s));
            src_index[{tri, u}] = src.index_of(e);
        }
        std::map<std::vector<GroupElement>, Int> tgt_index;
        for (const auto& e : tgt.basis()) tgt_index[triple_of(tgt, e, {"e11", "e21", "e31"})] = tgt.index_of(e);

        auto& act = action[static_cast<std::size_t>(leg - 1)];
        act.assign(static_cast<std::size_t>(rank), std::vector<Int>(static_cast<std::size_t>(gsize), -1));
        for (Int ti = 0; ti < rank; ++ti)
            for (Int ui = 0; ui < gsize; ++ui) {
                Int sidx = src_index.at({triples[static_cast<std::size_t>(ti)], elems[static_cast<std::size_t>(ui)]});
                for (Int tj = 0; tj < rank; ++tj) {
                    Int tgt_idx = tgt_index.at(triples[static_cast<std::size_t>(tj)]);
                    const RingElement& c = zm.entry(tgt_idx, sidx);
                    if (c.is_zero()) continue;
                    if (!c.is_one() || act[static_cast<std::size_t>(ti)][static_cast<std::size_t>(ui)] != -1)
                        throw std::logic_error("trimodule_product: action is not basis-to-basis");
                    act[static_cast<std::size_t>(ti)][static_cast<std::size_t>(ui)] = tj;
                }
            }
    }

    // each action must fix t exactly for u equal to the matching coordinate
    rep.actions_pointwise = true;
    for (Int ti = 0; ti < rank; ++ti)
        for (int leg = 0; leg < 3; ++leg) {
            const GroupElement& coord = triples[static_cast<std::size_t>(ti)][static_cast<std::size_t>(leg)];
            for (Int ui = 0; ui < gsize; ++ui) {
                Int img = action[static_cast<std::size_t>(leg)][static_cast<std::size_t>(ti)][static_cast<std::size_t>(ui)];
                bool expect_fix = elems[static_cast<std::size_t>(ui)] == coord;
                if (expect_fix ? img != ti : img != -1) rep.actions_pointwise = false;
            }
        }

    // product of simples: convert the first two structures to right modules
    // through the inverse antiinvolution, tensor, and read the third structure
    rep.product_is_group_law = true;
    rep.commutes_trivially = true;
    std::map<std::vector<GroupElement>, Int> triple_index;
    for (Int ti = 0; ti < rank; ++ti) triple_index[triples[static_cast<std::size_t>(ti)]] = ti;
    for (const auto& ga : elems)
        for (const auto& gb : elems) {
            // survivor: a(t) = -g, b(t) = -h, c(t) determined by the cycle law
            std::vector<Int> survivors;
            for (Int ti = 0; ti < rank; ++ti)
                if (triples[static_cast<std::size_t>(ti)][0] == -ga && triples[static_cast<std::size_t>(ti)][1] == -gb)
                    survivors.push_back(ti);
            if (survivors.size() != 1) {
                rep.product_is_group_law = false;
                continue;
            }
            Int t = survivors.front();
            // simple class of the result: the ring element acting as identity
            // in the third structure
            GroupElement result = triples[static_cast<std::size_t>(t)][2];
            rep.table[{element_index(ga), element_index(gb)}] = element_index(result);
            if (result != ga + gb) rep.product_is_group_law = false;

            // cone involution: swapping the first two coordinates of the
            // swapped product's survivor must give this survivor
            std::vector<GroupElement> swapped = {triples[static_cast<std::size_t>(t)][1],
                                                 triples[static_cast<std::size_t>(t)][0],
                                                 triples[static_cast<std::size_t>(t)][2]};
            auto it = triple_index.find(swapped);
            if (it == triple_index.end()) rep.commutes_trivially = false;
        }
    // unit law from the table
    rep.unit_law = true;
    GroupElement zero = GroupElement::identity(g);
    for (const auto& h : elems) {
        auto it = rep.table.find({element_index(zero), element_index(h)});
        if (it == rep.table.end() || it->second != element_index(h)) rep.unit_law = false;
    }
    // commute check via the table as well
    for (const auto& ga : elems)
        for (const auto& gb : elems) {
            auto it1 = rep.table.find({element_index(ga), element_index(gb)});
            auto it2 = rep.table.find({element_index(gb), element_index(ga)});
            if (it1 == rep.table.end() || it2 == rep.table.end() || it1->second != it2->second)
                rep.commutes_trivially = false;
        }
    return rep;
}

} // namespace gctqft
