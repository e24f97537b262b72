#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gctqft/cyclotomic.hpp"

namespace gctqft {

/// Product of cyclic groups Z/n_1 x ... x Z/n_k, one generator per factor.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;

    explicit FiniteAbelianGroup(std::vector<Int> orders) : orders_(std::move(orders))
    {
        for (Int n : orders_)
            if (n < 1) throw std::invalid_argument("FiniteAbelianGroup: orders must be >= 1");
    }

    static FiniteAbelianGroup trivial() { return FiniteAbelianGroup(std::vector<Int>{}); }

    const std::vector<Int>& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }

    Int order() const
    {
        Int t = 1;
        for (Int n : orders_) t *= n;
        return t;
    }

    bool operator==(const FiniteAbelianGroup& o) const { return orders_ == o.orders_; }
    bool operator!=(const FiniteAbelianGroup& o) const { return !(*this == o); }

private:
    std::vector<Int> orders_;
};

/// Element of a FiniteAbelianGroup, exponents reduced into [0, n_i).
class GroupElement {
public:
    GroupElement() = default;

    GroupElement(FiniteAbelianGroup group, std::vector<Int> exps)
        : group_(std::move(group)), exps_(std::move(exps))
    {
        if (exps_.size() != group_.rank())
            throw std::invalid_argument("GroupElement: exponent count mismatch");
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            Int n = group_.orders()[i];
            exps_[i] = ((exps_[i] % n) + n) % n;
        }
    }

    static GroupElement identity(const FiniteAbelianGroup& g)
    {
        return GroupElement(g, std::vector<Int>(g.rank(), 0));
    }

    /// g_i, the i-th generator (0-based).
    static GroupElement generator(const FiniteAbelianGroup& g, std::size_t i)
    {
        std::vector<Int> e(g.rank(), 0);
        e.at(i) = 1;
        return GroupElement(g, std::move(e));
    }

    const FiniteAbelianGroup& group() const { return group_; }
    const std::vector<Int>& exps() const { return exps_; }
    Int exp(std::size_t i) const { return exps_.at(i); }

    bool is_identity() const
    {
        return std::all_of(exps_.begin(), exps_.end(), [](Int e) { return e == 0; });
    }

    GroupElement operator+(const GroupElement& o) const
    {
        check_group_(o);
        std::vector<Int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return GroupElement(group_, std::move(e));
    }

    GroupElement operator-() const
    {
        std::vector<Int> e(exps_);
        for (Int& x : e) x = -x;
        return GroupElement(group_, std::move(e));
    }

    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }

    bool operator==(const GroupElement& o) const { return group_ == o.group_ && exps_ == o.exps_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const { return exps_ < o.exps_; }

private:
    void check_group_(const GroupElement& o) const
    {
        if (group_ != o.group_) throw std::invalid_argument("GroupElement: group mismatch");
    }

    FiniteAbelianGroup group_;
    std::vector<Int> exps_;
};

/// All elements in lexicographic exponent order. This order is the basis
/// order of every state space, so it is part of the output contract.
inline std::vector<GroupElement> enumerate(const FiniteAbelianGroup& g)
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    std::vector<Int> e(g.rank(), 0);
    for (;;) {
        out.emplace_back(g, e);
        std::size_t i = g.rank();
        while (i > 0) {
            --i;
            if (++e[i] < g.orders()[i]) break;
            e[i] = 0;
            if (i == 0) return out;
        }
        if (g.rank() == 0) return out;
    }
}

/// Index of an element in the enumerate() order.
inline Int element_index(const GroupElement& x)
{
    Int idx = 0;
    for (std::size_t i = 0; i < x.group().rank(); ++i)
        idx = idx * x.group().orders()[i] + x.exp(i);
    return idx;
}

// ---------------------------------------------------------------------------
// Integer matrices and Smith normal form
// ---------------------------------------------------------------------------

/// Dense integer matrix with exact arithmetic.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}

    IntegerMatrix(Int rows, Int cols, Int fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill)
    {
        if (rows < 0 || cols < 0) throw std::invalid_argument("IntegerMatrix: negative dimension");
    }

    static IntegerMatrix identity(Int n)
    {
        IntegerMatrix m(n, n);
        for (Int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows)
    {
        Int r = static_cast<Int>(rows.size());
        Int c = rows.empty() ? 0 : static_cast<Int>(rows[0].size());
        IntegerMatrix m(r, c);
        for (Int i = 0; i < r; ++i) {
            if (static_cast<Int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("IntegerMatrix: ragged rows");
            for (Int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    Int rows() const { return rows_; }
    Int cols() const { return cols_; }

    Int& at(Int i, Int j) { return data_[index_(i, j)]; }
    Int at(Int i, Int j) const { return data_[index_(i, j)]; }

    bool operator==(const IntegerMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    IntegerMatrix operator*(const IntegerMatrix& o) const
    {
        if (cols_ != o.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
        IntegerMatrix out(rows_, o.cols_);
        for (Int i = 0; i < rows_; ++i)
            for (Int k = 0; k < cols_; ++k) {
                Int a = at(i, k);
                if (a == 0) continue;
                for (Int j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const
    {
        if (static_cast<Int>(v.size()) != cols_) throw std::invalid_argument("IntegerMatrix: vector length mismatch");
        std::vector<Int> out(static_cast<std::size_t>(rows_), 0);
        for (Int i = 0; i < rows_; ++i)
            for (Int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return out;
    }

    std::vector<Int> column(Int j) const
    {
        std::vector<Int> out(static_cast<std::size_t>(rows_));
        for (Int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = at(i, j);
        return out;
    }

    IntegerMatrix transposed() const
    {
        IntegerMatrix out(cols_, rows_);
        for (Int i = 0; i < rows_; ++i)
            for (Int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    /// Concatenate columns: [this | o].
    IntegerMatrix hcat(const IntegerMatrix& o) const
    {
        if (rows_ != o.rows_) throw std::invalid_argument("IntegerMatrix: hcat row mismatch");
        IntegerMatrix out(rows_, cols_ + o.cols_);
        for (Int i = 0; i < rows_; ++i) {
            for (Int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
            for (Int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
        }
        return out;
    }

private:
    std::size_t index_(Int i, Int j) const
    {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("IntegerMatrix: index");
        return static_cast<std::size_t>(i * cols_ + j);
    }

    Int rows_, cols_;
    std::vector<Int> data_;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
/// The inverses are accumulated alongside, since homology presentations need
/// them to express generators.
struct SmithDecomposition {
    IntegerMatrix u, d, v;
    IntegerMatrix u_inv, v_inv;
    Int rank = 0; // number of nonzero diagonal entries

    std::vector<Int> diagonal() const
    {
        std::vector<Int> out;
        Int n = std::min(d.rows(), d.cols());
        for (Int i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }
};

/// Smith normal form with a deterministic pivot rule: smallest nonzero
/// absolute value, ties broken by row-major position.
inline SmithDecomposition smith_normal_form(const IntegerMatrix& a)
{
    const Int m = a.rows(), n = a.cols();
    SmithDecomposition s;
    s.d = a;
    s.u = IntegerMatrix::identity(m);
    s.u_inv = IntegerMatrix::identity(m);
    s.v = IntegerMatrix::identity(n);
    s.v_inv = IntegerMatrix::identity(n);
    IntegerMatrix& d = s.d;

    auto row_swap = [&](Int i, Int j) {
        if (i == j) return;
        for (Int k = 0; k < n; ++k) std::swap(d.at(i, k), d.at(j, k));
        for (Int k = 0; k < m; ++k) std::swap(s.u.at(i, k), s.u.at(j, k));
        for (Int k = 0; k < m; ++k) std::swap(s.u_inv.at(k, i), s.u_inv.at(k, j));
    };
    auto col_swap = [&](Int i, Int j) {
        if (i == j) return;
        for (Int k = 0; k < m; ++k) std::swap(d.at(k, i), d.at(k, j));
        for (Int k = 0; k < n; ++k) std::swap(s.v.at(k, i), s.v.at(k, j));
        for (Int k = 0; k < n; ++k) std::swap(s.v_inv.at(i, k), s.v_inv.at(j, k));
    };
    // row i += f * row j  (and the matching inverse update)
    auto row_add = [&](Int i, Int j, Int f) {
        if (f == 0) return;
        for (Int k = 0; k < n; ++k) d.at(i, k) += f * d.at(j, k);
        for (Int k = 0; k < m; ++k) s.u.at(i, k) += f * s.u.at(j, k);
        for (Int k = 0; k < m; ++k) s.u_inv.at(k, j) -= f * s.u_inv.at(k, i);
    };
    auto col_add = [&](Int i, Int j, Int f) {
        if (f == 0) return;
        for (Int k = 0; k < m; ++k) d.at(k, i) += f * d.at(k, j);
        for (Int k = 0; k < n; ++k) s.v.at(k, i) += f * s.v.at(k, j);
        for (Int k = 0; k < n; ++k) s.v_inv.at(j, k) -= f * s.v_inv.at(i, k);
    };
    auto row_negate = [&](Int i) {
        for (Int k = 0; k < n; ++k) d.at(i, k) = -d.at(i, k);
        for (Int k = 0; k < m; ++k) s.u.at(i, k) = -s.u.at(i, k);
        for (Int k = 0; k < m; ++k) s.u_inv.at(k, i) = -s.u_inv.at(k, i);
    };

    const Int steps = std::min(m, n);
    for (Int t = 0; t < steps; ++t) {
        for (;;) {
            // Deterministic pivot: smallest |entry| != 0, row-major tie-break.
            Int pr = -1, pc = -1, best = 0;
            for (Int i = t; i < m; ++i)
                for (Int j = t; j < n; ++j) {
                    Int v = std::abs(d.at(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) break; // submatrix is zero
            row_swap(t, pr);
            col_swap(t, pc);

            bool clean = true;
            for (Int i = t + 1; i < m; ++i) {
                Int q = d.at(i, t) / d.at(t, t);
                row_add(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (Int j = t + 1; j < n; ++j) {
                Int q = d.at(t, j) / d.at(t, t);
                col_add(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot divides everything below-right, or absorb a bad row.
            Int bi = -1;
            for (Int i = t + 1; i < m && bi < 0; ++i)
                for (Int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            row_add(t, bi, 1);
        }
        if (d.at(t, t) < 0) row_negate(t);
        if (d.at(t, t) != 0) s.rank = t + 1;
    }
    return s;
}

/// Fraction-free determinant (Bareiss); used by tests to verify unimodularity.
inline Int determinant(const IntegerMatrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    Int n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Int sign = 1, prev = 1;
    for (Int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            Int swap_row = -1;
            for (Int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            for (Int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (Int i = k + 1; i < n; ++i)
            for (Int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

/// Cokernel of A : Z^cols -> Z^rows presented as torsion orders (> 1), a free
/// rank, and generator lifts (columns of U^{-1} in the SNF).
struct CokernelPresentation {
    std::vector<Int> torsion_orders;  // d_i > 1, divisibility ascending
    Int free_rank = 0;
    std::vector<std::vector<Int>> generators; // lifts in Z^rows, torsion then free

    FiniteAbelianGroup torsion_group() const { return FiniteAbelianGroup(torsion_orders); }
};

inline CokernelPresentation cokernel(const IntegerMatrix& a)
{
    SmithDecomposition s = smith_normal_form(a);
    CokernelPresentation out;
    const Int rows = a.rows();
    auto diag = s.diagonal();
    std::vector<Int> torsion_idx, free_idx;
    for (Int i = 0; i < rows; ++i) {
        Int d = (i < static_cast<Int>(diag.size())) ? diag[static_cast<std::size_t>(i)] : 0;
        if (d == 0)
            free_idx.push_back(i);
        else if (d > 1)
            torsion_idx.push_back(i);
    }
    for (Int i : torsion_idx) {
        out.torsion_orders.push_back(diag[static_cast<std::size_t>(i)]);
        out.generators.push_back(s.u_inv.column(i));
    }
    out.free_rank = static_cast<Int>(free_idx.size());
    for (Int i : free_idx) out.generators.push_back(s.u_inv.column(i));
    return out;
}

// ---------------------------------------------------------------------------
// The mod-m subquotient engine
// ---------------------------------------------------------------------------

/// Presentation of the finite group
///     {x in Z^c : L x = 0 (mod m)} / (R Z^q + m Z^c)
/// together with exact coordinates. This one computation underlies both
/// homology with Z/m coefficients (L, R boundary matrices) and cocycle
/// classification (L cocycle conditions, R coboundaries).
class ModMSubquotient {
public:
    ModMSubquotient() = default;

    /// L: conditions (p x c), R: relations (c x q), m >= 1. Columns of R must
    /// satisfy the conditions mod m; this is validated.
    ModMSubquotient(const IntegerMatrix& conditions, const IntegerMatrix& relations, Int m)
        : modulus_(m), dim_(conditions.cols())
    {
        if (m < 1) throw std::invalid_argument("ModMSubquotient: modulus must be >= 1");
        if (relations.rows() != dim_) throw std::invalid_argument("ModMSubquotient: relation shape mismatch");
        const Int p = conditions.rows(), c = dim_;

        for (Int j = 0; j < relations.cols(); ++j) {
            auto img = conditions.apply(relations.column(j));
            for (Int x : img)
                if (((x % m) + m) % m != 0)
                    throw std::invalid_argument("ModMSubquotient: relation violates conditions mod m");
        }

        if (c == 0) {
            kernel_basis_ = IntegerMatrix(0, 0);
            return;
        }

        // Lattice of mod-m solutions: project ker[L | mI] onto the first c
        // coordinates. The projection is a bijection onto the solution
        // lattice, so the basis matrix K is square and invertible.
        IntegerMatrix aug(p, c + p);
        for (Int i = 0; i < p; ++i) {
            for (Int j = 0; j < c; ++j) aug.at(i, j) = conditions.at(i, j);
            aug.at(i, c + i) = m;
        }
        SmithDecomposition sa = smith_normal_form(aug);
        Int kdim = (c + p) - sa.rank;
        if (kdim != c) throw std::logic_error("ModMSubquotient: unexpected kernel dimension");
        kernel_basis_ = IntegerMatrix(c, c);
        for (Int j = 0; j < c; ++j)
            for (Int i = 0; i < c; ++i) kernel_basis_.at(i, j) = sa.v.at(i, sa.rank + j);
        kernel_snf_ = smith_normal_form(kernel_basis_);

        // Express relations (and m e_i) in the kernel basis and take SNF.
        IntegerMatrix rel = relations.hcat(IntegerMatrix::identity(c));
        for (Int i = 0; i < c; ++i) rel.at(i, relations.cols() + i) = m;
        IntegerMatrix y(c, rel.cols());
        for (Int j = 0; j < rel.cols(); ++j) {
            auto w = solve_in_kernel_basis_(rel.column(j));
            for (Int i = 0; i < c; ++i) y.at(i, j) = w[static_cast<std::size_t>(i)];
        }
        quot_snf_ = smith_normal_form(y);
        auto diag = quot_snf_.diagonal();
        for (Int i = 0; i < c; ++i) {
            Int d = (i < static_cast<Int>(diag.size())) ? diag[static_cast<std::size_t>(i)] : 0;
            if (d == 0) throw std::logic_error("ModMSubquotient: quotient is not finite");
            if (d > 1) kept_.push_back(i);
        }
        for (Int i : kept_) orders_.push_back(diag[static_cast<std::size_t>(i)]);
    }

    Int modulus() const { return modulus_; }
    Int dimension() const { return dim_; }
    const std::vector<Int>& orders() const { return orders_; }
    FiniteAbelianGroup group() const { return FiniteAbelianGroup(orders_); }

    /// Generator of the j-th cyclic factor as a vector in Z^c (entries in [0, m)).
    std::vector<Int> generator(std::size_t j) const
    {
        Int idx = kept_.at(j);
        std::vector<Int> gen(static_cast<std::size_t>(dim_), 0);
        for (Int i = 0; i < dim_; ++i) {
            Int acc = 0;
            for (Int k = 0; k < dim_; ++k) acc += kernel_basis_.at(i, k) * quot_snf_.u_inv.at(k, idx);
            gen[static_cast<std::size_t>(i)] = mod_(acc);
        }
        return gen;
    }

    /// Coordinates of a condition-satisfying vector in the cyclic factors.
    std::vector<Int> coordinates(const std::vector<Int>& x) const
    {
        auto w = solve_in_kernel_basis_(x);
        std::vector<Int> coords;
        coords.reserve(kept_.size());
        for (std::size_t j = 0; j < kept_.size(); ++j) {
            Int idx = kept_[j];
            Int acc = 0;
            for (Int k = 0; k < dim_; ++k) acc += quot_snf_.u.at(idx, k) * w[static_cast<std::size_t>(k)];
            Int d = orders_[j];
            coords.push_back(((acc % d) + d) % d);
        }
        return coords;
    }

    /// Vector representing the class with the given coordinates.
    std::vector<Int> representative(const std::vector<Int>& coords) const
    {
        if (coords.size() != orders_.size()) throw std::invalid_argument("ModMSubquotient: coordinate mismatch");
        std::vector<Int> x(static_cast<std::size_t>(dim_), 0);
        for (std::size_t j = 0; j < coords.size(); ++j) {
            auto gen = generator(j);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_(x[i] + coords[j] * gen[i]);
        }
        return x;
    }

private:
    Int mod_(Int v) const { return ((v % modulus_) + modulus_) % modulus_; }

    // Exact integer solve K w = x via the stored SNF of K.
    std::vector<Int> solve_in_kernel_basis_(const std::vector<Int>& x) const
    {
        if (static_cast<Int>(x.size()) != dim_) throw std::invalid_argument("ModMSubquotient: vector length");
        // w = V * D^{-1} * U * x
        std::vector<Int> ux(static_cast<std::size_t>(dim_), 0);
        for (Int i = 0; i < dim_; ++i)
            for (Int j = 0; j < dim_; ++j) ux[static_cast<std::size_t>(i)] += kernel_snf_.u.at(i, j) * x[static_cast<std::size_t>(j)];
        for (Int i = 0; i < dim_; ++i) {
            Int d = kernel_snf_.d.at(i, i);
            if (d == 0 || ux[static_cast<std::size_t>(i)] % d != 0)
                throw std::domain_error("ModMSubquotient: vector not in the solution lattice");
            ux[static_cast<std::size_t>(i)] /= d;
        }
        std::vector<Int> w(static_cast<std::size_t>(dim_), 0);
        for (Int i = 0; i < dim_; ++i)
            for (Int j = 0; j < dim_; ++j) w[static_cast<std::size_t>(i)] += kernel_snf_.v.at(i, j) * ux[static_cast<std::size_t>(j)];
        return w;
    }

    Int modulus_ = 1;
    Int dim_ = 0;
    IntegerMatrix kernel_basis_;
    SmithDecomposition kernel_snf_;
    SmithDecomposition quot_snf_;
    std::vector<Int> kept_;
    std::vector<Int> orders_;
};

} // namespace gctqft
