#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gctqft {

using Int = std::int64_t;

/// Euler totient, by trial factorization. Inputs here are small (ring levels).
inline Int euler_phi(Int n)
{
    if (n <= 0) throw std::invalid_argument("euler_phi: n must be positive");
    Int result = n;
    Int m = n;
    for (Int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

// Polynomials are integer coefficient vectors, low degree first, no trailing zeros.

inline void poly_trim(std::vector<Int>& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b)
{
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

// Exact division by a monic divisor; throws if the division leaves a remainder.
inline std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den)
{
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_divide_exact: divisor must be monic");
    poly_trim(num);
    if (num.size() < den.size()) {
        if (!num.empty()) throw std::domain_error("poly_divide_exact: inexact division");
        return {};
    }
    std::vector<Int> quot(num.size() - den.size() + 1, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int lead = num[k + den.size() - 1];
        quot[k] = lead;
        if (lead != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                num[k + j] -= lead * den[j];
    }
    for (Int c : num)
        if (c != 0) throw std::domain_error("poly_divide_exact: inexact division");
    return quot;
}

} // namespace detail

/// Coefficients of the N-th cyclotomic polynomial, low degree first, monic of
/// degree phi(N). Computed by exact division of x^N - 1 by the product of all
/// lower cyclotomic polynomials at divisors of N.
inline const std::vector<Int>& cyclotomic_polynomial(Int n)
{
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
    static std::map<Int, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const std::vector<Int>&(Int)> build = [&](Int k) -> const std::vector<Int>& {
        auto found = cache.find(k);
        if (found != cache.end()) return found->second;
        // x^k - 1
        std::vector<Int> num(static_cast<std::size_t>(k) + 1, 0);
        num[0] = -1;
        num.back() = 1;
        std::vector<Int> den{1}; // product of Phi_d for proper divisors d of k
        for (Int d = 1; d < k; ++d)
            if (k % d == 0) den = detail::poly_mul(den, build(d));
        auto quot = detail::poly_divide_exact(std::move(num), den);
        return cache.emplace(k, std::move(quot)).first->second;
    };
    return build(n);
}

/// The ring Z[zeta_N]: a level N and the reduction modulus Phi_N.
class CyclotomicRing {
public:
    explicit CyclotomicRing(Int level)
        : level_(level), modulus_(cyclotomic_polynomial(level)), degree_(static_cast<Int>(modulus_.size()) - 1)
    {
        if (level < 1) throw std::invalid_argument("CyclotomicRing: level must be >= 1");
    }

    Int level() const { return level_; }
    Int degree() const { return degree_; } // phi(N)
    const std::vector<Int>& modulus() const { return modulus_; }

private:
    Int level_;
    std::vector<Int> modulus_;
    Int degree_;
};

/// An element of Z[zeta_N] in the reduced basis 1, zeta, ..., zeta^{phi(N)-1}.
/// Reduction mod Phi_N is canonical, so equality is coefficient-wise.
class RingElement {
public:
    RingElement() : level_(1), coeffs_{0} {}

    RingElement(Int level, std::vector<Int> coeffs) : level_(level), coeffs_(std::move(coeffs))
    {
        reduce_();
    }

    /// The integer m as an element of the level-N ring.
    static RingElement integer(Int level, Int m)
    {
        std::vector<Int> c(static_cast<std::size_t>(euler_phi(level)), 0);
        c[0] = m;
        return RingElement(level, std::move(c));
    }

    static RingElement zero(Int level) { return integer(level, 0); }
    static RingElement one(Int level) { return integer(level, 1); }

    Int level() const { return level_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (Int c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_one() const { return *this == one(level_); }

    bool operator==(const RingElement& o) const { return level_ == o.level_ && coeffs_ == o.coeffs_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    bool operator<(const RingElement& o) const
    {
        if (level_ != o.level_) return level_ < o.level_;
        return coeffs_ < o.coeffs_;
    }

    RingElement operator-() const
    {
        std::vector<Int> c(coeffs_);
        for (Int& x : c) x = -x;
        return RingElement(level_, std::move(c));
    }

    RingElement operator+(const RingElement& o) const
    {
        check_level_(o);
        std::vector<Int> c(coeffs_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
        return RingElement(level_, std::move(c));
    }

    RingElement operator-(const RingElement& o) const { return *this + (-o); }

    RingElement operator*(const RingElement& o) const
    {
        check_level_(o);
        std::vector<Int> prod(2 * coeffs_.size(), 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        return RingElement(level_, std::move(prod));
    }

    RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
    RingElement& operator*=(const RingElement& o) { return *this = *this * o; }

    /// u^e. Negative exponents are defined only for roots of unity, via the
    /// multiplicative order (the only inverses this ring ever needs).
    RingElement pow(Int e) const;

    std::string to_string() const
    {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ",";
            os << coeffs_[i];
        }
        os << "]@" << level_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.to_string(); }

private:
    void check_level_(const RingElement& o) const
    {
        if (level_ != o.level_)
            throw std::invalid_argument("RingElement: mismatched ring levels (lift first)");
    }

    void reduce_()
    {
        if (level_ < 1) throw std::invalid_argument("RingElement: level must be >= 1");
        const auto& phi = cyclotomic_polynomial(level_);
        const std::size_t deg = phi.size() - 1;
        for (std::size_t k = coeffs_.size(); k-- > deg;) {
            Int lead = coeffs_[k];
            if (lead != 0) {
                // subtract lead * x^{k-deg} * Phi_N
                for (std::size_t j = 0; j < phi.size(); ++j)
                    coeffs_[k - deg + j] -= lead * phi[j];
            }
        }
        coeffs_.resize(deg, 0);
        if (deg == 0) coeffs_.assign(1, 0); // cannot happen: phi(N) >= 1
    }

    Int level_;
    std::vector<Int> coeffs_;
};

/// zeta_N^k as an element of Z[zeta_N]; k is taken mod N.
inline RingElement root_of_unity(Int level, Int k)
{
    Int n = level;
    Int e = ((k % n) + n) % n;
    std::vector<Int> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    return RingElement(level, std::move(c));
}

/// Smallest l >= 1 with u^l = 1, searched up to 2N; nullopt if none is found
/// (u is then not a root of unity).
inline std::optional<Int> multiplicative_order(const RingElement& u)
{
    const Int bound = 2 * u.level();
    RingElement acc = u;
    const RingElement unit = RingElement::one(u.level());
    for (Int l = 1; l <= bound; ++l) {
        if (acc == unit) return l;
        acc = acc * u;
    }
    return std::nullopt;
}

inline RingElement RingElement::pow(Int e) const
{
    if (e < 0) {
        auto ord = multiplicative_order(*this);
        if (!ord) throw std::domain_error("RingElement::pow: negative exponent of a non-unit");
        Int m = *ord;
        e = ((e % m) + m) % m;
    }
    RingElement result = RingElement::one(level_);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

/// Inverse of a root of unity; throws for non-units.
inline RingElement unit_inverse(const RingElement& u)
{
    auto ord = multiplicative_order(u);
    if (!ord) throw std::domain_error("unit_inverse: not a root of unity");
    return u.pow(*ord - 1);
}

/// Image of a under the ring embedding zeta_N -> zeta_M^{M/N}; requires N | M.
inline RingElement lift(const RingElement& a, Int target_level)
{
    const Int n = a.level();
    const Int m = target_level;
    if (m % n != 0) throw std::invalid_argument("lift: source level must divide target level");
    if (m == n) return a;
    const Int stride = m / n;
    std::vector<Int> c(static_cast<std::size_t>(a.coeffs().size()) * static_cast<std::size_t>(stride) + 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        c[i * static_cast<std::size_t>(stride)] = a.coeffs()[i];
    return RingElement(m, std::move(c));
}

/// Compare elements that may live at different levels by lifting both into the
/// lcm level.
inline bool equal_after_lift(const RingElement& a, const RingElement& b)
{
    Int l = std::lcm(a.level(), b.level());
    return lift(a, l) == lift(b, l);
}

} // namespace gctqft
