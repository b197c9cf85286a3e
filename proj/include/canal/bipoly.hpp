#ifndef CANAL_BIPOLY_HPP
#define CANAL_BIPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canal/unipoly.hpp"

namespace canal {

// Bivariate polynomial in (t, u) with rational coefficients, stored as a
// polynomial in u whose coefficients are UniPoly in t.  Entry k is the
// coefficient of u^k; trailing zero entries are stripped.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<UniPoly> u_coeffs) : cu_(std::move(u_coeffs)) { trim(); }

    // Map from exponent pair (deg_t, deg_u) to coefficient.
    static BiPoly from_monomials(const std::map<std::pair<int, int>, Rat>& m);
    static BiPoly from_unipoly_in_t(const UniPoly& p);
    static BiPoly from_unipoly_in_u(const UniPoly& p);
    // p(t) * q(u)
    static BiPoly separable_product(const UniPoly& p_t, const UniPoly& q_u);

    bool is_zero() const { return cu_.empty(); }
    int degree_u() const { return static_cast<int>(cu_.size()) - 1; }
    int degree_t() const;
    UniPoly coeff_u(int k) const {
        return (k >= 0 && k < static_cast<int>(cu_.size())) ? cu_[k] : UniPoly();
    }
    const std::vector<UniPoly>& u_coeffs() const { return cu_; }
    std::map<std::pair<int, int>, Rat> monomials() const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Rat& a) const;
    bool operator==(const BiPoly& o) const { return cu_ == o.cu_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    UniPoly eval_t(const Rat& t0) const;  // polynomial in u
    UniPoly eval_u(const Rat& u0) const;  // polynomial in t
    Rat eval(const Rat& t0, const Rat& u0) const { return eval_t(t0).eval(u0); }

    // Transposes the roles of t and u.
    BiPoly swapped_vars() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<UniPoly> cu_;
};

// Exact division in Q[t][u]: returns the quotient if F divides R, treating u
// as the main variable and requiring every coefficient division to be exact.
std::optional<BiPoly> bipoly_div_exact(const BiPoly& R, const BiPoly& F);

// True iff there is a BiPoly G with R = F * G.
bool bipoly_divides(const BiPoly& F, const BiPoly& R);

} // namespace canal

#endif
