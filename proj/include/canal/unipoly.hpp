#ifndef CANAL_UNIPOLY_HPP
#define CANAL_UNIPOLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "canal/rat.hpp"

namespace canal {

// Univariate polynomial with exact rational coefficients, ascending degree.
// The zero polynomial is the empty coefficient list; otherwise the last
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rat& a) { return UniPoly({a}); }
    static UniPoly monomial(int deg, const Rat& a = Rat(1));
    // The variable itself.
    static UniPoly t() { return monomial(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
    }
    const Rat& lead() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rat& a) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& x) const;
    double eval_d(double x) const;

    UniPoly derivative() const;
    // Substitutes t -> a*t + b.
    UniPoly compose_affine(const Rat& a, const Rat& b) const;
    // Reverses coefficients padded to the given degree: t^deg * p(1/t).
    UniPoly reversed(int deg) const;

    // Exact Euclidean division; throws DivisionByZero on zero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    // Exact quotient; throws InconsistentConstraint if remainder nonzero.
    UniPoly div_exact(const UniPoly& d) const;
    bool divides(const UniPoly& q) const;  // true iff *this divides q

    UniPoly monic() const;
    // Scales by the positive rational making coefficients coprime integers.
    UniPoly primitive_int() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& a, const UniPoly& p) { return p * a; }

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, gcd(0,0) = 0

// Yun's algorithm: returns pairs (factor, multiplicity) with factors
// square-free, pairwise coprime, product of factor^mult = monic part of p.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

} // namespace canal

#endif
