#include "canal/unipoly.hpp"

#include <algorithm>

#include "canal/errors.hpp"

namespace canal {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monomial(int deg, const Rat& a) {
    if (a == 0) return UniPoly();
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat(0));
    c.back() = a;
    return UniPoly(std::move(c));
}

const Rat& UniPoly::lead() const {
    if (c_.empty()) throw DegenerateInput("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rat& a) const {
    if (a == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

Rat UniPoly::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

double UniPoly::eval_d(double x) const {
    double v = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + it->get_d();
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(c));
}

UniPoly UniPoly::compose_affine(const Rat& a, const Rat& b) const {
    UniPoly r;
    UniPoly lin({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + UniPoly::constant(*it);
    return r;
}

UniPoly UniPoly::reversed(int deg) const {
    if (deg < degree()) throw DegenerateInput("reversal degree below polynomial degree");
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[deg - i] = c_[i];
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly q, r = *this;
    const Rat& dl = d.lead();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat f = r.lead() / dl;
        UniPoly m = UniPoly::monomial(k, f);
        q += m;
        r -= m * d;
    }
    return {q, r};
}

UniPoly UniPoly::div_exact(const UniPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw InconsistentConstraint("inexact polynomial division");
    return q;
}

bool UniPoly::divides(const UniPoly& q) const {
    if (is_zero()) return q.is_zero();
    return q.divrem(*this).second.is_zero();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rat(1 / lead());
}

UniPoly UniPoly::primitive_int() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1;
    for (const auto& a : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& a : c_) {
        mpz_class n = a.get_num() * den_lcm / a.get_den();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    UniPoly r = *this * scale;
    if (r.lead() < 0) r = -r;
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rat a = coeff(i);
        if (a == 0) continue;
        if (!s.empty()) s += (a > 0) ? " + " : " - ";
        else if (a < 0) s += "-";
        Rat m = rat_abs(a);
        bool need_coeff = (m != 1) || (i == 0);
        if (need_coeff) s += rat_to_string(m);
        if (i > 0) {
            if (need_coeff) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second;
        // Primitive normalization keeps coefficient growth in check.
        x = y;
        y = r.is_zero() ? r : r.primitive_int();
    }
    return x.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.is_zero()) throw DegenerateInput("square-free decomposition of zero polynomial");
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = f.div_exact(a);
    UniPoly c = fp.div_exact(a);
    UniPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        UniPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, mult);
        b = b.div_exact(g);
        c = d.div_exact(g);
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

} // namespace canal
