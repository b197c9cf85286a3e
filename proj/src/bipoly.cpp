#include "canal/bipoly.hpp"

#include <algorithm>

#include "canal/errors.hpp"

namespace canal {

void BiPoly::trim() {
    while (!cu_.empty() && cu_.back().is_zero()) cu_.pop_back();
}

BiPoly BiPoly::from_monomials(const std::map<std::pair<int, int>, Rat>& m) {
    int du = -1;
    for (const auto& [e, a] : m)
        if (a != 0) du = std::max(du, e.second);
    std::vector<UniPoly> cu(static_cast<std::size_t>(du) + 1);
    for (int k = 0; k <= du; ++k) {
        std::vector<Rat> c;
        for (const auto& [e, a] : m) {
            if (e.second != k || a == 0) continue;
            if (static_cast<int>(c.size()) <= e.first) c.resize(e.first + 1, Rat(0));
            c[e.first] += a;
        }
        cu[k] = UniPoly(std::move(c));
    }
    return BiPoly(std::move(cu));
}

BiPoly BiPoly::from_unipoly_in_t(const UniPoly& p) {
    if (p.is_zero()) return BiPoly();
    return BiPoly(std::vector<UniPoly>{p});
}

BiPoly BiPoly::from_unipoly_in_u(const UniPoly& p) {
    std::vector<UniPoly> cu;
    for (int k = 0; k <= p.degree(); ++k) cu.push_back(UniPoly::constant(p.coeff(k)));
    return BiPoly(std::move(cu));
}

BiPoly BiPoly::separable_product(const UniPoly& p_t, const UniPoly& q_u) {
    std::vector<UniPoly> cu;
    for (int k = 0; k <= q_u.degree(); ++k) cu.push_back(p_t * q_u.coeff(k));
    return BiPoly(std::move(cu));
}

int BiPoly::degree_t() const {
    int d = -1;
    for (const auto& c : cu_) d = std::max(d, c.degree());
    return d;
}

std::map<std::pair<int, int>, Rat> BiPoly::monomials() const {
    std::map<std::pair<int, int>, Rat> m;
    for (int k = 0; k < static_cast<int>(cu_.size()); ++k)
        for (int i = 0; i <= cu_[k].degree(); ++i)
            if (cu_[k].coeff(i) != 0) m[{i, k}] = cu_[k].coeff(i);
    return m;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& c : r.cu_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    std::vector<UniPoly> cu(std::max(cu_.size(), o.cu_.size()));
    for (std::size_t i = 0; i < cu_.size(); ++i) cu[i] += cu_[i];
    for (std::size_t i = 0; i < o.cu_.size(); ++i) cu[i] += o.cu_[i];
    return BiPoly(std::move(cu));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (is_zero() || o.is_zero()) return BiPoly();
    std::vector<UniPoly> cu(cu_.size() + o.cu_.size() - 1);
    for (std::size_t i = 0; i < cu_.size(); ++i) {
        if (cu_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.cu_.size(); ++j) cu[i + j] += cu_[i] * o.cu_[j];
    }
    return BiPoly(std::move(cu));
}

BiPoly BiPoly::operator*(const Rat& a) const {
    if (a == 0) return BiPoly();
    BiPoly r = *this;
    for (auto& c : r.cu_) c = c * a;
    return r;
}

UniPoly BiPoly::eval_t(const Rat& t0) const {
    std::vector<Rat> c;
    c.reserve(cu_.size());
    for (const auto& p : cu_) c.push_back(p.eval(t0));
    return UniPoly(std::move(c));
}

UniPoly BiPoly::eval_u(const Rat& u0) const {
    UniPoly r;
    for (auto it = cu_.rbegin(); it != cu_.rend(); ++it) r = r * UniPoly::constant(u0) + *it;
    return r;
}

BiPoly BiPoly::swapped_vars() const {
    std::map<std::pair<int, int>, Rat> m;
    for (const auto& [e, a] : monomials()) m[{e.second, e.first}] = a;
    return from_monomials(m);
}

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree_u(); k >= 0; --k) {
        if (cu_[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + cu_[k].to_string("t") + ")";
        if (k > 0) {
            s += "*u";
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

std::optional<BiPoly> bipoly_div_exact(const BiPoly& R, const BiPoly& F) {
    if (F.is_zero()) throw DegenerateInput("bivariate division by zero polynomial");
    if (R.is_zero()) return BiPoly();
    const int df = F.degree_u();
    const UniPoly& flead = F.u_coeffs().back();
    BiPoly rem = R;
    std::vector<UniPoly> q(R.degree_u() >= df ? R.degree_u() - df + 1 : 0);
    while (!rem.is_zero() && rem.degree_u() >= df) {
        const UniPoly& rlead = rem.u_coeffs().back();
        auto [qc, rc] = rlead.divrem(flead);
        if (!rc.is_zero()) return std::nullopt;  // quotient would leave Q[t]
        int k = rem.degree_u() - df;
        q[k] = qc;
        std::vector<UniPoly> shift(static_cast<std::size_t>(k) + 1);
        shift[k] = qc;
        rem = rem - BiPoly(std::move(shift)) * F;
        if (!rem.is_zero() && rem.degree_u() >= df + k) return std::nullopt;
    }
    if (!rem.is_zero()) return std::nullopt;
    return BiPoly(std::move(q));
}

bool bipoly_divides(const BiPoly& F, const BiPoly& R) {
    return bipoly_div_exact(R, F).has_value();
}

} // namespace canal
