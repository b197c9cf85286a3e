#include "canal/rat.hpp"

#include <cctype>

namespace canal {

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw InvalidParams("empty rational literal");
    std::string t = s;
    // mpq_class accepts "p/q" directly, but we validate first to get a clean
    // diagnostic instead of a GMP abort.
    auto is_int = [](const std::string& v) {
        if (v.empty()) return false;
        std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
        if (i == v.size()) return false;
        for (; i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        if (!is_int(t)) throw InvalidParams("malformed rational literal: " + s);
    } else {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw InvalidParams("malformed rational literal: " + s);
        if (mpz_class(den) == 0) throw DivisionByZero("rational literal with zero denominator: " + s);
    }
    Rat q(t);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0) return std::nullopt;
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

Rat rat_pow2(long e) {
    Rat r;
    if (e >= 0) {
        mpz_class n = 1;
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e));
        r = Rat(n);
    } else {
        mpz_class d = 1;
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-e));
        r = Rat(1, d);
    }
    r.canonicalize();
    return r;
}

} // namespace canal
