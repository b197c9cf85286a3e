#include "canal/roots.hpp"

#include <algorithm>

#include "canal/errors.hpp"

namespace canal {

namespace {

// Scales to coprime integer coefficients by a positive rational; Sturm
// chains only admit positive rescaling, so the sign is never flipped.
UniPoly positive_primitive(const UniPoly& p) {
    if (p.is_zero()) return p;
    UniPoly q = p.primitive_int();
    return (p.lead() < 0) ? -q : q;
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain;
    chain.push_back(positive_primitive(f));
    UniPoly d = f.derivative();
    if (!d.is_zero()) chain.push_back(positive_primitive(d));
    while (chain.size() >= 2 && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].divrem(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = rat_sign(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Cauchy bound: every real root of f lies in (-B, B).
Rat root_bound(const UniPoly& f) {
    Rat m(0);
    Rat lead = rat_abs(f.lead());
    for (int i = 0; i < f.degree(); ++i) {
        Rat v = rat_abs(f.coeff(i)) / lead;
        if (v > m) m = v;
    }
    Rat b = m + 1;
    // Round up to an integer so endpoints stay small.
    mpz_class n = b.get_num() / b.get_den() + 1;
    return Rat(n);
}

struct Isolator {
    const UniPoly& f;
    std::vector<UniPoly> chain;
    std::vector<std::pair<Rat, Rat>> out;  // lo == hi marks exact roots

    explicit Isolator(const UniPoly& sf) : f(sf), chain(sturm_chain(sf)) {}

    // Requires f(a) != 0, f(b) != 0.
    void isolate(const Rat& a, const Rat& b, int count) {
        if (count == 0) return;
        if (count == 1) {
            out.emplace_back(a, b);
            return;
        }
        Rat m = (a + b) / 2;
        if (f.eval(m) == 0) {
            out.emplace_back(m, m);
            // Carve out a punctured neighbourhood of the exact root before
            // recursing on the two sides.
            Rat eps = (b - a) / 4;
            while (true) {
                Rat l = m - eps, r = m + eps;
                if (f.eval(l) != 0 && f.eval(r) != 0 &&
                    variations(chain, l) - variations(chain, r) == 1) {
                    isolate(a, l, variations(chain, a) - variations(chain, l));
                    isolate(r, b, variations(chain, r) - variations(chain, b));
                    return;
                }
                eps /= 2;
            }
        }
        int left = variations(chain, a) - variations(chain, m);
        isolate(a, m, left);
        isolate(m, b, count - left);
    }
};

void bisect_once(const UniPoly& f, Rat& lo, Rat& hi) {
    if (lo == hi) return;
    Rat m = (lo + hi) / 2;
    Rat fm = f.eval(m);
    if (fm == 0) {
        lo = hi = m;
        return;
    }
    if (rat_sign(f.eval(lo)) * rat_sign(fm) < 0)
        hi = m;
    else
        lo = m;
}

bool overlap(const IsolatedRoot& a, const IsolatedRoot& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

} // namespace

void IsolatedRoot::refine(const Rat& max_width) {
    while (hi - lo > max_width) bisect_once(part, lo, hi);
}

void IsolatedRoot::refine_steps(int steps) {
    for (int i = 0; i < steps && lo != hi; ++i) bisect_once(part, lo, hi);
}

std::vector<IsolatedRoot> real_roots(const UniPoly& p, const Rat& max_width) {
    if (p.is_zero()) throw DegenerateInput("root isolation of the zero polynomial");
    std::vector<IsolatedRoot> roots;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        UniPoly f = factor.primitive_int();
        if (f.degree() == 1) {
            Rat r = -f.coeff(0) / f.coeff(1);
            roots.push_back({r, r, mult, f});
            continue;
        }
        Isolator iso(f);
        Rat b = root_bound(f);
        int total = variations(iso.chain, -b) - variations(iso.chain, b);
        iso.isolate(-b, b, total);
        for (auto& [lo, hi] : iso.out) roots.push_back({lo, hi, mult, f});
    }
    for (auto& r : roots) r.refine(max_width);
    // Distinct roots of coprime factors: shrink until intervals are disjoint.
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (!(roots[i].is_exact() && roots[j].is_exact()) && overlap(roots[i], roots[j])) {
                    roots[i].refine_steps(2);
                    roots[j].refine_steps(2);
                    again = true;
                }
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
    return roots;
}

bool has_root_in(const UniPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw DegenerateInput("root query on the zero polynomial");
    if (p.is_constant()) return false;
    if (p.eval(a) == 0 || p.eval(b) == 0) return true;
    UniPoly sf = p.div_exact(gcd(p, p.derivative()));
    auto chain = sturm_chain(sf);
    return variations(chain, a) - variations(chain, b) > 0;
}

} // namespace canal
