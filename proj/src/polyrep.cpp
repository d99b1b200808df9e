#include "klrcalc/polyrep.hpp"

#include <algorithm>

namespace klrcalc {

void Poly::add(const std::vector<int>& e, const mpz_class& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
        t.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [e, c] : o.t) add(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [e, c] : o.t) add(e, -c);
    return *this;
}

Poly Poly::monomial(const std::vector<int>& e, mpz_class c) {
    Poly p;
    p.add(e, c);
    return p;
}

Poly poly_mul_y(int u, const Poly& f) {
    Poly out;
    for (auto& [e, c] : f.t) {
        auto e2 = e;
        e2[u - 1] += 1;
        out.add(e2, c);
    }
    return out;
}

Poly poly_swap(int r, const Poly& f) {
    Poly out;
    for (auto& [e, c] : f.t) {
        auto e2 = e;
        std::swap(e2[r - 1], e2[r]);
        out.add(e2, c);
    }
    return out;
}

Poly poly_mul(const Poly& f, const Poly& g) {
    Poly out;
    for (auto& [e, c] : f.t)
        for (auto& [e2, c2] : g.t) {
            auto e3 = e;
            for (std::size_t k = 0; k < e3.size(); ++k) e3[k] += e2[k];
            out.add(e3, c * c2);
        }
    return out;
}

Poly demazure(int r, const Poly& f) {
    // (s_r f - f) / (y_r - y_{r+1}), exact on each monomial:
    //   x^p y^q with p > q contributes -sum_{k=0}^{p-q-1} x^{q+k} y^{p-1-k},
    //   with q > p contributes +sum_{k=0}^{q-p-1} x^{p+k} y^{q-1-k}.
    Poly out;
    for (auto& [e, c] : f.t) {
        int p = e[r - 1], q = e[r];
        if (p == q) continue;
        auto e2 = e;
        if (p > q) {
            for (int k = 0; k <= p - q - 1; ++k) {
                e2[r - 1] = q + k;
                e2[r] = p - 1 - k;
                out.add(e2, -c);
            }
        } else {
            for (int k = 0; k <= q - p - 1; ++k) {
                e2[r - 1] = p + k;
                e2[r] = q - 1 - k;
                out.add(e2, c);
            }
        }
    }
    return out;
}

void PolyVec::add(const Word& i, const Poly& f) {
    if (f.is_zero()) return;
    auto it = comp.find(i);
    if (it == comp.end()) {
        comp.emplace(i, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) comp.erase(it);
    }
}

PolyVec& PolyVec::operator+=(const PolyVec& o) {
    for (auto& [i, f] : o.comp) add(i, f);
    return *this;
}

PolyVec& PolyVec::operator-=(const PolyVec& o) {
    for (auto& [i, f] : o.comp) {
        Poly neg;
        neg -= f;
        add(i, neg);
    }
    return *this;
}

bool PolyVec::is_zero() const { return comp.empty(); }

PolyVec rep_idem(const Word& j, const PolyVec& v) {
    PolyVec out;
    auto it = v.comp.find(j);
    if (it != v.comp.end()) out.add(j, it->second);
    return out;
}

PolyVec rep_y(int u, const PolyVec& v) {
    PolyVec out;
    for (auto& [i, f] : v.comp) out.add(i, poly_mul_y(u, f));
    return out;
}

PolyVec rep_psi(int r, const PolyVec& v) {
    PolyVec out;
    for (auto& [i, f] : v.comp) {
        Vertex a = i[r - 1], b = i[r];
        Word si = i;
        std::swap(si[r - 1], si[r]);
        if (a == b) {
            out.add(i, demazure(r, f));
        } else if (b == a + 1) {
            out.add(si, poly_swap(r, f));
        } else if (b == a - 1) {
            // (y_r - y_{r+1}) . s_r f
            Poly g = poly_swap(r, f);
            Poly h = poly_mul_y(r, g);
            h -= poly_mul_y(r + 1, g);
            out.add(si, h);
        } else {
            out.add(si, poly_swap(r, f));
        }
    }
    return out;
}

PolyVec rep_elem(const Elem& e, const PolyVec& v) {
    PolyVec out;
    for (auto& [m, c] : e.terms) {
        PolyVec cur = rep_idem(m.idem, v);
        if (cur.is_zero()) continue;
        for (int u = 1; u <= m.d(); ++u)
            for (int k = 0; k < m.ys[u - 1]; ++k) cur = rep_y(u, cur);
        auto cw = canonical_word(m.w);
        for (auto it = cw.rbegin(); it != cw.rend(); ++it) cur = rep_psi(*it, cur);
        for (auto& [i, f] : cur.comp) {
            Poly g;
            for (auto& [ex, cf] : f.t) g.add(ex, cf * c);
            out.add(i, g);
        }
    }
    return out;
}

}  // namespace klrcalc
