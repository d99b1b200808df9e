#include "klrcalc/klr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <functional>
#include <tuple>

namespace klrcalc {

Mono::Mono(Perm w_, std::vector<int> ys_, Word idem_)
    : w(std::move(w_)), ys(std::move(ys_)), idem(std::move(idem_)) {
    if (w.d() != (int)ys.size() || w.d() != (int)idem.size())
        throw std::invalid_argument("Mono: size mismatch");
    for (int k : ys)
        if (k < 0) throw std::invalid_argument("Mono: negative exponent");
}

int mono_degree(const Mono& m) {
    int deg = 0;
    for (int k : m.ys) deg += 2 * k;
    int d = m.d();
    for (int p = 1; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q)
            if (m.w(p) > m.w(q)) deg -= cartan(m.idem[p - 1], m.idem[q - 1]);
    return deg;
}

void Elem::add(const Mono& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Elem& Elem::operator+=(const Elem& o) {
    for (auto& [m, c] : o.terms) add(m, c);
    return *this;
}

Elem& Elem::operator-=(const Elem& o) {
    for (auto& [m, c] : o.terms) add(m, -c);
    return *this;
}

Elem& Elem::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [m, v] : terms) v *= c;
    return *this;
}

std::optional<int> Elem::degree() const {
    std::optional<int> deg;
    for (auto& [m, c] : terms) {
        int d = mono_degree(m);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string to_string(const Mono& m) {
    std::ostringstream s;
    auto cw = canonical_word(m.w);
    for (int r : cw) s << "psi" << r << " ";
    for (int u = 1; u <= m.d(); ++u)
        for (int k = 0; k < m.ys[u - 1]; ++k) s << "y" << u << " ";
    s << "1" << to_string(m.idem);
    return s.str();
}

std::string to_string(const Elem& e) {
    if (e.is_zero()) return "0";
    std::ostringstream s;
    bool first = true;
    for (auto& [m, c] : e.terms) {
        if (!first) s << " + ";
        first = false;
        if (c != 1) s << c.get_str() << "*";
        s << to_string(m);
    }
    return s.str();
}

Elem idem_elem(const Word& i) {
    return Elem(Mono(Perm::identity((int)i.size()), std::vector<int>(i.size(), 0), i));
}

Elem lmul_idem(const Word& j, const Elem& e) {
    Elem out;
    for (auto& [m, c] : e.terms)
        if (m.top_word() == j) out.add(m, c);
    return out;
}

// ---------------------------------------------------------------------------
// Core straightening recursion.
//
// Everything reduces to left multiplication of a single generator into a
// normal monomial. Key facts used throughout:
//   * the canonical (lex-min) reduced word of w has canonical tails, so
//     psi_t . (canonical monomial of s_t w) is again a canonical monomial
//     whenever t is the first letter of the canonical word of w;
//   * commutation moves psi_a psi_b = psi_b psi_a (|a-b|>1) are exact;
//   * braid moves hold up to an idempotent-dependent scalar correction with
//     three fewer crossings;
//   * dots move through a crossing up to a correction with one fewer crossing.

namespace {

struct MonoKey {
    int op;  // 0: psi_r, 1: y_u
    int idx;
    Mono m;
    friend bool operator<(const MonoKey& a, const MonoKey& b) {
        return std::tie(a.op, a.idx, a.m) < std::tie(b.op, b.idx, b.m);
    }
};

thread_local std::map<MonoKey, Elem> g_cache;

Elem lmul_psi_mono(int r, const Mono& m);
Elem lmul_y_mono(int u, const Mono& m);

Elem lmul_psi_elem(int r, const Elem& e) {
    Elem out;
    for (auto& [m, c] : e.terms) {
        Elem t = lmul_psi_mono(r, m);
        t *= c;
        out += t;
    }
    return out;
}

Elem lmul_y_elem(int u, const Elem& e) {
    Elem out;
    for (auto& [m, c] : e.terms) {
        Elem t = lmul_y_mono(u, m);
        t *= c;
        out += t;
    }
    return out;
}

Elem psi_rw_tail(const std::vector<int>& A, const std::vector<int>& ys, const Word& idem);

// Precondition: A is a reduced word, t a left descent of perm(A).
// Returns (A2, X) with A2 a reduced word of the same permutation, A2[0] == t,
// and psi_A tail = psi_{A2} tail + X.
std::pair<std::vector<int>, Elem> front_nf(const std::vector<int>& A, int t,
                                           const std::vector<int>& ys, const Word& idem) {
    int d = (int)idem.size();
    if (A.empty()) throw std::logic_error("front_nf: empty word");
    int a = A[0];
    if (a == t) return {A, Elem()};
    std::vector<int> A1(A.begin() + 1, A.end());
    auto [B, X1] = front_nf(A1, t, ys, idem);
    Elem aX1 = lmul_psi_elem(a, X1);
    if (a - t > 1 || t - a > 1) {
        std::vector<int> W;
        W.push_back(t);
        W.push_back(a);
        W.insert(W.end(), B.begin() + 1, B.end());
        return {W, aX1};
    }
    // |a - t| == 1: current word is (a, t) ++ B[1:]; bring a to the front of
    // B[1:], then apply the braid move at the front.
    std::vector<int> B1(B.begin() + 1, B.end());
    auto [Cc, X2] = front_nf(B1, a, ys, idem);
    Elem inner = lmul_psi_elem(a, lmul_psi_elem(t, X2));
    inner += aX1;
    std::vector<int> Cc1(Cc.begin() + 1, Cc.end());
    // idempotent word directly under the braid site
    Word j = act_word(perm_of_word(Cc1, d), idem);
    int r0 = std::min(a, t);  // strands r0, r0+1, r0+2 (1-based letters below)
    Elem bc;
    int j1 = j[r0 - 1], j2 = j[r0], j3 = j[r0 + 1];
    if (j3 == j1 && (j2 - j1 == 1 || j1 - j2 == 1)) {
        int e = j2 - j1;  // eps_{j_{r0}, j_{r0+1}}
        int sign = (a > t) ? 1 : -1;
        bc = psi_rw_tail(Cc1, ys, idem);
        bc *= sign * e;
    }
    std::vector<int> W;
    W.push_back(t);
    W.push_back(a);
    W.push_back(t);
    W.insert(W.end(), Cc1.begin(), Cc1.end());
    inner += bc;
    return {W, inner};
}

// Normal form of psi_A y^{ys} 1_{idem} for a reduced word A.
Elem psi_rw_tail(const std::vector<int>& A, const std::vector<int>& ys, const Word& idem) {
    int d = (int)idem.size();
    if (A.empty()) return Elem(Mono(Perm::identity(d), ys, idem));
    Perm w = perm_of_word(A, d);
    std::vector<int> C = canonical_word(w);
    if (A == C) return Elem(Mono(w, ys, idem));
    int t = C[0];
    auto [A2, corr] = front_nf(A, t, ys, idem);
    std::vector<int> A21(A2.begin() + 1, A2.end());
    Elem T = psi_rw_tail(A21, ys, idem);
    // Leading monomial of T is the canonical monomial of s_t w with tail
    // (ys, idem); psi_t times it is the canonical monomial of w for free.
    Mono lead(w.lmul_s(t), ys, idem);
    mpz_class lc = T.coeff(lead);
    if (lc != 1) throw std::logic_error("psi_rw_tail: leading coefficient != 1");
    T -= Elem(lead);
    Elem res(Mono(w, ys, idem));
    res += lmul_psi_elem(t, T);
    res += corr;
    return res;
}

Elem lmul_y_mono_impl(int u, const Mono& m) {
    int d = m.d();
    if (u < 1 || u > d) throw std::invalid_argument("lmul_y: index");
    if (m.w.is_identity()) {
        Mono out = m;
        out.ys[u - 1] += 1;
        return Elem(out);
    }
    std::vector<int> C = canonical_word(m.w);
    int t = C[0];
    Perm w2 = m.w.lmul_s(t);
    Mono m2(w2, m.ys, m.idem);
    int su = (u == t) ? t + 1 : (u == t + 1) ? t : u;
    Elem E = lmul_y_mono(su, m2);
    // the dot of the main term sinks to the bottom position w2^{-1}(su)
    int bot = w2.inverse()(su);
    Mono lead(w2, m.ys, m.idem);
    lead.ys[bot - 1] += 1;
    mpz_class lc = E.coeff(lead);
    if (lc != 1) throw std::logic_error("lmul_y: leading coefficient != 1");
    E -= Elem(lead);
    Mono main(m.w, m.ys, m.idem);
    main.ys[bot - 1] += 1;
    Elem res(main);
    res += lmul_psi_elem(t, E);
    // y_u psi_t 1_j = psi_t y_{s_t(u)} 1_j - delta_{j_t, j_{t+1}} ([u=t]-[u=t+1]) 1_j
    Word j = act_word(w2, m.idem);
    if (j[t - 1] == j[t] && (u == t || u == t + 1)) {
        int c = (u == t) ? -1 : 1;
        Elem corr(m2);
        corr *= c;
        res += corr;
    }
    return res;
}

Elem lmul_psi_mono_impl(int r, const Mono& m) {
    int d = m.d();
    if (r < 1 || r >= d) throw std::invalid_argument("lmul_psi: index");
    const Perm& w = m.w;
    std::vector<int> C = canonical_word(w);
    if (!w.left_descent(r)) {
        // ascent: straighten the reduced word (r) ++ C
        std::vector<int> A;
        A.push_back(r);
        A.insert(A.end(), C.begin(), C.end());
        return psi_rw_tail(A, m.ys, m.idem);
    }
    // descent: psi_r psi_r cancellation via the quadratic relation
    Perm v = w.lmul_s(r);
    std::vector<int> A;
    A.push_back(r);
    auto cv = canonical_word(v);
    A.insert(A.end(), cv.begin(), cv.end());
    Elem E = psi_rw_tail(A, m.ys, m.idem);  // = mono(m) + X
    Elem X = E;
    X -= Elem(Mono(w, m.ys, m.idem));
    // psi_r . m = psi_r^2 (psi_v tail) - psi_r . X
    Mono mv(v, m.ys, m.idem);
    Word j = act_word(v, m.idem);
    Elem quad;
    int a = j[r - 1], b = j[r];
    if (a == b) {
        // zero
    } else if (a - b == 1 || b - a == 1) {
        quad = lmul_y_mono(r, mv);
        quad -= lmul_y_mono(r + 1, mv);
        quad *= eps(a, b);
    } else {
        quad = Elem(mv);
    }
    quad -= lmul_psi_elem(r, X);
    return quad;
}

Elem lmul_psi_mono(int r, const Mono& m) {
    MonoKey key{0, r, m};
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    Elem res = lmul_psi_mono_impl(r, m);
    g_cache.emplace(std::move(key), res);
    return res;
}

Elem lmul_y_mono(int u, const Mono& m) {
    MonoKey key{1, u, m};
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return it->second;
    Elem res = lmul_y_mono_impl(u, m);
    g_cache.emplace(std::move(key), res);
    return res;
}

}  // namespace

Elem lmul_y(int u, const Elem& e) { return lmul_y_elem(u, e); }
Elem lmul_psi(int r, const Elem& e) { return lmul_psi_elem(r, e); }

Elem psi_word_tail(const std::vector<int>& word, const std::vector<int>& ys, const Word& i) {
    int d = (int)i.size();
    if (!is_reduced_word(word, d)) throw std::invalid_argument("psi_word: word not reduced");
    return psi_rw_tail(word, ys, i);
}

Elem psi_word_elem(const std::vector<int>& word, const Word& i) {
    return psi_word_tail(word, std::vector<int>(i.size(), 0), i);
}

Elem klr_mul(const Elem& a, const Elem& b) {
    Elem out;
    for (auto& [ma, ca] : a.terms) {
        // filter by matching idempotents: 1_{ma.idem} . b
        Elem cur = lmul_idem(ma.idem, b);
        if (cur.is_zero()) continue;
        for (int u = 1; u <= ma.d(); ++u)
            for (int k = 0; k < ma.ys[u - 1]; ++k) cur = lmul_y_elem(u, cur);
        auto cw = canonical_word(ma.w);
        for (auto it = cw.rbegin(); it != cw.rend(); ++it) cur = lmul_psi_elem(*it, cur);
        cur *= ca;
        out += cur;
    }
    return out;
}

Mono hconcat(const Mono& a, const Mono& b) {
    Perm w = block_diag({a.w, b.w});
    std::vector<int> ys = a.ys;
    ys.insert(ys.end(), b.ys.begin(), b.ys.end());
    Word idem = a.idem;
    idem.insert(idem.end(), b.idem.begin(), b.idem.end());
    return Mono(w, ys, idem);
}

Elem hconcat(const Elem& a, const Elem& b) {
    Elem out;
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) out.add(hconcat(ma, mb), ca * cb);
    return out;
}

Mono divided_idem(const DividedWord& dw) {
    Mono acc(Perm::identity(0), {}, {});
    for (auto& [i, dk] : dw.parts) {
        std::vector<int> ys(dk);
        for (int r = 1; r <= dk; ++r) ys[r - 1] = r - 1;
        Mono part(longest_perm(dk), ys, Word(dk, i));
        acc = hconcat(acc, part);
    }
    return acc;
}

Elem divided_idem_prime(Vertex i, int d) {
    // y_{0,d} psi_{w_{0,d}} 1_{i^d}
    Elem e = psi_w_elem(longest_perm(d), Word(d, i));
    for (int r = 1; r <= d; ++r)
        for (int k = 0; k < r - 1; ++k) e = lmul_y(r, e);
    return e;
}

std::vector<Mono> graded_basis(const Word& from, const Word& to, int degree) {
    int d = (int)from.size();
    if ((int)to.size() != d) throw std::invalid_argument("graded_basis: size");
    std::vector<Mono> out;
    // enumerate w with w . from = to: bijections between equal-letter positions
    std::map<Vertex, std::vector<int>> pos_from, pos_to;
    for (int p = 1; p <= d; ++p) pos_from[from[p - 1]].push_back(p);
    for (int p = 1; p <= d; ++p) pos_to[to[p - 1]].push_back(p);
    if (pos_from.size() != pos_to.size()) return out;
    for (auto& [v, ps] : pos_from) {
        auto it = pos_to.find(v);
        if (it == pos_to.end() || it->second.size() != ps.size()) return out;
    }
    // backtracking over per-letter assignments
    std::vector<int> img(d, 0);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (auto& [v, ps] : pos_from) groups.push_back({ps, pos_to[v]});
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            Perm w = Perm(img);
            int wdeg = 0;
            for (int p = 1; p <= d; ++p)
                for (int q = p + 1; q <= d; ++q)
                    if (w(p) > w(q)) wdeg -= cartan(from[p - 1], from[q - 1]);
            int rem = degree - wdeg;
            if (rem < 0 || rem % 2) return;
            int tot = rem / 2;
            // compositions of tot into d parts
            std::vector<int> ys(d, 0);
            std::function<void(int, int)> comp = [&](int idx, int left) {
                if (idx == d - 1) {
                    ys[idx] = left;
                    out.push_back(Mono(w, ys, from));
                    return;
                }
                for (int k = 0; k <= left; ++k) {
                    ys[idx] = k;
                    comp(idx + 1, left - k);
                }
            };
            comp(0, tot);
            return;
        }
        auto& [src, tgt] = groups[g];
        std::vector<int> t = tgt;
        std::sort(t.begin(), t.end());
        do {
            for (std::size_t k = 0; k < src.size(); ++k) img[src[k] - 1] = t[k];
            rec(g + 1);
        } while (std::next_permutation(t.begin(), t.end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t engine_cache_size() { return g_cache.size(); }
void engine_cache_clear() { g_cache.clear(); }

}  // namespace klrcalc
