#include "klrcalc/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrcalc {

Lambda::Lambda(int a_, int b_, int m_, std::vector<int> p)
    : a(a_), b(b_), m(m_), parts(std::move(p)) {
    if (b < a - 1) throw std::invalid_argument("Lambda: b < a - 1");
    if (m < 1) throw std::invalid_argument("Lambda: m < 1");
    if ((int)parts.size() != b - a + 1)
        throw std::invalid_argument("Lambda: wrong number of parts");
    for (int x : parts)
        if (x < 0 || x > m) throw std::invalid_argument("Lambda: part out of range");
}

Lambda Lambda::zero(int a_, int b_, int m_) {
    return Lambda(a_, b_, m_, std::vector<int>(std::max(0, b_ - a_ + 1), 0));
}

int Lambda::n() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

Lambda Lambda::plus(int i) const {
    if (at(i) >= m) throw std::invalid_argument("Lambda::plus: part already maximal");
    Lambda t = *this;
    ++t.parts[i - a];
    return t;
}

int s_shift(const Lambda& la) {
    int sq = 0;
    for (int x : la.parts) sq += x * x;
    return -la.l() * la.m * (la.m - 1) / 2 + (la.m + 1) * la.n() - sq;
}

Word j_word(const Lambda& la) {
    Word w;
    for (int i = la.a; i <= la.b; ++i) w.insert(w.end(), la.m - la.at(i), i);
    w.insert(w.end(), la.m, la.b + 1);
    for (int i = la.b; i >= la.a; --i) w.insert(w.end(), la.at(i), i);
    return w;
}

DividedWord i_divided(const Lambda& la) {
    DividedWord t;
    for (int i = la.a; i <= la.b; ++i)
        if (la.at(i) < la.m) t.parts.push_back({i, la.m - la.at(i)});
    t.parts.push_back({la.b + 1, la.m});
    for (int i = la.b; i >= la.a; --i)
        if (la.at(i) > 0) t.parts.push_back({i, la.at(i)});
    return t;
}

Composition omega(const Lambda& la) {
    std::vector<int> p;
    for (int i = la.a; i <= la.b; ++i) p.push_back(la.m - la.at(i));
    p.push_back(la.m);
    for (int i = la.b; i >= la.a; --i) p.push_back(la.at(i));
    return Composition(std::move(p));
}

Perm w0_lambda(const Lambda& la) { return parabolic_longest(omega(la)); }

std::vector<int> Interval::list() const {
    std::vector<int> v;
    for (int p = lo; p <= hi; ++p) v.push_back(p);
    return v;
}

int r_minus(const Lambda& la, int i) {
    if (i < la.a - 1 || i > la.b) throw std::invalid_argument("r_minus: bad index");
    int s = 0;
    for (int j = la.a; j <= i; ++j) s += la.m - la.at(j);
    return s;
}

int r_plus(const Lambda& la, int i) {
    if (i < la.a || i > la.b + 1) throw std::invalid_argument("r_plus: bad index");
    int s = la.d();
    for (int j = la.a; j < i; ++j) s -= la.at(j);
    return s;
}

Interval U_minus(const Lambda& la, int i) {
    return {r_minus(la, i - 1) + 1, r_minus(la, i)};
}

Interval U_plus(const Lambda& la, int i) {
    return {r_plus(la, i + 1) + 1, r_plus(la, i)};
}

Interval U_top(const Lambda& la) {
    int r = r_plus(la, la.b + 1);
    return {r - la.m + 1, r};
}

int sgn_lambda(const Lambda& la, int i) {
    int s = 0;
    for (int j = la.a; j < i; ++j) s += la.at(j);
    return s % 2 == 0 ? 1 : -1;
}

int tau_lambda(const Lambda& la) {
    int s = 0;
    for (int x : la.parts) s += x * (x - 1) / 2;
    return s % 2 == 0 ? 1 : -1;
}

std::vector<Lambda> lambda_level(int a, int b, int m, int n) {
    std::vector<Lambda> out;
    std::vector<int> cur(std::max(0, b - a + 1), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == (int)cur.size()) {
            if (rest == 0) out.push_back(Lambda(a, b, m, cur));
            return;
        }
        for (int v = 0; v <= std::min(m, rest); ++v) {
            cur[pos] = v;
            self(self, pos + 1, rest - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, n);
    return out;
}

std::vector<int> cycle_letters(const Lambda& la, int i) {
    int t = r_plus(la.plus(i), i);
    int r = r_minus(la, i);
    if (r > t) throw std::logic_error("cycle_letters: inverted interval");
    return cycle_word(t, r);
}

namespace {

Elem lmul_psi_word(const std::vector<int>& word, Elem e) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = lmul_psi(*it, e);
    return e;
}

}  // namespace

Elem boundary_entry(const Lambda& mu, const Lambda& la) {
    if (mu.a != la.a || mu.b != la.b || mu.m != la.m || mu.n() != la.n() + 1)
        throw std::invalid_argument("boundary_entry: level mismatch");
    int hit = la.a - 1;
    for (int i = la.a; i <= la.b; ++i)
        if (la.at(i) < la.m && mu == la.plus(i)) {
            hit = i;
            break;
        }
    if (hit < la.a) return {};
    Elem x = lmul_psi_word(cycle_letters(la, hit), Elem(divided_idem(i_divided(la))));
    x = klr_mul(Elem(divided_idem(i_divided(mu))), x);
    return mpz_class(sgn_lambda(la, hit)) * x;
}

MultiComp::MultiComp(int a_, int b_, std::vector<std::vector<int>> r)
    : a(a_), b(b_), rows(std::move(r)) {
    if (b < a - 1) throw std::invalid_argument("MultiComp: b < a - 1");
    if (rows.empty()) throw std::invalid_argument("MultiComp: no rows");
    for (auto& row : rows) {
        if ((int)row.size() != b - a + 1)
            throw std::invalid_argument("MultiComp: wrong row length");
        for (int x : row)
            if (x != 0 && x != 1) throw std::invalid_argument("MultiComp: entry not 0/1");
    }
}

MultiComp MultiComp::zero(int a_, int b_, int m_) {
    return MultiComp(
        a_, b_,
        std::vector<std::vector<int>>(m_, std::vector<int>(std::max(0, b_ - a_ + 1), 0)));
}

int MultiComp::n() const {
    int s = 0;
    for (auto& row : rows)
        for (int x : row) s += x;
    return s;
}

Lambda MultiComp::row_lambda(int r) const { return Lambda(a, b, 1, rows[r - 1]); }

Lambda MultiComp::sum() const {
    std::vector<int> p(std::max(0, b - a + 1), 0);
    for (auto& row : rows)
        for (std::size_t k = 0; k < row.size(); ++k) p[k] += row[k];
    return Lambda(a, b, m(), std::move(p));
}

MultiComp MultiComp::plus(int r, int i) const {
    if (at(r, i) != 0) throw std::invalid_argument("MultiComp::plus: entry already 1");
    MultiComp t = *this;
    t.rows[r - 1][i - a] = 1;
    return t;
}

Word j_word(const MultiComp& de) {
    Word w;
    for (int r = 1; r <= de.m(); ++r) {
        Word part = j_word(de.row_lambda(r));
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

namespace {

std::vector<int> shifted_lists(const MultiComp& de, Interval (*f)(const Lambda&, int),
                               int i) {
    std::vector<int> out;
    int l = de.b + 2 - de.a;
    for (int r = 1; r <= de.m(); ++r)
        for (int u : f(de.row_lambda(r), i).list()) out.push_back(l * (r - 1) + u);
    return out;
}

}  // namespace

std::vector<int> U_minus_list(const MultiComp& de, int i) {
    return shifted_lists(de, &U_minus, i);
}

std::vector<int> U_plus_list(const MultiComp& de, int i) {
    return shifted_lists(de, &U_plus, i);
}

std::vector<int> U_top_list(const MultiComp& de) {
    std::vector<int> out;
    int l = de.b + 2 - de.a;
    for (int r = 1; r <= de.m(); ++r)
        for (int u : U_top(de.row_lambda(r)).list()) out.push_back(l * (r - 1) + u);
    return out;
}

int sgn_delta(const MultiComp& de, int r, int i) {
    int s = 0;
    for (int t = 1; t < r; ++t)
        for (int x : de.rows[t - 1]) s += x;
    for (int j = de.a; j < i; ++j) s += de.at(r, j);
    return s % 2 == 0 ? 1 : -1;
}

int t_delta(const MultiComp& de) {
    int t = 0;
    for (int r = 1; r < de.m(); ++r)
        for (int s = r + 1; s <= de.m(); ++s)
            for (int j = de.a; j <= de.b; ++j)
                for (int i = j + 1; i <= de.b; ++i) t += de.at(r, i) * de.at(s, j);
    return t;
}

int sigma_delta(const MultiComp& de) { return t_delta(de) % 2 == 0 ? 1 : -1; }

int tau_delta(const MultiComp& de) { return sigma_delta(de) * tau_lambda(de.sum()); }

std::vector<MultiComp> multicomp_level(int a, int b, int m, int n) {
    std::vector<std::vector<int>> row_choices;
    int len = std::max(0, b - a + 1);
    for (int mask = 0; mask < (1 << len); ++mask) {
        std::vector<int> row(len);
        for (int k = 0; k < len; ++k) row[k] = (mask >> k) & 1;
        row_choices.push_back(std::move(row));
    }
    std::sort(row_choices.begin(), row_choices.end());
    std::vector<MultiComp> out;
    std::vector<std::vector<int>> cur(m);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == m) {
            if (rest == 0) out.push_back(MultiComp(a, b, cur));
            return;
        }
        for (auto& row : row_choices) {
            int s = 0;
            for (int x : row) s += x;
            if (s > rest) continue;
            cur[pos] = row;
            self(self, pos + 1, rest - s);
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

MultiComp initial_pattern(const Lambda& la) {
    std::vector<std::vector<int>> rows(la.m, std::vector<int>(la.parts.size(), 0));
    for (int r = 1; r <= la.m; ++r)
        for (std::size_t k = 0; k < la.parts.size(); ++k)
            if (r > la.m - la.parts[k]) rows[r - 1][k] = 1;
    return MultiComp(la.a, la.b, std::move(rows));
}

Perm w_delta(const MultiComp& de) {
    Lambda la = de.sum();
    std::vector<std::vector<int>> sources, targets;
    for (int i = de.a; i <= de.b; ++i) {
        sources.push_back(U_minus_list(de, i));
        targets.push_back(U_minus(la, i).list());
        sources.push_back(U_plus_list(de, i));
        targets.push_back(U_plus(la, i).list());
    }
    sources.push_back(U_top_list(de));
    targets.push_back(U_top(la).list());
    return increasing_bijection(sources, targets);
}

Perm u_delta(const MultiComp& de) { return w_delta(de).inverse(); }

std::vector<int> q_cycle_letters(const MultiComp& de, int r, int i) {
    int off = (de.b + 2 - de.a) * (r - 1);
    std::vector<int> w = cycle_letters(de.row_lambda(r), i);
    for (int& x : w) x += off;
    return w;
}

Elem q_boundary_entry(const MultiComp& ga, const MultiComp& de) {
    if (ga.a != de.a || ga.b != de.b || ga.m() != de.m() || ga.n() != de.n() + 1)
        throw std::invalid_argument("q_boundary_entry: level mismatch");
    int hr = 0, hi = 0;
    for (int r = 1; r <= de.m() && hr == 0; ++r)
        for (int i = de.a; i <= de.b; ++i)
            if (de.at(r, i) == 0 && ga == de.plus(r, i)) {
                hr = r;
                hi = i;
                break;
            }
    if (hr == 0) return {};
    Elem x = lmul_psi_word(q_cycle_letters(de, hr, hi), idem_elem(j_word(de)));
    x = lmul_idem(j_word(ga), x);
    return mpz_class(sgn_delta(de, hr, hi)) * x;
}

Elem f_entry(const Lambda& la, const MultiComp& de) {
    if (de.sum() != la) return {};
    Perm w = w_delta(de);
    Elem x(Mono(w, std::vector<int>(la.d(), 0), j_word(de)));
    x = lmul_psi_word(canonical_word(w0_lambda(la)), std::move(x));
    x = klr_mul(Elem(divided_idem(i_divided(la))), x);
    return mpz_class(sigma_delta(de)) * x;
}

Elem g_entry(const MultiComp& de, const Lambda& la) {
    if (de.sum() != la) return {};
    Elem x(divided_idem(i_divided(la)));
    Interval top = U_top(la);
    for (int k = 1; k < la.m; ++k)
        for (int rep = 0; rep < k; ++rep) x = lmul_y(top.lo + k, x);
    x = lmul_psi_word(canonical_word(u_delta(de)), std::move(x));
    x = lmul_idem(j_word(de), x);
    return mpz_class(tau_delta(de)) * x;
}

namespace {

ProjComplex build_complex(int a, int b, int m, bool thin) {
    int l = b + 2 - a, d = l * m;
    ProjComplex c;
    if (thin) {
        std::vector<std::vector<MultiComp>> idx;
        for (int n = 0; n <= d - m; ++n) idx.push_back(multicomp_level(a, b, m, n));
        for (int n = 0; n <= d - m; ++n) {
            std::vector<Summand> lv;
            for (auto& de : idx[n])
                lv.push_back({n + m * (m - 1) / 2, DividedWord::plain(j_word(de))});
            c.levels.push_back(std::move(lv));
        }
        for (int n = 0; n + 1 <= d - m; ++n) {
            std::map<std::pair<int, int>, Elem> bd;
            for (int row = 0; row < (int)idx[n + 1].size(); ++row)
                for (int col = 0; col < (int)idx[n].size(); ++col) {
                    Elem e = q_boundary_entry(idx[n + 1][row], idx[n][col]);
                    if (!e.is_zero()) bd[{row, col}] = std::move(e);
                }
            c.boundaries.push_back(std::move(bd));
        }
    } else {
        std::vector<std::vector<Lambda>> idx;
        for (int n = 0; n <= d - m; ++n) idx.push_back(lambda_level(a, b, m, n));
        for (int n = 0; n <= d - m; ++n) {
            std::vector<Summand> lv;
            for (auto& la : idx[n]) lv.push_back({s_shift(la), i_divided(la)});
            c.levels.push_back(std::move(lv));
        }
        for (int n = 0; n + 1 <= d - m; ++n) {
            std::map<std::pair<int, int>, Elem> bd;
            for (int row = 0; row < (int)idx[n + 1].size(); ++row)
                for (int col = 0; col < (int)idx[n].size(); ++col) {
                    Elem e = boundary_entry(idx[n + 1][row], idx[n][col]);
                    if (!e.is_zero()) bd[{row, col}] = std::move(e);
                }
            c.boundaries.push_back(std::move(bd));
        }
    }
    return c;
}

}  // namespace

ProjComplex build_P_power(const Root& alpha, int m) {
    if (m < 1) throw std::invalid_argument("build_P_power: m < 1");
    return build_complex(alpha.lo, alpha.hi - 1, m, false);
}

ProjComplex build_Q(const Root& alpha, int m) {
    if (m < 1) throw std::invalid_argument("build_Q: m < 1");
    return build_complex(alpha.lo, alpha.hi - 1, m, true);
}

ProjComplex complex_product(const ProjComplex& c, const ProjComplex& d) {
    ProjComplex out;
    int lc = c.length(), ld = d.length();
    // flat index of summand (i, j) of C_p o D_{n-p} within level n
    auto offset = [&](int n, int p) {
        int off = 0;
        for (int pp = std::max(0, n - ld); pp < p; ++pp)
            off += (int)(c.levels[pp].size() * d.levels[n - pp].size());
        return off;
    };
    for (int n = 0; n <= lc + ld; ++n) {
        std::vector<Summand> lv;
        for (int p = std::max(0, n - ld); p <= std::min(n, lc); ++p)
            for (auto& sc : c.levels[p])
                for (auto& sd : d.levels[n - p]) {
                    DividedWord w = sc.idem;
                    w.parts.insert(w.parts.end(), sd.idem.parts.begin(),
                                   sd.idem.parts.end());
                    lv.push_back({sc.shift + sd.shift, std::move(w)});
                }
        out.levels.push_back(std::move(lv));
    }
    for (int n = 0; n + 1 <= lc + ld; ++n) {
        std::map<std::pair<int, int>, Elem> bd;
        for (int p = std::max(0, n + 1 - ld); p <= std::min(n + 1, lc); ++p) {
            int q = n + 1 - p;
            int roff = offset(n + 1, p);
            int nd = (int)d.levels[q].size();
            // x o d_D(y), mapping to (p, q-1)
            if (q >= 1) {
                int coff = offset(n, p);
                int ndc = (int)d.levels[q - 1].size();
                for (int i = 0; i < (int)c.levels[p].size(); ++i) {
                    Elem ei(divided_idem(c.levels[p][i].idem));
                    for (auto& [key, e] : d.boundaries[q - 1]) {
                        bd[{roff + i * nd + key.first, coff + i * ndc + key.second}] =
                            hconcat(ei, e);
                    }
                }
            }
            // (-1)^q d_C(x) o y, mapping to (p-1, q)
            if (p >= 1) {
                int coff = offset(n, p - 1);
                mpz_class sign(q % 2 == 0 ? 1 : -1);
                for (int j = 0; j < nd; ++j) {
                    Elem ej(divided_idem(d.levels[q][j].idem));
                    for (auto& [key, e] : c.boundaries[p - 1]) {
                        bd[{roff + key.first * nd + j, coff + key.second * nd + j}] =
                            sign * hconcat(e, ej);
                    }
                }
            }
        }
        out.boundaries.push_back(std::move(bd));
    }
    return out;
}

ProjComplex build_P_pi(const KostantPartition& pi) {
    pi.validate();
    if (pi.parts.empty()) {
        ProjComplex c;
        c.levels.push_back({Summand{0, DividedWord()}});
        return c;
    }
    ProjComplex acc = build_P_power(pi.parts[0].first, pi.parts[0].second);
    for (std::size_t k = 1; k < pi.parts.size(); ++k)
        acc = complex_product(acc,
                              build_P_power(pi.parts[k].first, pi.parts[k].second));
    return acc;
}

Perm z_perm(int l, int m, int r) {
    if (r < 1 || r >= m) throw std::invalid_argument("z_perm: bad block index");
    std::vector<int> img(l * m);
    for (int p = 1; p <= l * m; ++p) img[p - 1] = p;
    for (int k = 1; k <= l; ++k) {
        img[(r - 1) * l + k - 1] = r * l + k;
        img[r * l + k - 1] = (r - 1) * l + k;
    }
    return Perm(std::move(img));
}

Perm W0_perm(int l, int m) {
    Perm w = Perm::identity(l * m);
    for (int r : canonical_word(longest_perm(m))) w = w * z_perm(l, m, r);
    return w;
}

std::vector<int> Y0_exponents(int l, int m) {
    std::vector<int> ys(l * m, 0);
    for (int k = 1; k <= m; ++k) ys[k * l - 1] = k - 1;
    return ys;
}

Perm sorting_perm(const Root& alpha, int m) {
    int h = alpha.height();
    std::vector<int> img(h * m);
    for (int r = 1; r <= m; ++r)
        for (int c = 0; c < h; ++c) img[(r - 1) * h + c] = c * m + (m + 1 - r);
    return Perm(std::move(img));
}

ModElem standard_generator(const StdModule& pow) {
    std::vector<Perm> gs;
    for (auto& [alpha, m] : pow.groups()) gs.push_back(sorting_perm(alpha, m));
    Perm g = block_diag(gs);
    ModElem v = pow.from_algebra(
        Elem(Mono(g, std::vector<int>(pow.strands(), 0), pow.bottom_word())));
    return pow.rmul_e(v);
}

}  // namespace klrcalc
