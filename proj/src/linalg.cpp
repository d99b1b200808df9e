#include "klrcalc/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace klrcalc {

void SparseMat::add(int r, int c, const mpz_class& v) {
    assert(c >= 0 && c < ncols);
    if (v == 0) return;
    if (r >= (int)rows.size()) rows.resize(r + 1);
    auto& row = rows[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

long rank_q(const SparseMat& m) {
    // Sparse Gaussian elimination over Q; pick the shortest remaining row
    // each step to limit fill-in.
    std::vector<std::map<int, mpq_class>> rows;
    for (auto& r : m.rows) {
        if (r.empty()) continue;
        std::map<int, mpq_class> q;
        for (auto& [c, v] : r) q.emplace(c, mpq_class(v));
        rows.push_back(std::move(q));
    }
    long rank = 0;
    while (!rows.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (rows[k].size() < rows[best].size()) best = k;
        auto piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        ++rank;
        int pc = piv.begin()->first;
        mpq_class pv = piv.begin()->second;
        std::vector<std::map<int, mpq_class>> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            auto it = r.find(pc);
            if (it != r.end()) {
                mpq_class f = it->second / pv;
                for (auto& [c, v] : piv) {
                    auto jt = r.find(c);
                    if (jt == r.end()) {
                        r.emplace(c, -f * v);
                    } else {
                        jt->second -= f * v;
                        if (jt->second == 0) r.erase(jt);
                    }
                }
            }
            if (!r.empty()) next.push_back(std::move(r));
        }
        rows = std::move(next);
    }
    return rank;
}

long rank_fp(const SparseMat& m, int p) {
    assert(p >= 2);
    auto inv_mod = [&](long a) {
        // extended Euclid
        long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
        while (nr != 0) {
            long q = r / nr;
            long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        assert(r == 1);
        return ((t % p) + p) % p;
    };
    std::vector<std::map<int, long>> rows;
    for (auto& r : m.rows) {
        std::map<int, long> q;
        for (auto& [c, v] : r) {
            long x = mpz_class(v % p).get_si();
            x = ((x % p) + p) % p;
            if (x) q.emplace(c, x);
        }
        if (!q.empty()) rows.push_back(std::move(q));
    }
    long rank = 0;
    while (!rows.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < rows.size(); ++k)
            if (rows[k].size() < rows[best].size()) best = k;
        auto piv = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        ++rank;
        int pc = piv.begin()->first;
        long pinv = inv_mod(piv.begin()->second);
        std::vector<std::map<int, long>> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            auto it = r.find(pc);
            if (it != r.end()) {
                long f = (it->second * pinv) % p;
                for (auto& [c, v] : piv) {
                    auto jt = r.find(c);
                    long sub = (f * v) % p;
                    if (jt == r.end()) {
                        if (sub) r.emplace(c, p - sub);
                    } else {
                        jt->second = ((jt->second - sub) % p + p) % p;
                        if (jt->second == 0) r.erase(jt);
                    }
                }
            }
            if (!r.empty()) next.push_back(std::move(r));
        }
        rows = std::move(next);
    }
    return rank;
}

int zm_rows(const ZMat& a) { return (int)a.size(); }
int zm_cols(const ZMat& a) { return a.empty() ? 0 : (int)a[0].size(); }

ZMat zm_mul(const ZMat& a, const ZMat& b) {
    int n = zm_rows(a), k = zm_cols(a), m = zm_cols(b);
    assert(k == zm_rows(b) || (k == 0 && zm_rows(b) == 0));
    ZMat out(n, std::vector<mpz_class>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < m; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

namespace {

// Column Hermite reduction of a in place; if u is non-null it starts as the
// identity and receives the same column operations, so a_in * u = result.
void hnf_col_inplace(ZMat& a, ZMat* u, int& rank_out) {
    int n = zm_rows(a), m = zm_cols(a);
    if (u) {
        u->assign(m, std::vector<mpz_class>(m, 0));
        for (int j = 0; j < m; ++j) (*u)[j][j] = 1;
    }
    auto col_axpy = [&](int dst, int src, const mpz_class& q) {
        // col_dst -= q * col_src
        if (q == 0) return;
        for (int i = 0; i < n; ++i) a[i][dst] -= q * a[i][src];
        if (u)
            for (int i = 0; i < m; ++i) (*u)[i][dst] -= q * (*u)[i][src];
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int i = 0; i < n; ++i) std::swap(a[i][x], a[i][y]);
        if (u)
            for (int i = 0; i < m; ++i) std::swap((*u)[i][x], (*u)[i][y]);
    };
    auto col_neg = [&](int x) {
        for (int i = 0; i < n; ++i) a[i][x] = -a[i][x];
        if (u)
            for (int i = 0; i < m; ++i) (*u)[i][x] = -(*u)[i][x];
    };
    int k = 0;
    for (int r = 0; r < n && k < m; ++r) {
        for (;;) {
            int c_min = -1;
            int live = 0;
            for (int c = k; c < m; ++c)
                if (a[r][c] != 0) {
                    ++live;
                    if (c_min < 0 || abs(a[r][c]) < abs(a[r][c_min])) c_min = c;
                }
            if (live == 0) break;
            if (live == 1) {
                col_swap(k, c_min);
                if (a[r][k] < 0) col_neg(k);
                for (int j = 0; j < k; ++j) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), a[r][j].get_mpz_t(),
                               a[r][k].get_mpz_t());
                    col_axpy(j, k, q);
                }
                ++k;
                break;
            }
            for (int c = k; c < m; ++c) {
                if (c == c_min || a[r][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(),
                           a[r][c_min].get_mpz_t());
                col_axpy(c, c_min, q);
            }
        }
    }
    rank_out = k;
}

}  // namespace

ZMat hnf_col_basis(const ZMat& a) {
    ZMat h = a;
    int rank = 0;
    hnf_col_inplace(h, nullptr, rank);
    int n = zm_rows(h);
    ZMat out(n, std::vector<mpz_class>(rank, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < rank; ++j) out[i][j] = h[i][j];
    return out;
}

ZMat z_kernel(const ZMat& a) {
    ZMat h = a;
    ZMat u;
    int rank = 0;
    hnf_col_inplace(h, &u, rank);
    int m = zm_cols(a);
    ZMat out(m, std::vector<mpz_class>(m - rank, 0));
    for (int i = 0; i < m; ++i)
        for (int j = rank; j < m; ++j) out[i][j - rank] = u[i][j];
    return out;
}

std::vector<mpz_class> snf_invariants(ZMat a) {
    int n = zm_rows(a), m = zm_cols(a);
    std::vector<mpz_class> inv;
    int t = 0;  // current pivot position
    while (t < n && t < m) {
        // find smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j)
                if (a[i][j] != 0 &&
                    (pi < 0 || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        for (int j = 0; j < m; ++j) std::swap(a[t][j], a[pi][j]);
        for (int i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            if (a[i][t] == 0) continue;
            mpz_class q = a[i][t] / a[t][t];
            for (int j = t; j < m; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            if (a[t][j] == 0) continue;
            mpz_class q = a[t][j] / a[t][t];
            for (int i = t; i < n; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; redo the step
        // pivot must divide every remaining entry
        bool divides = true;
        for (int i = t + 1; i < n && divides; ++i)
            for (int j = t + 1; j < m; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    // fold row i into row t to shrink the pivot
                    for (int jj = t; jj < m; ++jj) a[t][jj] += a[i][jj];
                    divides = false;
                    break;
                }
        if (!divides) continue;
        if (a[t][t] < 0) a[t][t] = -a[t][t];
        inv.push_back(a[t][t]);
        ++t;
    }
    return inv;
}

bool solve_columns(const ZMat& basis, const std::vector<mpz_class>& v,
                   std::vector<mpq_class>& x) {
    int n = zm_rows(basis), m = zm_cols(basis);
    assert((int)v.size() == n);
    // augmented rational elimination
    std::vector<std::vector<mpq_class>> aug(n,
                                            std::vector<mpq_class>(m + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug[i][j] = mpq_class(basis[i][j]);
        aug[i][m] = mpq_class(v[i]);
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (aug[i][col] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(aug[row], aug[pr]);
        mpq_class pv = aug[row][col];
        for (int j = col; j <= m; ++j) aug[row][j] /= pv;
        for (int i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            mpq_class f = aug[i][col];
            for (int j = col; j <= m; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < n; ++i)
        if (aug[i][m] != 0) return false;
    x.assign(m, 0);
    for (int i = 0; i < (int)pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][m];
    return true;
}

}  // namespace klrcalc
