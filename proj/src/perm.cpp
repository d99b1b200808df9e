#include "klrcalc/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace klrcalc {

Perm::Perm(std::vector<int> images) : img(std::move(images)) {
    std::vector<char> seen(img.size(), 0);
    for (int v : img) {
        if (v < 1 || v > (int)img.size() || seen[v - 1])
            throw std::invalid_argument("Perm: not a bijection on [1,d]");
        seen[v - 1] = 1;
    }
}

Perm Perm::identity(int d) {
    Perm p;
    p.img.resize(d);
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
}

bool Perm::is_identity() const {
    for (int r = 1; r <= d(); ++r)
        if (img[r - 1] != r) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm p;
    p.img.resize(img.size());
    for (int r = 1; r <= d(); ++r) p.img[img[r - 1] - 1] = r;
    return p;
}

Perm operator*(const Perm& w, const Perm& v) {
    if (w.d() != v.d()) throw std::invalid_argument("Perm: size mismatch");
    Perm p;
    p.img.resize(w.img.size());
    for (int r = 1; r <= w.d(); ++r) p.img[r - 1] = w(v(r));
    return p;
}

int Perm::length() const {
    int n = 0;
    for (int p = 1; p <= d(); ++p)
        for (int q = p + 1; q <= d(); ++q)
            if (img[p - 1] > img[q - 1]) ++n;
    return n;
}

bool Perm::left_descent(int r) const {
    // l(s_r w) < l(w) iff w^{-1}(r) > w^{-1}(r+1); equivalently r+1 occurs
    // before r in the image sequence.
    for (int v : img) {
        if (v == r) return false;
        if (v == r + 1) return true;
    }
    throw std::invalid_argument("left_descent: index out of range");
}

bool Perm::right_descent(int r) const {
    if (r < 1 || r >= d()) throw std::invalid_argument("right_descent: range");
    return img[r - 1] > img[r];
}

Perm Perm::lmul_s(int r) const {
    Perm p = *this;
    for (int& v : p.img) {
        if (v == r) v = r + 1;
        else if (v == r + 1) v = r;
    }
    return p;
}

Perm Perm::rmul_s(int r) const {
    Perm p = *this;
    std::swap(p.img[r - 1], p.img[r]);
    return p;
}

std::vector<int> canonical_word(const Perm& w) {
    std::vector<int> word;
    Perm cur = w;
    int len = cur.length();
    while (len > 0) {
        for (int r = 1; r < cur.d(); ++r) {
            if (cur.left_descent(r)) {
                word.push_back(r);
                cur = cur.lmul_s(r);
                --len;
                break;
            }
        }
    }
    return word;
}

Perm perm_of_word(const std::vector<int>& word, int d) {
    Perm p = Perm::identity(d);
    // s_{r_1} ... s_{r_l}: apply right-to-left on the identity = left-to-right
    // as position swaps from the right; build by right multiplication.
    for (int r : word) {
        if (r < 1 || r >= d) throw std::invalid_argument("perm_of_word: bad index");
        p = p.rmul_s(r);
    }
    return p;
}

bool is_reduced_word(const std::vector<int>& word, int d) {
    return perm_of_word(word, d).length() == (int)word.size();
}

Word act_word(const Perm& w, const Word& i) {
    if ((int)i.size() != w.d()) throw std::invalid_argument("act_word: size");
    Perm wi = w.inverse();
    Word out(i.size());
    for (int t = 1; t <= w.d(); ++t) out[t - 1] = i[wi(t) - 1];
    return out;
}

Perm longest_perm(int d) {
    Perm p;
    p.img.resize(d);
    for (int r = 1; r <= d; ++r) p.img[r - 1] = d + 1 - r;
    return p;
}

std::vector<std::pair<int, int>> Composition::blocks() const {
    std::vector<std::pair<int, int>> out;
    int pos = 1;
    for (int x : parts) {
        out.push_back({pos, pos + x - 1});  // empty block: end < start
        pos += x;
    }
    return out;
}

Perm parabolic_longest(const Composition& lambda) {
    Perm p = Perm::identity(lambda.sum());
    for (auto [s, e] : lambda.blocks())
        for (int r = s; r <= e; ++r) p.img[r - 1] = e + s - r;
    return p;
}

bool in_parabolic(const Perm& w, const Composition& lambda) {
    for (auto [s, e] : lambda.blocks())
        for (int r = s; r <= e; ++r)
            if (w(r) < s || w(r) > e) return false;
    return true;
}

bool is_right_min_rep(const Perm& w, const Composition& lambda) {
    for (auto [s, e] : lambda.blocks())
        for (int r = s; r < e; ++r)
            if (w(r) > w(r + 1)) return false;
    return true;
}

bool is_left_min_rep(const Perm& w, const Composition& mu) {
    return is_right_min_rep(w.inverse(), mu);
}

namespace {
void gen_perms(int d, const std::function<bool(const Perm&)>& keep,
               std::vector<Perm>& out) {
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 1);
    do {
        Perm p;
        p.img = img;
        if (keep(p)) out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
}
}  // namespace

std::vector<Perm> right_min_reps(const Composition& lambda) {
    std::vector<Perm> out;
    gen_perms(lambda.sum(), [&](const Perm& p) { return is_right_min_rep(p, lambda); }, out);
    return out;
}

std::vector<Perm> left_min_reps(const Composition& mu) {
    std::vector<Perm> out;
    gen_perms(mu.sum(), [&](const Perm& p) { return is_left_min_rep(p, mu); }, out);
    return out;
}

std::vector<Perm> double_min_reps(const Composition& mu, const Composition& lambda) {
    if (mu.sum() != lambda.sum()) throw std::invalid_argument("double_min_reps: size");
    std::vector<Perm> out;
    gen_perms(mu.sum(),
              [&](const Perm& p) {
                  return is_left_min_rep(p, mu) && is_right_min_rep(p, lambda);
              },
              out);
    return out;
}

std::pair<Perm, Perm> right_parabolic_decompose(const Perm& w, const Composition& lambda) {
    // y sorts w within each lambda-block; x = w y^{-1} is the min rep.
    int d = w.d();
    Perm y = Perm::identity(d);
    for (auto [s, e] : lambda.blocks()) {
        std::vector<int> idx;
        for (int r = s; r <= e; ++r) idx.push_back(r);
        std::sort(idx.begin(), idx.end(), [&](int p, int q) { return w(p) < w(q); });
        // y maps block position s+k-1... want x = w * y^{-1} increasing on block:
        // x(s + k) = w(idx[k]); so y^{-1}(s + k) = idx[k], i.e. y(idx[k]) = s + k.
        for (int k = 0; k < (int)idx.size(); ++k) y.img[idx[k] - 1] = s + k;
    }
    Perm x = w * y.inverse();
    if (x.length() + y.length() != w.length())
        throw std::logic_error("right_parabolic_decompose: length not additive");
    return {x, y};
}

std::pair<Perm, Perm> left_parabolic_decompose(const Perm& w, const Composition& mu) {
    auto [xi, yi] = right_parabolic_decompose(w.inverse(), mu);
    return {yi.inverse(), xi.inverse()};  // w = y . x
}

std::pair<Perm, Perm> double_parabolic_decompose(const Perm& w, const Composition& mu,
                                                 const Composition& lambda) {
    if (!is_left_min_rep(w, mu))
        throw std::invalid_argument("double_parabolic_decompose: w not in ^mu D");
    auto [x, y] = right_parabolic_decompose(w, lambda);
    if (!is_left_min_rep(x, mu) || !is_right_min_rep(x, lambda))
        throw std::logic_error("double_parabolic_decompose: x not a double min rep");
    return {x, y};
}

Perm cycle_perm(int t, int r, int d) {
    if (!(1 <= r && r < t && t <= d)) throw std::invalid_argument("cycle_perm: need 1<=r<t<=d");
    Perm p = Perm::identity(d);
    // the cycle (t, t-1, ..., r): u maps to u-1 for r < u <= t, and r to t.
    p.img[r - 1] = t;
    for (int u = r + 1; u <= t; ++u) p.img[u - 1] = u - 1;
    return p;
}

std::vector<int> cycle_word(int t, int r) {
    if (r >= t) throw std::invalid_argument("cycle_word: need r < t");
    std::vector<int> w;
    for (int s = t - 1; s >= r; --s) w.push_back(s);
    return w;
}

Perm increasing_bijection(const std::vector<std::vector<int>>& sources,
                          const std::vector<std::vector<int>>& targets) {
    if (sources.size() != targets.size())
        throw std::invalid_argument("increasing_bijection: family count mismatch");
    std::size_t d = 0;
    for (auto& s : sources) d += s.size();
    std::vector<int> img(d, 0);
    std::vector<char> seen(d, 0);
    for (std::size_t k = 0; k < sources.size(); ++k) {
        auto src = sources[k], tgt = targets[k];
        if (src.size() != tgt.size())
            throw std::invalid_argument("increasing_bijection: set size mismatch");
        std::sort(src.begin(), src.end());
        std::sort(tgt.begin(), tgt.end());
        for (std::size_t j = 0; j < src.size(); ++j) {
            int p = src[j], q = tgt[j];
            if (p < 1 || p > (int)d || q < 1 || q > (int)d || img[p - 1] || seen[q - 1])
                throw std::invalid_argument("increasing_bijection: not a partition of [1,d]");
            img[p - 1] = q;
            seen[q - 1] = 1;
        }
    }
    return Perm(img);
}

Perm block_diag(const std::vector<Perm>& factors) {
    std::vector<int> img;
    int off = 0;
    for (const Perm& f : factors) {
        for (int r = 1; r <= f.d(); ++r) img.push_back(off + f(r));
        off += f.d();
    }
    return Perm(img);
}

bool is_fully_commutative(const Perm& w) {
    // 321-avoiding (Billey-Jockusch-Stanley).
    int d = w.d();
    for (int p = 1; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q)
            for (int r = q + 1; r <= d; ++r)
                if (w(p) > w(q) && w(q) > w(r)) return false;
    return true;
}

namespace {
void all_rw_rec(const Perm& cur, std::vector<int>& acc,
                std::vector<std::vector<int>>& out) {
    if (cur.is_identity()) {
        out.push_back(acc);
        return;
    }
    for (int r = 1; r < cur.d(); ++r) {
        if (cur.left_descent(r)) {
            acc.push_back(r);
            all_rw_rec(cur.lmul_s(r), acc, out);
            acc.pop_back();
        }
    }
}
}  // namespace

std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    all_rw_rec(w, acc, out);
    return out;
}

}  // namespace klrcalc
