#include "klrcalc/modules.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "klrcalc/linalg.hpp"

namespace klrcalc {

void ModElem::add(const CuspVec& v, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms.find(v);
    if (it == terms.end()) {
        terms.emplace(v, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

ModElem& ModElem::operator+=(const ModElem& o) {
    for (auto& [v, c] : o.terms) add(v, c);
    return *this;
}

ModElem& ModElem::operator-=(const ModElem& o) {
    for (auto& [v, c] : o.terms) add(v, -c);
    return *this;
}

ModElem& ModElem::operator*=(const mpz_class& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [v, k] : terms) k *= c;
    return *this;
}

std::string to_string(const CuspVec& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.w.img.size(); ++k)
        os << (k ? " " : "") << v.w.img[k];
    os << "|";
    for (std::size_t k = 0; k < v.exps.size(); ++k)
        os << (k ? " " : "") << v.exps[k];
    os << "]";
    return os.str();
}

std::string to_string(const ModElem& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, c] : e.terms) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*" << to_string(v);
    }
    return os.str();
}

namespace {

// Minimal right coset representatives D^{(d_1,...,d_N)}, enumerated directly
// as ordered set partitions of [1, d] with increasing blocks.
std::vector<Perm> min_reps(const std::vector<int>& sizes) {
    int d = 0;
    for (int s : sizes) d += s;
    std::vector<Perm> out;
    std::vector<int> img(d, 0);
    std::vector<int> avail(d);
    for (int i = 0; i < d; ++i) avail[i] = i + 1;
    // choose, block by block, an increasing subset of the remaining values
    std::function<void(std::size_t, std::vector<int>&, int)> rec =
        [&](std::size_t blk, std::vector<int>& rem, int pos) {
            if (blk == sizes.size()) {
                out.push_back(Perm(img));
                return;
            }
            int need = sizes[blk];
            std::vector<int> comb(need);
            std::function<void(int, int)> choose = [&](int from, int got) {
                if (got == need) {
                    std::vector<int> rest;
                    std::size_t ci = 0;
                    for (std::size_t k = 0; k < rem.size(); ++k) {
                        if (ci < comb.size() && (int)k == comb[ci]) {
                            img[pos + ci] = rem[k];
                            ++ci;
                        } else {
                            rest.push_back(rem[k]);
                        }
                    }
                    rec(blk + 1, rest, pos + need);
                    return;
                }
                for (int k = from; k <= (int)rem.size() - (need - got); ++k) {
                    comb[got] = k;
                    choose(k + 1, got + 1);
                }
            };
            if (need == 0) {
                rec(blk + 1, rem, pos);
            } else {
                choose(0, 0);
            }
        };
    rec(0, avail, 0);
    std::sort(out.begin(), out.end(),
              [](const Perm& a, const Perm& b) { return a.img < b.img; });
    return out;
}

void compositions_into(int total, int parts, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = 0; k <= total; ++k) {
        cur.push_back(k);
        compositions_into(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

struct StdModule::Cache {
    std::vector<Perm> reps;
    bool reps_done = false;
    std::map<CuspVec, Elem> alg;
    std::map<int, std::vector<CuspVec>> amb;
    std::map<std::pair<int, Word>, std::vector<ModElem>> pieces;
    std::map<CuspVec, ModElem> em_image;
};

StdModule::StdModule(std::vector<std::pair<Root, int>> groups)
    : groups_(std::move(groups)), cache_(std::make_shared<Cache>()) {
    if (groups_.empty()) throw std::invalid_argument("StdModule: no factors");
    std::vector<int> sizes;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        auto& [root, m] = groups_[g];
        if (m < 1) throw std::invalid_argument("StdModule: multiplicity < 1");
        for (int k = 0; k < m; ++k) {
            factors_.push_back(root);
            sizes.push_back(root.height());
            Word ia = i_alpha(root);
            jbot_.insert(jbot_.end(), ia.begin(), ia.end());
        }
        shift_ += m * (m - 1) / 2;
        if (m > 1) projected_ = true;
    }
    blocks_ = Composition(sizes);
}

const std::vector<Perm>& StdModule::coset_reps() const {
    if (!cache_->reps_done) {
        cache_->reps = min_reps(blocks_.parts);
        cache_->reps_done = true;
    }
    return cache_->reps;
}

int StdModule::vec_degree(const CuspVec& v) const {
    int s = 0;
    for (int k : v.exps) s += k;
    return mono_degree(Mono(v.w, std::vector<int>(strands(), 0), jbot_)) +
           2 * s;
}

Word StdModule::vec_word(const CuspVec& v) const {
    return act_word(v.w, jbot_);
}

const Elem& StdModule::to_algebra(const CuspVec& v) const {
    auto it = cache_->alg.find(v);
    if (it != cache_->alg.end()) return it->second;
    std::vector<int> ys(strands(), 0);
    auto blks = blocks_.blocks();
    for (std::size_t f = 0; f < v.exps.size(); ++f)
        ys[blks[f].first - 1] = v.exps[f];
    Elem e(Mono(Perm::identity(strands()), ys, jbot_));
    auto cw = canonical_word(v.w);
    for (auto r = cw.rbegin(); r != cw.rend(); ++r) e = lmul_psi(*r, e);
    return cache_->alg.emplace(v, std::move(e)).first->second;
}

ModElem StdModule::from_algebra(Elem z) const {
    // Coset-adapted conversion: repeatedly strip the term with the most
    // crossings via the adapted element psi_x (psi_y y^a 1); the parabolic
    // part acts factorwise and kills every cuspidal factor unless trivial.
    for (auto it = z.terms.begin(); it != z.terms.end();)
        it = it->first.idem != jbot_ ? z.terms.erase(it) : std::next(it);
    ModElem out;
    auto blks = blocks_.blocks();
    while (!z.is_zero()) {
        const Mono* lead = nullptr;
        int best = -1;
        for (auto& [m, c] : z.terms) {
            int len = m.w.length();
            if (len > best) {
                best = len;
                lead = &m;
            }
        }
        Mono m = *lead;
        mpz_class c = z.coeff(m);
        auto [x, y] = right_parabolic_decompose(m.w, blocks_);
        Elem b(Mono(y, m.ys, jbot_));
        auto cw = canonical_word(x);
        for (auto r = cw.rbegin(); r != cw.rend(); ++r) b = lmul_psi(*r, b);
        assert(b.coeff(m) == 1 && "adapted element is not unitriangular");
        b *= c;
        z -= b;
        if (y.is_identity()) {
            std::vector<int> exps(blks.size(), 0);
            for (std::size_t f = 0; f < blks.size(); ++f)
                for (int t = blks[f].first; t <= blks[f].second; ++t)
                    exps[f] += m.ys[t - 1];
            out.add(CuspVec{x, exps}, c);
        }
    }
    return out;
}

ModElem StdModule::act_idem(const Word& j, const ModElem& e) const {
    ModElem out;
    for (auto& [v, c] : e.terms)
        if (vec_word(v) == j) out.add(v, c);
    return out;
}

ModElem StdModule::act_y(int u, const ModElem& e) const {
    ModElem out;
    for (auto& [v, c] : e.terms) out += c * from_algebra(lmul_y(u, to_algebra(v)));
    return out;
}

ModElem StdModule::act_psi(int r, const ModElem& e) const {
    ModElem out;
    for (auto& [v, c] : e.terms)
        out += c * from_algebra(lmul_psi(r, to_algebra(v)));
    return out;
}

ModElem StdModule::act(const Elem& a, const ModElem& e) const {
    ModElem out;
    for (auto& [v, c] : e.terms)
        out += c * from_algebra(klr_mul(a, to_algebra(v)));
    return out;
}

namespace {

int group_first_factor(const std::vector<std::pair<Root, int>>& groups, int g) {
    int f = 0;
    for (int k = 0; k < g - 1; ++k) f += groups[k].second;
    return f;  // 0-based index of the group's first factor
}

}  // namespace

ModElem StdModule::rmul_x(const ModElem& e, int g, int t) const {
    auto& [root, m] = groups_[g - 1];
    (void)root;
    if (t < 1 || t > m) throw std::invalid_argument("rmul_x: bad factor index");
    int f = group_first_factor(groups_, g) + t - 1;
    ModElem out;
    for (auto& [v, c] : e.terms) {
        CuspVec v2 = v;
        v2.exps[f] += 1;
        out.add(v2, c);
    }
    return out;
}

ModElem StdModule::rmul_tau(const ModElem& e, int g, int u) const {
    auto& [root, m] = groups_[g - 1];
    if (u < 1 || u >= m) throw std::invalid_argument("rmul_tau: bad crossing");
    int l = root.height();
    int f = group_first_factor(groups_, g) + u - 1;
    auto blks = blocks_.blocks();
    int off = blks[f].first - 1;  // strands before the two swapped factors
    std::vector<int> img(strands());
    for (int i = 1; i <= strands(); ++i) img[i - 1] = i;
    for (int i = 1; i <= l; ++i) {
        img[off + i - 1] = off + i + l;
        img[off + l + i - 1] = off + i;
    }
    Elem zpsi(Mono(Perm(img), std::vector<int>(strands(), 0), jbot_));
    ModElem out;
    for (auto& [v, c] : e.terms)
        out += c * from_algebra(klr_mul(to_algebra(v), zpsi));
    return out;
}

ModElem StdModule::rmul_em(const ModElem& e, int g) const {
    // e_m is the image of y_{0,m} psi_{w_{0,m}} under the nil-Hecke
    // isomorphism; right multiplication composes left to right.
    int m = groups_[g - 1].second;
    if (m == 1) return e;
    ModElem cur = e;
    for (int t = 2; t <= m; ++t)
        for (int k = 0; k < t - 1; ++k) cur = rmul_x(cur, g, t);
    for (int r : canonical_word(longest_perm(m))) cur = rmul_tau(cur, g, r);
    return cur;
}

ModElem StdModule::rmul_e(const ModElem& e) const {
    ModElem cur = e;
    for (int g = 1; g <= (int)groups_.size(); ++g) cur = rmul_em(cur, g);
    return cur;
}

const std::vector<CuspVec>& StdModule::ambient_basis(int degree) const {
    auto it = cache_->amb.find(degree);
    if (it != cache_->amb.end()) return it->second;
    std::vector<CuspVec> out;
    int nf = (int)factors_.size();
    for (const Perm& w : coset_reps()) {
        int base = mono_degree(Mono(w, std::vector<int>(strands(), 0), jbot_));
        int rem = degree - base;
        if (rem < 0 || rem % 2 != 0) continue;
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions_into(rem / 2, nf, cur, comps);
        for (auto& k : comps) out.push_back(CuspVec{w, k});
    }
    std::sort(out.begin(), out.end());
    return cache_->amb.emplace(degree, std::move(out)).first->second;
}

int StdModule::min_degree() const {
    int best = 0;
    for (const Perm& w : coset_reps())
        best = std::min(
            best, mono_degree(Mono(w, std::vector<int>(strands(), 0), jbot_)));
    return best + shift_;
}

const std::vector<ModElem>& StdModule::graded_piece(int sdeg,
                                                    const Word& j) const {
    auto key = std::make_pair(sdeg, j);
    auto it = cache_->pieces.find(key);
    if (it != cache_->pieces.end()) return it->second;
    int degree = sdeg - shift_;
    std::vector<CuspVec> vecs;
    for (const CuspVec& v : ambient_basis(degree))
        if (vec_word(v) == j) vecs.push_back(v);
    std::vector<ModElem> out;
    if (!projected_) {
        for (const CuspVec& v : vecs) out.push_back(ModElem(v));
    } else if (!vecs.empty()) {
        std::map<CuspVec, int> index;
        for (std::size_t k = 0; k < vecs.size(); ++k) index[vecs[k]] = (int)k;
        ZMat mat(vecs.size(), std::vector<mpz_class>(vecs.size(), 0));
        for (std::size_t k = 0; k < vecs.size(); ++k) {
            auto mit = cache_->em_image.find(vecs[k]);
            if (mit == cache_->em_image.end())
                mit = cache_->em_image
                          .emplace(vecs[k], rmul_e(ModElem(vecs[k])))
                          .first;
            for (auto& [v, c] : mit->second.terms) {
                auto ix = index.find(v);
                assert(ix != index.end() &&
                       "idempotent image left the graded piece");
                mat[ix->second][k] = c;
            }
        }
        ZMat basis = hnf_col_basis(mat);
        for (int col = 0; col < zm_cols(basis); ++col) {
            ModElem e;
            for (std::size_t row = 0; row < vecs.size(); ++row)
                e.add(vecs[row], basis[row][col]);
            out.push_back(std::move(e));
        }
    }
    return cache_->pieces.emplace(key, std::move(out)).first->second;
}

StdModule delta_root(const Root& a) { return StdModule({{a, 1}}); }

StdModule delta_power(const Root& a, int m) { return StdModule({{a, m}}); }

StdModule delta_pi(const KostantPartition& pi) {
    pi.validate();
    return StdModule(pi.parts);
}

StdModule induced(const std::vector<StdModule>& parts) {
    std::vector<std::pair<Root, int>> groups;
    for (auto& p : parts)
        groups.insert(groups.end(), p.groups().begin(), p.groups().end());
    return StdModule(groups);
}

QPoly quantum_int(int n) {
    QPoly p;
    for (int d = n - 1; d >= 1 - n; d -= 2) p[d] = 1;
    return p;
}

QPoly quantum_factorial(int n) {
    QPoly p{{0, 1}};
    for (int k = 2; k <= n; ++k) p = qpoly_mul(p, quantum_int(k));
    return p;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (auto& [d1, c1] : a)
        for (auto& [d2, c2] : b) {
            out[d1 + d2] += c1 * c2;
            if (out[d1 + d2] == 0) out.erase(d1 + d2);
        }
    return out;
}

long Character::dim(const Word& w, int deg) const {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) return 0;
    auto jt = it->second.find(deg);
    return jt == it->second.end() ? 0 : jt->second;
}

Character character(const StdModule& m, int cutoff) {
    Character ch;
    ch.cutoff = cutoff;
    for (int sdeg = m.min_degree(); sdeg <= cutoff; ++sdeg) {
        std::vector<Word> words;
        for (const CuspVec& v : m.ambient_basis(sdeg - m.shift())) {
            Word j = m.vec_word(v);
            if (std::find(words.begin(), words.end(), j) == words.end())
                words.push_back(j);
        }
        for (const Word& j : words) {
            long dim = (long)m.graded_piece(sdeg, j).size();
            if (dim) ch.coeffs[j][sdeg] = dim;
        }
    }
    return ch;
}

Character shuffle_product(const Character& a, const Character& b, int cutoff) {
    Character out;
    out.cutoff = cutoff;
    if (a.coeffs.empty() || b.coeffs.empty()) return out;
    int p = (int)a.coeffs.begin()->first.size();
    int r = (int)b.coeffs.begin()->first.size();
    auto reps = min_reps({p, r});
    for (auto& [u, pa] : a.coeffs)
        for (auto& [v, pb] : b.coeffs) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            for (const Perm& x : reps) {
                int s = mono_degree(Mono(x, std::vector<int>(p + r, 0), uv));
                Word w = act_word(x, uv);
                for (auto& [da, ca] : pa)
                    for (auto& [db, cb] : pb) {
                        int deg = da + db + s;
                        if (deg > cutoff) continue;
                        auto& slot = out.coeffs[w][deg];
                        slot += ca * cb;
                        if (slot == 0) out.coeffs[w].erase(deg);
                    }
            }
        }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second.empty() ? out.coeffs.erase(it) : std::next(it);
    return out;
}

Character qpoly_scale(const QPoly& p, const Character& c) {
    Character out;
    out.cutoff = c.cutoff;
    for (auto& [w, q] : c.coeffs) {
        QPoly prod = qpoly_mul(p, q);
        for (auto it = prod.begin(); it != prod.end();)
            it = it->first > c.cutoff ? prod.erase(it) : std::next(it);
        if (!prod.empty()) out.coeffs[w] = std::move(prod);
    }
    return out;
}

}  // namespace klrcalc
