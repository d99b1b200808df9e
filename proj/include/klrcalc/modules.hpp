#pragma once
// Standard modules: the cuspidal module Delta(alpha), induced products of
// cuspidals with their coset-adapted basis, the right nil-Hecke action,
// divided powers Delta(alpha^m) as the image of the idempotent e_m, general
// Delta(pi), graded characters and the quantum shuffle product.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "klrcalc/klr.hpp"
#include "klrcalc/perm.hpp"
#include "klrcalc/roots.hpp"

namespace klrcalc {

// psi_w (v_1 x^{k_1} o ... o v_N x^{k_N}) for w a minimal coset
// representative and one exponent per cuspidal factor.
struct CuspVec {
    Perm w;
    std::vector<int> exps;

    friend bool operator==(const CuspVec&, const CuspVec&) = default;
    friend auto operator<=>(const CuspVec& a, const CuspVec& b) {
        if (auto c = a.w <=> b.w; c != 0) return c;
        return a.exps <=> b.exps;
    }
};

// Integer combination of ambient basis vectors.
struct ModElem {
    std::map<CuspVec, mpz_class> terms;

    ModElem() = default;
    explicit ModElem(const CuspVec& v, mpz_class c = 1) {
        if (c != 0) terms[v] = std::move(c);
    }
    bool is_zero() const { return terms.empty(); }
    void add(const CuspVec& v, const mpz_class& c);
    ModElem& operator+=(const ModElem& o);
    ModElem& operator-=(const ModElem& o);
    ModElem& operator*=(const mpz_class& c);
    friend ModElem operator+(ModElem a, const ModElem& b) { return a += b; }
    friend ModElem operator-(ModElem a, const ModElem& b) { return a -= b; }
    friend ModElem operator*(const mpz_class& c, ModElem a) { return a *= c; }
    friend bool operator==(const ModElem&, const ModElem&) = default;
};

std::string to_string(const CuspVec& v);
std::string to_string(const ModElem& e);

// Delta(beta_1^{m_1}) o ... o Delta(beta_t^{m_t}), realized inside the
// ambient induced product of the ht(beta_i) cuspidal factors as the image of
// the right action of e_{m_1} x ... x e_{m_t}, with grading shift
// sum_i binom(m_i, 2).
class StdModule {
  public:
    StdModule(std::vector<std::pair<Root, int>> groups);

    const std::vector<std::pair<Root, int>>& groups() const { return groups_; }
    const std::vector<Root>& factors() const { return factors_; }
    const Word& bottom_word() const { return jbot_; }
    int strands() const { return (int)jbot_.size(); }
    int shift() const { return shift_; }
    const Composition& blocks() const { return blocks_; }
    bool projected() const { return projected_; }

    int vec_degree(const CuspVec& v) const;  // ambient (unshifted) degree
    Word vec_word(const CuspVec& v) const;   // left idempotent word

    // The straightened algebra element A with A . (v_1 o ... o v_N) = v.
    const Elem& to_algebra(const CuspVec& v) const;
    // Inverse along the coset-adapted basis (triangular in crossing count);
    // monomials whose bottom word differs from bottom_word() act as zero.
    ModElem from_algebra(Elem z) const;

    // Left action.
    ModElem act_idem(const Word& j, const ModElem& e) const;
    ModElem act_y(int u, const ModElem& e) const;
    ModElem act_psi(int r, const ModElem& e) const;
    ModElem act(const Elem& a, const ModElem& e) const;

    // Right nil-Hecke action on group g (1-based); t, u are 1-based inside
    // the group. rmul_em is right multiplication by e_{m_g}; rmul_e applies
    // every group's idempotent.
    ModElem rmul_x(const ModElem& e, int g, int t) const;
    ModElem rmul_tau(const ModElem& e, int g, int u) const;
    ModElem rmul_em(const ModElem& e, int g) const;
    ModElem rmul_e(const ModElem& e) const;

    // Ambient basis vectors of the given unshifted degree (all words).
    const std::vector<CuspVec>& ambient_basis(int degree) const;
    // Z-basis of the graded piece of the module itself in ambient
    // coordinates, at shifted degree sdeg and left word j.
    const std::vector<ModElem>& graded_piece(int sdeg, const Word& j) const;
    // Least shifted degree with a chance of being nonzero.
    int min_degree() const;
    // Minimal coset representatives indexing the ambient basis.
    const std::vector<Perm>& coset_reps() const;

  private:
    std::vector<std::pair<Root, int>> groups_;
    std::vector<Root> factors_;
    Word jbot_;
    Composition blocks_;
    int shift_ = 0;
    bool projected_ = false;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

StdModule delta_root(const Root& a);
StdModule delta_power(const Root& a, int m);
StdModule delta_pi(const KostantPartition& pi);
// Induced product of already-realized factors (group lists concatenated).
StdModule induced(const std::vector<StdModule>& parts);

// Laurent polynomials in q as degree -> coefficient maps.
using QPoly = std::map<int, long>;
QPoly quantum_int(int n);        // [n]
QPoly quantum_factorial(int n);  // [n]!
QPoly qpoly_mul(const QPoly& a, const QPoly& b);

struct Character {
    std::map<Word, QPoly> coeffs;  // word -> degree -> graded dimension
    int cutoff = 0;

    long dim(const Word& w, int deg) const;
    friend bool operator==(const Character&, const Character&) = default;
};

Character character(const StdModule& m, int cutoff);
// Quantum shuffle product, truncated at the given cutoff; the factors must
// carry enough headroom above it.
Character shuffle_product(const Character& a, const Character& b, int cutoff);
Character qpoly_scale(const QPoly& p, const Character& c);

}  // namespace klrcalc
