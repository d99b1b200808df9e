#pragma once
// Projective complexes for semicuspidal standard modules: the level
// combinatorics (compositions lambda, multicompositions delta, shifts, signs,
// crossing words), the complex for Delta(alpha^m), the thin-idempotent
// complex it splits off from, the comparison matrices between them, induced
// products of complexes, and standard generators.

#include <map>
#include <vector>

#include "klrcalc/klr.hpp"
#include "klrcalc/modules.hpp"
#include "klrcalc/perm.hpp"
#include "klrcalc/roots.hpp"

namespace klrcalc {

// lambda = (lambda_a, ..., lambda_b), entries in [0, m]; describes the level
// summand with divided idempotent
// a^(m-lambda_a) ... b^(m-lambda_b) (b+1)^(m) b^(lambda_b) ... a^(lambda_a).
struct Lambda {
    int a = 1, b = 1, m = 1;
    std::vector<int> parts;  // parts[i - a] = lambda_i

    Lambda() = default;
    Lambda(int a_, int b_, int m_, std::vector<int> p);
    static Lambda zero(int a_, int b_, int m_);

    int l() const { return b + 2 - a; }
    int d() const { return l() * m; }
    int n() const;
    int at(int i) const { return parts[i - a]; }
    Lambda plus(int i) const;  // lambda + e_i; requires at(i) < m

    friend bool operator==(const Lambda&, const Lambda&) = default;
    friend auto operator<=>(const Lambda&, const Lambda&) = default;
};

int s_shift(const Lambda& la);       // grading shift of the level summand
Word j_word(const Lambda& la);       // expanded idempotent word
DividedWord i_divided(const Lambda& la);
Composition omega(const Lambda& la); // block sizes (m-la_a,...,m, la_b,...)
Perm w0_lambda(const Lambda& la);    // longest element of the omega-parabolic

// Position bookkeeping; intervals may be empty (lo > hi).
struct Interval {
    int lo = 1, hi = 0;
    bool empty() const { return lo > hi; }
    int size() const { return empty() ? 0 : hi - lo + 1; }
    std::vector<int> list() const;
};

int r_minus(const Lambda& la, int i);  // i in [a-1, b]; r_minus(a-1) = 0
int r_plus(const Lambda& la, int i);   // i in [a, b+1]
Interval U_minus(const Lambda& la, int i);
Interval U_plus(const Lambda& la, int i);
Interval U_top(const Lambda& la);      // positions of color b+1

int sgn_lambda(const Lambda& la, int i);
int tau_lambda(const Lambda& la);

// All lambda with |lambda| = n, in lexicographic order.
std::vector<Lambda> lambda_level(int a, int b, int m, int n);

// Crossing word of psi_{lambda;i} (may be empty); requires at(i) < m.
std::vector<int> cycle_letters(const Lambda& la, int i);
// sgn * e_mu psi_{lambda;i} e_lambda, or zero when mu != lambda + e_i.
Elem boundary_entry(const Lambda& mu, const Lambda& la);

// delta = (delta^(1), ..., delta^(m)), each row a 0/1 lambda for m = 1.
struct MultiComp {
    int a = 1, b = 1;
    std::vector<std::vector<int>> rows;

    MultiComp() = default;
    MultiComp(int a_, int b_, std::vector<std::vector<int>> r);
    static MultiComp zero(int a_, int b_, int m_);

    int m() const { return (int)rows.size(); }
    int n() const;
    int at(int r, int i) const { return rows[r - 1][i - a]; }
    Lambda row_lambda(int r) const;  // delta^(r) as a Lambda with m = 1
    Lambda sum() const;              // lambda^delta
    MultiComp plus(int r, int i) const;

    friend bool operator==(const MultiComp&, const MultiComp&) = default;
    friend auto operator<=>(const MultiComp&, const MultiComp&) = default;
};

Word j_word(const MultiComp& de);
std::vector<int> U_minus_list(const MultiComp& de, int i);
std::vector<int> U_plus_list(const MultiComp& de, int i);
std::vector<int> U_top_list(const MultiComp& de);

int sgn_delta(const MultiComp& de, int r, int i);
int t_delta(const MultiComp& de);
int sigma_delta(const MultiComp& de);
int tau_delta(const MultiComp& de);

std::vector<MultiComp> multicomp_level(int a, int b, int m, int n);
// The unique initial pattern with row sum lambda (splitting support).
MultiComp initial_pattern(const Lambda& la);

// w(delta): maps the color classes of the thin word increasingly onto the
// color classes of the thick word; u(delta) = w(delta)^{-1}.
Perm w_delta(const MultiComp& de);
Perm u_delta(const MultiComp& de);

// Crossing word of the block-embedded psi_{delta;r,i}; requires at(r,i) = 0.
std::vector<int> q_cycle_letters(const MultiComp& de, int r, int i);
// sgn * e_gamma psi_{delta;r,i} e_delta, or zero when gamma != delta + e_i^r.
Elem q_boundary_entry(const MultiComp& ga, const MultiComp& de);

// Comparison matrix entries; zero unless la equals the row sum of de.
Elem f_entry(const Lambda& la, const MultiComp& de);
Elem g_entry(const MultiComp& de, const Lambda& la);

struct Summand {
    int shift = 0;
    DividedWord idem;

    friend bool operator==(const Summand&, const Summand&) = default;
};

// Chain complex of shifted projectives with boundary maps given by right
// multiplication matrices; boundaries[n] maps level n+1 to level n, keyed by
// (row index in levels[n+1], column index in levels[n]).
struct ProjComplex {
    std::vector<std::vector<Summand>> levels;
    std::vector<std::map<std::pair<int, int>, Elem>> boundaries;

    int length() const { return (int)levels.size() - 1; }
};

ProjComplex build_P_power(const Root& alpha, int m);
ProjComplex build_Q(const Root& alpha, int m);
ProjComplex complex_product(const ProjComplex& c, const ProjComplex& d);
ProjComplex build_P_pi(const KostantPartition& pi);

// Block swap of blocks r, r+1 (each of size l) and the longest minimal coset
// representative for the (l^m) composition.
Perm z_perm(int l, int m, int r);
Perm W0_perm(int l, int m);
std::vector<int> Y0_exponents(int l, int m);  // y_{kl}^{k-1} factors

// The longest permutation sorting (a ... b+1)^m to a^m ... (b+1)^m.
Perm sorting_perm(const Root& alpha, int m);
// Standard generator of Delta(alpha^m) inside its ambient realization.
ModElem standard_generator(const StdModule& pow);

}  // namespace klrcalc
