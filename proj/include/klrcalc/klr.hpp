#pragma once
// The type-A KLR algebra R_theta over Z: normal-form monomials psi_w y^k 1_i,
// exact integer linear combinations, and relation-driven multiplication
// (straightening to the psi_w y^k 1_i basis).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klrcalc/perm.hpp"
#include "klrcalc/roots.hpp"

namespace klrcalc {

struct Mono {
    Perm w;               // canonical reduced word is implied
    std::vector<int> ys;  // exponents of y_1, ..., y_d
    Word idem;            // bottom idempotent word

    Mono() = default;
    Mono(Perm w_, std::vector<int> ys_, Word idem_);
    int d() const { return (int)idem.size(); }
    Word top_word() const { return act_word(w, idem); }

    friend bool operator==(const Mono&, const Mono&) = default;
    friend auto operator<=>(const Mono& a, const Mono& b) {
        if (auto c = a.w <=> b.w; c != 0) return c;
        if (auto c = a.ys <=> b.ys; c != 0) return c;
        return a.idem <=> b.idem;
    }
};

int mono_degree(const Mono& m);

struct Elem {
    std::map<Mono, mpz_class> terms;  // no zero coefficients stored

    Elem() = default;
    Elem(const Mono& m, mpz_class c = 1) {
        if (c != 0) terms[m] = std::move(c);
    }
    bool is_zero() const { return terms.empty(); }
    void add(const Mono& m, const mpz_class& c);
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem& operator*=(const mpz_class& c);
    friend Elem operator+(Elem a, const Elem& b) { return a += b; }
    friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
    friend Elem operator*(const mpz_class& c, Elem a) { return a *= c; }
    friend bool operator==(const Elem&, const Elem&) = default;

    mpz_class coeff(const Mono& m) const {
        auto it = terms.find(m);
        return it == terms.end() ? mpz_class(0) : it->second;
    }
    // common degree of all terms, std::nullopt if mixed, 0 for the zero element
    std::optional<int> degree() const;
};

std::string to_string(const Mono& m);
std::string to_string(const Elem& e);

// 1_i as an element.
Elem idem_elem(const Word& i);

// Left multiplication by single generators, result in normal form.
Elem lmul_idem(const Word& j, const Elem& e);
Elem lmul_y(int u, const Elem& e);
Elem lmul_psi(int r, const Elem& e);

// Normal form of psi_{a_1} ... psi_{a_l} y^{ys} 1_i for a reduced word (a_k).
// Throws if the word is not reduced.
Elem psi_word_elem(const std::vector<int>& word, const Word& i);
Elem psi_word_tail(const std::vector<int>& word, const std::vector<int>& ys, const Word& i);

// The basis monomial psi_w y^{ys} 1_i itself.
inline Elem psi_w_elem(const Perm& w, const Word& i) {
    return Elem(Mono(w, std::vector<int>(i.size(), 0), i));
}

// Product in R_theta (both arguments straightened already).
Elem klr_mul(const Elem& a, const Elem& b);

// Horizontal concatenation (parabolic embedding iota): block-shift the right
// factor and juxtapose. Exact on monomials.
Elem hconcat(const Elem& a, const Elem& b);
Mono hconcat(const Mono& a, const Mono& b);

// Divided power idempotent 1_{i_1^{(d_1)}} o ... o 1_{i_r^{(d_r)}}; a single
// normal monomial psi_{w_0-blocks} y_{0-blocks} 1_(expanded word).
Mono divided_idem(const DividedWord& w);

// 1'_{i^{(d)}} = y_{0,d} psi_{w_{0,d}} 1_{i...i} for a single thick strand.
Elem divided_idem_prime(Vertex i, int d);

// All normal monomials with bottom word `from`, top word `to`, of the given
// degree (basis of the graded piece of 1_to R 1_from).
std::vector<Mono> graded_basis(const Word& from, const Word& to, int degree);

// Size of the straightening memo cache (diagnostics).
std::size_t engine_cache_size();
void engine_cache_clear();

}  // namespace klrcalc
