#pragma once
// Faithful polynomial representation of R_theta on (+)_i Z[y_1..y_d] 1_i,
// used as an independent oracle for the straightening engine: crossings act
// by divided differences / transpositions depending on the local colors.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "klrcalc/klr.hpp"
#include "klrcalc/roots.hpp"

namespace klrcalc {

struct Poly {
    std::map<std::vector<int>, mpz_class> t;  // exponent vector -> coefficient

    void add(const std::vector<int>& e, const mpz_class& c);
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend bool operator==(const Poly&, const Poly&) = default;
    bool is_zero() const { return t.empty(); }
    static Poly monomial(const std::vector<int>& e, mpz_class c = 1);
};

Poly poly_mul_y(int u, const Poly& f);                 // y_u * f
Poly poly_swap(int r, const Poly& f);                  // s_r f
Poly poly_mul(const Poly& f, const Poly& g);
Poly demazure(int r, const Poly& f);                   // (s_r f - f) / (y_r - y_{r+1})

struct PolyVec {
    std::map<Word, Poly> comp;

    void add(const Word& i, const Poly& f);
    PolyVec& operator+=(const PolyVec& o);
    PolyVec& operator-=(const PolyVec& o);
    friend bool operator==(const PolyVec&, const PolyVec&) = default;
    bool is_zero() const;
};

PolyVec rep_idem(const Word& j, const PolyVec& v);
PolyVec rep_y(int u, const PolyVec& v);
PolyVec rep_psi(int r, const PolyVec& v);
// Action of a straightened element (monomial-by-monomial).
PolyVec rep_elem(const Elem& e, const PolyVec& v);

}  // namespace klrcalc
