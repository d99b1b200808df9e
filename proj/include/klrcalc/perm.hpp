#pragma once
// Symmetric group machinery: permutations as 1-based image arrays, reduced
// words, longest elements, minimal coset representatives and parabolic
// factorization.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "klrcalc/roots.hpp"

namespace klrcalc {

struct Perm {
    // img[r-1] = w(r); a bijection on [1, d].
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int d);

    int d() const { return (int)img.size(); }
    int operator()(int r) const { return img[r - 1]; }
    bool is_identity() const;

    Perm inverse() const;
    // (w * v)(r) = w(v(r)); apply v first.
    friend Perm operator*(const Perm& w, const Perm& v);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) { return a.img <=> b.img; }

    int length() const;  // inversion count
    bool left_descent(int r) const;   // l(s_r w) < l(w)
    bool right_descent(int r) const;  // l(w s_r) < l(w)
    Perm lmul_s(int r) const;         // s_r * w (swap values r, r+1)
    Perm rmul_s(int r) const;         // w * s_r (swap positions r, r+1)
};

// Lexicographically smallest reduced word (generator indices, 1-based).
// Greedy smallest-left-descent; tails of the result are themselves canonical.
std::vector<int> canonical_word(const Perm& w);

Perm perm_of_word(const std::vector<int>& word, int d);
bool is_reduced_word(const std::vector<int>& word, int d);

// (w . i)_t = i_{w^{-1}(t)} (place permutation action on words).
Word act_word(const Perm& w, const Word& i);

// Longest element of S_d.
Perm longest_perm(int d);

struct Composition {
    std::vector<int> parts;  // nonnegative, summing to d

    Composition() = default;
    explicit Composition(std::vector<int> p) : parts(std::move(p)) {
        for (int x : parts)
            if (x < 0) throw std::invalid_argument("Composition: negative part");
    }
    int sum() const {
        int s = 0;
        for (int x : parts) s += x;
        return s;
    }
    // Half-open 1-based block ranges [start, end] per part.
    std::vector<std::pair<int, int>> blocks() const;
};

// Longest element of the parabolic subgroup S_lambda (block diagonal).
Perm parabolic_longest(const Composition& lambda);

bool in_parabolic(const Perm& w, const Composition& lambda);
// w in D^lambda: minimal length in w S_lambda (increasing on lambda-blocks).
bool is_right_min_rep(const Perm& w, const Composition& lambda);
// w in ^mu D: minimal length in S_mu w.
bool is_left_min_rep(const Perm& w, const Composition& mu);

std::vector<Perm> right_min_reps(const Composition& lambda);          // D^lambda
std::vector<Perm> left_min_reps(const Composition& mu);               // ^mu D
std::vector<Perm> double_min_reps(const Composition& mu, const Composition& lambda);

// w = x . y with x in D^lambda, y in S_lambda, l(w) = l(x) + l(y).
std::pair<Perm, Perm> right_parabolic_decompose(const Perm& w, const Composition& lambda);
// w = y . x with y in S_mu, x in ^mu D, l additive.
std::pair<Perm, Perm> left_parabolic_decompose(const Perm& w, const Composition& mu);
// For w in ^mu D: unique w = x . y, x in ^mu D^lambda, y in S_lambda, l additive.
std::pair<Perm, Perm> double_parabolic_decompose(const Perm& w, const Composition& mu,
                                                 const Composition& lambda);

// The cycle (t -> r) = s_{t-1} s_{t-2} ... s_r  (r < t), as permutation / word.
Perm cycle_perm(int t, int r, int d);
std::vector<int> cycle_word(int t, int r);

// The unique permutation of [1,d] mapping each sources[k] increasingly onto
// targets[k]; the families must each partition [1,d].
Perm increasing_bijection(const std::vector<std::vector<int>>& sources,
                          const std::vector<std::vector<int>>& targets);

// Block-diagonal embedding: factors w_1, ..., w_t acting on consecutive blocks.
Perm block_diag(const std::vector<Perm>& factors);

// Fully commutative test: no reduced word contains a braid pattern
// s_r s_{r+1} s_r / s_{r+1} s_r s_{r+1}; equivalently w is 321-avoiding.
bool is_fully_commutative(const Perm& w);

// All reduced words of w (exponential; small d only).
std::vector<std::vector<int>> all_reduced_words(const Perm& w);

}  // namespace klrcalc
