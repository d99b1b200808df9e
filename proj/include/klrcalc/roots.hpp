#pragma once
// Type A_infinity root combinatorics: vertices (= integers), positive roots,
// Q_+ weights, words, divided-power words, the lexicographic convex order and
// Kostant partitions.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrcalc {

using Vertex = int;
using Word = std::vector<Vertex>;

// Cartan matrix entries of A_infinity.
inline int cartan(Vertex i, Vertex j) {
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) return -1;
    return 0;
}

// eps_{i,j} = j - i, only defined for adjacent vertices.
inline int eps(Vertex i, Vertex j) {
    if (i - j != 1 && j - i != 1) throw std::invalid_argument("epsilon undefined");
    return j - i;
}

struct Root {
    int lo = 0, hi = 0;  // alpha_lo + ... + alpha_hi

    Root() = default;
    Root(int l, int h) : lo(l), hi(h) {
        if (l > h) throw std::invalid_argument("Root: lo > hi");
    }
    int height() const { return hi - lo + 1; }
    friend bool operator==(const Root&, const Root&) = default;
};

// Lexicographic convex order: alpha < alpha' iff lo < lo' or (lo == lo' and hi < hi').
inline int convex_compare(const Root& a, const Root& b) {
    if (a.lo != b.lo) return a.lo < b.lo ? -1 : 1;
    if (a.hi != b.hi) return a.hi < b.hi ? -1 : 1;
    return 0;
}

// Finitely supported multiplicity function on vertices; an element of Q_+.
struct Weight {
    std::map<Vertex, int> mult;  // only nonzero entries

    Weight() = default;
    static Weight of_root(const Root& a) {
        Weight t;
        for (int i = a.lo; i <= a.hi; ++i) t.mult[i] = 1;
        return t;
    }
    static Weight of_word(const Word& w) {
        Weight t;
        for (Vertex i : w) t.add(i, 1);
        return t;
    }
    void add(Vertex i, int k) {
        auto it = mult.find(i);
        int v = (it == mult.end() ? 0 : it->second) + k;
        if (v < 0) throw std::invalid_argument("Weight: negative multiplicity");
        if (v == 0) {
            if (it != mult.end()) mult.erase(it);
        } else {
            mult[i] = v;
        }
    }
    int operator[](Vertex i) const {
        auto it = mult.find(i);
        return it == mult.end() ? 0 : it->second;
    }
    int height() const {
        int h = 0;
        for (auto& [i, k] : mult) h += k;
        return h;
    }
    Weight& operator+=(const Weight& o) {
        for (auto& [i, k] : o.mult) add(i, k);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator*(int m, const Weight& a) {
        Weight t;
        if (m < 0) throw std::invalid_argument("Weight: negative scale");
        if (m > 0)
            for (auto& [i, k] : a.mult) t.mult[i] = m * k;
        return t;
    }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) {
        return std::compare_three_way{}(a.mult, b.mult);
    }
};

// i_alpha = lo (lo+1) ... hi.
inline Word i_alpha(const Root& a) {
    Word w;
    for (int i = a.lo; i <= a.hi; ++i) w.push_back(i);
    return w;
}

struct KostantPartition {
    // (root, multiplicity) pairs, roots strictly decreasing in the convex order.
    std::vector<std::pair<Root, int>> parts;

    Weight weight() const {
        Weight t;
        for (auto& [r, m] : parts) t += m * Weight::of_root(r);
        return t;
    }
    void validate() const;
    friend bool operator==(const KostantPartition&, const KostantPartition&) = default;
};

// All Kostant partitions of theta, in a fixed deterministic order.
std::vector<KostantPartition> kostant_partitions(const Weight& theta);

// All words of content theta. Guarded: throws if the count would exceed the cap.
std::vector<Word> words_of(const Weight& theta, std::size_t size_guard = 1000000);

// Divided power word: sequence of (vertex, exponent >= 1) parts.
struct DividedWord {
    std::vector<std::pair<Vertex, int>> parts;

    DividedWord() = default;
    explicit DividedWord(std::vector<std::pair<Vertex, int>> p) : parts(std::move(p)) {
        for (auto& [i, d] : parts)
            if (d < 1) throw std::invalid_argument("DividedWord: exponent < 1");
    }
    static DividedWord plain(const Word& w) {
        DividedWord t;
        for (Vertex i : w) t.parts.push_back({i, 1});
        return t;
    }
    Word expand() const {
        Word w;
        for (auto& [i, d] : parts)
            for (int k = 0; k < d; ++k) w.push_back(i);
        return w;
    }
    int length() const {
        int d = 0;
        for (auto& [i, k] : parts) d += k;
        return d;
    }
    friend bool operator==(const DividedWord&, const DividedWord&) = default;
};

std::string to_string(const Root& a);
std::string to_string(const Word& w);
std::string to_string(const Weight& t);
std::string to_string(const DividedWord& w);
std::string to_string(const KostantPartition& p);

}  // namespace klrcalc
