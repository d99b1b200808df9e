#include "klrcalc/roots.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace klrcalc {

void KostantPartition::validate() const {
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (parts[k].second < 1)
            throw std::invalid_argument("KostantPartition: multiplicity < 1");
        if (k + 1 < parts.size() &&
            convex_compare(parts[k].first, parts[k + 1].first) <= 0)
            throw std::invalid_argument(
                "KostantPartition: parts not strictly decreasing");
    }
}

namespace {

// Positive roots supported inside the support interval of theta.
std::vector<Root> roots_below(const Weight& theta) {
    std::vector<Root> out;
    if (theta.mult.empty()) return out;
    int lo = theta.mult.begin()->first;
    int hi = theta.mult.rbegin()->first;
    for (int a = lo; a <= hi; ++a)
        for (int b = a; b <= hi; ++b) out.push_back(Root(a, b));
    // Enumerate candidate parts in decreasing convex order so that partitions
    // come out with their parts in the required order.
    std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
        return convex_compare(x, y) > 0;
    });
    return out;
}

void kp_rec(const std::vector<Root>& cand, std::size_t from, Weight rem,
            KostantPartition& acc, std::vector<KostantPartition>& out) {
    if (rem.height() == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
        const Root& r = cand[k];
        // max multiplicity of r that still fits in rem
        Weight rw = Weight::of_root(r);
        int mmax = rem.height();
        for (int i = r.lo; i <= r.hi; ++i) mmax = std::min(mmax, rem[i]);
        for (int m = mmax; m >= 1; --m) {
            Weight rem2 = rem;
            bool ok = true;
            for (int i = r.lo; i <= r.hi && ok; ++i) {
                if (rem2[i] < m) ok = false;
                else rem2.add(i, -m);
            }
            if (!ok) continue;
            acc.parts.push_back({r, m});
            kp_rec(cand, k + 1, rem2, acc, out);
            acc.parts.pop_back();
        }
    }
}

}  // namespace

std::vector<KostantPartition> kostant_partitions(const Weight& theta) {
    std::vector<KostantPartition> out;
    KostantPartition acc;
    kp_rec(roots_below(theta), 0, theta, acc, out);
    // Deterministic order: lexicographic on the part sequences.
    std::sort(out.begin(), out.end(), [](const KostantPartition& p,
                                         const KostantPartition& q) {
        auto key = [](const KostantPartition& x) {
            std::vector<std::array<int, 3>> v;
            for (auto& [r, m] : x.parts) v.push_back({r.lo, r.hi, m});
            return v;
        };
        return key(p) < key(q);
    });
    return out;
}

std::vector<Word> words_of(const Weight& theta, std::size_t size_guard) {
    Word sorted;
    for (auto& [i, k] : theta.mult)
        for (int c = 0; c < k; ++c) sorted.push_back(i);
    // multinomial count check against the guard
    std::size_t count = 1;
    {
        std::size_t n = 0;
        int run = 0;
        Vertex prev = 0;
        for (Vertex i : sorted) {
            ++n;
            run = (n > 1 && i == prev) ? run + 1 : 1;
            prev = i;
            count = count * n / run;  // binomial-style exact update
            if (count > size_guard) throw std::runtime_error("words_of: size guard exceeded");
        }
    }
    std::vector<Word> out;
    out.reserve(count);
    do {
        out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

std::string to_string(const Root& a) {
    std::ostringstream s;
    s << "[" << a.lo << "," << a.hi << "]";
    return s.str();
}

std::string to_string(const Word& w) {
    std::ostringstream s;
    s << "(";
    for (std::size_t k = 0; k < w.size(); ++k) s << (k ? " " : "") << w[k];
    s << ")";
    return s.str();
}

std::string to_string(const Weight& t) {
    std::ostringstream s;
    bool first = true;
    for (auto& [i, k] : t.mult) {
        if (!first) s << "+";
        first = false;
        if (k != 1) s << k << "*";
        s << "a" << i;
    }
    if (first) s << "0";
    return s.str();
}

std::string to_string(const DividedWord& w) {
    std::ostringstream s;
    s << "(";
    for (std::size_t k = 0; k < w.parts.size(); ++k) {
        if (k) s << " ";
        s << w.parts[k].first;
        if (w.parts[k].second != 1) s << "^(" << w.parts[k].second << ")";
    }
    s << ")";
    return s.str();
}

std::string to_string(const KostantPartition& p) {
    std::ostringstream s;
    s << "(";
    for (std::size_t k = 0; k < p.parts.size(); ++k) {
        if (k) s << ", ";
        s << to_string(p.parts[k].first) << "^" << p.parts[k].second;
    }
    s << ")";
    return s.str();
}

}  // namespace klrcalc
