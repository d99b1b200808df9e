#pragma once
// Certification layer: symbolic checks on the projective complexes (d^2 = 0,
// chain maps, splitting), graded homology ranks against the module engine,
// Ext groups of standard modules over Q, F_p and Z, a direct linear-solve
// Hom oracle, and a brute-force suite for the supporting algebra identities.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "klrcalc/klr.hpp"
#include "klrcalc/modules.hpp"
#include "klrcalc/resolution.hpp"
#include "klrcalc/roots.hpp"

namespace klrcalc {

// Sparse matrices over R_theta keyed by (row, col); composition follows the
// right-multiplication convention: entries of a are applied first.
using BoundaryMat = std::map<std::pair<int, int>, Elem>;

BoundaryMat mat_mul(const BoundaryMat& a, const BoundaryMat& b);

struct CheckResult {
    bool ok = true;
    std::string witness;  // empty on pass, offending instance otherwise
};

// Every composite boundary entry straightens to zero.
CheckResult check_d_squared(const ProjComplex& c);

// Levelwise comparison matrices between the thick complex for alpha^m and the
// thin one; F[n] maps thick level n into thin level n, G[n] the other way.
struct Comparison {
    std::vector<BoundaryMat> F, G;
};

Comparison build_comparison(const Root& alpha, int m);

// d_n . F_n = F_{n+1} . c_n and c_n . G_n = G_{n+1} . d_n for every level.
CheckResult check_chain_maps(const ProjComplex& P, const ProjComplex& Q,
                             const Comparison& cmp);
// G_n . F_n = id on the thick complex, and the only contribution to a
// diagonal entry comes from the initial pattern of the row composition.
CheckResult check_splitting(const Root& alpha, int m, const Comparison& cmp);

enum class Ring { Q, Fp, Z };

// Graded homology dimensions of a complex of shifted projectives: for each
// left idempotent word and each shifted internal degree up to the cutoff, the
// dimension of H_n over the coefficient ring. Zero rows are omitted.
struct HomologyTable {
    std::map<std::pair<Word, int>, std::vector<long>> dims;
};

HomologyTable homology_dims(const ProjComplex& c, int cutoff, Ring ring,
                            int p = 0, std::size_t size_guard = 20000);

// Graded dimension of the w-word piece of the shifted projective q^s Re at
// shifted internal degree t, by direct combinatorial count.
long projective_dim(const Summand& s, const Word& w, int t);

// One graded piece of an Ext group; torsion lists the invariant factors > 1
// (only over Z).
struct ExtEntry {
    int n = 0;
    int degree = 0;
    long rank = 0;
    std::vector<mpz_class> torsion;

    friend bool operator==(const ExtEntry&, const ExtEntry&) = default;
};

// Ext^n(Delta(pi), Delta(sigma)) per shifted internal degree <= cutoff via
// the Hom complex of the projective resolution; entries with rank 0 and no
// torsion are omitted. Throws on weight mismatch.
std::vector<ExtEntry> ext_compute(const KostantPartition& pi,
                                  const KostantPartition& sigma, int cutoff,
                                  Ring ring, int p = 0,
                                  std::size_t size_guard = 20000);

// Degreewise dimensions of Hom(Delta(pi), Delta(sigma)) over Q, computed
// without the resolution: a degree-t map is determined by the image of the
// standard generator, constrained by the relations the generator satisfies
// in internal degrees up to ann_cutoff. The source-side data (a basis of
// every graded piece reached from the generator by single algebra
// generators, with the commutation coefficients between them) only depends
// on pi, so it is built once and reused across targets.
class HomOracle {
  public:
    HomOracle(const KostantPartition& pi, int cutoff, int ann_cutoff = -1);
    ~HomOracle();
    HomOracle(HomOracle&&) noexcept;

    std::map<int, long> dims(const KostantPartition& sigma) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl;
};

std::map<int, long> direct_hom_dims(const KostantPartition& pi,
                                    const KostantPartition& sigma, int cutoff,
                                    int ann_cutoff = -1);

struct LemmaResult {
    std::string name;
    bool ok = true;
    std::string witness;
};

// Brute-force verification of the supporting identities behind the complex
// and the comparison maps, over small ranges controlled by max_d.
std::vector<LemmaResult> lemma_suite(int max_d = 4);

}  // namespace klrcalc
