#pragma once
// Exact linear algebra: sparse rank over Q and F_p, and integer column
// reduction (Hermite form), kernels and Smith normal form over Z.

#include <gmpxx.h>

#include <map>
#include <vector>

namespace klrcalc {

// Sparse rows; column indices 0-based.
struct SparseMat {
    int ncols = 0;
    std::vector<std::map<int, mpz_class>> rows;

    void add(int r, int c, const mpz_class& v);
    int nrows() const { return (int)rows.size(); }
};

long rank_q(const SparseMat& m);
long rank_fp(const SparseMat& m, int p);

// Dense integer matrices, row-major.
using ZMat = std::vector<std::vector<mpz_class>>;

int zm_rows(const ZMat& a);
int zm_cols(const ZMat& a);
ZMat zm_mul(const ZMat& a, const ZMat& b);

// Column-style Hermite reduction: returns a basis (as columns of the result)
// of the lattice spanned by the columns of A.
ZMat hnf_col_basis(const ZMat& a);

// Basis of { x in Z^n : A x = 0 } as columns; the lattice is saturated.
ZMat z_kernel(const ZMat& a);

// Nonzero invariant factors d_1 | d_2 | ... of A.
std::vector<mpz_class> snf_invariants(ZMat a);

// Solve basis * x = v exactly over Q; returns false if unsolvable.
bool solve_columns(const ZMat& basis, const std::vector<mpz_class>& v,
                   std::vector<mpq_class>& x);

}  // namespace klrcalc
