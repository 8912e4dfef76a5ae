#ifndef FPCAT_LINALG_HPP
#define FPCAT_LINALG_HPP

#include <optional>

#include "fpcat/matrix.hpp"

namespace fpcat {

// some X with X*A = B, or nullopt iff every row of B fails to lie in the row span of A
std::optional<matrix> solve_left(const matrix& A, const matrix& B);

// S with S*A = 0 whose rows generate the left kernel (row syzygies)
matrix row_syzygies(const matrix& A);

// row Hermite normal form over Z: H = U*A, U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot)
struct hnf_result {
    matrix H;
    matrix U;
    std::vector<std::pair<int, int>> pivots; // (row, col)
};
hnf_result hermite_normal_form(const matrix& A);

struct snf_result {
    matrix S, U, V; // U*A*V = S, S diagonal with d1 | d2 | ..., di >= 0
};
snf_result smith_normal_form(const matrix& A);
std::vector<bigint> invariant_factors(const matrix& A); // diagonal of S, padded to min(m,n)

int field_rank(const matrix& A); // rationals only

// simultaneous matrix-linear system  sum_k L_k * X_k * R_k = C  over a commutative ring,
// solved by row-major vectorization: vec(L*X*R) = vec(X) * (L^tr (x) R)
struct mat_system {
    ring_ptr R;
    explicit mat_system(ring_ptr ring) : R(std::move(ring)) {}

    struct unknown_shape {
        int m, n;
    };
    std::vector<unknown_shape> unknowns;
    struct term {
        size_t eq, unknown;
        matrix L, R;
    };
    std::vector<term> terms;
    std::vector<matrix> rhs; // one per equation, shape = equation shape

    size_t add_unknown(int m, int n);
    size_t add_equation(const matrix& C);
    void add_term(size_t eq, size_t unknown, matrix L, matrix Rm);

    std::optional<std::vector<matrix>> solve() const;
};

} // namespace fpcat

#endif
