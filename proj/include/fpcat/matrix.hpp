#ifndef FPCAT_MATRIX_HPP
#define FPCAT_MATRIX_HPP

#include <vector>

#include "fpcat/ring.hpp"

namespace fpcat {

// dense row-major matrix over a fixed ring; 0xn and mx0 are legal
struct matrix {
    ring_ptr R;
    int m = 0, n = 0;
    std::vector<scalar> e;

    matrix() = default;
    matrix(ring_ptr ring, int rows, int cols)
        : R(std::move(ring)), m(rows), n(cols), e(static_cast<size_t>(rows) * cols, ring_zero(*R)) {}

    scalar& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const scalar& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
};

matrix mat_zero(const ring_ptr& R, int m, int n);
matrix mat_identity(const ring_ptr& R, int n);
matrix mat_from_ints(const ring_ptr& R, int m, int n, const std::vector<long>& vals);
matrix mat_add(const matrix& a, const matrix& b);
matrix mat_sub(const matrix& a, const matrix& b);
matrix mat_neg(const matrix& a);
matrix mat_mul(const matrix& a, const matrix& b);
matrix mat_scale(const matrix& a, const scalar& c);
matrix mat_transpose(const matrix& a);
matrix mat_hstack(const matrix& a, const matrix& b);   // [a b]
matrix mat_vstack(const matrix& a, const matrix& b);   // [a; b]
matrix mat_rows(const matrix& a, const std::vector<int>& rows);
matrix mat_cols(const matrix& a, const std::vector<int>& cols);
bool mat_eq(const matrix& a, const matrix& b);         // entrywise ring_eq
bool mat_is_zero(const matrix& a);
matrix mat_row(const matrix& a, int i);
matrix kron(const matrix& a, const matrix& b);
// row-major flattening of an mxn matrix into a 1x(mn) row, and back
matrix mat_vec(const matrix& a);
matrix mat_unvec(const matrix& row, int m, int n);

std::string matrix_to_string(const matrix& a, bool with_header = true);
matrix parse_matrix(const std::string& text);
// body only: "m n" line then rows; ring supplied by context
matrix parse_matrix_body(const ring_ptr& R, std::istream& in);

} // namespace fpcat

#endif
