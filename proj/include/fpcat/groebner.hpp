#ifndef FPCAT_GROEBNER_HPP
#define FPCAT_GROEBNER_HPP

#include <optional>
#include <vector>

#include "fpcat/matrix.hpp"

namespace fpcat {

// row vector of polynomials, an element of a free module R^(1xn)
using modvec = std::vector<polynomial>;

// module term order: position over term, lower column index outranks higher
struct modterm {
    int col = -1;          // -1 means the zero vector
    monomial mono;
};

modterm mod_lead(const ring_desc& R, const modvec& v);
int modterm_cmp(const ring_desc& R, const modterm& a, const modterm& b);

struct module_gb {
    std::vector<modvec> basis;      // reduced, monic, sorted descending by lead term
    std::vector<modvec> rep;        // basis[k] = sum_i rep[k][i] * input_row[i]
    int ncols = 0;
    int ninput = 0;
};

// reduced module Groebner basis of the row span of A (canonical given ring order)
module_gb module_groebner(const matrix& A);

struct module_nf {
    modvec remainder;
    modvec coeffs;                  // v = sum_k coeffs[k] * basis[k] + remainder
};

module_nf module_normal_form(const ring_desc& R, const std::vector<modvec>& basis, modvec v);

matrix poly_solve_left(const matrix& A, const matrix& B);      // helper for linalg dispatch
std::optional<matrix> poly_try_solve_left(const matrix& A, const matrix& B);
matrix poly_row_syzygies(const matrix& A);

// ideal level (n = 1 module)
std::vector<polynomial> groebner_basis(const ring_ptr& R, const std::vector<polynomial>& gens);
polynomial normal_form(const ring_desc& R, const polynomial& p, const std::vector<polynomial>& gb);

} // namespace fpcat

#endif
