#ifndef FPCAT_FPMOD_HPP
#define FPCAT_FPMOD_HPP

#include <string>

#include "fpcat/freyd.hpp"
#include "fpcat/groebner.hpp"
#include "fpcat/rows.hpp"

namespace fpcat {

// finitely presented R-modules as the Freyd category of Rows_R
using fp_cat = freyd_cat<rows_cat>;
using fp_obj = fp_cat::obj;
using fp_mor = fp_cat::mor;
using fp_sub = fp_cat::subobj;

inline fp_cat make_fp_cat(const ring_ptr& R) { return fp_cat(rows_cat(R)); }

// module presented by relation rows: generators = rel.n, relations = rel.m
inline fp_obj fp_from_relations(const matrix& rel) { return fp_obj{rows_cat::Mor{rel}}; }
inline fp_obj fp_free(const ring_ptr& R, int n) { return fp_from_relations(mat_zero(R, 0, n)); }
inline const matrix& fp_rel(const fp_obj& M) { return M.rho.a; }
inline int fp_gens(const fp_obj& M) { return M.rho.a.n; }

inline fp_mor fp_mor_from(fp_cat& C, const fp_obj& A, const fp_obj& B, const matrix& u) {
    fp_mor f = C.make_mor(A, B, rows_cat::Mor{u});
    require(C.is_valid(f), "matrix does not define a morphism of presentations");
    return f;
}

// canonical relation presentation: over Z the HNF of the relation rows with zero rows
// dropped; over Q / Q[x..] the reduced module Groebner basis rows
matrix canonical_relations(const matrix& rel);
fp_obj fp_canonical(const fp_obj& M);

struct presentation_stats {
    int generators;
    std::vector<bigint> factors; // Z only: invariant factors of the relation matrix, padded
};

// over Z: the invariant factor decomposition coker = (+) Z/d_i (+) Z^free
struct z_decomposition {
    std::vector<bigint> torsion; // nontrivial invariant factors (> 1)
    int free_rank = 0;
};
z_decomposition z_decompose(const fp_obj& M);

std::string presentation_to_string(const fp_obj& M);

struct iso_result {
    enum class verdict { isomorphic, not_isomorphic, undecided } kind;
    std::optional<std::pair<fp_mor, fp_mor>> maps; // mutually inverse when isomorphic
};

iso_result module_iso_test(fp_cat& C, const fp_obj& M, const fp_obj& N);

// dimension of a Q-module (usage error over other rings)
int q_dimension(const fp_obj& M);

// projective resolution data: steps[0] = relation matrix of M, steps[i+1] = syzygies of steps[i]
struct resolution {
    ring_ptr R;
    std::vector<matrix> steps;
};
resolution resolve(const fp_obj& M, int length);

} // namespace fpcat

#endif
