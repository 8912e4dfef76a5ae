#ifndef FPCAT_QUIVER_HPP
#define FPCAT_QUIVER_HPP

#include "fpcat/matrix.hpp"

namespace fpcat {

// finite acyclic quiver; acyclicity is enforced at construction
struct quiver {
    std::vector<std::string> vertices;
    struct arrow {
        std::string name;
        int src, dst;
    };
    std::vector<arrow> arrows;

    int vertex_index(const std::string& name) const;
};
using quiver_ptr = std::shared_ptr<const quiver>;

quiver_ptr make_quiver(std::vector<std::string> vertices,
                       std::vector<std::tuple<std::string, std::string, std::string>> arrows);

// a path is a composable sequence of arrow indices; the empty path is an identity
using qpath = std::vector<int>;

// all paths v -> w, ordered by length then lexicographically by arrow indices;
// this order is the basis order used by the homomorphism structure
std::vector<qpath> enumerate_paths(const quiver& q, int v, int w);

// formal Q-linear combination of parallel paths
struct path_lin {
    int src = 0, dst = 0;
    std::vector<std::pair<qpath, rational>> terms; // canonical order, no zero coefficients
};

bool path_less(const qpath& a, const qpath& b);
path_lin pl_zero(int v, int w);
path_lin pl_identity(int v);
path_lin pl_path(const quiver& q, const qpath& p);
path_lin pl_from_terms(int v, int w, std::vector<std::pair<qpath, rational>> terms);
path_lin pl_add(const path_lin& a, const path_lin& b);
path_lin pl_negate(const path_lin& a);
path_lin pl_scale(const path_lin& a, const rational& c);
path_lin pl_compose(const path_lin& a, const path_lin& b); // a then b
bool pl_eq(const path_lin& a, const path_lin& b);
bool pl_is_zero(const path_lin& a);

// Rows_Q homomorphism structure for the path category: H(v,w) = number of paths
struct quiver_hom {
    quiver_ptr q;
    ring_ptr QQ;

    int H_obj(int v, int w) const;
    // r: v' -> v, s: w -> w'; the matrix of x |-> r * x * s in the path bases
    matrix H_mor(const path_lin& r, const path_lin& s) const;
    matrix nu(const path_lin& f) const; // 1 x H(src,dst) coefficient row
    path_lin nu_inv(const matrix& row, int v, int w) const;
};

// block morphism of the additive closure of the path category
struct qblock {
    std::vector<int> src, dst;
    std::vector<path_lin> blocks; // row-major, blocks[i*dst.size()+j]: src[i] -> dst[j]
};

qblock qb_zero(const quiver& q, std::vector<int> src, std::vector<int> dst);
qblock qb_identity(const quiver& q, std::vector<int> at);
qblock qb_add(const qblock& a, const qblock& b);
qblock qb_negate(const qblock& a);
qblock qb_compose(const qblock& a, const qblock& b);
bool qb_eq(const qblock& a, const qblock& b);

// the lifted Rows_Q structure of the additive closure, double indices row-major
struct quiver_block_hom {
    quiver_hom base;

    int H_obj(const std::vector<int>& a, const std::vector<int>& b) const;
    matrix H_mor(const qblock& alpha, const qblock& beta) const;
    matrix nu(const qblock& f) const;
    qblock nu_inv(const quiver& q, const matrix& row, const std::vector<int>& a,
                  const std::vector<int>& b) const;
};

// decidable lifts in the additive closure through the homomorphism structure
std::optional<qblock> qb_lift(const quiver& q, const quiver_block_hom& hs, const qblock& alpha,
                              const qblock& gamma);

} // namespace fpcat

#endif
