#ifndef FPCAT_IO_HPP
#define FPCAT_IO_HPP

#include <istream>

#include "fpcat/fpfunctor.hpp"
#include "fpcat/quiver.hpp"

namespace fpcat {

// quiver text format: "quiver v w; a: v -> w; b: v -> w;"
quiver_ptr parse_quiver(const std::string& text);
std::string quiver_to_string(const quiver& q);

// line-oriented input document shared by all CLI subcommands
struct document {
    ring_ptr R;
    std::optional<matrix> bare; // matrix immediately after the ring header (smith/syzygies)
    std::vector<std::pair<std::string, matrix>> modules; // name -> relation matrix
    struct morphism_decl {
        std::string name, src, dst;
        matrix mat;
    };
    std::vector<morphism_decl> morphisms;
    std::vector<polynomial> generators; // groebner input
    std::optional<std::pair<int, int>> degrees;
    std::optional<std::pair<int, int>> filtration;
    std::vector<std::tuple<std::string, int, matrix>> filtered; // module, j, generator rows
    std::vector<std::string> query;

    const matrix& module_named(const std::string& name) const;
    const morphism_decl& morphism_named(const std::string& name) const;
};

document parse_document(std::istream& in, monomial_order order = monomial_order::degrevlex,
                        ring_ptr default_ring = nullptr);

// functor expressions: Hom(M,-) | Ext^i(M,-) | Tensor(M) | Tor_i(M,-)
struct functor_expr {
    enum class kind { hom, ext, tensor, tor } k;
    std::string module_name;
    int degree = 0;
};
functor_expr parse_functor_expr(const std::string& token);
functor_obj build_functor(fp_cat& C, functor_cat& F, const document& doc, const functor_expr& e);

} // namespace fpcat

#endif
