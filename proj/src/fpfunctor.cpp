#include "fpcat/fpfunctor.hpp"

#include <sstream>

namespace fpcat {

std::optional<fp_mor> fp_right_divide(const fp_cat& C, const fp_mor& g, const fp_mor& a) {
    require(C.obj_eq(g.src, a.src), "fp_right_divide: sources must agree");
    const matrix& ug = g.alpha.a;
    const matrix& ua = a.alpha.a;
    const matrix& rho_C = fp_rel(g.dst);
    const matrix& rho_A = fp_rel(a.dst);
    const ring_ptr& R = ug.R;
    mat_system sys(R);
    size_t U = sys.add_unknown(ug.n, ua.n);
    size_t L = sys.add_unknown(ug.m, rho_A.m);
    size_t W = sys.add_unknown(rho_C.m, rho_A.m);
    size_t e1 = sys.add_equation(ua); // ug * U - L * rho_A = ua
    sys.add_term(e1, U, ug, mat_identity(R, ua.n));
    sys.add_term(e1, L, mat_neg(mat_identity(R, ug.m)), rho_A);
    size_t e2 = sys.add_equation(mat_zero(R, rho_C.m, ua.n)); // rho_C * U - W * rho_A = 0
    sys.add_term(e2, U, rho_C, mat_identity(R, ua.n));
    sys.add_term(e2, W, mat_neg(mat_identity(R, rho_C.m)), rho_A);
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    fp_mor u = C.make_mor(g.dst, a.dst, rows_cat::Mor{(*sol)[U]});
    ensure(C.mor_eq(C.compose(g, u), a), "fp_right_divide: postcondition failed");
    return u;
}

functor_obj representable(fp_cat& C, const fp_obj& M) {
    fp_obj zero = C.zero_obj();
    return make_functor_obj(C.zero(M, zero));
}

functor_obj ext_functor(fp_cat& C, const fp_obj& M, int i) {
    require(i >= 0, "ext_functor: nonnegative degree required");
    if (i == 0) return representable(C, M);
    const ring_ptr& R = fp_rel(M).R;
    resolution res = resolve(M, i + 1);
    const matrix& Di = res.steps[static_cast<size_t>(i) - 1];   // P_i -> P_{i-1}
    const matrix& Dnext = res.steps[static_cast<size_t>(i)];    // presents Omega^i
    fp_obj omega = fp_from_relations(Dnext);
    fp_obj target = fp_free(R, Di.n);
    fp_mor rho = C.make_mor(omega, target, rows_cat::Mor{Di});
    ensure(C.is_valid(rho), "ext_functor: syzygy inclusion must be a morphism");
    return make_functor_obj(rho);
}

functor_obj tensor_functor(fp_cat& C, const fp_obj& M) {
    const ring_ptr& R = fp_rel(M).R;
    const matrix& rho = fp_rel(M);
    fp_obj src = fp_free(R, rho.n);
    fp_obj dst = fp_free(R, rho.m);
    return make_functor_obj(C.make_mor(src, dst, rows_cat::Mor{mat_transpose(rho)}));
}

functor_obj tor_functor(fp_cat& C, functor_cat& F, const fp_obj& M, int i) {
    require(i >= 1, "tor_functor: positive degree required");
    resolution res = resolve(M, i + 1);
    const matrix& Di = res.steps[static_cast<size_t>(i) - 1]; // iota: P_i -> P_{i-1}
    // (Omega^i (x) -): the syzygy module has generators = rows of Di, presented by step i+1
    functor_obj srcF = tensor_functor(C, fp_from_relations(res.steps[static_cast<size_t>(i)]));
    // (P_{i-1} (x) -) is representable on the free module
    const ring_ptr& R = fp_rel(M).R;
    fp_obj dst_carrier = fp_free(R, Di.n);
    functor_obj dstF = make_functor_obj(C.zero(dst_carrier, C.zero_obj()));
    // the transposed inclusion iota^tr is the underlying morphism in fpmod^op
    fp_mor iota_tr = C.make_mor(dst_carrier, functor_carrier(srcF), rows_cat::Mor{mat_transpose(Di)});
    functor_mor nat = F.make_mor(srcF, dstF, fpop_cat::Mor{iota_tr});
    require(F.is_valid(nat), "tor_functor: transposed square must define a morphism");
    return F.kernel_obj(nat);
}

fp_obj hom_nat(fp_tower& T, const functor_obj& F, const functor_obj& G) {
    return T.top.H_obj(F, G);
}

bool functor_iso_to_representable(fp_cat& C, const functor_obj& F, const fp_obj& M) {
    // a zero relation morphism makes (X <- R_X) isomorphic to (X <- 0), and
    // relation-free objects are isomorphic iff their carriers are
    if (!C.is_zero_mor(functor_rho(F))) return false;
    return module_iso_test(C, functor_carrier(F), M).kind == iso_result::verdict::isomorphic;
}

std::string functor_obj_to_string(const functor_obj& F) {
    std::ostringstream os;
    const fp_mor& rho = functor_rho(F);
    os << "functor object over " << ring_name(*fp_rel(rho.src).R) << "\n";
    os << "source: " << presentation_to_string(rho.src);
    os << "target: " << presentation_to_string(rho.dst);
    os << "matrix:\n" << matrix_to_string(rho.alpha.a, true);
    return os.str();
}

} // namespace fpcat
