#ifndef FPCAT_FPFUNCTOR_HPP
#define FPCAT_FPFUNCTOR_HPP

#include "fpcat/homstruct.hpp"

namespace fpcat {

// u with g * u = a in fp modules (right division), or nullopt
std::optional<fp_mor> fp_right_divide(const fp_cat& C, const fp_mor& g, const fp_mor& a);

// the opposite of the fp module category; morphisms are stored as fp morphisms
// with the direction flag given by the wrapper
struct fpop_cat {
    fp_cat base;

    static constexpr bool matrix_backed = false;

    struct Obj {
        fp_obj o;
    };
    struct Mor {
        fp_mor inner; // dst -> src in the base category
    };

    explicit fpop_cat(fp_cat b) : base(std::move(b)) {}

    Obj src(const Mor& f) const { return {f.inner.dst}; }
    Obj dst(const Mor& f) const { return {f.inner.src}; }
    bool obj_eq(const Obj& a, const Obj& b) const { return base.obj_eq(a.o, b.o); }
    bool mor_eq(const Mor& f, const Mor& g) const { return base.mor_eq(f.inner, g.inner); }

    Mor compose(const Mor& f, const Mor& g) const { return {base.compose(g.inner, f.inner)}; }
    Mor id(const Obj& a) const { return {base.id(a.o)}; }
    Mor zero(const Obj& a, const Obj& b) const { return {base.zero(b.o, a.o)}; }
    Mor add(const Mor& f, const Mor& g) const { return {base.add(f.inner, g.inner)}; }
    Mor negate(const Mor& f) const { return {base.negate(f.inner)}; }
    Mor sub(const Mor& f, const Mor& g) const { return {base.sub(f.inner, g.inner)}; }

    Obj zero_obj() const { return {base.zero_obj()}; }
    Obj sum(const Obj& a, const Obj& b) const { return {base.dsum(a.o, b.o)}; }
    Mor inj1(const Obj& a, const Obj& b) const { return {base.proj1_m(a.o, b.o)}; }
    Mor inj2(const Obj& a, const Obj& b) const { return {base.proj2_m(a.o, b.o)}; }
    Mor proj1(const Obj& a, const Obj& b) const { return {base.inj1_m(a.o, b.o)}; }
    Mor proj2(const Obj& a, const Obj& b) const { return {base.inj2_m(a.o, b.o)}; }
    Mor pair_from(const Mor& f, const Mor& g) const { return {base.pair_into(f.inner, g.inner)}; }
    Mor pair_into(const Mor& f, const Mor& g) const { return {base.pair_from(f.inner, g.inner)}; }

    // lifts in the opposite category are right divisions in the base
    std::optional<Mor> lift(const Mor& alpha, const Mor& gamma) const {
        auto u = fp_right_divide(base, gamma.inner, alpha.inner);
        if (!u) return std::nullopt;
        return Mor{*u};
    }

    // weak kernels in the opposite category are the (formal) cokernels of the base
    bool has_weak_kernels() const { return true; }
    std::pair<Obj, Mor> weak_kernel(const Mor& alpha) const {
        fp_obj Q = base.cokernel_obj(alpha.inner);
        fp_mor proj = base.cokernel_projection(alpha.inner);
        return {Obj{Q}, Mor{proj}};
    }
    Mor weak_kernel_lift(const Mor& alpha, const Mor& emb, const Mor& tau) const {
        (void)emb;
        return {base.cokernel_colift(alpha.inner, tau.inner)};
    }
};

// the category of finitely presented functors A(fpmod^op)
using functor_cat = freyd_cat<fpop_cat>;
using functor_obj = functor_cat::obj;
using functor_mor = functor_cat::mor;

inline functor_cat make_functor_cat(const ring_ptr& R) {
    return functor_cat(fpop_cat(make_fp_cat(R)));
}

// object (X <- R_X) of A(fpmod^op), given as the fp morphism rho: X -> R_X
inline functor_obj make_functor_obj(fp_mor rho) { return functor_obj{fpop_cat::Mor{std::move(rho)}}; }
inline const fp_obj& functor_carrier(const functor_obj& F) { return F.rho.inner.src; }
inline const fp_obj& functor_relations(const functor_obj& F) { return F.rho.inner.dst; }
inline const fp_mor& functor_rho(const functor_obj& F) { return F.rho.inner; }

// Hom(M,-) as the object (M -> 0)
functor_obj representable(fp_cat& C, const fp_obj& M);
// Ext^i(M,-); Ext^0 is the representable
functor_obj ext_functor(fp_cat& C, const fp_obj& M, int i);
// (M (x) -) as the object (R^a -rho^tr-> R^b)
functor_obj tensor_functor(fp_cat& C, const fp_obj& M);
// Tor_i(M,-) for i >= 1
functor_obj tor_functor(fp_cat& C, functor_cat& F, const fp_obj& M, int i);

// the top-level homomorphism structure of Construction steps (1)-(6)
struct fpop_transport_hs {
    fp_hom_structure* inner;

    fp_obj one() const { return inner->one(); }
    fp_obj H_obj(const fpop_cat::Obj& A, const fpop_cat::Obj& B) const {
        return inner->H_obj(B.o, A.o);
    }
    fp_mor H_mor(const fpop_cat::Mor& f, const fpop_cat::Mor& g) const {
        return inner->H_mor(g.inner, f.inner);
    }
    fp_mor nu(const fpop_cat::Mor& f) const { return inner->nu(f.inner); }
    fpop_cat::Mor nu_inv(const fp_mor& t, const fpop_cat::Obj& A, const fpop_cat::Obj& B) const {
        return {inner->nu_inv(t, B.o, A.o)};
    }
};

using functor_hom_structure = freyd_hom_structure<fpop_cat, fpop_transport_hs>;

// all categories and structures of the Construction tower, wired together
struct fp_tower {
    fp_cat mod;       // A(Rows_R), the fp module category
    fp_cat hom_b;     // the same category used as the target of hom structures
    functor_cat fun;  // A(fpmod^op)
    fp_hom_structure level1;
    fpop_transport_hs op_hs;
    functor_hom_structure top;

    explicit fp_tower(const ring_ptr& R)
        : mod(make_fp_cat(R)), hom_b(make_fp_cat(R)), fun(make_functor_cat(R)),
          level1{&mod, &hom_b, rows_over_fp_hs{&hom_b}}, op_hs{&level1},
          top{&fun, &hom_b, op_hs} {}

    fp_tower(const fp_tower&) = delete;
};

// Hom-set of natural transformations as an fp module
fp_obj hom_nat(fp_tower& T, const functor_obj& F, const functor_obj& G);

// decides F = (X <- R_X) isomorphic to the representable (M <- 0): true when the
// relation morphism is zero in fpmod and the carrier is isomorphic to M
bool functor_iso_to_representable(fp_cat& C, const functor_obj& F, const fp_obj& M);

std::string functor_obj_to_string(const functor_obj& F);

} // namespace fpcat

#endif
