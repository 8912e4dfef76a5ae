#ifndef FPCAT_HOMSTRUCT_HPP
#define FPCAT_HOMSTRUCT_HPP

#include "fpcat/fpmod.hpp"

namespace fpcat {

// Rows_R homomorphism structure over fp modules: H(m,n) is the free module of rank m*n,
// morphisms act by transposed Kronecker products, nu is row-major flattening.
struct rows_over_fp_hs {
    fp_cat* B;

    fp_obj one() const { return fp_free(B->ch.R, 1); }

    fp_obj H_obj(const rows_cat::Obj& A, const rows_cat::Obj& Bo) const {
        return fp_free(B->ch.R, A.n * Bo.n);
    }
    // alpha: A' -> A, beta: Bo -> Bo'; result H(A,Bo) -> H(A',Bo')
    fp_mor H_mor(const rows_cat::Mor& alpha, const rows_cat::Mor& beta) const {
        matrix k = kron(mat_transpose(alpha.a), beta.a);
        return B->make_mor(fp_free(B->ch.R, k.m), fp_free(B->ch.R, k.n), rows_cat::Mor{k});
    }
    fp_mor nu(const rows_cat::Mor& f) const {
        return B->make_mor(one(), fp_free(B->ch.R, f.a.m * f.a.n), rows_cat::Mor{mat_vec(f.a)});
    }
    rows_cat::Mor nu_inv(const fp_mor& t, const rows_cat::Obj& A, const rows_cat::Obj& Bo) const {
        return rows_cat::Mor{mat_unvec(t.alpha.a, A.n, Bo.n)};
    }
};

// Homomorphism structure for a Freyd category A(Child), built from a Child structure
// over fp modules: two cokernels, the induced morphism between them, and its kernel.
template <class Child, class CHS>
struct freyd_hom_structure {
    using A_cat = freyd_cat<Child>;
    using AObj = typename A_cat::obj;
    using AMor = typename A_cat::mor;

    A_cat* A;
    fp_cat* B;
    CHS hs;

    struct diagram {
        fp_mor m1;  // H(A, rho_Y): H(A,R_B) -> H(A,B)
        fp_mor m2;  // H(R_A, rho_Y): H(R_A,R_B) -> H(R_A,B)
        fp_mor h;   // H(rho_X, B): H(A,B) -> H(R_A,B)
        fp_mor pi1; // H(A,B) ->> Q1
        fp_mor pi2; // H(R_A,B) ->> Q2
        fp_mor phi; // Q1 -> Q2 induced by h
        fp_cat::kernel_data kd; // kernel of phi; kd.K is H'
    };

    diagram build(const AObj& X, const AObj& Y) const {
        auto idA = A->ch.id(A->carrier(X));
        auto idRA = A->ch.id(A->relations(X));
        auto idB = A->ch.id(A->carrier(Y));
        diagram d{
            hs.H_mor(idA, Y.rho),
            hs.H_mor(idRA, Y.rho),
            hs.H_mor(X.rho, idB),
            {}, {}, {}, {},
        };
        d.pi1 = B->cokernel_projection(d.m1);
        d.pi2 = B->cokernel_projection(d.m2);
        d.phi = B->cokernel_colift(d.m1, B->compose(d.h, d.pi2));
        d.kd = B->kernel(d.phi);
        return d;
    }

    fp_obj one() const { return hs.one(); }
    fp_obj H_obj(const AObj& X, const AObj& Y) const { return build(X, Y).kd.K; }

    // f: X' -> X, g: Y -> Y' in A(Child); result H'(X,Y) -> H'(X',Y')
    fp_mor H_mor(const AMor& f, const AMor& g) const {
        diagram d = build(f.dst, g.src);
        diagram dp = build(f.src, g.dst);
        fp_mor base = hs.H_mor(f.alpha, g.alpha);
        fp_mor q1 = B->cokernel_colift(d.m1, B->compose(base, dp.pi1));
        fp_mor tau = B->compose(d.kd.emb, q1);
        return B->kernel_lift(dp.kd, dp.phi, tau);
    }

    fp_mor nu(const AMor& f) const {
        diagram d = build(f.src, f.dst);
        fp_mor t = hs.nu(f.alpha);
        return B->kernel_lift(d.kd, d.phi, B->compose(t, d.pi1));
    }

    AMor nu_inv(const fp_mor& t, const AObj& X, const AObj& Y) const {
        diagram d = build(X, Y);
        fp_mor c = B->compose(t, d.kd.emb); // 1 -> Q1
        // the cokernel projection pi1 has identity underlying morphism and a free source,
        // so the same underlying row already lifts c through pi1
        fp_obj HAB = hs.H_obj(A->carrier(X), A->carrier(Y));
        fp_mor s = B->make_mor(hs.one(), HAB, c.alpha);
        auto alpha = hs.nu_inv(s, A->carrier(X), A->carrier(Y));
        AMor out = A->make_mor(X, Y, alpha);
        require(A->is_valid(out), "nu_inv: value outside the morphism subgroup");
        return out;
    }
};

// fpmod-over-fpmod structure (Construction step 4)
using fp_hom_structure = freyd_hom_structure<rows_cat, rows_over_fp_hs>;

inline fp_hom_structure make_fp_hom_structure(fp_cat& modcat, fp_cat& bcat) {
    return fp_hom_structure{&modcat, &bcat, rows_over_fp_hs{&bcat}};
}

} // namespace fpcat

#endif
