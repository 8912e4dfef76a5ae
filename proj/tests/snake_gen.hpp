#ifndef FPCAT_SNAKE_GEN_HPP
#define FPCAT_SNAKE_GEN_HPP

#include "fpcat/genmor.hpp"
#include "fpcat/homstruct.hpp"
#include "test_rng.hpp"
#include "z_element_oracle.hpp"

// random snake diagrams over Z with finite modules, plus the element-wise
// connecting-map oracle that chases through Smith coordinates
namespace snakegen {

using namespace fpcat;

struct row {
    fp_obj A, B, C;
    fp_mor delta; // A -> B mono
    fp_mor eps;   // B -> C epi
};

inline fp_obj random_finite_module(test_rng& rng, fp_cat& C, long max_order = 64) {
    const ring_ptr& Z = C.ch.R;
    for (int tries = 0; tries < 200; ++tries) {
        int a = 1 + rng.below(2);
        matrix rel(Z, a, a);
        for (auto& e : rel.e) e = ring_from_int(*Z, rng.range(-4, 4));
        fp_obj M = fp_from_relations(rel);
        auto d = z_decompose(M);
        if (d.free_rank != 0) continue;
        long order = 1;
        for (auto& t : d.torsion) order *= t.get_si();
        if (order < 2 || order > max_order) continue;
        return M;
    }
    return fp_from_relations(mat_from_ints(Z, 1, 1, {4}));
}

// a short exact sequence 0 -> A -> B -> C -> 0 with A the image of a random map
inline row random_row(test_rng& rng, fp_cat& C) {
    const ring_ptr& Z = C.ch.R;
    fp_obj B = random_finite_module(rng, C);
    int s = 1 + rng.below(2);
    matrix gens(Z, s, fp_gens(B));
    for (auto& e : gens.e) e = ring_from_int(*Z, rng.range(-3, 3));
    fp_mor span = C.make_mor(fp_free(Z, s), B, rows_cat::Mor{gens});
    auto im = C.image(span);
    fp_mor delta = im.emb;
    fp_mor eps = C.cokernel_projection(delta);
    return {im.I, B, C.cokernel_obj(delta), delta, eps};
}

struct diagram {
    row top, bottom;
    fp_mor alpha, beta, gamma;
};

inline diagram random_diagram(test_rng& rng, fp_cat& C, fp_hom_structure& hs) {
    for (int tries = 0; tries < 400; ++tries) {
        row top = random_row(rng, C);
        row bottom = random_row(rng, C);
        // sample beta: B -> B' through the hom structure, keeping A inside A'
        fp_obj H = hs.H_obj(top.B, bottom.B);
        matrix r(C.ch.R, 1, fp_gens(H));
        for (auto& e : r.e) e = ring_from_int(*C.ch.R, rng.range(-3, 3));
        fp_mor elt = C.make_mor(fp_free(C.ch.R, 1), H, rows_cat::Mor{r});
        fp_mor beta = hs.nu_inv(elt, top.B, bottom.B);
        fp_sub subA = C.make_sub(top.delta);
        fp_sub subAp = C.make_sub(bottom.delta);
        if (!C.sub_leq(C.sub_image(beta, subA), subAp)) continue;
        fp_mor alpha = C.lift_along_mono(bottom.delta, subAp.mono_wit,
                                         C.compose(top.delta, beta));
        fp_mor gamma = C.cokernel_colift(top.delta, C.compose(beta, bottom.eps));
        return {top, bottom, alpha, beta, gamma};
    }
    throw internal_error("snake generator exhausted its retries");
}

// element-wise connecting map: chase through representatives
struct oracle_result {
    bool ok = true;
    std::string detail;
};

inline oracle_result check_snake(fp_cat& C, const diagram& d, const snake_output& out) {
    using namespace zoracle;
    oracle_result res;
    elems eA = enumerate_elements(d.top.A), eB = enumerate_elements(d.top.B),
          eC = enumerate_elements(d.top.C);
    elems eAp = enumerate_elements(d.bottom.A), eBp = enumerate_elements(d.bottom.B),
          eCp = enumerate_elements(d.bottom.C);
    // independent exactness certification at the element level: delta injective
    for (auto& x : eA.reps)
        for (auto& y : eA.reps) {
            if (&x == &y) continue;
            if (!same_element(d.top.A, x, y) &&
                same_element(d.top.B, apply(d.top.delta, x), apply(d.top.delta, y)))
                return {false, "top delta is not injective on elements"};
        }
    // surjectivity of eps and ker(eps) = im(delta)
    for (auto& c : eC.reps)
        if (fibre(eB, d.top.eps, c).empty()) return {false, "top eps is not surjective"};
    for (auto& b : eB.reps) {
        bool in_ker = same_element(d.top.C, apply(d.top.eps, b), mat_zero(b.R, 1, fp_gens(d.top.C)));
        bool in_im = false;
        for (auto& a : eA.reps)
            if (same_element(d.top.B, apply(d.top.delta, a), b)) { in_im = true; break; }
        if (in_ker != in_im) return {false, "top row not exact in the middle"};
    }
    // the same for the bottom row
    for (auto& c : eCp.reps)
        if (fibre(eBp, d.bottom.eps, c).empty()) return {false, "bottom eps is not surjective"};
    for (auto& b : eBp.reps) {
        bool in_ker =
            same_element(d.bottom.C, apply(d.bottom.eps, b), mat_zero(b.R, 1, fp_gens(d.bottom.C)));
        bool in_im = false;
        for (auto& a : eAp.reps)
            if (same_element(d.bottom.B, apply(d.bottom.delta, a), b)) { in_im = true; break; }
        if (in_ker != in_im) return {false, "bottom row not exact in the middle"};
    }

    // chase every element of the engine's kernel object
    elems eK = enumerate_elements(out.ker_gamma);
    for (auto& k : eK.reps) {
        matrix c = apply(out.ker_emb, k);
        // gamma(c) must vanish
        if (!same_element(d.bottom.C, apply(d.gamma, c), mat_zero(c.R, 1, fp_gens(d.bottom.C))))
            return {false, "kernel embedding image not killed by gamma"};
        // choose b with eps(b) = c
        auto bs = fibre(eB, d.top.eps, c);
        if (bs.empty()) return {false, "no preimage under eps"};
        matrix b = bs.front();
        matrix bp = apply(d.beta, b);
        // unique a' with iota(a') = b'
        std::optional<matrix> ap;
        for (auto& a : eAp.reps)
            if (same_element(d.bottom.B, apply(d.bottom.delta, a), bp)) { ap = a; break; }
        if (!ap) return {false, "chase left the image of iota"};
        // engine: delta(k) must equal the class of a' in coker(alpha)
        matrix lhs = apply(out.delta, k);
        matrix rhs = mat_mul(*ap, out.coker_proj.alpha.a);
        if (!same_element(out.coker_alpha, lhs, rhs))
            return {false, "connecting morphism disagrees with the element chase"};
    }
    return res;
}

} // namespace snakegen

#endif
