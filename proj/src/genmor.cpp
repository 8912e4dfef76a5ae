#include "fpcat/genmor.hpp"

namespace fpcat {

genmor make_genmor(fp_cat& C, fp_mor lam, fp_mor rho) {
    require(C.obj_eq(lam.src, rho.src), "genmor: arms must share the apex");
    genmor S;
    S.src = lam.dst;
    S.dst = rho.dst;
    S.lam = std::move(lam);
    S.rho = std::move(rho);
    return S;
}

genmor honest_embed(fp_cat& C, const fp_mor& f) { return make_genmor(C, C.id(f.src), f); }

genmor gen_identity(fp_cat& C, const fp_obj& A) { return honest_embed(C, C.id(A)); }

const fp_sub& associated_relation(fp_cat& C, const genmor& S) {
    auto& cached = S.relation.get([&]() -> std::optional<fp_sub> {
        fp_mor into_sum = C.pair_into(S.lam, S.rho);
        return C.sub_full_image(into_sum);
    });
    return *cached;
}

bool gen_eq(fp_cat& C, const genmor& S, const genmor& T) {
    require(C.obj_eq(S.src, T.src) && C.obj_eq(S.dst, T.dst), "gen_eq: endpoint mismatch");
    return C.sub_eq(associated_relation(C, S), associated_relation(C, T));
}

genmor gen_compose(fp_cat& C, const genmor& S, const genmor& T) {
    require(C.obj_eq(S.dst, T.src), "gen_compose: endpoints do not match");
    auto pb = C.pullback(S.rho, T.lam);
    return make_genmor(C, C.compose(pb.p1, S.lam), C.compose(pb.p2, T.rho));
}

genmor pseudo_inverse(const genmor& S) {
    genmor out;
    out.src = S.dst;
    out.dst = S.src;
    out.lam = S.rho;
    out.rho = S.lam;
    return out;
}

std::pair<genmor, genmor> decompose(fp_cat& C, const genmor& S) {
    return {pseudo_inverse(honest_embed(C, S.lam)), honest_embed(C, S.rho)};
}

canonical_subs canonical_subobjects(fp_cat& C, const genmor& S) {
    canonical_subs out{
        C.sub_full_image(S.lam),
        C.sub_full_image(C.compose(C.kernel_embedding(S.rho), S.lam)),
        C.sub_full_image(S.rho),
        C.sub_full_image(C.compose(C.kernel_embedding(S.lam), S.rho)),
    };
    return out;
}

subquotient make_subquotient(fp_cat& C, const fp_obj& ambient, fp_sub upper, fp_sub lower) {
    require(C.sub_leq(lower, upper), "subquotient: lower must be contained in upper");
    subquotient q{ambient, std::move(upper), std::move(lower), {}, {}, {}};
    q.lower_in_upper = C.sub_lift(q.lower, q.upper);
    q.quot = C.cokernel_obj(q.lower_in_upper);
    q.quot_proj = C.cokernel_projection(q.lower_in_upper);
    return q;
}

genmor subquotient_emb(fp_cat& C, const subquotient& q) {
    return make_genmor(C, q.quot_proj, q.upper.mono);
}

genmor subquotient_proj(fp_cat& C, const subquotient& q) {
    return make_genmor(C, q.upper.mono, q.quot_proj);
}

gen_hom_theorem generalized_hom_theorem(fp_cat& C, const genmor& S) {
    canonical_subs cs = canonical_subobjects(C, S);
    subquotient dom = make_subquotient(C, S.src, cs.domain, cs.gkernel);
    subquotient img = make_subquotient(C, S.dst, cs.gimage, cs.defect);

    // the epi parts of the arms: apex ->> image(lam), apex ->> image(rho)
    auto im_l = C.image(S.lam);
    auto im_r = C.image(S.rho);
    fp_mor el = im_l.epi_part;
    fp_mor er = im_r.epi_part;

    // t: domain -> gimage/defect with el * t = er * img.quot_proj
    fp_mor t = C.colift_along_epi(el, C.compose(er, img.quot_proj));
    // iso: domain/gkernel -> gimage/defect with dom.quot_proj * iso = t
    fp_mor iso = C.colift_along_epi(dom.quot_proj, t);

    gen_hom_theorem out{subquotient_proj(C, dom), iso, subquotient_emb(C, img), dom.quot, img.quot};
    return out;
}

std::optional<fp_mor> honest_part(fp_cat& C, const genmor& S) {
    // honest iff the domain is full and the defect vanishes
    if (!C.is_epi(S.lam)) return std::nullopt;
    fp_mor defect_map = C.compose(C.kernel_embedding(S.lam), S.rho);
    if (!C.is_zero_mor(defect_map)) return std::nullopt;
    return C.colift_along_epi(S.lam, S.rho);
}

fp_obj cohomology_at(fp_cat& C, const fp_mor& din, const fp_mor& dout) {
    auto kd = C.kernel(dout);
    auto im = C.image(din);
    fp_mor into_kernel = C.kernel_lift(kd, dout, im.emb);
    return C.cokernel_obj(into_kernel);
}

fp_mor cohomology_induced(fp_cat& C, const fp_mor& dA, const fp_mor& dB, const fp_mor& beta,
                          const fp_mor& dAp, const fp_mor& dBp) {
    require(C.is_zero_mor(C.compose(dA, dB)), "cohomology_induced: dA * dB != 0");
    require(C.is_zero_mor(C.compose(dAp, dBp)), "cohomology_induced: dA' * dB' != 0");
    auto kd = C.kernel(dB);
    require(C.is_zero_mor(C.compose(C.compose(kd.emb, beta), dBp)),
            "cohomology_induced: beta does not map kernel into kernel");

    auto build = [&](const fp_mor& din, const fp_mor& dout) {
        auto k = C.kernel(dout);
        auto im = C.image(din);
        fp_mor into_kernel = C.kernel_lift(k, dout, im.emb);
        fp_mor eps = C.cokernel_projection(into_kernel);
        return std::make_pair(k, eps);
    };
    auto [kB, epsB] = build(dA, dB);
    auto [kBp, epsBp] = build(dAp, dBp);

    genmor comp = gen_compose(C, pseudo_inverse(honest_embed(C, epsB)), honest_embed(C, kB.emb));
    comp = gen_compose(C, comp, honest_embed(C, beta));
    comp = gen_compose(C, comp, pseudo_inverse(honest_embed(C, kBp.emb)));
    comp = gen_compose(C, comp, honest_embed(C, epsBp));
    auto h = honest_part(C, comp);
    ensure(h.has_value(), "cohomology_induced: composite must be honest");
    return *h;
}

snake_output snake_connecting(fp_cat& C, const snake_input& in) {
    require(C.mor_eq(C.compose(in.delta, in.beta), C.compose(in.alpha, in.iota)),
            "snake: left square does not commute");
    require(C.mor_eq(C.compose(in.eps, in.gamma), C.compose(in.beta, in.nu)),
            "snake: right square does not commute");
    require(C.is_mono(in.delta), "snake: delta must be mono");
    require(C.is_epi(in.eps), "snake: eps must be epi");
    require(C.is_mono(in.iota), "snake: iota must be mono");
    require(C.is_epi(in.nu), "snake: nu must be epi");
    require(C.sub_eq(C.sub_full_image(in.delta), C.kernel_sub(in.eps)),
            "snake: first row not exact in the middle");
    require(C.sub_eq(C.sub_full_image(in.iota), C.kernel_sub(in.nu)),
            "snake: second row not exact in the middle");

    auto kg = C.kernel(in.gamma);
    fp_mor eta = kg.emb;
    fp_mor zeta = C.cokernel_projection(in.alpha);

    genmor comp = gen_compose(C, honest_embed(C, eta), pseudo_inverse(honest_embed(C, in.eps)));
    comp = gen_compose(C, comp, honest_embed(C, in.beta));
    comp = gen_compose(C, comp, pseudo_inverse(honest_embed(C, in.iota)));
    comp = gen_compose(C, comp, honest_embed(C, zeta));
    auto h = honest_part(C, comp);
    ensure(h.has_value(), "snake: connecting composite must be honest");

    return {kg.K, C.cokernel_obj(in.alpha), eta, zeta, *h};
}

} // namespace fpcat
