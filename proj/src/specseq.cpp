#include "fpcat/specseq.hpp"

namespace fpcat {

fp_obj filtered_complex::object_at(int i) const {
    if (i < imin || i > imax) return C->zero_obj();
    return objects[static_cast<size_t>(i - imin)];
}

fp_mor filtered_complex::diff_at(int i) const {
    if (i < imin || i >= imax) return C->zero(object_at(i), object_at(i + 1));
    return differentials[static_cast<size_t>(i - imin)];
}

fp_sub filtered_complex::filt_at(int i, int j) const {
    fp_obj M = object_at(i);
    if (i < imin || i > imax) return C->full_sub(M);
    if (j <= jmin) return C->full_sub(M);
    if (j > jmax) return C->zero_sub(M);
    return filtration[static_cast<size_t>(i - imin)][static_cast<size_t>(j - jmin - 1)];
}

filtered_complex make_filtered_complex(fp_cat& C, int imin, std::vector<fp_obj> objects,
                                       std::vector<fp_mor> differentials, int jmin,
                                       std::vector<std::vector<fp_sub>> interior_filtration) {
    require(!objects.empty(), "filtered complex needs at least one object");
    require(differentials.size() + 1 == objects.size(),
            "filtered complex: need one differential per adjacent pair");
    require(interior_filtration.size() == objects.size(),
            "filtered complex: one filtration chain per degree");
    filtered_complex fc;
    fc.C = &C;
    fc.imin = imin;
    fc.imax = imin + static_cast<int>(objects.size()) - 1;
    fc.jmin = jmin;
    fc.jmax = jmin + static_cast<int>(interior_filtration[0].size());
    fc.objects = std::move(objects);
    fc.differentials = std::move(differentials);
    fc.filtration = std::move(interior_filtration);

    for (auto& chain : fc.filtration)
        require(static_cast<int>(chain.size()) == fc.jmax - fc.jmin,
                "filtered complex: ragged filtration chains");
    for (size_t i = 0; i + 1 < fc.objects.size(); ++i) {
        require(C.obj_eq(fc.differentials[i].src, fc.objects[i]) &&
                    C.obj_eq(fc.differentials[i].dst, fc.objects[i + 1]),
                "filtered complex: differential endpoints mismatch");
        if (i + 2 < fc.objects.size())
            require(C.is_zero_mor(C.compose(fc.differentials[i], fc.differentials[i + 1])),
                    "filtered complex: d * d != 0");
    }
    for (int i = fc.imin; i <= fc.imax; ++i) {
        for (int j = fc.jmin; j <= fc.jmax; ++j) {
            require(C.sub_leq(fc.filt_at(i, j + 1), fc.filt_at(i, j)),
                    "filtered complex: filtration not descending");
            if (i < fc.imax)
                require(C.sub_leq(C.sub_image(fc.diff_at(i), fc.filt_at(i, j)), fc.filt_at(i + 1, j)),
                        "filtered complex: differential does not respect the filtration");
        }
    }
    return fc;
}

const subquotient& spectral_sequence::e0_sq(int p, int q) {
    auto key = std::make_tuple(p, q);
    auto it = sq0_.find(key);
    if (it != sq0_.end()) return it->second;
    int n = p + q;
    subquotient sq = make_subquotient(*C_, fc_.object_at(n), fc_.filt_at(n, p), fc_.filt_at(n, p + 1));
    return sq0_.emplace(key, std::move(sq)).first->second;
}

const genmor& spectral_sequence::gen_diff(int r, int p, int q) {
    require(r >= 0, "gen_diff: page index must be nonnegative");
    auto key = std::make_tuple(r, p, q);
    auto it = gdiff_.find(key);
    if (it != gdiff_.end()) return it->second;
    int n = p + q;
    genmor g = gen_compose(*C_, subquotient_emb(*C_, e0_sq(p, q)),
                           honest_embed(*C_, fc_.diff_at(n)));
    g = gen_compose(*C_, g, subquotient_proj(*C_, e0_sq(p + r, q - r + 1)));
    return gdiff_.emplace(key, std::move(g)).first->second;
}

namespace {

fp_sub pull_to_ambient(fp_cat& C, const subquotient& sq, const fp_sub& s) {
    fp_sub pre = C.sub_preimage(sq.quot_proj, s);
    return C.make_sub(C.compose(pre.mono, sq.upper.mono));
}

} // namespace

std::pair<fp_sub, fp_sub> spectral_sequence::page_bounds(int r, int p, int q) {
    const subquotient& sq0 = e0_sq(p, q);
    canonical_subs out_subs = canonical_subobjects(*C_, gen_diff(r, p, q));
    canonical_subs in_subs = canonical_subobjects(*C_, gen_diff(r, p - r, q + r - 1));
    return {pull_to_ambient(*C_, sq0, out_subs.domain), pull_to_ambient(*C_, sq0, in_subs.defect)};
}

closed_form_subs spectral_sequence::canonical_ambient(int r, int p, int q) {
    canonical_subs cs = canonical_subobjects(*C_, gen_diff(r, p, q));
    const subquotient& src = e0_sq(p, q);
    const subquotient& dst = e0_sq(p + r, q - r + 1);
    return {
        pull_to_ambient(*C_, src, cs.domain),
        pull_to_ambient(*C_, src, cs.gkernel),
        pull_to_ambient(*C_, dst, cs.gimage),
        pull_to_ambient(*C_, dst, cs.defect),
    };
}

const subquotient& spectral_sequence::page_sq(int r, int p, int q) {
    auto key = std::make_tuple(r, p, q);
    auto it = page_.find(key);
    if (it != page_.end()) return it->second;
    auto [upper, lower] = page_bounds(r, p, q);
    subquotient sq = make_subquotient(*C_, fc_.object_at(p + q), upper, lower);
    return page_.emplace(key, std::move(sq)).first->second;
}

fp_obj spectral_sequence::page_object(int r, int p, int q) { return page_sq(r, p, q).quot; }

fp_mor spectral_sequence::page_diff(int r, int p, int q) {
    auto key = std::make_tuple(r, p, q);
    auto it = pdiff_.find(key);
    if (it != pdiff_.end()) return it->second;
    int n = p + q;
    genmor g = gen_compose(*C_, subquotient_emb(*C_, page_sq(r, p, q)),
                           honest_embed(*C_, fc_.diff_at(n)));
    g = gen_compose(*C_, g, subquotient_proj(*C_, page_sq(r, p + r, q - r + 1)));
    auto h = honest_part(*C_, g);
    ensure(h.has_value(), "page differential must be honest");
    return pdiff_.emplace(key, *h).first->second;
}

closed_form_subs spectral_sequence::closed_form(int r, int p, int q) {
    int n = p + q;
    fp_mor d = fc_.diff_at(n);
    fp_sub Fp = fc_.filt_at(n, p);
    fp_sub Fp1 = fc_.filt_at(n, p + 1);
    fp_sub Gr = fc_.filt_at(n + 1, p + r);
    fp_sub Gr1 = fc_.filt_at(n + 1, p + r + 1);
    closed_form_subs out{
        C_->sub_join(C_->sub_intersect(C_->sub_preimage(d, Gr), Fp), Fp1),
        C_->sub_join(C_->sub_intersect(C_->sub_preimage(d, Gr1), Fp), Fp1),
        C_->sub_join(C_->sub_intersect(C_->sub_image(d, Fp), Gr), Gr1),
        C_->sub_join(C_->sub_intersect(C_->sub_image(d, Fp1), Gr), Gr1),
    };
    return out;
}

page_turn_certificate spectral_sequence::check_page_turn(int r, int p, int q) {
    fp_mor dout = page_diff(r, p, q);
    fp_mor din = page_diff(r, p - r, q + r - 1);
    ensure(C_->is_zero_mor(C_->compose(din, dout)), "page differentials must square to zero");

    // literal ker(d_r)/im(d_r) built by the abelian toolbox inside E_r
    auto kd = C_->kernel(dout);
    auto im = C_->image(din);
    fp_mor into_kernel = C_->kernel_lift(kd, dout, im.emb);
    fp_mor hproj = C_->cokernel_projection(into_kernel);
    fp_obj H = C_->cokernel_obj(into_kernel);

    const subquotient& sq_r = page_sq(r, p, q);
    genmor embH = gen_compose(*C_, make_genmor(*C_, hproj, kd.emb), subquotient_emb(*C_, sq_r));

    const subquotient& sq_next = page_sq(r + 1, p, q);
    auto iota =
        honest_part(*C_, gen_compose(*C_, subquotient_emb(*C_, sq_next), pseudo_inverse(embH)));
    auto iota_inv =
        honest_part(*C_, gen_compose(*C_, embH, pseudo_inverse(subquotient_emb(*C_, sq_next))));
    ensure(iota.has_value() && iota_inv.has_value(), "page-turn comparison must be honest");
    bool ok = C_->mor_eq(C_->compose(*iota, *iota_inv), C_->id(sq_next.quot)) &&
              C_->mor_eq(C_->compose(*iota_inv, *iota), C_->id(H));
    ensure(ok, "page-turn comparison must be a two-sided isomorphism");
    return {*iota, *iota_inv, ok};
}

int spectral_sequence::stabilization_bound() const {
    int degree_span = fc_.imax - fc_.imin + 1;
    int filt_span = fc_.jmax - fc_.jmin + 1;
    return std::max(degree_span, filt_span) + 1;
}

} // namespace fpcat
