#include "fpcat/category.hpp"

namespace fpcat {

// --- quiver closure child pieces ---

qrows_cat::Mor qrows_cat::inj1(const Obj& a, const Obj& b) const {
    Mor out = qb_zero(*q, a, sum(a, b));
    for (size_t i = 0; i < a.size(); ++i)
        out.blocks[i * (a.size() + b.size()) + i] = pl_identity(a[i]);
    return out;
}
qrows_cat::Mor qrows_cat::inj2(const Obj& a, const Obj& b) const {
    Mor out = qb_zero(*q, b, sum(a, b));
    for (size_t i = 0; i < b.size(); ++i)
        out.blocks[i * (a.size() + b.size()) + a.size() + i] = pl_identity(b[i]);
    return out;
}
qrows_cat::Mor qrows_cat::proj1(const Obj& a, const Obj& b) const {
    Mor out = qb_zero(*q, sum(a, b), a);
    for (size_t i = 0; i < a.size(); ++i) out.blocks[i * a.size() + i] = pl_identity(a[i]);
    return out;
}
qrows_cat::Mor qrows_cat::proj2(const Obj& a, const Obj& b) const {
    Mor out = qb_zero(*q, sum(a, b), b);
    for (size_t i = 0; i < b.size(); ++i)
        out.blocks[(a.size() + i) * b.size() + i] = pl_identity(b[i]);
    return out;
}
qrows_cat::Mor qrows_cat::pair_from(const Mor& f, const Mor& g) const {
    require(f.dst == g.dst, "qrows pair_from: target mismatch");
    Mor out{sum(f.src, g.src), f.dst, {}};
    out.blocks = f.blocks;
    out.blocks.insert(out.blocks.end(), g.blocks.begin(), g.blocks.end());
    return out;
}
qrows_cat::Mor qrows_cat::pair_into(const Mor& f, const Mor& g) const {
    require(f.src == g.src, "qrows pair_into: source mismatch");
    Mor out{f.src, sum(f.dst, g.dst), {}};
    size_t n1 = f.dst.size(), n2 = g.dst.size();
    for (size_t i = 0; i < f.src.size(); ++i) {
        for (size_t j = 0; j < n1; ++j) out.blocks.push_back(f.blocks[i * n1 + j]);
        for (size_t j = 0; j < n2; ++j) out.blocks.push_back(g.blocks[i * n2 + j]);
    }
    return out;
}

// --- descriptors ---

cat_ptr cat_ring(ring_ptr R) {
    auto c = std::make_shared<cat_desc>();
    c->kind = cat_kind::ring_cat;
    c->ring = std::move(R);
    return c;
}
cat_ptr cat_quiver(quiver_ptr q) {
    auto c = std::make_shared<cat_desc>();
    c->kind = cat_kind::quiver_cat;
    c->qv = std::move(q);
    return c;
}
cat_ptr cat_add(cat_ptr child) {
    require(caps_of(child).ab, "additive closure needs an Ab-category");
    auto c = std::make_shared<cat_desc>();
    c->kind = cat_kind::additive_closure;
    c->child = std::move(child);
    return c;
}
cat_ptr cat_op(cat_ptr child) {
    auto c = std::make_shared<cat_desc>();
    c->kind = cat_kind::opposite;
    c->child = std::move(child);
    return c;
}
cat_ptr cat_freyd(cat_ptr child) {
    require(caps_of(child).additive, "Freyd category needs an additive child");
    auto c = std::make_shared<cat_desc>();
    c->kind = cat_kind::freyd;
    c->child = std::move(child);
    return c;
}

bool cat_eq(const cat_ptr& a, const cat_ptr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case cat_kind::ring_cat: return same_ring(a->ring, b->ring);
    case cat_kind::quiver_cat: return a->qv == b->qv;
    default: return cat_eq(a->child, b->child);
    }
}

std::string cat_name(const cat_ptr& c) {
    switch (c->kind) {
    case cat_kind::ring_cat: return "C(" + ring_name(*c->ring) + ")";
    case cat_kind::quiver_cat: return "C(Q,quiver)";
    case cat_kind::additive_closure: return cat_name(c->child) + "+";
    case cat_kind::opposite: return cat_name(c->child) + "^op";
    case cat_kind::freyd: return "A(" + cat_name(c->child) + ")";
    }
    return "?";
}

capabilities caps_of(const cat_ptr& c) {
    capabilities out;
    switch (c->kind) {
    case cat_kind::ring_cat:
        out.ab = true;
        out.dec_eq = true;
        out.hom_structure = true; // all supported rings are commutative
        break;
    case cat_kind::quiver_cat:
        out.ab = true;
        out.dec_eq = true;
        out.hom_structure = true;
        break;
    case cat_kind::additive_closure: {
        capabilities ch = caps_of(c->child);
        out.ab = true;
        out.additive = true;
        out.dec_eq = ch.dec_eq;
        out.hom_structure = ch.hom_structure;
        if (c->child->kind == cat_kind::ring_cat) {
            out.dec_lifts = c->child->ring->ideal.empty();
            out.weak_kernels = c->child->ring->ideal.empty();
        } else if (c->child->kind == cat_kind::quiver_cat) {
            out.dec_lifts = true; // through the Rows_Q homomorphism structure
            out.weak_kernels = false;
        }
        break;
    }
    case cat_kind::opposite: {
        capabilities ch = caps_of(c->child);
        out = ch;
        std::swap(out.kernels, out.cokernels);
        out.dec_lifts = false;
        break;
    }
    case cat_kind::freyd: {
        capabilities ch = caps_of(c->child);
        out.ab = true;
        out.additive = true;
        out.cokernels = true;
        out.dec_eq = ch.dec_lifts; // equality is a witness search
        out.kernels = ch.weak_kernels;
        out.abelian = ch.weak_kernels;
        out.hom_structure = ch.weak_kernels && ch.hom_structure;
        break;
    }
    }
    return out;
}

// --- engines on demand ---

namespace {

fp_cat engine_fp(const cat_ptr& c) {
    require(c->kind == cat_kind::freyd && c->child->kind == cat_kind::additive_closure &&
                c->child->child->kind == cat_kind::ring_cat,
            "expected a Freyd category over Rows_R");
    return make_fp_cat(c->child->child->ring);
}

qfreyd_cat engine_qf(const cat_ptr& c) {
    require(c->kind == cat_kind::freyd && c->child->kind == cat_kind::additive_closure &&
                c->child->child->kind == cat_kind::quiver_cat,
            "expected a Freyd category over a quiver closure");
    return qfreyd_cat(qrows_cat{c->child->child->qv, make_QQ()});
}

const quiver& quiver_of(const cat_ptr& c) {
    const cat_desc* d = c.get();
    while (d->kind != cat_kind::quiver_cat) {
        require(d->child != nullptr, "no quiver in this category");
        d = d->child.get();
    }
    return *d->qv;
}

} // namespace

// --- objects ---

bool obj_eq(const cat_obj& a, const cat_obj& b) {
    if (!cat_eq(a.cat, b.cat)) return false;
    if (a.pay.index() != b.pay.index()) return false;
    switch (a.pay.index()) {
    case 0: return true;
    case 1: return std::get<int>(a.pay) == std::get<int>(b.pay);
    case 2: return std::get<rows_cat::Obj>(a.pay).n == std::get<rows_cat::Obj>(b.pay).n;
    case 3: return std::get<std::vector<int>>(a.pay) == std::get<std::vector<int>>(b.pay);
    case 4:
        return obj_eq(*std::get<std::shared_ptr<cat_obj>>(a.pay),
                      *std::get<std::shared_ptr<cat_obj>>(b.pay));
    case 5: return mat_eq(fp_rel(std::get<fp_obj>(a.pay)), fp_rel(std::get<fp_obj>(b.pay)));
    case 6:
        return qb_eq(std::get<qfreyd_cat::obj>(a.pay).rho, std::get<qfreyd_cat::obj>(b.pay).rho);
    }
    return false;
}

cat_obj ring_star(const cat_ptr& c) {
    require(c->kind == cat_kind::ring_cat, "ring_star: wrong category");
    return {c, std::monostate{}};
}
cat_obj quiver_vertex(const cat_ptr& c, int v) {
    require(c->kind == cat_kind::quiver_cat, "quiver_vertex: wrong category");
    require(v >= 0 && v < static_cast<int>(c->qv->vertices.size()), "vertex out of range");
    return {c, v};
}
cat_obj rows_object(const cat_ptr& c, int n) {
    require(c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::ring_cat,
            "rows_object: wrong category");
    require(n >= 0, "rows_object: negative rank");
    return {c, rows_cat::Obj{n}};
}
cat_obj qadd_object(const cat_ptr& c, std::vector<int> vs) {
    require(c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::quiver_cat,
            "qadd_object: wrong category");
    return {c, std::move(vs)};
}
cat_obj op_object(const cat_ptr& c, cat_obj inner) {
    require(c->kind == cat_kind::opposite, "op_object: wrong category");
    require(cat_eq(c->child, inner.cat), "op_object: inner object from the wrong category");
    return {c, std::make_shared<cat_obj>(std::move(inner))};
}
cat_obj freyd_object(const cat_ptr& c, const cat_mor& rho) {
    require(c->kind == cat_kind::freyd, "freyd_object: wrong category");
    require(cat_eq(c->child, rho.cat), "freyd_object: relation from the wrong child category");
    if (c->child->child->kind == cat_kind::ring_cat)
        return {c, fp_from_relations(std::get<rows_cat::Mor>(rho.pay).a)};
    return {c, qfreyd_cat::obj{std::get<qblock>(rho.pay)}};
}

// --- morphisms ---

cat_mor ring_mor(const cat_ptr& c, const scalar& s) {
    require(c->kind == cat_kind::ring_cat, "ring_mor: wrong category");
    return {c, ring_star(c), ring_star(c), s};
}
cat_mor quiver_mor(const cat_ptr& c, path_lin f) {
    require(c->kind == cat_kind::quiver_cat, "quiver_mor: wrong category");
    cat_obj s = quiver_vertex(c, f.src), d = quiver_vertex(c, f.dst);
    return {c, s, d, std::move(f)};
}
cat_mor rows_mor(const cat_ptr& c, matrix m) {
    cat_obj s = rows_object(c, m.m), d = rows_object(c, m.n);
    return {c, s, d, rows_cat::Mor{std::move(m)}};
}
cat_mor qadd_mor(const cat_ptr& c, qblock b) {
    cat_obj s = qadd_object(c, b.src), d = qadd_object(c, b.dst);
    return {c, s, d, std::move(b)};
}
cat_mor freyd_mor(const cat_ptr& c, const cat_obj& src, const cat_obj& dst, const cat_mor& alpha) {
    require(c->kind == cat_kind::freyd, "freyd_mor: wrong category");
    require(cat_eq(src.cat, c) && cat_eq(dst.cat, c), "freyd_mor: objects from the wrong category");
    if (c->child->child->kind == cat_kind::ring_cat) {
        fp_cat F = engine_fp(c);
        fp_mor m = F.make_mor(std::get<fp_obj>(src.pay), std::get<fp_obj>(dst.pay),
                              std::get<rows_cat::Mor>(alpha.pay));
        require(F.is_valid(m), "freyd_mor: no relation witness exists");
        return {c, src, dst, std::move(m)};
    }
    qfreyd_cat F = engine_qf(c);
    qfreyd_cat::mor m = F.make_mor(std::get<qfreyd_cat::obj>(src.pay),
                                   std::get<qfreyd_cat::obj>(dst.pay), std::get<qblock>(alpha.pay));
    require(F.is_valid(m), "freyd_mor: no relation witness exists");
    return {c, src, dst, std::move(m)};
}

cat_mor compose(const cat_mor& f, const cat_mor& g) {
    require(cat_eq(f.cat, g.cat), "compose: category mismatch");
    require(obj_eq(f.range, g.source), "compose: range and source do not match");
    const cat_ptr& c = f.cat;
    switch (c->kind) {
    case cat_kind::ring_cat:
        return {c, f.source, g.range,
                ring_mul(*c->ring, std::get<scalar>(f.pay), std::get<scalar>(g.pay))};
    case cat_kind::quiver_cat:
        return {c, f.source, g.range, pl_compose(std::get<path_lin>(f.pay), std::get<path_lin>(g.pay))};
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return {c, f.source, g.range,
                    rows_cat::Mor{mat_mul(std::get<rows_cat::Mor>(f.pay).a,
                                          std::get<rows_cat::Mor>(g.pay).a)}};
        return {c, f.source, g.range, qb_compose(std::get<qblock>(f.pay), std::get<qblock>(g.pay))};
    case cat_kind::opposite: {
        cat_mor inner = compose(op_unwrap(g), op_unwrap(f));
        return {c, f.source, g.range, std::make_shared<cat_mor>(std::move(inner))};
    }
    case cat_kind::freyd:
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return {c, f.source, g.range, F.compose(std::get<fp_mor>(f.pay), std::get<fp_mor>(g.pay))};
        } else {
            qfreyd_cat F = engine_qf(c);
            return {c, f.source, g.range,
                    F.compose(std::get<qfreyd_cat::mor>(f.pay), std::get<qfreyd_cat::mor>(g.pay))};
        }
    }
    throw internal_error("compose: unhandled kind");
}

bool mor_eq(const cat_mor& f, const cat_mor& g) {
    require(cat_eq(f.cat, g.cat), "mor_eq: category mismatch");
    require(obj_eq(f.source, g.source) && obj_eq(f.range, g.range),
            "mor_eq: source/range mismatch");
    const cat_ptr& c = f.cat;
    switch (c->kind) {
    case cat_kind::ring_cat:
        return ring_eq(*c->ring, std::get<scalar>(f.pay), std::get<scalar>(g.pay));
    case cat_kind::quiver_cat:
        return pl_eq(std::get<path_lin>(f.pay), std::get<path_lin>(g.pay));
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return mat_eq(std::get<rows_cat::Mor>(f.pay).a, std::get<rows_cat::Mor>(g.pay).a);
        return qb_eq(std::get<qblock>(f.pay), std::get<qblock>(g.pay));
    case cat_kind::opposite: return mor_eq(op_unwrap(f), op_unwrap(g));
    case cat_kind::freyd: {
        require_capability(caps_of(c).dec_eq, "equality in this Freyd category is not decidable");
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return F.mor_eq(std::get<fp_mor>(f.pay), std::get<fp_mor>(g.pay));
        }
        qfreyd_cat F = engine_qf(c);
        return F.mor_eq(std::get<qfreyd_cat::mor>(f.pay), std::get<qfreyd_cat::mor>(g.pay));
    }
    }
    throw internal_error("mor_eq: unhandled kind");
}

cat_mor identity(const cat_obj& A) {
    const cat_ptr& c = A.cat;
    switch (c->kind) {
    case cat_kind::ring_cat: return {c, A, A, ring_one(*c->ring)};
    case cat_kind::quiver_cat: return {c, A, A, pl_identity(std::get<int>(A.pay))};
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return {c, A, A,
                    rows_cat::Mor{mat_identity(c->child->ring, std::get<rows_cat::Obj>(A.pay).n)}};
        return {c, A, A, qb_identity(quiver_of(c), std::get<std::vector<int>>(A.pay))};
    case cat_kind::opposite: {
        cat_mor inner = identity(*std::get<std::shared_ptr<cat_obj>>(A.pay));
        return {c, A, A, std::make_shared<cat_mor>(std::move(inner))};
    }
    case cat_kind::freyd:
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return {c, A, A, F.id(std::get<fp_obj>(A.pay))};
        } else {
            qfreyd_cat F = engine_qf(c);
            return {c, A, A, F.id(std::get<qfreyd_cat::obj>(A.pay))};
        }
    }
    throw internal_error("identity: unhandled kind");
}

cat_mor zero_morphism(const cat_obj& A, const cat_obj& B) {
    const cat_ptr& c = A.cat;
    require(cat_eq(c, B.cat), "zero_morphism: category mismatch");
    require_capability(caps_of(c).ab, "zero morphisms need an Ab-category");
    switch (c->kind) {
    case cat_kind::ring_cat: return {c, A, B, ring_zero(*c->ring)};
    case cat_kind::quiver_cat:
        return {c, A, B, pl_zero(std::get<int>(A.pay), std::get<int>(B.pay))};
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return {c, A, B,
                    rows_cat::Mor{mat_zero(c->child->ring, std::get<rows_cat::Obj>(A.pay).n,
                                           std::get<rows_cat::Obj>(B.pay).n)}};
        return {c, A, B,
                qb_zero(quiver_of(c), std::get<std::vector<int>>(A.pay),
                        std::get<std::vector<int>>(B.pay))};
    case cat_kind::opposite: {
        cat_mor inner = zero_morphism(*std::get<std::shared_ptr<cat_obj>>(B.pay),
                                      *std::get<std::shared_ptr<cat_obj>>(A.pay));
        return {c, A, B, std::make_shared<cat_mor>(std::move(inner))};
    }
    case cat_kind::freyd:
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return {c, A, B, F.zero(std::get<fp_obj>(A.pay), std::get<fp_obj>(B.pay))};
        } else {
            qfreyd_cat F = engine_qf(c);
            return {c, A, B,
                    F.zero(std::get<qfreyd_cat::obj>(A.pay), std::get<qfreyd_cat::obj>(B.pay))};
        }
    }
    throw internal_error("zero_morphism: unhandled kind");
}

cat_mor add(const cat_mor& f, const cat_mor& g) {
    require(cat_eq(f.cat, g.cat) && obj_eq(f.source, g.source) && obj_eq(f.range, g.range),
            "add: morphisms not parallel");
    const cat_ptr& c = f.cat;
    require_capability(caps_of(c).ab, "addition needs an Ab-category");
    switch (c->kind) {
    case cat_kind::ring_cat:
        return {c, f.source, f.range,
                ring_add(*c->ring, std::get<scalar>(f.pay), std::get<scalar>(g.pay))};
    case cat_kind::quiver_cat:
        return {c, f.source, f.range, pl_add(std::get<path_lin>(f.pay), std::get<path_lin>(g.pay))};
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return {c, f.source, f.range,
                    rows_cat::Mor{mat_add(std::get<rows_cat::Mor>(f.pay).a,
                                          std::get<rows_cat::Mor>(g.pay).a)}};
        return {c, f.source, f.range, qb_add(std::get<qblock>(f.pay), std::get<qblock>(g.pay))};
    case cat_kind::opposite: {
        cat_mor inner = add(op_unwrap(f), op_unwrap(g));
        return {c, f.source, f.range, std::make_shared<cat_mor>(std::move(inner))};
    }
    case cat_kind::freyd:
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return {c, f.source, f.range, F.add(std::get<fp_mor>(f.pay), std::get<fp_mor>(g.pay))};
        } else {
            qfreyd_cat F = engine_qf(c);
            return {c, f.source, f.range,
                    F.add(std::get<qfreyd_cat::mor>(f.pay), std::get<qfreyd_cat::mor>(g.pay))};
        }
    }
    throw internal_error("add: unhandled kind");
}

cat_mor negate(const cat_mor& f) {
    const cat_ptr& c = f.cat;
    require_capability(caps_of(c).ab, "negation needs an Ab-category");
    switch (c->kind) {
    case cat_kind::ring_cat:
        return {c, f.source, f.range, ring_neg(*c->ring, std::get<scalar>(f.pay))};
    case cat_kind::quiver_cat: return {c, f.source, f.range, pl_negate(std::get<path_lin>(f.pay))};
    case cat_kind::additive_closure:
        if (c->child->kind == cat_kind::ring_cat)
            return {c, f.source, f.range, rows_cat::Mor{mat_neg(std::get<rows_cat::Mor>(f.pay).a)}};
        return {c, f.source, f.range, qb_negate(std::get<qblock>(f.pay))};
    case cat_kind::opposite: {
        cat_mor inner = negate(op_unwrap(f));
        return {c, f.source, f.range, std::make_shared<cat_mor>(std::move(inner))};
    }
    case cat_kind::freyd:
        if (c->child->child->kind == cat_kind::ring_cat) {
            fp_cat F = engine_fp(c);
            return {c, f.source, f.range, F.negate(std::get<fp_mor>(f.pay))};
        } else {
            qfreyd_cat F = engine_qf(c);
            return {c, f.source, f.range, F.negate(std::get<qfreyd_cat::mor>(f.pay))};
        }
    }
    throw internal_error("negate: unhandled kind");
}

cat_obj zero_object(const cat_ptr& c) {
    require_capability(caps_of(c).additive, "zero objects need an additive category");
    if (c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::ring_cat)
        return rows_object(c, 0);
    if (c->kind == cat_kind::additive_closure) return qadd_object(c, {});
    if (c->kind == cat_kind::freyd && c->child->child->kind == cat_kind::ring_cat) {
        fp_cat F = engine_fp(c);
        return {c, F.zero_obj()};
    }
    if (c->kind == cat_kind::freyd) {
        qfreyd_cat F = engine_qf(c);
        return {c, F.zero_obj()};
    }
    throw capability_error("zero_object: unsupported category");
}

cat_obj direct_sum(const std::vector<cat_obj>& objs) {
    if (objs.empty()) throw usage_error("direct_sum: the empty sum needs a category; use zero_object");
    const cat_ptr& c = objs[0].cat;
    require_capability(caps_of(c).additive, "direct sums need an additive category");
    for (auto& o : objs) require(cat_eq(o.cat, c), "direct_sum: category mismatch");
    if (c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::ring_cat) {
        int n = 0;
        for (auto& o : objs) n += std::get<rows_cat::Obj>(o.pay).n;
        return rows_object(c, n);
    }
    if (c->kind == cat_kind::additive_closure) {
        std::vector<int> vs;
        for (auto& o : objs) {
            auto& v = std::get<std::vector<int>>(o.pay);
            vs.insert(vs.end(), v.begin(), v.end());
        }
        return qadd_object(c, std::move(vs));
    }
    if (c->kind == cat_kind::freyd && c->child->child->kind == cat_kind::ring_cat) {
        fp_cat F = engine_fp(c);
        fp_obj acc = std::get<fp_obj>(objs[0].pay);
        for (size_t i = 1; i < objs.size(); ++i) acc = F.dsum(acc, std::get<fp_obj>(objs[i].pay));
        return {c, std::move(acc)};
    }
    throw capability_error("direct_sum: unsupported category");
}

namespace {

std::pair<int, int> rows_span(const std::vector<cat_obj>& objs, size_t j) {
    int before = 0, len = 0;
    for (size_t i = 0; i < objs.size(); ++i) {
        int n = std::get<rows_cat::Obj>(objs[i].pay).n;
        if (i < j) before += n;
        if (i == j) len = n;
    }
    return {before, len};
}

} // namespace

cat_mor injection(const std::vector<cat_obj>& objs, size_t j) {
    require(j < objs.size(), "injection: index out of range");
    const cat_ptr& c = objs[0].cat;
    cat_obj total = direct_sum(objs);
    if (c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::ring_cat) {
        auto [before, len] = rows_span(objs, j);
        int n = std::get<rows_cat::Obj>(total.pay).n;
        matrix m = mat_zero(c->child->ring, len, n);
        for (int i = 0; i < len; ++i) m.at(i, before + i) = ring_one(*c->child->ring);
        return {c, objs[j], total, rows_cat::Mor{std::move(m)}};
    }
    throw capability_error("injection: implemented for Rows_R at the facade level");
}

cat_mor projection(const std::vector<cat_obj>& objs, size_t j) {
    require(j < objs.size(), "projection: index out of range");
    const cat_ptr& c = objs[0].cat;
    cat_obj total = direct_sum(objs);
    if (c->kind == cat_kind::additive_closure && c->child->kind == cat_kind::ring_cat) {
        auto [before, len] = rows_span(objs, j);
        int n = std::get<rows_cat::Obj>(total.pay).n;
        matrix m = mat_zero(c->child->ring, n, len);
        for (int i = 0; i < len; ++i) m.at(before + i, i) = ring_one(*c->child->ring);
        return {c, total, objs[j], rows_cat::Mor{std::move(m)}};
    }
    throw capability_error("projection: implemented for Rows_R at the facade level");
}

cat_mor op_wrap(const cat_mor& f) {
    cat_ptr c = cat_op(f.cat);
    return {c, op_object(c, f.range), op_object(c, f.source), std::make_shared<cat_mor>(f)};
}

cat_mor op_unwrap(const cat_mor& f) {
    require(f.cat->kind == cat_kind::opposite, "op_unwrap: not an opposite-category morphism");
    return *std::get<std::shared_ptr<cat_mor>>(f.pay);
}

std::pair<cat_obj, cat_mor> weak_kernel_rows(const cat_mor& f) {
    const cat_ptr& c = f.cat;
    require_capability(caps_of(c).weak_kernels, "weak kernels unavailable in this category");
    const matrix& m = std::get<rows_cat::Mor>(f.pay).a;
    matrix S = row_syzygies(m);
    cat_obj K = rows_object(c, S.m);
    cat_mor emb{c, K, f.source, rows_cat::Mor{std::move(S)}};
    return {K, emb};
}

// --- homomorphism structures ---

hom_rt hom_structure_of(const cat_ptr& c) {
    require_capability(caps_of(c).hom_structure, "no homomorphism structure for this category");
    hom_rt out;
    out.source_cat = c;
    switch (c->kind) {
    case cat_kind::ring_cat: {
        out.target_cat = c;
        out.one = ring_star(c);
        out.H_obj = [c](const cat_obj&, const cat_obj&) { return ring_star(c); };
        out.H_mor = [c](const cat_mor& a, const cat_mor& b) {
            return ring_mor(c, ring_mul(*c->ring, std::get<scalar>(a.pay), std::get<scalar>(b.pay)));
        };
        out.nu = [](const cat_mor& f) { return f; };
        out.nu_inv = [](const cat_mor& g, const cat_obj&, const cat_obj&) { return g; };
        break;
    }
    case cat_kind::quiver_cat: {
        cat_ptr rowsQ = cat_add(cat_ring(make_QQ()));
        quiver_hom qh{c->qv, make_QQ()};
        out.target_cat = rowsQ;
        out.one = rows_object(rowsQ, 1);
        out.H_obj = [c, rowsQ, qh](const cat_obj& a, const cat_obj& b) {
            return rows_object(rowsQ, qh.H_obj(std::get<int>(a.pay), std::get<int>(b.pay)));
        };
        out.H_mor = [rowsQ, qh](const cat_mor& a, const cat_mor& b) {
            return rows_mor(rowsQ, qh.H_mor(std::get<path_lin>(a.pay), std::get<path_lin>(b.pay)));
        };
        out.nu = [rowsQ, qh](const cat_mor& f) {
            return rows_mor(rowsQ, qh.nu(std::get<path_lin>(f.pay)));
        };
        out.nu_inv = [c, qh](const cat_mor& g, const cat_obj& A, const cat_obj& B) {
            return quiver_mor(c, qh.nu_inv(std::get<rows_cat::Mor>(g.pay).a, std::get<int>(A.pay),
                                           std::get<int>(B.pay)));
        };
        break;
    }
    case cat_kind::additive_closure: {
        if (c->child->kind == cat_kind::ring_cat) {
            // the Kronecker structure of Rows_R over itself
            ring_ptr R = c->child->ring;
            out.target_cat = c;
            out.one = rows_object(c, 1);
            out.H_obj = [c](const cat_obj& a, const cat_obj& b) {
                return rows_object(c, std::get<rows_cat::Obj>(a.pay).n *
                                          std::get<rows_cat::Obj>(b.pay).n);
            };
            out.H_mor = [c](const cat_mor& a, const cat_mor& b) {
                return rows_mor(c, kron(mat_transpose(std::get<rows_cat::Mor>(a.pay).a),
                                        std::get<rows_cat::Mor>(b.pay).a));
            };
            out.nu = [c](const cat_mor& f) {
                return rows_mor(c, mat_vec(std::get<rows_cat::Mor>(f.pay).a));
            };
            out.nu_inv = [c](const cat_mor& g, const cat_obj& A, const cat_obj& B) {
                return rows_mor(c, mat_unvec(std::get<rows_cat::Mor>(g.pay).a,
                                             std::get<rows_cat::Obj>(A.pay).n,
                                             std::get<rows_cat::Obj>(B.pay).n));
            };
            (void)R;
        } else {
            cat_ptr rowsQ = cat_add(cat_ring(make_QQ()));
            quiver_block_hom qh{quiver_hom{c->child->qv, make_QQ()}};
            cat_ptr qc = c;
            out.target_cat = rowsQ;
            out.one = rows_object(rowsQ, 1);
            out.H_obj = [rowsQ, qh](const cat_obj& a, const cat_obj& b) {
                return rows_object(rowsQ, qh.H_obj(std::get<std::vector<int>>(a.pay),
                                                   std::get<std::vector<int>>(b.pay)));
            };
            out.H_mor = [rowsQ, qh](const cat_mor& a, const cat_mor& b) {
                return rows_mor(rowsQ, qh.H_mor(std::get<qblock>(a.pay), std::get<qblock>(b.pay)));
            };
            out.nu = [rowsQ, qh](const cat_mor& f) {
                return rows_mor(rowsQ, qh.nu(std::get<qblock>(f.pay)));
            };
            out.nu_inv = [qc, qh](const cat_mor& g, const cat_obj& A, const cat_obj& B) {
                return qadd_mor(qc, qh.nu_inv(quiver_of(qc), std::get<rows_cat::Mor>(g.pay).a,
                                              std::get<std::vector<int>>(A.pay),
                                              std::get<std::vector<int>>(B.pay)));
            };
        }
        break;
    }
    case cat_kind::opposite: {
        hom_rt inner = hom_structure_of(c->child);
        out.target_cat = inner.target_cat;
        out.one = inner.one;
        out.H_obj = [inner](const cat_obj& a, const cat_obj& b) {
            return inner.H_obj(*std::get<std::shared_ptr<cat_obj>>(b.pay),
                               *std::get<std::shared_ptr<cat_obj>>(a.pay));
        };
        out.H_mor = [inner](const cat_mor& a, const cat_mor& b) {
            return inner.H_mor(op_unwrap(b), op_unwrap(a));
        };
        out.nu = [inner](const cat_mor& f) { return inner.nu(op_unwrap(f)); };
        out.nu_inv = [c, inner](const cat_mor& g, const cat_obj& A, const cat_obj& B) {
            cat_mor m = inner.nu_inv(g, *std::get<std::shared_ptr<cat_obj>>(B.pay),
                                     *std::get<std::shared_ptr<cat_obj>>(A.pay));
            return cat_mor{c, A, B, std::make_shared<cat_mor>(std::move(m))};
        };
        break;
    }
    default: throw capability_error("no homomorphism structure for this category");
    }
    return out;
}

std::optional<cat_mor> lift_via_hom_structure(const cat_mor& alpha, const cat_mor& gamma) {
    require(cat_eq(alpha.cat, gamma.cat), "lift: category mismatch");
    require(obj_eq(alpha.range, gamma.range), "lift: cospan mismatch");
    hom_rt hs = hom_structure_of(alpha.cat);
    capabilities tc = caps_of(hs.target_cat);
    require_capability(tc.dec_lifts || hs.target_cat->kind == cat_kind::ring_cat,
                       "lift: hom structure target has no decidable lifts");
    cat_mor Hg = hs.H_mor(identity(alpha.source), gamma); // H(A,C) -> H(A,B)
    cat_mor na = hs.nu(alpha);                            // 1 -> H(A,B)
    // solve in the target: every shipped target reduces to a matrix solve
    matrix Hm = hs.target_cat->kind == cat_kind::ring_cat
                    ? [&] {
                          matrix m(hs.target_cat->ring, 1, 1);
                          m.at(0, 0) = std::get<scalar>(Hg.pay);
                          return m;
                      }()
                    : std::get<rows_cat::Mor>(Hg.pay).a;
    matrix va = hs.target_cat->kind == cat_kind::ring_cat
                    ? [&] {
                          matrix m(hs.target_cat->ring, 1, 1);
                          m.at(0, 0) = std::get<scalar>(na.pay);
                          return m;
                      }()
                    : std::get<rows_cat::Mor>(na.pay).a;
    auto sol = solve_left(Hm, va);
    if (!sol) return std::nullopt;
    cat_mor lam_elt = hs.target_cat->kind == cat_kind::ring_cat
                          ? ring_mor(hs.target_cat, sol->at(0, 0))
                          : rows_mor(hs.target_cat, *sol);
    return hs.nu_inv(lam_elt, alpha.source, gamma.source);
}

} // namespace fpcat
