#ifndef FPCAT_FREYD_HPP
#define FPCAT_FREYD_HPP

#include <memory>
#include <mutex>
#include <optional>

#include "fpcat/linalg.hpp"

namespace fpcat {

// write-once shared cache for morphism witnesses
template <class T>
class lazy_cell {
    struct state {
        std::mutex mu;
        bool done = false;
        std::optional<T> value;
    };
    std::shared_ptr<state> s = std::make_shared<state>();

public:
    template <class F>
    const std::optional<T>& get(F&& compute) const {
        std::lock_guard<std::mutex> lock(s->mu);
        if (!s->done) {
            s->value = compute();
            s->done = true;
        }
        return s->value;
    }
    void put(T value) const {
        std::lock_guard<std::mutex> lock(s->mu);
        if (!s->done) {
            s->value = std::move(value);
            s->done = true;
        }
    }
};

// Freyd category A(C) of an additive child category C.
// Objects are child morphisms rho: R_A -> A (formal cokernels); a morphism is a child
// morphism between carriers for which a relation witness exists; equality is witnessed
// by a lift against the target relations.
template <class Child>
struct freyd_cat {
    using CObj = typename Child::Obj;
    using CMor = typename Child::Mor;

    Child ch;

    explicit freyd_cat(Child child) : ch(std::move(child)) {}

    struct obj {
        CMor rho; // R_A -> A
    };

    struct mor {
        obj src, dst;
        CMor alpha;                  // carrier(src) -> carrier(dst)
        lazy_cell<CMor> witness_rho; // rho_src * alpha = witness * rho_dst
    };

    CObj carrier(const obj& A) const { return ch.dst(A.rho); }
    CObj relations(const obj& A) const { return ch.src(A.rho); }

    obj make_obj(CMor rho) const { return obj{std::move(rho)}; }
    obj free_obj(const CObj& c) const { return obj{ch.zero(ch.zero_obj(), c)}; }
    obj zero_obj() const { return free_obj(ch.zero_obj()); }

    bool obj_eq(const obj& A, const obj& B) const { return ch.mor_eq(A.rho, B.rho); }

    mor make_mor(obj source, obj target, CMor alpha) const {
        require(ch.obj_eq(ch.src(alpha), carrier(source)) && ch.obj_eq(ch.dst(alpha), carrier(target)),
                "freyd make_mor: carrier mismatch");
        return mor{std::move(source), std::move(target), std::move(alpha), {}};
    }
    mor make_mor_with_witness(obj source, obj target, CMor alpha, CMor wit) const {
        mor f = make_mor(std::move(source), std::move(target), std::move(alpha));
        f.witness_rho.put(std::move(wit));
        return f;
    }

    // exists rho_alpha with rho_src * alpha = rho_alpha * rho_dst
    std::optional<CMor> validity_witness(const mor& f) const {
        return f.witness_rho.get(
            [&] { return ch.lift(ch.compose(f.src.rho, f.alpha), f.dst.rho); });
    }
    bool is_valid(const mor& f) const { return validity_witness(f).has_value(); }
    CMor witness(const mor& f) const {
        auto w = validity_witness(f);
        require(w.has_value(), "morphism carries no relation witness (invalid freyd morphism)");
        return *w;
    }

    mor id(const obj& A) const {
        return make_mor_with_witness(A, A, ch.id(carrier(A)), ch.id(relations(A)));
    }
    mor zero(const obj& A, const obj& B) const {
        return make_mor_with_witness(A, B, ch.zero(carrier(A), carrier(B)),
                                     ch.zero(relations(A), relations(B)));
    }
    mor compose(const mor& f, const mor& g) const {
        require(obj_eq(f.dst, g.src), "freyd compose: objects do not match");
        return make_mor(f.src, g.dst, ch.compose(f.alpha, g.alpha));
    }
    mor add(const mor& f, const mor& g) const {
        require(obj_eq(f.src, g.src) && obj_eq(f.dst, g.dst), "freyd add: objects do not match");
        return make_mor(f.src, f.dst, ch.add(f.alpha, g.alpha));
    }
    mor negate(const mor& f) const { return make_mor(f.src, f.dst, ch.negate(f.alpha)); }
    mor sub(const mor& f, const mor& g) const { return add(f, negate(g)); }

    // witness lambda with lambda * rho_dst = alpha_f - alpha_g
    std::optional<CMor> eq_witness(const mor& f, const mor& g) const {
        require(obj_eq(f.src, g.src) && obj_eq(f.dst, g.dst), "freyd eq: objects do not match");
        return ch.lift(ch.sub(f.alpha, g.alpha), f.dst.rho);
    }
    bool mor_eq(const mor& f, const mor& g) const { return eq_witness(f, g).has_value(); }
    bool is_zero_mor(const mor& f) const { return mor_eq(f, zero(f.src, f.dst)); }
    bool is_zero_obj(const obj& A) const { return is_zero_mor(id(A)); }

    // ---- direct sums ----

    obj dsum(const obj& A, const obj& B) const {
        CObj ca = carrier(A), cb = carrier(B);
        CMor rho = ch.pair_from(ch.compose(A.rho, ch.inj1(ca, cb)),
                                ch.compose(B.rho, ch.inj2(ca, cb)));
        return obj{std::move(rho)};
    }
    mor inj1_m(const obj& A, const obj& B) const {
        return make_mor_with_witness(A, dsum(A, B), ch.inj1(carrier(A), carrier(B)),
                                     ch.inj1(relations(A), relations(B)));
    }
    mor inj2_m(const obj& A, const obj& B) const {
        return make_mor_with_witness(B, dsum(A, B), ch.inj2(carrier(A), carrier(B)),
                                     ch.inj2(relations(A), relations(B)));
    }
    mor proj1_m(const obj& A, const obj& B) const {
        return make_mor_with_witness(dsum(A, B), A, ch.proj1(carrier(A), carrier(B)),
                                     ch.proj1(relations(A), relations(B)));
    }
    mor proj2_m(const obj& A, const obj& B) const {
        return make_mor_with_witness(dsum(A, B), B, ch.proj2(carrier(A), carrier(B)),
                                     ch.proj2(relations(A), relations(B)));
    }
    // X+Y -> Z from X -> Z and Y -> Z
    mor pair_from(const mor& f, const mor& g) const {
        require(obj_eq(f.dst, g.dst), "freyd pair_from: target mismatch");
        return make_mor_with_witness(dsum(f.src, g.src), f.dst,
                                     ch.pair_from(f.alpha, g.alpha),
                                     ch.pair_from(witness(f), witness(g)));
    }
    // T -> X+Y from T -> X and T -> Y
    mor pair_into(const mor& f, const mor& g) const {
        require(obj_eq(f.src, g.src), "freyd pair_into: source mismatch");
        return make_mor_with_witness(f.src, dsum(f.dst, g.dst),
                                     ch.pair_into(f.alpha, g.alpha),
                                     ch.pair_into(witness(f), witness(g)));
    }

    // ---- cokernels (formal) ----

    obj cokernel_obj(const mor& f) const {
        return obj{ch.pair_from(f.dst.rho, f.alpha)}; // R_B + A -> B
    }
    mor cokernel_projection(const mor& f) const {
        obj Q = cokernel_obj(f);
        return make_mor_with_witness(f.dst, Q, ch.id(carrier(f.dst)),
                                     ch.inj1(relations(f.dst), carrier(f.src)));
    }
    mor cokernel_colift(const mor& f, const mor& tau) const {
        require(obj_eq(f.dst, tau.src), "cokernel_colift: tau must leave the target of f");
        auto lam = eq_witness(compose(f, tau), zero(f.src, tau.dst));
        require(lam.has_value(), "cokernel_colift: f * tau is not zero");
        obj Q = cokernel_obj(f);
        return make_mor_with_witness(Q, tau.dst, tau.alpha, ch.pair_from(witness(tau), *lam));
    }

    // ---- weak pullbacks in the child (from child weak kernels) ----

    struct child_weak_pullback {
        CObj W;
        CMor emb;   // W -> A + C
        CMor delta; // A + C -> B, the diagonal difference (alpha; -gamma)
        CMor p1, p2;
    };

    child_weak_pullback weak_pullback(const CMor& alpha, const CMor& gamma) const {
        require(ch.obj_eq(ch.dst(alpha), ch.dst(gamma)), "weak_pullback: cospan mismatch");
        CObj A = ch.src(alpha), C = ch.src(gamma);
        CMor delta = ch.pair_from(alpha, ch.negate(gamma));
        auto [W, emb] = ch.weak_kernel(delta);
        CMor p1 = ch.compose(emb, ch.proj1(A, C));
        CMor p2 = ch.compose(emb, ch.proj2(A, C));
        return {W, emb, delta, p1, p2};
    }
    CMor weak_pullback_inducer(const child_weak_pullback& wpb, const CMor& p, const CMor& q) const {
        return ch.weak_kernel_lift(wpb.delta, wpb.emb, ch.pair_into(p, q));
    }

    // ---- kernels (need child weak kernels) ----

    struct kernel_data {
        obj K;
        mor emb;
        child_weak_pullback wpb1; // of (rho_B, alpha); p2 is kappa
        child_weak_pullback wpb2; // of (kappa, rho_A)
    };

    kernel_data kernel(const mor& f) const {
        require_capability(ch.has_weak_kernels(), "kernels need weak kernels in the child category");
        child_weak_pullback wpb1 = weak_pullback(f.dst.rho, f.alpha);
        CMor kappa = wpb1.p2; // W1 -> A
        child_weak_pullback wpb2 = weak_pullback(kappa, f.src.rho);
        obj K{wpb2.p1}; // W2 -> W1
        mor emb = make_mor_with_witness(K, f.src, kappa, wpb2.p2);
        return {K, emb, wpb1, wpb2};
    }
    obj kernel_obj(const mor& f) const { return kernel(f).K; }
    mor kernel_embedding(const mor& f) const { return kernel(f).emb; }

    mor kernel_lift(const kernel_data& kd, const mor& f, const mor& tau) const {
        require(obj_eq(tau.dst, f.src), "kernel_lift: tau must land in the source of f");
        auto sigma = eq_witness(compose(tau, f), zero(tau.src, f.dst));
        require(sigma.has_value(), "kernel_lift: tau * f is not zero");
        CMor u = weak_pullback_inducer(kd.wpb1, *sigma, tau.alpha);
        CMor wit = weak_pullback_inducer(kd.wpb2, ch.compose(tau.src.rho, u), witness(tau));
        return make_mor_with_witness(tau.src, kd.K, u, wit);
    }
    mor kernel_lift(const mor& f, const mor& tau) const { return kernel_lift(kernel(f), f, tau); }

    // ---- mono / epi ----

    // sigma with sigma * rho_A = kappa certifies that the kernel embedding is zero
    std::optional<CMor> mono_witness(const mor& f) const {
        require_capability(ch.has_weak_kernels(), "mono test needs weak kernels in the child category");
        child_weak_pullback wpb1 = weak_pullback(f.dst.rho, f.alpha);
        return ch.lift(wpb1.p2, f.src.rho);
    }
    bool is_mono(const mor& f) const { return mono_witness(f).has_value(); }
    bool is_epi(const mor& f) const { return is_zero_obj(cokernel_obj(f)); }

    mor lift_along_mono(const mor& f, const CMor& sigma, const mor& tau) const {
        require(obj_eq(tau.dst, f.dst), "lift_along_mono: tau must land in the target of f");
        CMor coker_rho = ch.pair_from(f.dst.rho, f.alpha); // R_B + A -> B
        auto w = ch.lift(tau.alpha, coker_rho);
        require(w.has_value(), "lift_along_mono: tau does not vanish on the cokernel of f");
        CObj RB = relations(f.dst), A = carrier(f.src);
        CMor tau_RB = ch.compose(*w, ch.proj1(RB, A));
        CMor tau_A = ch.compose(*w, ch.proj2(RB, A));
        child_weak_pullback wpb1 = weak_pullback(f.dst.rho, f.alpha);
        CMor rho_T = tau.src.rho;
        CMor p = ch.sub(witness(tau), ch.compose(rho_T, tau_RB));
        CMor q = ch.compose(rho_T, tau_A);
        CMor wit = ch.compose(weak_pullback_inducer(wpb1, p, q), sigma);
        return make_mor_with_witness(tau.src, f.src, tau_A, wit);
    }
    mor lift_along_mono(const mor& f, const mor& tau) const {
        auto sigma = mono_witness(f);
        require(sigma.has_value(), "lift_along_mono: f is not a monomorphism");
        return lift_along_mono(f, *sigma, tau);
    }

    // colift along an epimorphism, by solving the child-level linear system;
    // available for matrix-backed children only
    mor colift_along_epi(const mor& f, const mor& tau) const {
        if constexpr (Child::matrix_backed) {
            require(obj_eq(f.src, tau.src), "colift_along_epi: sources must agree");
            require(is_epi(f), "colift_along_epi: f is not an epimorphism");
            {
                kernel_data kd = kernel(f);
                require(mor_eq(compose(kd.emb, tau), zero(kd.K, tau.dst)),
                        "colift_along_epi: tau does not vanish on the kernel of f");
            }
            const matrix& af = f.alpha.a;
            const matrix& at = tau.alpha.a;
            const matrix& rho_B = f.dst.rho.a;
            const matrix& rho_T = tau.dst.rho.a;
            const ring_ptr& R = af.R;
            mat_system sys(R);
            size_t U = sys.add_unknown(af.n, at.n);
            size_t L = sys.add_unknown(af.m, rho_T.m);
            size_t W = sys.add_unknown(rho_B.m, rho_T.m);
            size_t e1 = sys.add_equation(at); // alpha_f * U - L * rho_T = alpha_tau
            sys.add_term(e1, U, af, mat_identity(R, at.n));
            sys.add_term(e1, L, mat_neg(mat_identity(R, af.m)), rho_T);
            size_t e2 = sys.add_equation(mat_zero(R, rho_B.m, at.n)); // rho_B * U - W * rho_T = 0
            sys.add_term(e2, U, rho_B, mat_identity(R, at.n));
            sys.add_term(e2, W, mat_neg(mat_identity(R, rho_B.m)), rho_T);
            auto sol = sys.solve();
            ensure(sol.has_value(), "colift_along_epi: solvable system expected on valid input");
            mor u = make_mor(f.dst, tau.dst, CMor{(*sol)[U]});
            ensure(mor_eq(compose(f, u), tau), "colift_along_epi: postcondition failed");
            return u;
        } else {
            throw capability_error("colift_along_epi unavailable for this child category");
        }
    }

    // ---- image, pullback, pushout ----

    struct image_data {
        obj I;
        mor emb;      // I -> B, a monomorphism
        mor epi_part; // A -> I with epi_part * emb = f
    };

    image_data image(const mor& f) const {
        mor cp = cokernel_projection(f);
        kernel_data kd = kernel(cp);
        // explicit zero witness: f * cokernel_projection(f) vanishes via (0 id)
        CMor lam = ch.pair_into(ch.zero(carrier(f.src), relations(f.dst)), ch.id(carrier(f.src)));
        CMor u = weak_pullback_inducer(kd.wpb1, lam, f.alpha);
        CMor wit = weak_pullback_inducer(kd.wpb2, ch.compose(f.src.rho, u), witness(f));
        mor epi_part = make_mor_with_witness(f.src, kd.K, u, wit);
        return {kd.K, kd.emb, epi_part};
    }
    mor image_embedding(const mor& f) const { return image(f).emb; }

    struct square_data {
        obj P;
        mor p1, p2; // pullback projections / pushout injections
        mor diag;   // the (co)diagonal difference used, for inducers
    };

    square_data pullback(const mor& f, const mor& g) const {
        require(obj_eq(f.dst, g.dst), "pullback: cospan mismatch");
        mor delta = pair_from(f, negate(g)); // X+Y -> Z
        kernel_data kd = kernel(delta);
        mor e = kd.emb;
        square_data out{kd.K, compose(e, proj1_m(f.src, g.src)), compose(e, proj2_m(f.src, g.src)),
                        delta};
        return out;
    }
    mor pullback_inducer(const square_data& pb, const mor& p, const mor& q) const {
        mor tau = pair_into(p, q);
        kernel_data kd = kernel(pb.diag); // same construction, deterministic
        return kernel_lift(kd, pb.diag, tau);
    }

    square_data pushout(const mor& f, const mor& g) const {
        require(obj_eq(f.src, g.src), "pushout: span mismatch");
        mor codelta = pair_into(f, negate(g)); // Z -> X+Y
        mor proj = cokernel_projection(codelta);
        square_data out{cokernel_obj(codelta), compose(inj1_m(f.dst, g.dst), proj),
                        compose(inj2_m(f.dst, g.dst), proj), codelta};
        return out;
    }
    mor pushout_inducer(const square_data& po, const mor& p, const mor& q) const {
        mor tau = pair_from(p, q);
        return cokernel_colift(po.diag, tau);
    }

    // ---- isomorphism test ----

    std::optional<mor> inverse(const mor& f) const {
        auto sigma = mono_witness(f);
        if (!sigma) return std::nullopt;
        if (!is_epi(f)) return std::nullopt;
        mor inv = lift_along_mono(f, *sigma, id(f.dst));
        return inv;
    }

    // ---- subobjects ----

    struct subobj {
        mor mono;      // S -> A
        CMor mono_wit; // sigma certifying monomorphy
    };

    subobj make_sub(const mor& mono) const {
        auto sigma = mono_witness(mono);
        require(sigma.has_value(), "make_sub: morphism is not a monomorphism");
        return subobj{mono, *sigma};
    }
    subobj full_sub(const obj& A) const { return make_sub(id(A)); }
    subobj zero_sub(const obj& A) const { return make_sub(zero(zero_obj(), A)); }

    bool sub_leq(const subobj& S, const subobj& T) const {
        mor c = compose(S.mono, cokernel_projection(T.mono));
        return is_zero_mor(c);
    }
    bool sub_eq(const subobj& S, const subobj& T) const { return sub_leq(S, T) && sub_leq(T, S); }
    // S -> T over A, defined when S <= T
    mor sub_lift(const subobj& S, const subobj& T) const {
        return lift_along_mono(T.mono, T.mono_wit, S.mono);
    }

    subobj sub_image(const mor& f, const subobj& S) const {
        return make_sub(image_embedding(compose(S.mono, f)));
    }
    subobj sub_full_image(const mor& f) const { return make_sub(image_embedding(f)); }
    subobj sub_preimage(const mor& f, const subobj& T) const {
        square_data pb = pullback(f, T.mono);
        return make_sub(image_embedding(pb.p1));
    }
    subobj sub_intersect(const subobj& S, const subobj& T) const {
        square_data pb = pullback(S.mono, T.mono);
        return make_sub(image_embedding(compose(pb.p1, S.mono)));
    }
    subobj sub_join(const subobj& S, const subobj& T) const {
        mor m = pair_from(S.mono, T.mono);
        return make_sub(image_embedding(m));
    }
    subobj kernel_sub(const mor& f) const { return make_sub(kernel_embedding(f)); }
};

} // namespace fpcat

#endif
