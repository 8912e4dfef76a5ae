#ifndef FPCAT_ROWS_HPP
#define FPCAT_ROWS_HPP

#include "fpcat/linalg.hpp"

namespace fpcat {

// Rows_R: objects are row-module ranks, morphisms are matrices acting on row vectors.
// Composition is matrix multiplication in diagrammatic order.
struct rows_cat {
    ring_ptr R;

    static constexpr bool matrix_backed = true;

    struct Obj {
        int n = 0;
    };
    struct Mor {
        matrix a; // src rank = a.m, dst rank = a.n
    };

    explicit rows_cat(ring_ptr ring) : R(std::move(ring)) {}

    Obj src(const Mor& f) const { return {f.a.m}; }
    Obj dst(const Mor& f) const { return {f.a.n}; }
    bool obj_eq(const Obj& a, const Obj& b) const { return a.n == b.n; }
    bool mor_eq(const Mor& f, const Mor& g) const { return mat_eq(f.a, g.a); }

    Mor compose(const Mor& f, const Mor& g) const {
        require(f.a.n == g.a.m, "rows compose: shape mismatch");
        return {mat_mul(f.a, g.a)};
    }
    Mor id(const Obj& a) const { return {mat_identity(R, a.n)}; }
    Mor zero(const Obj& a, const Obj& b) const { return {mat_zero(R, a.n, b.n)}; }
    Mor add(const Mor& f, const Mor& g) const { return {mat_add(f.a, g.a)}; }
    Mor negate(const Mor& f) const { return {mat_neg(f.a)}; }
    Mor sub(const Mor& f, const Mor& g) const { return {mat_sub(f.a, g.a)}; }

    Obj zero_obj() const { return {0}; }
    Obj sum(const Obj& a, const Obj& b) const { return {a.n + b.n}; }
    Mor inj1(const Obj& a, const Obj& b) const {
        return {mat_hstack(mat_identity(R, a.n), mat_zero(R, a.n, b.n))};
    }
    Mor inj2(const Obj& a, const Obj& b) const {
        return {mat_hstack(mat_zero(R, b.n, a.n), mat_identity(R, b.n))};
    }
    Mor proj1(const Obj& a, const Obj& b) const {
        return {mat_vstack(mat_identity(R, a.n), mat_zero(R, b.n, a.n))};
    }
    Mor proj2(const Obj& a, const Obj& b) const {
        return {mat_vstack(mat_zero(R, a.n, b.n), mat_identity(R, b.n))};
    }
    // X+Y -> Z built from X -> Z and Y -> Z
    Mor pair_from(const Mor& f, const Mor& g) const { return {mat_vstack(f.a, g.a)}; }
    // T -> X+Y built from T -> X and T -> Y
    Mor pair_into(const Mor& f, const Mor& g) const { return {mat_hstack(f.a, g.a)}; }

    std::optional<Mor> lift(const Mor& alpha, const Mor& gamma) const {
        require(alpha.a.n == gamma.a.n, "rows lift: cospan mismatch");
        auto x = solve_left(gamma.a, alpha.a);
        if (!x) return std::nullopt;
        return Mor{*x};
    }

    bool has_weak_kernels() const { return R->ideal.empty(); }
    std::pair<Obj, Mor> weak_kernel(const Mor& alpha) const {
        require_capability(has_weak_kernels(), "weak kernels unavailable over this ring");
        matrix S = row_syzygies(alpha.a);
        return {Obj{S.m}, Mor{S}};
    }
    Mor weak_kernel_lift(const Mor& alpha, const Mor& emb, const Mor& tau) const {
        (void)alpha;
        auto u = solve_left(emb.a, tau.a);
        ensure(u.has_value(), "weak kernel lift must exist for annihilating test morphisms");
        return Mor{*u};
    }
};

} // namespace fpcat

#endif
