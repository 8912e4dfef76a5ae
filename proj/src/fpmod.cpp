#include "fpcat/fpmod.hpp"

#include <algorithm>
#include <sstream>

namespace fpcat {

matrix canonical_relations(const matrix& rel) {
    switch (rel.R->kind) {
    case ring_kind::integers: {
        hnf_result h = hermite_normal_form(rel);
        std::vector<int> keep;
        for (auto [r, c] : h.pivots) {
            (void)c;
            keep.push_back(r);
        }
        return mat_rows(h.H, keep);
    }
    case ring_kind::rationals: {
        // field case: reduced row echelon form, zero rows dropped
        matrix A = rel;
        int r = 0;
        for (int c = 0; c < A.n && r < A.m; ++c) {
            int piv = -1;
            for (int i = r; i < A.m; ++i)
                if (!ring_is_zero(*A.R, A.at(i, c))) { piv = i; break; }
            if (piv < 0) continue;
            if (piv != r)
                for (int j = 0; j < A.n; ++j) std::swap(A.at(r, j), A.at(piv, j));
            rational inv = 1 / std::get<rational>(A.at(r, c).v);
            for (int j = 0; j < A.n; ++j)
                A.at(r, j) = scalar(rational(std::get<rational>(A.at(r, j).v) * inv));
            for (int i = 0; i < A.m; ++i) {
                if (i == r) continue;
                rational f = std::get<rational>(A.at(i, c).v);
                if (f == 0) continue;
                for (int j = 0; j < A.n; ++j)
                    A.at(i, j) = scalar(rational(std::get<rational>(A.at(i, j).v) -
                                                 f * std::get<rational>(A.at(r, j).v)));
            }
            ++r;
        }
        std::vector<int> keep;
        for (int i = 0; i < r; ++i) keep.push_back(i);
        return mat_rows(A, keep);
    }
    case ring_kind::polynomial: {
        module_gb gb = module_groebner(rel);
        matrix out(rel.R, static_cast<int>(gb.basis.size()), rel.n);
        for (size_t i = 0; i < gb.basis.size(); ++i)
            for (int j = 0; j < rel.n; ++j)
                out.at(static_cast<int>(i), j) = scalar(gb.basis[i][j]);
        return out;
    }
    }
    return rel;
}

fp_obj fp_canonical(const fp_obj& M) { return fp_from_relations(canonical_relations(fp_rel(M))); }

z_decomposition z_decompose(const fp_obj& M) {
    const matrix& rel = fp_rel(M);
    require(rel.R->kind == ring_kind::integers, "z_decompose: Z-module required");
    z_decomposition out;
    if (rel.n == 0) return out;
    if (rel.m == 0) {
        out.free_rank = rel.n;
        return out;
    }
    std::vector<bigint> inv = invariant_factors(rel);
    int rank_like = 0;
    for (auto& d : inv) {
        if (d == 0) continue;
        ++rank_like;
        if (d > 1) out.torsion.push_back(d);
    }
    out.free_rank = rel.n - rank_like;
    return out;
}

std::string presentation_to_string(const fp_obj& M) {
    const matrix& rel = fp_rel(M);
    std::ostringstream os;
    os << "presentation over " << ring_name(*rel.R) << ": generators " << rel.n << ", relations "
       << rel.m << " x " << rel.n << "\n";
    os << matrix_to_string(rel, true);
    if (rel.R->kind == ring_kind::integers) {
        z_decomposition d = z_decompose(M);
        os << "invariant_factors: [";
        bool first = true;
        for (auto& t : d.torsion) {
            if (!first) os << ", ";
            os << t.get_str();
            first = false;
        }
        if (d.free_rank > 0) {
            if (!first) os << ", ";
            os << "0^" << d.free_rank;
        }
        os << "]\n";
    }
    return os.str();
}

int q_dimension(const fp_obj& M) {
    const matrix& rel = fp_rel(M);
    require(rel.R->kind == ring_kind::rationals, "q_dimension: Q-module required");
    if (rel.n == 0) return 0;
    if (rel.m == 0) return rel.n;
    return rel.n - field_rank(rel);
}

resolution resolve(const fp_obj& M, int length) {
    resolution out;
    out.R = fp_rel(M).R;
    out.steps.push_back(fp_rel(M));
    while (static_cast<int>(out.steps.size()) < length + 1)
        out.steps.push_back(row_syzygies(out.steps.back()));
    return out;
}

namespace {

// iso via Smith normal form over Z: both modules are carried onto the common
// canonical form diag(d_i) (+) free, units dropped
struct z_canonical_maps {
    fp_obj canonical;
    matrix to_canonical;   // gens(M) x gens(C)
    matrix from_canonical; // gens(C) x gens(M)
};

z_canonical_maps z_canonical(fp_cat& C, const fp_obj& M) {
    const matrix& rel = fp_rel(M);
    const ring_ptr& R = rel.R;
    const int a = rel.n;
    if (rel.m == 0 || a == 0) {
        z_canonical_maps out{M, mat_identity(R, a), mat_identity(R, a)};
        // canonical free module: relations 0 x a
        out.canonical = fp_free(R, a);
        return out;
    }
    snf_result s = smith_normal_form(rel);
    // coker(rel) = Z^a / rows(rel); x |-> x V is an iso onto Z^a / rows(S)
    matrix Vinv = [&] {
        auto X = solve_left(s.V, mat_identity(R, a));
        ensure(X.has_value(), "unimodular matrix must be invertible over Z");
        return *X;
    }();
    // keep coordinates whose diagonal entry is not 1 (torsion > 1 or free)
    std::vector<int> keep;
    int k = std::min(rel.m, rel.n);
    std::vector<bigint> diag;
    for (int i = 0; i < k; ++i) diag.push_back(std::get<bigint>(s.S.at(i, i).v));
    for (int j = 0; j < a; ++j) {
        bigint d = j < k ? diag[j] : bigint(0);
        if (d != 1) keep.push_back(j);
    }
    matrix P = mat_zero(R, a, static_cast<int>(keep.size()));
    matrix Pt = mat_zero(R, static_cast<int>(keep.size()), a);
    for (size_t t = 0; t < keep.size(); ++t) {
        P.at(keep[t], static_cast<int>(t)) = ring_one(*R);
        Pt.at(static_cast<int>(t), keep[t]) = ring_one(*R);
    }
    matrix crel = mat_zero(R, static_cast<int>(keep.size()), static_cast<int>(keep.size()));
    std::vector<int> crel_rows;
    int nonzero = 0;
    for (size_t t = 0; t < keep.size(); ++t) {
        bigint d = keep[t] < k ? diag[keep[t]] : bigint(0);
        if (d != 0) {
            crel.at(nonzero, static_cast<int>(t)) = scalar(d);
            ++nonzero;
        }
    }
    std::vector<int> rows;
    for (int i = 0; i < nonzero; ++i) rows.push_back(i);
    fp_obj canonical = fp_from_relations(mat_rows(crel, rows));
    z_canonical_maps out{canonical, mat_mul(s.V, P), mat_mul(Pt, Vinv)};
    (void)C;
    return out;
}

iso_result z_iso(fp_cat& C, const fp_obj& M, const fp_obj& N) {
    z_canonical_maps cm = z_canonical(C, M);
    z_canonical_maps cn = z_canonical(C, N);
    z_decomposition dm = z_decompose(M), dn = z_decompose(N);
    if (dm.torsion != dn.torsion || dm.free_rank != dn.free_rank)
        return {iso_result::verdict::not_isomorphic, std::nullopt};
    // canonical forms agree entrywise by construction
    fp_mor f = fp_mor_from(C, M, N, mat_mul(cm.to_canonical, cn.from_canonical));
    fp_mor g = fp_mor_from(C, N, M, mat_mul(cn.to_canonical, cm.from_canonical));
    ensure(C.mor_eq(C.compose(f, g), C.id(M)), "z_iso: f*g != id");
    ensure(C.mor_eq(C.compose(g, f), C.id(N)), "z_iso: g*f != id");
    return {iso_result::verdict::isomorphic, std::make_pair(f, g)};
}

iso_result q_iso(fp_cat& C, const fp_obj& M, const fp_obj& N) {
    int dm = q_dimension(M), dn = q_dimension(N);
    if (dm != dn) return {iso_result::verdict::not_isomorphic, std::nullopt};
    const ring_ptr& R = fp_rel(M).R;
    // coordinates on the free columns of the reduced relation matrix
    auto coords = [&](const fp_obj& X) {
        matrix rel = canonical_relations(fp_rel(X));
        int a = fp_gens(X);
        std::vector<bool> is_pivot(a, false);
        std::vector<int> pivot_row(a, -1);
        for (int i = 0; i < rel.m; ++i)
            for (int j = 0; j < a; ++j)
                if (!ring_is_zero(*R, rel.at(i, j))) {
                    is_pivot[j] = true;
                    pivot_row[j] = i;
                    break;
                }
        std::vector<int> free_cols;
        for (int j = 0; j < a; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        // to: gens x dim, maps e_j to its residue coordinates on free columns
        matrix to = mat_zero(R, a, static_cast<int>(free_cols.size()));
        for (int j = 0; j < a; ++j) {
            if (!is_pivot[j]) {
                for (size_t t = 0; t < free_cols.size(); ++t)
                    if (free_cols[t] == j) to.at(j, static_cast<int>(t)) = ring_one(*R);
            } else {
                // e_j = -(tail of pivot row) modulo relations
                int i = pivot_row[j];
                rational pv = std::get<rational>(rel.at(i, j).v);
                for (size_t t = 0; t < free_cols.size(); ++t) {
                    rational v = std::get<rational>(rel.at(i, free_cols[t]).v);
                    to.at(j, static_cast<int>(t)) = scalar(rational(-v / pv));
                }
            }
        }
        matrix from = mat_zero(R, static_cast<int>(free_cols.size()), a);
        for (size_t t = 0; t < free_cols.size(); ++t)
            from.at(static_cast<int>(t), free_cols[t]) = ring_one(*R);
        return std::make_pair(to, from);
    };
    auto [to_m, from_m] = coords(M);
    auto [to_n, from_n] = coords(N);
    fp_mor f = fp_mor_from(C, M, N, mat_mul(to_m, from_n));
    fp_mor g = fp_mor_from(C, N, M, mat_mul(to_n, from_m));
    ensure(C.mor_eq(C.compose(f, g), C.id(M)), "q_iso: f*g != id");
    ensure(C.mor_eq(C.compose(g, f), C.id(N)), "q_iso: g*f != id");
    return {iso_result::verdict::isomorphic, std::make_pair(f, g)};
}

// over Q[x..]: prune generators killable by unit-coefficient relations, then compare
// canonical Groebner presentations up to a canonical column sort
struct pruned {
    fp_obj obj;
    matrix to;   // gens(M) x gens(P)
    matrix from; // gens(P) x gens(M)
};

bool poly_entry_is_unit(const ring_desc&, const scalar& s) {
    const polynomial& p = std::get<polynomial>(s.v);
    return p.terms.size() == 1 && mono_total_degree(p.terms[0].first) == 0;
}

pruned prune_poly(const fp_obj& M) {
    const ring_ptr& R = fp_rel(M).R;
    matrix rel = canonical_relations(fp_rel(M));
    int a = rel.n;
    matrix to = mat_identity(R, a), from = mat_identity(R, a);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rel.m && !changed; ++i) {
            for (int j = 0; j < rel.n && !changed; ++j) {
                if (ring_is_zero(*R, rel.at(i, j)) || !poly_entry_is_unit(*R, rel.at(i, j)))
                    continue;
                // generator j = -(1/c) * (other entries of row i): eliminate it
                rational c = std::get<polynomial>(rel.at(i, j).v).terms[0].second;
                int n = rel.n;
                // substitution matrix: e_j |-> -(1/c) * sum_{k != j} rel[i][k] e_k
                matrix S = mat_zero(R, n, n - 1);
                std::vector<int> others;
                for (int k = 0; k < n; ++k)
                    if (k != j) others.push_back(k);
                for (size_t t = 0; t < others.size(); ++t)
                    S.at(others[t], static_cast<int>(t)) = ring_one(*R);
                for (size_t t = 0; t < others.size(); ++t) {
                    scalar v = rel.at(i, others[t]);
                    S.at(j, static_cast<int>(t)) =
                        ring_mul(*R, v, scalar(poly_const(*R, rational(-1) / c)));
                }
                matrix incl = mat_zero(R, n - 1, n);
                for (size_t t = 0; t < others.size(); ++t)
                    incl.at(static_cast<int>(t), others[t]) = ring_one(*R);
                rel = canonical_relations(mat_mul(rel, S));
                to = mat_mul(to, S);
                from = mat_mul(incl, from);
                changed = true;
            }
        }
    }
    // canonical column order: sort columns by printed entries of the canonical relations
    int n = rel.n;
    std::vector<std::string> keys(n);
    for (int j = 0; j < n; ++j) {
        std::string k;
        for (int i = 0; i < rel.m; ++i)
            k += scalar_to_string(*R, rel.at(i, j)) + ";";
        keys[j] = k;
    }
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return keys[x] < keys[y]; });
    matrix perm = mat_zero(R, n, n);
    for (int t = 0; t < n; ++t) perm.at(order[t], t) = ring_one(*R);
    rel = canonical_relations(mat_mul(rel, perm));
    to = mat_mul(to, perm);
    from = mat_mul(mat_transpose(perm), from);
    return {fp_from_relations(rel), to, from};
}

iso_result poly_iso(fp_cat& C, const fp_obj& M, const fp_obj& N) {
    pruned pm = prune_poly(M);
    pruned pn = prune_poly(N);
    if (fp_gens(pm.obj) == fp_gens(pn.obj) && mat_eq(fp_rel(pm.obj), fp_rel(pn.obj))) {
        fp_mor f = fp_mor_from(C, M, N, mat_mul(pm.to, pn.from));
        fp_mor g = fp_mor_from(C, N, M, mat_mul(pn.to, pm.from));
        if (C.mor_eq(C.compose(f, g), C.id(M)) && C.mor_eq(C.compose(g, f), C.id(N)))
            return {iso_result::verdict::isomorphic, std::make_pair(f, g)};
    }
    return {iso_result::verdict::undecided, std::nullopt};
}

} // namespace

iso_result module_iso_test(fp_cat& C, const fp_obj& M, const fp_obj& N) {
    require(same_ring(fp_rel(M).R, fp_rel(N).R), "module_iso_test: ring mismatch");
    switch (fp_rel(M).R->kind) {
    case ring_kind::integers: return z_iso(C, M, N);
    case ring_kind::rationals: return q_iso(C, M, N);
    case ring_kind::polynomial: return poly_iso(C, M, N);
    }
    return {iso_result::verdict::undecided, std::nullopt};
}

} // namespace fpcat
