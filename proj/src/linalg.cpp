#include "fpcat/linalg.hpp"

#include <algorithm>

#include "fpcat/groebner.hpp"

namespace fpcat {

namespace {

rational& q_at(matrix& A, int i, int j) { return std::get<rational>(A.at(i, j).v); }
const rational& q_at(const matrix& A, int i, int j) { return std::get<rational>(A.at(i, j).v); }
bigint& z_at(matrix& A, int i, int j) { return std::get<bigint>(A.at(i, j).v); }
const bigint& z_at(const matrix& A, int i, int j) { return std::get<bigint>(A.at(i, j).v); }

// ---- rationals: reduced row echelon with transformation ----

struct rref_result {
    matrix R;   // RREF of A
    matrix T;   // T*A = R
    std::vector<std::pair<int, int>> pivots;
};

rref_result rref(const matrix& A) {
    rref_result out{A, mat_identity(A.R, A.m), {}};
    matrix& M = out.R;
    matrix& T = out.T;
    int r = 0;
    for (int c = 0; c < A.n && r < A.m; ++c) {
        int piv = -1;
        for (int i = r; i < A.m; ++i)
            if (q_at(M, i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < A.n; ++j) std::swap(M.at(r, j), M.at(piv, j));
            for (int j = 0; j < A.m; ++j) std::swap(T.at(r, j), T.at(piv, j));
        }
        rational inv = 1 / q_at(M, r, c);
        for (int j = 0; j < A.n; ++j) q_at(M, r, j) *= inv;
        for (int j = 0; j < A.m; ++j) q_at(T, r, j) *= inv;
        for (int i = 0; i < A.m; ++i) {
            if (i == r) continue;
            rational f = q_at(M, i, c);
            if (f == 0) continue;
            for (int j = 0; j < A.n; ++j) q_at(M, i, j) -= f * q_at(M, r, j);
            for (int j = 0; j < A.m; ++j) q_at(T, i, j) -= f * q_at(T, r, j);
        }
        out.pivots.push_back({r, c});
        ++r;
    }
    return out;
}

std::optional<matrix> field_solve_left(const matrix& A, const matrix& B) {
    rref_result rr = rref(A);
    matrix X(A.R, B.m, A.m);
    for (int i = 0; i < B.m; ++i) {
        std::vector<rational> resid(A.n);
        for (int j = 0; j < A.n; ++j) resid[j] = q_at(B, i, j);
        std::vector<rational> coeff(A.m, rational(0));
        for (auto [pr, pc] : rr.pivots) {
            rational f = resid[pc];
            if (f == 0) continue;
            coeff[pr] = f;
            for (int j = 0; j < A.n; ++j) resid[j] -= f * q_at(rr.R, pr, j);
        }
        for (int j = 0; j < A.n; ++j)
            if (resid[j] != 0) return std::nullopt;
        for (int j = 0; j < A.m; ++j) {
            rational x(0);
            for (auto [pr, pc] : rr.pivots) {
                (void)pc;
                if (coeff[pr] != 0) x += coeff[pr] * q_at(rr.T, pr, j);
            }
            X.at(i, j) = scalar(x);
        }
    }
    return X;
}

matrix field_row_syzygies(const matrix& A) {
    rref_result rr = rref(A);
    int rank = static_cast<int>(rr.pivots.size());
    std::vector<int> zero_rows;
    for (int i = rank; i < A.m; ++i) zero_rows.push_back(i);
    return mat_rows(rr.T, zero_rows);
}

// ---- integers: row HNF with transformation ----

hnf_result hnf_impl(const matrix& A) {
    hnf_result out{A, mat_identity(A.R, A.m), {}};
    matrix& M = out.H;
    matrix& U = out.U;
    int r = 0;
    for (int c = 0; c < A.n && r < A.m; ++c) {
        // eliminate below row r in column c by euclidean steps
        while (true) {
            int piv = -1;
            bigint best;
            for (int i = r; i < A.m; ++i) {
                const bigint& v = z_at(M, i, c);
                if (v == 0) continue;
                bigint a = abs(v);
                if (piv < 0 || a < best) { piv = i; best = a; }
            }
            if (piv < 0) break;
            if (piv != r) {
                for (int j = 0; j < A.n; ++j) std::swap(M.at(r, j), M.at(piv, j));
                for (int j = 0; j < A.m; ++j) std::swap(U.at(r, j), U.at(piv, j));
            }
            bool anything_below = false;
            for (int i = r + 1; i < A.m; ++i) {
                const bigint p = z_at(M, r, c);
                bigint q;
                mpz_fdiv_q(q.get_mpz_t(), z_at(M, i, c).get_mpz_t(), p.get_mpz_t());
                if (q != 0) {
                    for (int j = 0; j < A.n; ++j) z_at(M, i, j) -= q * z_at(M, r, j);
                    for (int j = 0; j < A.m; ++j) z_at(U, i, j) -= q * z_at(U, r, j);
                }
                if (z_at(M, i, c) != 0) anything_below = true;
            }
            if (!anything_below) break;
        }
        if (z_at(M, r, c) == 0) continue;
        if (z_at(M, r, c) < 0) {
            for (int j = 0; j < A.n; ++j) z_at(M, r, j) = -z_at(M, r, j);
            for (int j = 0; j < A.m; ++j) z_at(U, r, j) = -z_at(U, r, j);
        }
        const bigint p = z_at(M, r, c);
        for (int i = 0; i < r; ++i) {
            bigint q;
            mpz_fdiv_q(q.get_mpz_t(), z_at(M, i, c).get_mpz_t(), p.get_mpz_t());
            if (q != 0) {
                for (int j = 0; j < A.n; ++j) z_at(M, i, j) -= q * z_at(M, r, j);
                for (int j = 0; j < A.m; ++j) z_at(U, i, j) -= q * z_at(U, r, j);
            }
        }
        out.pivots.push_back({r, c});
        ++r;
    }
    return out;
}

std::optional<matrix> integer_solve_left(const matrix& A, const matrix& B) {
    hnf_result h = hnf_impl(A);
    matrix X(A.R, B.m, A.m);
    for (int i = 0; i < B.m; ++i) {
        std::vector<bigint> resid(A.n);
        for (int j = 0; j < A.n; ++j) resid[j] = z_at(B, i, j);
        std::vector<bigint> coeff(A.m, bigint(0));
        for (auto [pr, pc] : h.pivots) {
            const bigint& p = z_at(h.H, pr, pc);
            if (resid[pc] == 0) continue;
            if (resid[pc] % p != 0) return std::nullopt;
            bigint q = resid[pc] / p;
            coeff[pr] = q;
            for (int j = 0; j < A.n; ++j) resid[j] -= q * z_at(h.H, pr, j);
        }
        for (int j = 0; j < A.n; ++j)
            if (resid[j] != 0) return std::nullopt;
        for (int j = 0; j < A.m; ++j) {
            bigint x(0);
            for (auto [pr, pc] : h.pivots) {
                (void)pc;
                if (coeff[pr] != 0) x += coeff[pr] * z_at(h.U, pr, j);
            }
            X.at(i, j) = scalar(x);
        }
    }
    return X;
}

matrix integer_row_syzygies(const matrix& A) {
    hnf_result h = hnf_impl(A);
    int rank = static_cast<int>(h.pivots.size());
    std::vector<int> zero_rows;
    for (int i = rank; i < A.m; ++i) zero_rows.push_back(i);
    return mat_rows(h.U, zero_rows);
}

bool is_diagonal(const matrix& S) {
    for (int i = 0; i < S.m; ++i)
        for (int j = 0; j < S.n; ++j)
            if (i != j && z_at(S, i, j) != 0) return false;
    return true;
}

} // namespace

hnf_result hermite_normal_form(const matrix& A) {
    require(A.R->kind == ring_kind::integers, "hermite_normal_form: integer matrix required");
    return hnf_impl(A);
}

snf_result smith_normal_form(const matrix& A) {
    require(A.R->kind == ring_kind::integers, "smith_normal_form: integer matrix required");
    snf_result out{A, mat_identity(A.R, A.m), mat_identity(A.R, A.n)};

    auto do_pass = [&]() {
        hnf_result hr = hnf_impl(out.S);
        out.S = hr.H;
        out.U = mat_mul(hr.U, out.U);
        hnf_result hc = hnf_impl(mat_transpose(out.S));
        out.S = mat_transpose(hc.H);
        out.V = mat_mul(out.V, mat_transpose(hc.U));
    };

    while (!is_diagonal(out.S)) do_pass();

    int k = std::min(A.m, A.n);
    for (int i = 0; i < k; ++i) {
        if (z_at(out.S, i, i) < 0) {
            for (int c = 0; c < A.n; ++c) z_at(out.S, i, c) = -z_at(out.S, i, c);
            for (int c = 0; c < A.m; ++c) z_at(out.U, i, c) = -z_at(out.U, i, c);
        }
    }
    // push zero diagonal entries to the end
    for (int i = 0; i < k; ++i) {
        if (z_at(out.S, i, i) != 0) continue;
        for (int j = i + 1; j < k; ++j) {
            if (z_at(out.S, j, j) != 0) {
                for (int c = 0; c < A.n; ++c) std::swap(out.S.at(i, c), out.S.at(j, c));
                for (int c = 0; c < A.m; ++c) std::swap(out.U.at(i, c), out.U.at(j, c));
                for (int r = 0; r < A.m; ++r) std::swap(out.S.at(r, i), out.S.at(r, j));
                for (int r = 0; r < A.n; ++r) std::swap(out.V.at(r, i), out.V.at(r, j));
                break;
            }
        }
    }

    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < k; ++i) {
            const bigint& a = z_at(out.S, i, i);
            const bigint& b = z_at(out.S, i + 1, i + 1);
            if (a == 0 && b != 0) {
                for (int c = 0; c < A.n; ++c) std::swap(out.S.at(i, c), out.S.at(i + 1, c));
                for (int c = 0; c < A.m; ++c) std::swap(out.U.at(i, c), out.U.at(i + 1, c));
                for (int r = 0; r < A.m; ++r) std::swap(out.S.at(r, i), out.S.at(r, i + 1));
                for (int r = 0; r < A.n; ++r) std::swap(out.V.at(r, i), out.V.at(r, i + 1));
                changed = true;
                continue;
            }
            if (a == 0 || b % a == 0) continue;
            // column_i += column_{i+1}, then rediagonalize
            for (int r = 0; r < A.m; ++r) z_at(out.S, r, i) += z_at(out.S, r, i + 1);
            for (int r = 0; r < A.n; ++r) z_at(out.V, r, i) += z_at(out.V, r, i + 1);
            while (!is_diagonal(out.S)) do_pass();
            changed = true;
        }
    }
    return out;
}

std::vector<bigint> invariant_factors(const matrix& A) {
    snf_result s = smith_normal_form(A);
    int k = std::min(A.m, A.n);
    std::vector<bigint> out;
    for (int i = 0; i < k; ++i) out.push_back(z_at(s.S, i, i));
    return out;
}

int field_rank(const matrix& A) {
    require(A.R->kind == ring_kind::rationals, "field_rank: rational matrix required");
    return static_cast<int>(rref(A).pivots.size());
}

std::optional<matrix> solve_left(const matrix& A, const matrix& B) {
    require(same_ring(A.R, B.R), "solve_left: ring mismatch");
    require(A.n == B.n, "solve_left: column count mismatch");
    require_capability(A.R->ideal.empty(), "solve_left: not available over quotient rings");
    if (A.n == 0) return mat_zero(A.R, B.m, A.m);
    if (A.m == 0) {
        if (mat_is_zero(B)) return mat_zero(A.R, B.m, 0);
        return std::nullopt;
    }
    switch (A.R->kind) {
    case ring_kind::rationals: return field_solve_left(A, B);
    case ring_kind::integers: return integer_solve_left(A, B);
    case ring_kind::polynomial: return poly_try_solve_left(A, B);
    }
    return std::nullopt;
}

size_t mat_system::add_unknown(int m, int n) {
    unknowns.push_back({m, n});
    return unknowns.size() - 1;
}

size_t mat_system::add_equation(const matrix& C) {
    rhs.push_back(C);
    return rhs.size() - 1;
}

void mat_system::add_term(size_t eq, size_t unknown, matrix L, matrix Rm) {
    require(eq < rhs.size() && unknown < unknowns.size(), "mat_system: bad indices");
    require(L.m == rhs[eq].m && L.n == unknowns[unknown].m, "mat_system: L shape mismatch");
    require(Rm.m == unknowns[unknown].n && Rm.n == rhs[eq].n, "mat_system: R shape mismatch");
    terms.push_back({eq, unknown, std::move(L), std::move(Rm)});
}

std::optional<std::vector<matrix>> mat_system::solve() const {
    std::vector<int> uoff(unknowns.size() + 1, 0);
    for (size_t k = 0; k < unknowns.size(); ++k)
        uoff[k + 1] = uoff[k] + unknowns[k].m * unknowns[k].n;
    std::vector<int> eoff(rhs.size() + 1, 0);
    for (size_t k = 0; k < rhs.size(); ++k)
        eoff[k + 1] = eoff[k] + rhs[k].m * rhs[k].n;
    const int nunk = uoff.back(), neq = eoff.back();

    matrix M = mat_zero(R, nunk, neq);
    for (auto& t : terms) {
        matrix block = kron(mat_transpose(t.L), t.R);
        for (int i = 0; i < block.m; ++i)
            for (int j = 0; j < block.n; ++j)
                M.at(uoff[t.unknown] + i, eoff[t.eq] + j) =
                    ring_add(*R, M.at(uoff[t.unknown] + i, eoff[t.eq] + j), block.at(i, j));
    }
    matrix b = mat_zero(R, 1, neq);
    for (size_t k = 0; k < rhs.size(); ++k) {
        matrix v = mat_vec(rhs[k]);
        for (int j = 0; j < v.n; ++j) b.at(0, eoff[k] + j) = v.at(0, j);
    }
    auto x = solve_left(M, b);
    if (!x) return std::nullopt;
    std::vector<matrix> out;
    for (size_t k = 0; k < unknowns.size(); ++k) {
        matrix piece = mat_cols(*x, [&] {
            std::vector<int> cols;
            for (int j = uoff[k]; j < uoff[k + 1]; ++j) cols.push_back(j);
            return cols;
        }());
        out.push_back(mat_unvec(piece, unknowns[k].m, unknowns[k].n));
    }
    return out;
}

matrix row_syzygies(const matrix& A) {
    require_capability(A.R->ideal.empty(), "row_syzygies: not available over quotient rings");
    if (A.n == 0) return mat_identity(A.R, A.m);
    if (A.m == 0) return mat_zero(A.R, 0, 0);
    switch (A.R->kind) {
    case ring_kind::rationals: return field_row_syzygies(A);
    case ring_kind::integers: return integer_row_syzygies(A);
    case ring_kind::polynomial: return poly_row_syzygies(A);
    }
    return matrix{};
}

} // namespace fpcat
