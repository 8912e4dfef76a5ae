#include "fpcat/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace fpcat {

namespace {

const polynomial& entry_poly(const scalar& s) { return std::get<polynomial>(s.v); }

modvec row_to_modvec(const matrix& A, int i) {
    modvec v(A.n);
    for (int j = 0; j < A.n; ++j) v[j] = entry_poly(A.at(i, j));
    return v;
}

bool modvec_is_zero(const modvec& v) {
    for (auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

modvec modvec_zero(size_t n) { return modvec(n); }

modvec modvec_sub(const ring_desc& R, const modvec& a, const modvec& b) {
    modvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_sub(R, a[i], b[i]);
    return r;
}

modvec modvec_mul_term(const ring_desc& R, const modvec& a, const monomial& m, const rational& c) {
    modvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_mul_term(R, a[i], m, c);
    return r;
}

modvec modvec_scale(const modvec& a, const rational& c) {
    modvec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = poly_scale(a[i], c);
    return r;
}

rational lead_coeff(const modvec& v, const modterm& lt) {
    for (auto& t : v[lt.col].terms)
        if (t.first == lt.mono) return t.second;
    return rational(0);
}

} // namespace

modterm mod_lead(const ring_desc& R, const modvec& v) {
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero())
            return modterm{static_cast<int>(j), v[j].terms.front().first};
    (void)R;
    return modterm{};
}

int modterm_cmp(const ring_desc& R, const modterm& a, const modterm& b) {
    if (a.col < 0 || b.col < 0) {
        if (a.col < 0 && b.col < 0) return 0;
        return a.col < 0 ? -1 : 1;
    }
    if (a.col != b.col) return a.col < b.col ? 1 : -1;
    return mono_cmp(R, a.mono, b.mono);
}

module_nf module_normal_form(const ring_desc& R, const std::vector<modvec>& basis, modvec v) {
    module_nf out;
    out.coeffs.assign(basis.size(), poly_zero());
    if (basis.empty()) {
        out.remainder = std::move(v);
        return out;
    }
    std::vector<modterm> leads(basis.size());
    std::vector<rational> lcs(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) {
        leads[k] = mod_lead(R, basis[k]);
        if (leads[k].col >= 0) lcs[k] = lead_coeff(basis[k], leads[k]);
    }

    modvec rem = modvec_zero(v.size());
    // full reduction: repeatedly take the current greatest term of v,
    // reduce it if some basis lead divides it, otherwise move it to the remainder
    while (!modvec_is_zero(v)) {
        modterm lt = mod_lead(R, v);
        rational c = lead_coeff(v, lt);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (leads[k].col != lt.col || !mono_divides(leads[k].mono, lt.mono)) continue;
            monomial q = mono_div(lt.mono, leads[k].mono);
            rational qc = c / lcs[k];
            v = modvec_sub(R, v, modvec_mul_term(R, basis[k], q, qc));
            polynomial qt;
            qt.terms.push_back({q, qc});
            out.coeffs[k] = poly_add(R, out.coeffs[k], qt);
            reduced = true;
            break;
        }
        if (!reduced) {
            polynomial mono_poly;
            mono_poly.terms.push_back({lt.mono, c});
            rem[lt.col] = poly_add(R, rem[lt.col], mono_poly);
            polynomial strip;
            strip.terms.push_back({lt.mono, -c});
            v[lt.col] = poly_add(R, v[lt.col], strip);
        }
    }
    out.remainder = std::move(rem);
    return out;
}

namespace {

struct gb_element {
    modvec vec;
    modvec rep;
    modterm lead;
};

struct working_basis {
    const ring_desc& R;
    std::vector<gb_element> g;

    std::vector<modvec> vecs() const {
        std::vector<modvec> out;
        out.reserve(g.size());
        for (auto& e : g) out.push_back(e.vec);
        return out;
    }
};

// normal selection strategy: minimal lcm total degree, then lexicographic pair index
struct spair_key {
    int deg;
    int i, j;
    bool operator<(const spair_key& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

void make_monic(const ring_desc& R, gb_element& e) {
    e.lead = mod_lead(R, e.vec);
    if (e.lead.col < 0) return;
    rational lc = lead_coeff(e.vec, e.lead);
    if (lc != 1) {
        rational inv = 1 / lc;
        e.vec = modvec_scale(e.vec, inv);
        e.rep = modvec_scale(e.rep, inv);
    }
}

// scale so all coefficients are coprime integers with a positive leading one;
// keeps intermediate arithmetic small while the final interreduction re-monics
void make_primitive(const ring_desc& R, gb_element& e) {
    e.lead = mod_lead(R, e.vec);
    if (e.lead.col < 0) return;
    bigint den_lcm = 1, num_gcd = 0;
    for (auto& p : e.vec)
        for (auto& t : p.terms) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.second.get_den().get_mpz_t());
        }
    for (auto& p : e.vec)
        for (auto& t : p.terms) {
            bigint scaled_num = t.second.get_num() * (den_lcm / t.second.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
        }
    if (num_gcd == 0) num_gcd = 1;
    rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (lead_coeff(e.vec, e.lead) < 0) factor = -factor;
    if (factor != 1) {
        e.vec = modvec_scale(e.vec, factor);
        e.rep = modvec_scale(e.rep, factor);
    }
}

} // namespace

namespace {

// write-once cache of module Groebner bases keyed by the printed matrix; the
// computation is deterministic, so hits are indistinguishable from recomputation
std::mutex gb_cache_mu;
std::map<std::string, module_gb>& gb_cache() {
    static std::map<std::string, module_gb> cache;
    return cache;
}

module_gb module_groebner_uncached(const matrix& A);

} // namespace

module_gb module_groebner(const matrix& A) {
    std::string key = matrix_to_string(A, true) + (A.R->order == monomial_order::lex ? "|lex" : "");
    {
        std::lock_guard<std::mutex> lock(gb_cache_mu);
        auto it = gb_cache().find(key);
        if (it != gb_cache().end()) return it->second;
    }
    module_gb out = module_groebner_uncached(A);
    std::lock_guard<std::mutex> lock(gb_cache_mu);
    if (gb_cache().size() > 4096) gb_cache().clear();
    gb_cache().emplace(std::move(key), out);
    return out;
}

namespace {

module_gb module_groebner_uncached(const matrix& A) {
    require(A.R->kind == ring_kind::polynomial, "module_groebner: polynomial ring required");
    const ring_desc& R = *A.R;
    working_basis wb{R, {}};
    const int m = A.m, n = A.n;

    for (int i = 0; i < m; ++i) {
        gb_element e;
        e.vec = row_to_modvec(A, i);
        e.rep = modvec_zero(m);
        e.rep[i] = poly_const(R, 1);
        if (modvec_is_zero(e.vec)) continue;
        make_primitive(R, e);
        wb.g.push_back(std::move(e));
    }

    std::set<spair_key> pairs;
    auto lcm_of = [&](int i, int j) {
        return mono_lcm(wb.g[i].lead.mono, wb.g[j].lead.mono);
    };
    // Gebauer-Moeller pruning of the pair queue (the product criterion is not
    // valid for modules and is deliberately not used)
    auto queue_pairs_with = [&](int t) {
        const modterm& lt = wb.g[t].lead;
        if (lt.col < 0) return;
        // B criterion on already queued pairs
        for (auto it = pairs.begin(); it != pairs.end();) {
            int i = it->i, j = it->j;
            if (wb.g[i].lead.col == lt.col) {
                monomial lij = lcm_of(i, j);
                if (mono_divides(lt.mono, lij) && lcm_of(i, t) != lij && lcm_of(j, t) != lij) {
                    it = pairs.erase(it);
                    continue;
                }
            }
            ++it;
        }
        std::vector<int> cand;
        for (int i = 0; i < t; ++i)
            if (wb.g[i].lead.col == lt.col) cand.push_back(i);
        std::vector<monomial> lcms(cand.size());
        for (size_t a = 0; a < cand.size(); ++a) lcms[a] = lcm_of(cand[a], t);
        std::vector<bool> drop(cand.size(), false);
        // M criterion: a strictly smaller lcm supersedes
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b) continue;
                if (mono_divides(lcms[b], lcms[a]) && lcms[b] != lcms[a]) {
                    drop[a] = true;
                    break;
                }
            }
        // F criterion: keep one representative per lcm value
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = 0; b < a; ++b)
                if (!drop[b] && lcms[a] == lcms[b]) {
                    drop[a] = true;
                    break;
                }
        }
        for (size_t a = 0; a < cand.size(); ++a)
            if (!drop[a]) pairs.insert({mono_total_degree(lcms[a]), cand[a], t});
    };
    for (size_t j = 0; j < wb.g.size(); ++j) queue_pairs_with(static_cast<int>(j));

    while (!pairs.empty()) {
        spair_key key = *pairs.begin();
        pairs.erase(pairs.begin());
        const gb_element& gi = wb.g[key.i];
        const gb_element& gj = wb.g[key.j];
        monomial l = mono_lcm(gi.lead.mono, gj.lead.mono);
        monomial qi = mono_div(l, gi.lead.mono);
        monomial qj = mono_div(l, gj.lead.mono);
        rational ci = 1 / lead_coeff(gi.vec, gi.lead);
        rational cj = 1 / lead_coeff(gj.vec, gj.lead);
        modvec s = modvec_sub(R, modvec_mul_term(R, gi.vec, qi, ci),
                              modvec_mul_term(R, gj.vec, qj, cj));
        modvec rep = modvec_sub(R, modvec_mul_term(R, gi.rep, qi, ci),
                                modvec_mul_term(R, gj.rep, qj, cj));
        auto basis = wb.vecs();
        module_nf nf = module_normal_form(R, basis, s);
        for (size_t k = 0; k < wb.g.size(); ++k) {
            if (nf.coeffs[k].is_zero()) continue;
            modvec scaled(rep.size());
            for (size_t t = 0; t < rep.size(); ++t)
                scaled[t] = poly_mul(R, nf.coeffs[k], wb.g[k].rep[t]);
            rep = modvec_sub(R, rep, scaled);
        }
        if (!modvec_is_zero(nf.remainder)) {
            gb_element e;
            e.vec = std::move(nf.remainder);
            e.rep = std::move(rep);
            make_primitive(R, e);
            wb.g.push_back(std::move(e));
            queue_pairs_with(static_cast<int>(wb.g.size()) - 1);
        }
    }

    // minimal basis: drop elements whose lead is divisible by another kept lead
    std::vector<int> order(wb.g.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int c = modterm_cmp(R, wb.g[a].lead, wb.g[b].lead);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<int> kept;
    for (int idx : order) {
        bool redundant = false;
        for (int k : kept) {
            if (wb.g[k].lead.col == wb.g[idx].lead.col &&
                mono_divides(wb.g[k].lead.mono, wb.g[idx].lead.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(idx);
    }

    std::vector<gb_element> mine;
    for (int idx : kept) mine.push_back(wb.g[idx]);
    for (auto& e : mine) make_monic(R, e);

    // tail reduction against the other kept elements
    for (size_t t = 0; t < mine.size(); ++t) {
        std::vector<modvec> others;
        std::vector<size_t> omap;
        for (size_t k = 0; k < mine.size(); ++k)
            if (k != t) { others.push_back(mine[k].vec); omap.push_back(k); }
        // strip the lead before reducing so the lead itself is never rewritten
        modvec tail = mine[t].vec;
        polynomial lead_term;
        lead_term.terms.push_back({mine[t].lead.mono, rational(1)});
        tail[mine[t].lead.col] = poly_sub(R, tail[mine[t].lead.col], lead_term);
        module_nf nf = module_normal_form(R, others, tail);
        modvec newvec = nf.remainder;
        newvec[mine[t].lead.col] = poly_add(R, newvec[mine[t].lead.col], lead_term);
        modvec newrep = mine[t].rep;
        for (size_t k = 0; k < others.size(); ++k) {
            if (nf.coeffs[k].is_zero()) continue;
            modvec scaled(newrep.size());
            for (size_t i = 0; i < newrep.size(); ++i)
                scaled[i] = poly_mul(R, nf.coeffs[k], mine[omap[k]].rep[i]);
            newrep = modvec_sub(R, newrep, scaled);
        }
        mine[t].vec = std::move(newvec);
        mine[t].rep = std::move(newrep);
    }

    std::sort(mine.begin(), mine.end(), [&](const gb_element& a, const gb_element& b) {
        return modterm_cmp(R, a.lead, b.lead) > 0;
    });

    module_gb out;
    out.ncols = n;
    out.ninput = m;
    for (auto& e : mine) {
        out.basis.push_back(std::move(e.vec));
        out.rep.push_back(std::move(e.rep));
    }
    return out;
}

} // namespace

namespace {

matrix modvecs_to_matrix(const ring_ptr& R, const std::vector<modvec>& rows, int ncols) {
    matrix out(R, static_cast<int>(rows.size()), ncols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < ncols; ++j) out.at(static_cast<int>(i), j) = scalar(rows[i][j]);
    return out;
}

} // namespace

std::optional<matrix> poly_try_solve_left(const matrix& A, const matrix& B) {
    const ring_desc& R = *A.R;
    module_gb gb = module_groebner(A);
    matrix X(A.R, B.m, A.m);
    for (int i = 0; i < B.m; ++i) {
        module_nf nf = module_normal_form(R, gb.basis, row_to_modvec(B, i));
        if (!modvec_is_zero(nf.remainder)) return std::nullopt;
        // X_i = coeffs * rep
        for (size_t k = 0; k < gb.basis.size(); ++k) {
            if (nf.coeffs[k].is_zero()) continue;
            for (int j = 0; j < A.m; ++j) {
                polynomial add = poly_mul(R, nf.coeffs[k], gb.rep[k][j]);
                X.at(i, j) = scalar(poly_add(R, entry_poly(X.at(i, j)), add));
            }
        }
    }
    return X;
}

matrix poly_solve_left(const matrix& A, const matrix& B) {
    auto X = poly_try_solve_left(A, B);
    require(X.has_value(), "poly_solve_left: no solution");
    return *X;
}

namespace {

std::mutex syz_cache_mu;
std::map<std::string, matrix>& syz_cache() {
    static std::map<std::string, matrix> cache;
    return cache;
}

} // namespace

matrix poly_row_syzygies(const matrix& A) {
    std::string key = matrix_to_string(A, true) + (A.R->order == monomial_order::lex ? "|lex" : "");
    {
        std::lock_guard<std::mutex> lock(syz_cache_mu);
        auto it = syz_cache().find(key);
        if (it != syz_cache().end()) return it->second;
    }
    const ring_desc& R = *A.R;
    const int m = A.m;
    module_gb gb = module_groebner(A);
    const size_t t = gb.basis.size();

    std::vector<modvec> syz_rows;

    // Schreyer syzygies of the basis, pushed down to the input rows through rep
    for (size_t i = 0; i < t; ++i) {
        modterm li = mod_lead(R, gb.basis[i]);
        for (size_t j = i + 1; j < t; ++j) {
            modterm lj = mod_lead(R, gb.basis[j]);
            if (li.col != lj.col) continue;
            monomial l = mono_lcm(li.mono, lj.mono);
            monomial qi = mono_div(l, li.mono);
            monomial qj = mono_div(l, lj.mono);
            modvec s = modvec_sub(R, modvec_mul_term(R, gb.basis[i], qi, rational(1)),
                                  modvec_mul_term(R, gb.basis[j], qj, rational(1)));
            module_nf nf = module_normal_form(R, gb.basis, s);
            ensure(modvec_is_zero(nf.remainder), "S-polynomial of a Groebner basis must reduce to zero");
            // syzygy among basis elements: qi*e_i - qj*e_j - coeffs
            modvec z(t);
            polynomial pi, pj;
            pi.terms.push_back({qi, rational(1)});
            pj.terms.push_back({qj, rational(1)});
            z[i] = poly_add(R, z[i], pi);
            z[j] = poly_sub(R, z[j], pj);
            for (size_t k = 0; k < t; ++k) z[k] = poly_sub(R, z[k], nf.coeffs[k]);
            // translate to input rows: z * rep
            modvec row(m);
            for (size_t k = 0; k < t; ++k) {
                if (z[k].is_zero()) continue;
                for (int c = 0; c < m; ++c)
                    row[c] = poly_add(R, row[c], poly_mul(R, z[k], gb.rep[k][c]));
            }
            if (!modvec_is_zero(row)) syz_rows.push_back(std::move(row));
        }
    }

    // rows of (I - S * rep), where input_r = S_r * basis
    for (int r = 0; r < m; ++r) {
        module_nf nf = module_normal_form(R, gb.basis, row_to_modvec(A, r));
        ensure(modvec_is_zero(nf.remainder), "input row must reduce to zero against its own basis");
        modvec row(m);
        row[r] = poly_const(R, 1);
        for (size_t k = 0; k < t; ++k) {
            if (nf.coeffs[k].is_zero()) continue;
            for (int c = 0; c < m; ++c)
                row[c] = poly_sub(R, row[c], poly_mul(R, nf.coeffs[k], gb.rep[k][c]));
        }
        if (!modvec_is_zero(row)) syz_rows.push_back(std::move(row));
    }

    matrix out = modvecs_to_matrix(A.R, syz_rows, m);
    std::lock_guard<std::mutex> lock(syz_cache_mu);
    if (syz_cache().size() > 4096) syz_cache().clear();
    syz_cache().emplace(std::move(key), out);
    return out;
}

std::vector<polynomial> groebner_basis(const ring_ptr& R, const std::vector<polynomial>& gens) {
    require(R->kind == ring_kind::polynomial, "groebner_basis: polynomial ring required");
    matrix A(R, static_cast<int>(gens.size()), 1);
    for (size_t i = 0; i < gens.size(); ++i) A.at(static_cast<int>(i), 0) = scalar(gens[i]);
    module_gb gb = module_groebner(A);
    std::vector<polynomial> out;
    for (auto& v : gb.basis) out.push_back(v[0]);
    return out;
}

polynomial normal_form(const ring_desc& R, const polynomial& p, const std::vector<polynomial>& gb) {
    std::vector<modvec> basis;
    for (auto& g : gb)
        if (!g.is_zero()) basis.push_back({g});
    module_nf nf = module_normal_form(R, basis, {p});
    return nf.remainder[0];
}

} // namespace fpcat
