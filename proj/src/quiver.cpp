#include "fpcat/quiver.hpp"

#include <algorithm>

#include "fpcat/linalg.hpp"

namespace fpcat {

int quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw usage_error("unknown vertex '" + name + "'");
}

quiver_ptr make_quiver(std::vector<std::string> vertices,
                       std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
    auto q = std::make_shared<quiver>();
    for (size_t i = 0; i < vertices.size(); ++i) {
        require(!vertices[i].empty(), "vertex names must be nonempty");
        for (size_t j = i + 1; j < vertices.size(); ++j)
            require(vertices[i] != vertices[j], "vertex names must be distinct");
    }
    q->vertices = std::move(vertices);
    for (auto& [name, s, d] : arrows) {
        for (auto& a : q->arrows) require(a.name != name, "arrow names must be distinct");
        q->arrows.push_back({name, q->vertex_index(s), q->vertex_index(d)});
    }
    // acyclicity by Kahn's algorithm
    std::vector<int> indeg(q->vertices.size(), 0);
    for (auto& a : q->arrows) ++indeg[a.dst];
    std::vector<int> stack;
    for (size_t v = 0; v < q->vertices.size(); ++v)
        if (indeg[v] == 0) stack.push_back(static_cast<int>(v));
    size_t seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (auto& a : q->arrows)
            if (a.src == v && --indeg[a.dst] == 0) stack.push_back(a.dst);
    }
    require(seen == q->vertices.size(), "quiver must be acyclic");
    return q;
}

std::vector<qpath> enumerate_paths(const quiver& q, int v, int w) {
    std::vector<qpath> out;
    if (v == w) out.push_back({});
    std::vector<qpath> frontier{{}};
    std::vector<int> ends{v};
    while (!frontier.empty()) {
        std::vector<qpath> next;
        std::vector<int> next_ends;
        for (size_t i = 0; i < frontier.size(); ++i) {
            for (size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != ends[i]) continue;
                qpath p = frontier[i];
                p.push_back(static_cast<int>(a));
                if (q.arrows[a].dst == w) out.push_back(p);
                next.push_back(std::move(p));
                next_ends.push_back(q.arrows[a].dst);
            }
        }
        frontier = std::move(next);
        ends = std::move(next_ends);
    }
    std::stable_sort(out.begin(), out.end(), path_less);
    return out;
}

bool path_less(const qpath& a, const qpath& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

path_lin pl_zero(int v, int w) { return path_lin{v, w, {}}; }

path_lin pl_identity(int v) { return path_lin{v, v, {{{}, rational(1)}}}; }

path_lin pl_path(const quiver& q, const qpath& p) {
    require(!p.empty(), "pl_path: use pl_identity for empty paths");
    for (size_t i = 0; i + 1 < p.size(); ++i)
        require(q.arrows[p[i]].dst == q.arrows[p[i + 1]].src, "pl_path: arrows not composable");
    return path_lin{q.arrows[p.front()].src, q.arrows[p.back()].dst, {{p, rational(1)}}};
}

path_lin pl_from_terms(int v, int w, std::vector<std::pair<qpath, rational>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& x, const auto& y) { return path_less(x.first, y.first); });
    path_lin out{v, w, {}};
    for (auto& t : terms) {
        if (t.second == 0) continue;
        if (!out.terms.empty() && out.terms.back().first == t.first) {
            out.terms.back().second += t.second;
            if (out.terms.back().second == 0) out.terms.pop_back();
        } else {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

path_lin pl_add(const path_lin& a, const path_lin& b) {
    require(a.src == b.src && a.dst == b.dst, "pl_add: endpoint mismatch");
    auto terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return pl_from_terms(a.src, a.dst, std::move(terms));
}

path_lin pl_negate(const path_lin& a) {
    path_lin out = a;
    for (auto& t : out.terms) t.second = -t.second;
    return out;
}

path_lin pl_scale(const path_lin& a, const rational& c) {
    if (c == 0) return pl_zero(a.src, a.dst);
    path_lin out = a;
    for (auto& t : out.terms) t.second *= c;
    return out;
}

path_lin pl_compose(const path_lin& a, const path_lin& b) {
    require(a.dst == b.src, "pl_compose: endpoint mismatch");
    std::vector<std::pair<qpath, rational>> terms;
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            qpath p = ta.first;
            p.insert(p.end(), tb.first.begin(), tb.first.end());
            terms.push_back({std::move(p), ta.second * tb.second});
        }
    return pl_from_terms(a.src, b.dst, std::move(terms));
}

bool pl_eq(const path_lin& a, const path_lin& b) {
    return a.src == b.src && a.dst == b.dst && a.terms == b.terms;
}

bool pl_is_zero(const path_lin& a) { return a.terms.empty(); }

int quiver_hom::H_obj(int v, int w) const {
    return static_cast<int>(enumerate_paths(*q, v, w).size());
}

matrix quiver_hom::H_mor(const path_lin& r, const path_lin& s) const {
    // r: v' -> v, s: w -> w'; the matrix of x |-> r x s from basis(v,w) to basis(v',w')
    int v = r.dst, vp = r.src, w = s.src, wp = s.dst;
    auto src_basis = enumerate_paths(*q, v, w);
    auto dst_basis = enumerate_paths(*q, vp, wp);
    matrix out(QQ, static_cast<int>(src_basis.size()), static_cast<int>(dst_basis.size()));
    for (size_t i = 0; i < src_basis.size(); ++i) {
        path_lin x = src_basis[i].empty() ? pl_identity(v) : pl_path(*q, src_basis[i]);
        path_lin y = pl_compose(pl_compose(r, x), s);
        for (auto& t : y.terms) {
            auto it = std::find(dst_basis.begin(), dst_basis.end(), t.first);
            ensure(it != dst_basis.end(), "quiver hom: composed path missing from basis");
            out.at(static_cast<int>(i), static_cast<int>(it - dst_basis.begin())) = scalar(t.second);
        }
    }
    return out;
}

matrix quiver_hom::nu(const path_lin& f) const {
    auto basis = enumerate_paths(*q, f.src, f.dst);
    matrix out(QQ, 1, static_cast<int>(basis.size()));
    for (auto& t : f.terms) {
        auto it = std::find(basis.begin(), basis.end(), t.first);
        ensure(it != basis.end(), "quiver nu: path missing from basis");
        out.at(0, static_cast<int>(it - basis.begin())) = scalar(t.second);
    }
    return out;
}

path_lin quiver_hom::nu_inv(const matrix& row, int v, int w) const {
    auto basis = enumerate_paths(*q, v, w);
    require(row.m == 1 && row.n == static_cast<int>(basis.size()), "quiver nu_inv: bad row shape");
    std::vector<std::pair<qpath, rational>> terms;
    for (size_t i = 0; i < basis.size(); ++i) {
        rational c = std::get<rational>(row.at(0, static_cast<int>(i)).v);
        if (c != 0) terms.push_back({basis[i], c});
    }
    return pl_from_terms(v, w, std::move(terms));
}

qblock qb_zero(const quiver& q, std::vector<int> src, std::vector<int> dst) {
    (void)q;
    qblock out{src, dst, {}};
    out.blocks.reserve(src.size() * dst.size());
    for (int a : src)
        for (int b : dst) out.blocks.push_back(pl_zero(a, b));
    return out;
}

qblock qb_identity(const quiver& q, std::vector<int> at) {
    qblock out = qb_zero(q, at, at);
    for (size_t i = 0; i < at.size(); ++i) out.blocks[i * at.size() + i] = pl_identity(at[i]);
    return out;
}

qblock qb_add(const qblock& a, const qblock& b) {
    require(a.src == b.src && a.dst == b.dst, "qb_add: shape mismatch");
    qblock out = a;
    for (size_t i = 0; i < out.blocks.size(); ++i) out.blocks[i] = pl_add(a.blocks[i], b.blocks[i]);
    return out;
}

qblock qb_negate(const qblock& a) {
    qblock out = a;
    for (auto& blk : out.blocks) blk = pl_negate(blk);
    return out;
}

qblock qb_compose(const qblock& a, const qblock& b) {
    require(a.dst == b.src, "qb_compose: shape mismatch");
    qblock out{a.src, b.dst, {}};
    size_t m = a.src.size(), k = a.dst.size(), n = b.dst.size();
    out.blocks.reserve(m * n);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) {
            path_lin acc = pl_zero(a.src[i], b.dst[j]);
            for (size_t t = 0; t < k; ++t)
                acc = pl_add(acc, pl_compose(a.blocks[i * k + t], b.blocks[t * n + j]));
            out.blocks.push_back(std::move(acc));
        }
    return out;
}

bool qb_eq(const qblock& a, const qblock& b) {
    if (a.src != b.src || a.dst != b.dst) return false;
    for (size_t i = 0; i < a.blocks.size(); ++i)
        if (!pl_eq(a.blocks[i], b.blocks[i])) return false;
    return true;
}

int quiver_block_hom::H_obj(const std::vector<int>& a, const std::vector<int>& b) const {
    int total = 0;
    for (int v : a)
        for (int w : b) total += base.H_obj(v, w);
    return total;
}

matrix quiver_block_hom::H_mor(const qblock& alpha, const qblock& beta) const {
    // alpha: (A_i) -> (B_j) used contravariantly, beta: (C_s) -> (D_t);
    // blocks H(alpha_ij, beta_st) at double indices (j,s) x (i,t), row-major
    const std::vector<int>&A = alpha.src, &B = alpha.dst, &Cs = beta.src, &D = beta.dst;
    int rows = H_obj(B, Cs), cols = H_obj(A, D);
    matrix out(base.QQ, rows, cols);
    int roff = 0;
    for (size_t j = 0; j < B.size(); ++j) {
        for (size_t s = 0; s < Cs.size(); ++s) {
            int rh = base.H_obj(B[j], Cs[s]);
            int coff = 0;
            for (size_t i = 0; i < A.size(); ++i) {
                for (size_t t = 0; t < D.size(); ++t) {
                    int cw = base.H_obj(A[i], D[t]);
                    matrix blk =
                        base.H_mor(alpha.blocks[i * B.size() + j], beta.blocks[s * D.size() + t]);
                    ensure(blk.m == rh && blk.n == cw, "block hom: block shape mismatch");
                    for (int r = 0; r < rh; ++r)
                        for (int c = 0; c < cw; ++c) out.at(roff + r, coff + c) = blk.at(r, c);
                    coff += cw;
                }
            }
            roff += rh;
        }
    }
    return out;
}

matrix quiver_block_hom::nu(const qblock& f) const {
    matrix out(base.QQ, 1, H_obj(f.src, f.dst));
    int off = 0;
    for (size_t j = 0; j < f.src.size(); ++j)
        for (size_t s = 0; s < f.dst.size(); ++s) {
            matrix piece = base.nu(f.blocks[j * f.dst.size() + s]);
            for (int c = 0; c < piece.n; ++c) out.at(0, off + c) = piece.at(0, c);
            off += piece.n;
        }
    return out;
}

qblock quiver_block_hom::nu_inv(const quiver& q, const matrix& row, const std::vector<int>& a,
                                const std::vector<int>& b) const {
    qblock out = qb_zero(q, a, b);
    int off = 0;
    for (size_t j = 0; j < a.size(); ++j)
        for (size_t s = 0; s < b.size(); ++s) {
            int w = base.H_obj(a[j], b[s]);
            matrix piece(base.QQ, 1, w);
            for (int c = 0; c < w; ++c) piece.at(0, c) = row.at(0, off + c);
            out.blocks[j * b.size() + s] = base.nu_inv(piece, a[j], b[s]);
            off += w;
        }
    return out;
}

std::optional<qblock> qb_lift(const quiver& q, const quiver_block_hom& hs, const qblock& alpha,
                              const qblock& gamma) {
    require(alpha.dst == gamma.dst, "qb_lift: cospan mismatch");
    qblock idA = qb_identity(q, alpha.src);
    matrix Hg = hs.H_mor(idA, gamma); // H(A,C) -> H(A,B)
    matrix na = hs.nu(alpha);         // 1 x H(A,B)
    auto sol = solve_left(Hg, na);
    if (!sol) return std::nullopt;
    return hs.nu_inv(q, *sol, alpha.src, gamma.src);
}

} // namespace fpcat
