#include "fpcat/matrix.hpp"

#include <sstream>

namespace fpcat {

matrix mat_zero(const ring_ptr& R, int m, int n) { return matrix(R, m, n); }

matrix mat_identity(const ring_ptr& R, int n) {
    matrix a(R, n, n);
    for (int i = 0; i < n; ++i) a.at(i, i) = ring_one(*R);
    return a;
}

matrix mat_from_ints(const ring_ptr& R, int m, int n, const std::vector<long>& vals) {
    require(static_cast<int>(vals.size()) == m * n, "mat_from_ints: wrong value count");
    matrix a(R, m, n);
    for (int i = 0; i < m * n; ++i) a.e[i] = ring_from_int(*R, vals[i]);
    return a;
}

static void require_same_shape(const matrix& a, const matrix& b, const char* op) {
    require(same_ring(a.R, b.R), std::string(op) + ": ring mismatch");
    require(a.m == b.m && a.n == b.n, std::string(op) + ": shape mismatch");
}

matrix mat_add(const matrix& a, const matrix& b) {
    require_same_shape(a, b, "mat_add");
    matrix r(a.R, a.m, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = ring_add(*a.R, a.e[i], b.e[i]);
    return r;
}

matrix mat_sub(const matrix& a, const matrix& b) {
    require_same_shape(a, b, "mat_sub");
    matrix r(a.R, a.m, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = ring_sub(*a.R, a.e[i], b.e[i]);
    return r;
}

matrix mat_neg(const matrix& a) {
    matrix r(a.R, a.m, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = ring_neg(*a.R, a.e[i]);
    return r;
}

matrix mat_mul(const matrix& a, const matrix& b) {
    require(same_ring(a.R, b.R), "mat_mul: ring mismatch");
    require(a.n == b.m, "mat_mul: inner dimension mismatch");
    matrix r(a.R, a.m, b.n);
    for (int i = 0; i < a.m; ++i)
        for (int k = 0; k < a.n; ++k) {
            const scalar& aik = a.at(i, k);
            if (ring_is_zero(*a.R, aik)) continue;
            for (int j = 0; j < b.n; ++j)
                r.at(i, j) = ring_add(*a.R, r.at(i, j), ring_mul(*a.R, aik, b.at(k, j)));
        }
    return r;
}

matrix mat_scale(const matrix& a, const scalar& c) {
    matrix r(a.R, a.m, a.n);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = ring_mul(*a.R, a.e[i], c);
    return r;
}

matrix mat_transpose(const matrix& a) {
    matrix r(a.R, a.n, a.m);
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.n; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

matrix mat_hstack(const matrix& a, const matrix& b) {
    require(same_ring(a.R, b.R), "mat_hstack: ring mismatch");
    require(a.m == b.m, "mat_hstack: row count mismatch");
    matrix r(a.R, a.m, a.n + b.n);
    for (int i = 0; i < a.m; ++i) {
        for (int j = 0; j < a.n; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.n; ++j) r.at(i, a.n + j) = b.at(i, j);
    }
    return r;
}

matrix mat_vstack(const matrix& a, const matrix& b) {
    require(same_ring(a.R, b.R), "mat_vstack: ring mismatch");
    require(a.n == b.n, "mat_vstack: column count mismatch");
    matrix r(a.R, a.m + b.m, a.n);
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.n; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.m; ++i)
        for (int j = 0; j < b.n; ++j) r.at(a.m + i, j) = b.at(i, j);
    return r;
}

matrix mat_rows(const matrix& a, const std::vector<int>& rows) {
    matrix r(a.R, static_cast<int>(rows.size()), a.n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < a.n; ++j) r.at(static_cast<int>(i), j) = a.at(rows[i], j);
    return r;
}

matrix mat_cols(const matrix& a, const std::vector<int>& cols) {
    matrix r(a.R, a.m, static_cast<int>(cols.size()));
    for (int i = 0; i < a.m; ++i)
        for (size_t j = 0; j < cols.size(); ++j) r.at(i, static_cast<int>(j)) = a.at(i, cols[j]);
    return r;
}

bool mat_eq(const matrix& a, const matrix& b) {
    if (!same_ring(a.R, b.R) || a.m != b.m || a.n != b.n) return false;
    for (size_t i = 0; i < a.e.size(); ++i)
        if (!ring_eq(*a.R, a.e[i], b.e[i])) return false;
    return true;
}

bool mat_is_zero(const matrix& a) {
    for (auto& x : a.e)
        if (!ring_is_zero(*a.R, x)) return false;
    return true;
}

matrix mat_row(const matrix& a, int i) { return mat_rows(a, {i}); }

matrix kron(const matrix& a, const matrix& b) {
    require(same_ring(a.R, b.R), "kron: ring mismatch");
    matrix r(a.R, a.m * b.m, a.n * b.n);
    for (int i = 0; i < a.m; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int k = 0; k < b.m; ++k)
                for (int l = 0; l < b.n; ++l)
                    r.at(i * b.m + k, j * b.n + l) = ring_mul(*a.R, a.at(i, j), b.at(k, l));
    return r;
}

matrix mat_vec(const matrix& a) {
    matrix r(a.R, 1, a.m * a.n);
    r.e = a.e;
    return r;
}

matrix mat_unvec(const matrix& row, int m, int n) {
    require(row.m == 1 && row.n == m * n, "mat_unvec: shape mismatch");
    matrix r(row.R, m, n);
    r.e = row.e;
    return r;
}

std::string matrix_to_string(const matrix& a, bool with_header) {
    std::ostringstream os;
    if (with_header) os << "ring " << ring_name(*a.R) << "\n";
    os << a.m << " " << a.n << "\n";
    for (int i = 0; i < a.m; ++i) {
        for (int j = 0; j < a.n; ++j) {
            if (j) os << " ";
            os << scalar_to_string(*a.R, a.at(i, j));
        }
        os << "\n";
    }
    return os.str();
}

matrix parse_matrix_body(const ring_ptr& R, std::istream& in) {
    int m = 0, n = 0;
    if (!(in >> m >> n)) throw usage_error("matrix: expected 'm n' dimension line");
    require(m >= 0 && n >= 0, "matrix: negative dimensions");
    matrix a(R, m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw usage_error("matrix: not enough entries");
            a.at(i, j) = parse_scalar(R, tok);
        }
    return a;
}

matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string kw;
    in >> kw;
    require(kw == "ring", "matrix: expected 'ring <name>' header");
    std::string name;
    std::getline(in, name);
    ring_ptr R = parse_ring_name(name);
    return parse_matrix_body(R, in);
}

} // namespace fpcat
