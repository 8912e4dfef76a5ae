#include "fpcat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fpcat {

ring_ptr make_QQ() {
    auto r = std::make_shared<ring_desc>();
    r->kind = ring_kind::rationals;
    return r;
}

ring_ptr make_ZZ() {
    auto r = std::make_shared<ring_desc>();
    r->kind = ring_kind::integers;
    return r;
}

ring_ptr make_poly_ring(std::vector<std::string> vars, monomial_order order) {
    require(!vars.empty(), "polynomial ring needs at least one variable");
    for (size_t i = 0; i < vars.size(); ++i) {
        require(!vars[i].empty(), "variable names must be nonempty");
        for (size_t j = i + 1; j < vars.size(); ++j)
            require(vars[i] != vars[j], "variable names must be distinct");
    }
    auto r = std::make_shared<ring_desc>();
    r->kind = ring_kind::polynomial;
    r->vars = std::move(vars);
    r->order = order;
    return r;
}

ring_ptr attach_ideal(const ring_ptr& R, std::vector<polynomial> reduced_gb) {
    require(R->kind == ring_kind::polynomial, "ideals attach to polynomial rings only");
    auto r = std::make_shared<ring_desc>(*R);
    r->ideal = std::move(reduced_gb);
    return r;
}

bool same_ring(const ring_desc& a, const ring_desc& b) {
    return a.kind == b.kind && a.vars == b.vars && a.order == b.order && a.ideal == b.ideal;
}

std::string ring_name(const ring_desc& R) {
    switch (R.kind) {
    case ring_kind::rationals: return "Q";
    case ring_kind::integers: return "Z";
    case ring_kind::polynomial: {
        std::string s = "Q[";
        for (size_t i = 0; i < R.vars.size(); ++i) {
            if (i) s += ",";
            s += R.vars[i];
        }
        return s + "]";
    }
    }
    return "?";
}

int mono_cmp(const ring_desc& R, const monomial& a, const monomial& b) {
    if (R.order == monomial_order::lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    // degrevlex
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

monomial mono_mul(const monomial& a, const monomial& b) {
    monomial r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool mono_divides(const monomial& a, const monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

monomial mono_div(const monomial& b, const monomial& a) {
    monomial r = b;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= a[i];
    return r;
}

monomial mono_lcm(const monomial& a, const monomial& b) {
    monomial r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

int mono_total_degree(const monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

polynomial poly_zero() { return polynomial{}; }

polynomial poly_const(const ring_desc& R, const rational& c) {
    polynomial p;
    if (c != 0) p.terms.push_back({mono_one(R), c});
    return p;
}

polynomial poly_var(const ring_desc& R, size_t var_index) {
    monomial m = mono_one(R);
    m.at(var_index) = 1;
    polynomial p;
    p.terms.push_back({std::move(m), rational(1)});
    return p;
}

polynomial poly_from_terms(const ring_desc& R, std::vector<std::pair<monomial, rational>> terms) {
    for (auto& t : terms) t.second.canonicalize();
    std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
        return mono_cmp(R, x.first, y.first) > 0;
    });
    polynomial p;
    for (auto& t : terms) {
        if (t.second == 0) continue;
        if (!p.terms.empty() && p.terms.back().first == t.first) {
            p.terms.back().second += t.second;
            if (p.terms.back().second == 0) p.terms.pop_back();
        } else {
            p.terms.push_back(std::move(t));
        }
    }
    return p;
}

polynomial poly_add(const ring_desc& R, const polynomial& a, const polynomial& b) {
    polynomial r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (i == a.terms.size()) { r.terms.push_back(b.terms[j++]); continue; }
        if (j == b.terms.size()) { r.terms.push_back(a.terms[i++]); continue; }
        int c = mono_cmp(R, a.terms[i].first, b.terms[j].first);
        if (c > 0) r.terms.push_back(a.terms[i++]);
        else if (c < 0) r.terms.push_back(b.terms[j++]);
        else {
            rational s = a.terms[i].second + b.terms[j].second;
            if (s != 0) r.terms.push_back({a.terms[i].first, s});
            ++i; ++j;
        }
    }
    return r;
}

polynomial poly_neg(const polynomial& a) {
    polynomial r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

polynomial poly_sub(const ring_desc& R, const polynomial& a, const polynomial& b) {
    return poly_add(R, a, poly_neg(b));
}

polynomial poly_mul_term(const ring_desc& R, const polynomial& a, const monomial& m, const rational& c) {
    (void)R;
    polynomial r;
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (auto& t : a.terms)
        r.terms.push_back({mono_mul(t.first, m), t.second * c});
    return r;
}

polynomial poly_mul(const ring_desc& R, const polynomial& a, const polynomial& b) {
    polynomial r;
    for (auto& t : b.terms)
        r = poly_add(R, r, poly_mul_term(R, a, t.first, t.second));
    return r;
}

polynomial poly_scale(const polynomial& a, const rational& c) {
    polynomial r;
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (auto& t : a.terms) r.terms.push_back({t.first, t.second * c});
    return r;
}

int poly_total_degree(const polynomial& a) {
    int d = -1;
    for (auto& t : a.terms) d = std::max(d, mono_total_degree(t.first));
    return d;
}

scalar ring_zero(const ring_desc& R) { return ring_from_int(R, 0); }
scalar ring_one(const ring_desc& R) { return ring_from_int(R, 1); }

scalar ring_from_int(const ring_desc& R, long n) {
    switch (R.kind) {
    case ring_kind::rationals: return scalar(rational(n));
    case ring_kind::integers: return scalar(bigint(n));
    case ring_kind::polynomial: return scalar(poly_const(R, rational(n)));
    }
    return scalar{};
}

namespace {
const rational& as_q(const scalar& s) { return std::get<rational>(s.v); }
const bigint& as_z(const scalar& s) { return std::get<bigint>(s.v); }
const polynomial& as_p(const scalar& s) { return std::get<polynomial>(s.v); }
} // namespace

scalar ring_add(const ring_desc& R, const scalar& a, const scalar& b) {
    switch (R.kind) {
    case ring_kind::rationals: return scalar(rational(as_q(a) + as_q(b)));
    case ring_kind::integers: return scalar(bigint(as_z(a) + as_z(b)));
    case ring_kind::polynomial: return scalar(poly_add(R, as_p(a), as_p(b)));
    }
    return scalar{};
}

scalar ring_sub(const ring_desc& R, const scalar& a, const scalar& b) {
    switch (R.kind) {
    case ring_kind::rationals: return scalar(rational(as_q(a) - as_q(b)));
    case ring_kind::integers: return scalar(bigint(as_z(a) - as_z(b)));
    case ring_kind::polynomial: return scalar(poly_sub(R, as_p(a), as_p(b)));
    }
    return scalar{};
}

scalar ring_mul(const ring_desc& R, const scalar& a, const scalar& b) {
    switch (R.kind) {
    case ring_kind::rationals: return scalar(rational(as_q(a) * as_q(b)));
    case ring_kind::integers: return scalar(bigint(as_z(a) * as_z(b)));
    case ring_kind::polynomial: return scalar(poly_mul(R, as_p(a), as_p(b)));
    }
    return scalar{};
}

scalar ring_neg(const ring_desc& R, const scalar& a) {
    switch (R.kind) {
    case ring_kind::rationals: return scalar(rational(-as_q(a)));
    case ring_kind::integers: return scalar(bigint(-as_z(a)));
    case ring_kind::polynomial: return scalar(poly_neg(as_p(a)));
    }
    return scalar{};
}

// defined in groebner.cpp
polynomial normal_form(const ring_desc& R, const polynomial& p, const std::vector<polynomial>& gb);

bool ring_is_zero(const ring_desc& R, const scalar& a) {
    switch (R.kind) {
    case ring_kind::rationals: return as_q(a) == 0;
    case ring_kind::integers: return as_z(a) == 0;
    case ring_kind::polynomial:
        if (R.ideal.empty()) return as_p(a).is_zero();
        return normal_form(R, as_p(a), R.ideal).is_zero();
    }
    return false;
}

bool ring_eq(const ring_desc& R, const scalar& a, const scalar& b) {
    return ring_is_zero(R, ring_sub(R, a, b));
}

namespace {

std::string rat_to_string(const rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

void append_term(const ring_desc& R, std::string& out, const monomial& m, const rational& c, bool first) {
    rational a = c;
    if (first) {
        if (a < 0) { out += "-"; a = -a; }
    } else {
        out += (a < 0) ? "-" : "+";
        if (a < 0) a = -a;
    }
    bool has_mono = mono_total_degree(m) > 0;
    if (!has_mono || a != 1) {
        out += rat_to_string(a);
        if (has_mono) out += "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first_var) out += "*";
        first_var = false;
        out += R.vars[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
}

} // namespace

std::string poly_to_string(const ring_desc& R, const polynomial& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : p.terms) {
        append_term(R, out, t.first, t.second, first);
        first = false;
    }
    return out;
}

std::string scalar_to_string(const ring_desc& R, const scalar& a) {
    switch (R.kind) {
    case ring_kind::rationals: return rat_to_string(as_q(a));
    case ring_kind::integers: return as_z(a).get_str();
    case ring_kind::polynomial: return poly_to_string(R, as_p(a));
    }
    return "?";
}

// --- compact infix parser ---

namespace {

struct parser {
    const ring_ptr& R;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw usage_error("parse error at position " + std::to_string(pos) + " in '" + s + "': " + msg);
    }

    bigint parse_natural() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return bigint(s.substr(start, pos - start));
    }

    rational parse_number() {
        bigint num = parse_natural();
        if (peek() == '/') {
            ++pos;
            bigint den = parse_natural();
            if (den == 0) fail("zero denominator");
            rational q(num, den);
            q.canonicalize();
            return q;
        }
        return rational(num);
    }

    std::optional<size_t> parse_var() {
        skip_ws();
        size_t best_len = 0, best_idx = 0;
        for (size_t i = 0; i < R->vars.size(); ++i) {
            const std::string& v = R->vars[i];
            if (v.size() > best_len && s.compare(pos, v.size(), v) == 0) {
                best_len = v.size();
                best_idx = i;
            }
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best_idx;
    }

    polynomial parse_factor() {
        if (eat('(')) {
            polynomial p = parse_expr();
            if (!eat(')')) fail("expected )");
            return parse_power_suffix(p);
        }
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return parse_power_suffix(poly_const(*R, parse_number()));
        if (auto vi = parse_var())
            return parse_power_suffix(poly_var(*R, *vi));
        fail("expected number, variable or (");
    }

    polynomial parse_power_suffix(polynomial base) {
        while (peek() == '^') {
            ++pos;
            bool neg = eat('-');
            bigint e = parse_natural();
            if (neg || e < 0) fail("negative exponent");
            unsigned long n = e.get_ui();
            polynomial r = poly_const(*R, 1);
            for (unsigned long i = 0; i < n; ++i) r = poly_mul(*R, r, base);
            base = r;
        }
        return base;
    }

    polynomial parse_term() {
        polynomial p = parse_factor();
        while (peek() == '*') {
            ++pos;
            p = poly_mul(*R, p, parse_factor());
        }
        return p;
    }

    polynomial parse_expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        polynomial p = parse_term();
        if (neg) p = poly_neg(p);
        while (true) {
            char c = peek();
            if (c == '+') { ++pos; p = poly_add(*R, p, parse_term()); }
            else if (c == '-') { ++pos; p = poly_sub(*R, p, parse_term()); }
            else break;
        }
        return p;
    }
};

} // namespace

scalar parse_scalar(const ring_ptr& R, const std::string& text) {
    parser p{R, text};
    polynomial poly = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    switch (R->kind) {
    case ring_kind::polynomial:
        return scalar(std::move(poly));
    case ring_kind::rationals: {
        if (poly.terms.empty()) return scalar(rational(0));
        require(poly.terms.size() == 1 && mono_total_degree(poly.terms[0].first) == 0,
                "expected a rational constant: " + text);
        return scalar(poly.terms[0].second);
    }
    case ring_kind::integers: {
        if (poly.terms.empty()) return scalar(bigint(0));
        require(poly.terms.size() == 1 && mono_total_degree(poly.terms[0].first) == 0,
                "expected an integer constant: " + text);
        rational q = poly.terms[0].second;
        require(q.get_den() == 1, "expected an integer, got " + text);
        return scalar(bigint(q.get_num()));
    }
    }
    return scalar{};
}

ring_ptr parse_ring_name(const std::string& text, monomial_order order) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "Q") return make_QQ();
    if (t == "Z") return make_ZZ();
    if (t.size() > 3 && t.compare(0, 2, "Q[") == 0 && t.back() == ']') {
        std::vector<std::string> vars;
        std::string cur;
        for (size_t i = 2; i + 1 < t.size(); ++i) {
            if (t[i] == ',') { vars.push_back(cur); cur.clear(); }
            else cur += t[i];
        }
        vars.push_back(cur);
        for (auto& v : vars) require(!v.empty(), "empty variable name in ring " + text);
        return make_poly_ring(vars, order);
    }
    throw usage_error("unknown ring '" + text + "' (expected Q, Z or Q[vars])");
}

} // namespace fpcat
