#ifndef FPCAT_RING_HPP
#define FPCAT_RING_HPP

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpcat/error.hpp"

namespace fpcat {

using bigint = mpz_class;
using rational = mpq_class;

enum class ring_kind { rationals, integers, polynomial };
enum class monomial_order { degrevlex, lex };

// exponent vector, one entry per declared variable
using monomial = std::vector<int>;

// term list sorted strictly descending in the ring's monomial order, no zero coefficients
struct polynomial {
    std::vector<std::pair<monomial, rational>> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const polynomial& o) const { return terms == o.terms; }
};

struct ring_desc;
using ring_ptr = std::shared_ptr<const ring_desc>;

struct ring_desc {
    ring_kind kind = ring_kind::rationals;
    std::vector<std::string> vars;                  // polynomial only
    monomial_order order = monomial_order::degrevlex;
    std::vector<polynomial> ideal;                  // reduced GB; equality mod ideal when nonempty

    size_t nvars() const { return vars.size(); }
};

ring_ptr make_QQ();
ring_ptr make_ZZ();
ring_ptr make_poly_ring(std::vector<std::string> vars,
                        monomial_order order = monomial_order::degrevlex);
ring_ptr attach_ideal(const ring_ptr& R, std::vector<polynomial> reduced_gb);

bool same_ring(const ring_desc& a, const ring_desc& b);
inline bool same_ring(const ring_ptr& a, const ring_ptr& b) { return same_ring(*a, *b); }
std::string ring_name(const ring_desc& R);

// strict total order on monomials; returns <0, 0, >0 like a comparator
int mono_cmp(const ring_desc& R, const monomial& a, const monomial& b);
monomial mono_mul(const monomial& a, const monomial& b);
bool mono_divides(const monomial& a, const monomial& b);     // a | b
monomial mono_div(const monomial& b, const monomial& a);     // b / a, assumes divisibility
monomial mono_lcm(const monomial& a, const monomial& b);
int mono_total_degree(const monomial& m);
inline monomial mono_one(const ring_desc& R) { return monomial(R.nvars(), 0); }

polynomial poly_zero();
polynomial poly_const(const ring_desc& R, const rational& c);
polynomial poly_var(const ring_desc& R, size_t var_index);
polynomial poly_from_terms(const ring_desc& R, std::vector<std::pair<monomial, rational>> terms);
polynomial poly_add(const ring_desc& R, const polynomial& a, const polynomial& b);
polynomial poly_neg(const polynomial& a);
polynomial poly_sub(const ring_desc& R, const polynomial& a, const polynomial& b);
polynomial poly_mul(const ring_desc& R, const polynomial& a, const polynomial& b);
polynomial poly_scale(const polynomial& a, const rational& c);
polynomial poly_mul_term(const ring_desc& R, const polynomial& a, const monomial& m, const rational& c);
int poly_total_degree(const polynomial& a);   // -1 for zero

// ring scalars: rational over Q, bigint over Z, polynomial over Q[x..]
struct scalar {
    std::variant<rational, bigint, polynomial> v;

    scalar() : v(rational(0)) {}
    explicit scalar(rational q) : v(std::move(q)) {}
    explicit scalar(bigint z) : v(std::move(z)) {}
    explicit scalar(polynomial p) : v(std::move(p)) {}
};

scalar ring_zero(const ring_desc& R);
scalar ring_one(const ring_desc& R);
scalar ring_from_int(const ring_desc& R, long n);
scalar ring_add(const ring_desc& R, const scalar& a, const scalar& b);
scalar ring_sub(const ring_desc& R, const scalar& a, const scalar& b);
scalar ring_mul(const ring_desc& R, const scalar& a, const scalar& b);
scalar ring_neg(const ring_desc& R, const scalar& a);
bool ring_is_zero(const ring_desc& R, const scalar& a);      // exact, mod ideal when attached
bool ring_eq(const ring_desc& R, const scalar& a, const scalar& b);

std::string scalar_to_string(const ring_desc& R, const scalar& a);
std::string poly_to_string(const ring_desc& R, const polynomial& p);

// parses the compact infix form produced by scalar_to_string (e.g. 2*x^2*y-1/3)
scalar parse_scalar(const ring_ptr& R, const std::string& text);
// parses a ring header like "Q", "Z", "Q[x,y]"
ring_ptr parse_ring_name(const std::string& text, monomial_order order = monomial_order::degrevlex);

} // namespace fpcat

#endif
