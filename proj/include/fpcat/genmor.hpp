#ifndef FPCAT_GENMOR_HPP
#define FPCAT_GENMOR_HPP

#include "fpcat/fpmod.hpp"

namespace fpcat {

// span (A <-lam- C -rho-> B) regarded as a generalized morphism A --> B;
// equality is equality of associated relations as subobjects of A + B
struct genmor {
    fp_obj src, dst;
    fp_mor lam; // C -> A
    fp_mor rho; // C -> B
    lazy_cell<fp_sub> relation; // image of (lam, rho): C -> A + B
};

genmor make_genmor(fp_cat& C, fp_mor lam, fp_mor rho);
genmor honest_embed(fp_cat& C, const fp_mor& f);
genmor gen_identity(fp_cat& C, const fp_obj& A);

const fp_sub& associated_relation(fp_cat& C, const genmor& S);
bool gen_eq(fp_cat& C, const genmor& S, const genmor& T);

genmor gen_compose(fp_cat& C, const genmor& S, const genmor& T);
genmor pseudo_inverse(const genmor& S);
// the factorization S = [lam]^{-1} * [rho]
std::pair<genmor, genmor> decompose(fp_cat& C, const genmor& S);

struct canonical_subs {
    fp_sub domain;    // image(lam)            <= A
    fp_sub gkernel;   // lam(kernel(rho))      <= A
    fp_sub gimage;    // image(rho)            <= B
    fp_sub defect;    // rho(kernel(lam))      <= B
};
canonical_subs canonical_subobjects(fp_cat& C, const genmor& S);

struct gen_hom_theorem {
    genmor proj;   // A --> domain/gkernel, a generalized epi
    fp_mor iso;    // domain/gkernel -> gimage/defect, an honest isomorphism
    genmor inj;    // gimage/defect --> B, a generalized mono
    fp_obj source_quot, target_quot;
};
gen_hom_theorem generalized_hom_theorem(fp_cat& C, const genmor& S);

// honest part: defined iff domain is full and defect is zero
std::optional<fp_mor> honest_part(fp_cat& C, const genmor& S);

// the subquotient upper/lower (lower <= upper <= ambient) with its generalized
// embedding and projection
struct subquotient {
    fp_obj ambient;
    fp_sub upper, lower;
    fp_mor lower_in_upper; // lower -> upper over the ambient object
    fp_obj quot;           // upper/lower
    fp_mor quot_proj;      // upper ->> quot
};
subquotient make_subquotient(fp_cat& C, const fp_obj& ambient, fp_sub upper, fp_sub lower);
genmor subquotient_emb(fp_cat& C, const subquotient& q);  // quot --> ambient
genmor subquotient_proj(fp_cat& C, const subquotient& q); // ambient --> quot

// induced morphism on cohomology via [eps]^{-1} [iota] [beta] [iota']^{-1} [eps']
fp_mor cohomology_induced(fp_cat& C, const fp_mor& dA, const fp_mor& dB, const fp_mor& beta,
                          const fp_mor& dAp, const fp_mor& dBp);
// the two cohomology objects used by cohomology_induced
fp_obj cohomology_at(fp_cat& C, const fp_mor& din, const fp_mor& dout);

struct snake_input {
    // rows: 0 -> A -delta-> B -eps-> C -> 0 and 0 -> A' -iota-> B' -nu-> C' -> 0
    fp_mor delta, eps;
    fp_mor iota, nu;
    fp_mor alpha, beta, gamma; // verticals A->A', B->B', C->C'
};
struct snake_output {
    fp_obj ker_gamma, coker_alpha;
    fp_mor ker_emb;    // ker(gamma) -> C
    fp_mor coker_proj; // A' -> coker(alpha)
    fp_mor delta;      // the connecting morphism ker(gamma) -> coker(alpha)
};
snake_output snake_connecting(fp_cat& C, const snake_input& in);

} // namespace fpcat

#endif
