#ifndef FPCAT_SPECSEQ_HPP
#define FPCAT_SPECSEQ_HPP

#include <map>
#include <tuple>

#include "fpcat/genmor.hpp"

namespace fpcat {

// bounded filtered cochain complex: degrees [imin, imax], descending filtration
// window [jmin, jmax] with F^{jmin} = full and F^{jmax+1} = 0 by convention
struct filtered_complex {
    fp_cat* C = nullptr;
    int imin = 0, imax = -1;
    int jmin = 0, jmax = -1;
    std::vector<fp_obj> objects;                 // M^imin .. M^imax
    std::vector<fp_mor> differentials;           // d^i: M^i -> M^{i+1}, i in [imin, imax-1]
    std::vector<std::vector<fp_sub>> filtration; // per degree: F^{jmin+1} .. F^{jmax}

    fp_obj object_at(int i) const;
    fp_mor diff_at(int i) const;      // zero morphism when out of range
    fp_sub filt_at(int i, int j) const;
};

// validates d*d = 0, nesting, and compatibility of the filtration with d
filtered_complex make_filtered_complex(fp_cat& C, int imin, std::vector<fp_obj> objects,
                                       std::vector<fp_mor> differentials, int jmin,
                                       std::vector<std::vector<fp_sub>> interior_filtration);

struct closed_form_subs {
    fp_sub domain, gkernel; // subobjects of M^{p+q}
    fp_sub gimage, defect;  // subobjects of M^{p+q+1}
};

struct page_turn_certificate {
    fp_mor iota;     // E_{r+1}^{p,q} -> ker(d_r^{p,q}) / im(d_r^{p-r,q+r-1})
    fp_mor iota_inv;
    bool verified;
};

class spectral_sequence {
public:
    spectral_sequence(fp_cat& C, filtered_complex fc) : C_(&C), fc_(std::move(fc)) {}

    const filtered_complex& complex() const { return fc_; }

    // the generalized differential emb * [d^{p+q}] * proj between E_0 subquotients
    const genmor& gen_diff(int r, int p, int q);
    // page subquotient of M^{p+q} and its objects/differentials
    const subquotient& page_sq(int r, int p, int q);
    fp_obj page_object(int r, int p, int q);
    fp_mor page_diff(int r, int p, int q); // honest d_r^{p,q}

    // closed-form canonical subobjects of gen_diff(r, p, q) at the ambient level
    closed_form_subs closed_form(int r, int p, int q);
    // the four canonical subobjects of gen_diff(r, p, q), pulled back to the
    // ambient objects M^{p+q} resp. M^{p+q+1} (the span-computed route)
    closed_form_subs canonical_ambient(int r, int p, int q);
    // the ambient-level upper/lower data actually used for the page at (r, p, q)
    std::pair<fp_sub, fp_sub> page_bounds(int r, int p, int q);

    page_turn_certificate check_page_turn(int r, int p, int q);

    // stabilization bound: pages r and beyond are all isomorphic
    int stabilization_bound() const;

private:
    fp_cat* C_;
    filtered_complex fc_;
    std::map<std::tuple<int, int>, subquotient> sq0_;
    std::map<std::tuple<int, int, int>, genmor> gdiff_;
    std::map<std::tuple<int, int, int>, subquotient> page_;
    std::map<std::tuple<int, int, int>, fp_mor> pdiff_;

    const subquotient& e0_sq(int p, int q);
};

} // namespace fpcat

#endif
