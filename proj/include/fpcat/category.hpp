#ifndef FPCAT_CATEGORY_HPP
#define FPCAT_CATEGORY_HPP

#include <functional>

#include "fpcat/fpmod.hpp"
#include "fpcat/quiver.hpp"

namespace fpcat {

// additive closure of the path category as a Freyd-engine child; it has
// decidable lifts through its Rows_Q homomorphism structure but no weak kernels
struct qrows_cat {
    quiver_ptr q;
    ring_ptr QQ;

    static constexpr bool matrix_backed = false;

    using Obj = std::vector<int>;
    using Mor = qblock;

    quiver_block_hom hom() const { return quiver_block_hom{quiver_hom{q, QQ}}; }

    Obj src(const Mor& f) const { return f.src; }
    Obj dst(const Mor& f) const { return f.dst; }
    bool obj_eq(const Obj& a, const Obj& b) const { return a == b; }
    bool mor_eq(const Mor& f, const Mor& g) const { return qb_eq(f, g); }
    Mor compose(const Mor& f, const Mor& g) const { return qb_compose(f, g); }
    Mor id(const Obj& a) const { return qb_identity(*q, a); }
    Mor zero(const Obj& a, const Obj& b) const { return qb_zero(*q, a, b); }
    Mor add(const Mor& f, const Mor& g) const { return qb_add(f, g); }
    Mor negate(const Mor& f) const { return qb_negate(f); }
    Mor sub(const Mor& f, const Mor& g) const { return qb_add(f, qb_negate(g)); }
    Obj zero_obj() const { return {}; }
    Obj sum(const Obj& a, const Obj& b) const {
        Obj out = a;
        out.insert(out.end(), b.begin(), b.end());
        return out;
    }
    Mor inj1(const Obj& a, const Obj& b) const;
    Mor inj2(const Obj& a, const Obj& b) const;
    Mor proj1(const Obj& a, const Obj& b) const;
    Mor proj2(const Obj& a, const Obj& b) const;
    Mor pair_from(const Mor& f, const Mor& g) const;
    Mor pair_into(const Mor& f, const Mor& g) const;
    std::optional<Mor> lift(const Mor& alpha, const Mor& gamma) const {
        return qb_lift(*q, hom(), alpha, gamma);
    }
    bool has_weak_kernels() const { return false; }
    std::pair<Obj, Mor> weak_kernel(const Mor&) const {
        throw capability_error("the path category closure has no weak kernels");
    }
    Mor weak_kernel_lift(const Mor&, const Mor&, const Mor&) const {
        throw capability_error("the path category closure has no weak kernels");
    }
};

using qfreyd_cat = freyd_cat<qrows_cat>;

// --- descriptor tree ---

enum class cat_kind { ring_cat, quiver_cat, additive_closure, opposite, freyd };

struct cat_desc;
using cat_ptr = std::shared_ptr<const cat_desc>;

struct cat_desc {
    cat_kind kind;
    ring_ptr ring;  // ring_cat leaf
    quiver_ptr qv;  // quiver_cat leaf, linear over Q
    cat_ptr child;  // constructor nodes
};

cat_ptr cat_ring(ring_ptr R);
cat_ptr cat_quiver(quiver_ptr q);
cat_ptr cat_add(cat_ptr child);
cat_ptr cat_op(cat_ptr child);
cat_ptr cat_freyd(cat_ptr child);
bool cat_eq(const cat_ptr& a, const cat_ptr& b);
std::string cat_name(const cat_ptr& c);

struct capabilities {
    bool ab = false, additive = false;
    bool dec_eq = false, dec_lifts = false, weak_kernels = false;
    bool cokernels = false, kernels = false, abelian = false;
    bool hom_structure = false;
};
capabilities caps_of(const cat_ptr& c);

// --- tagged objects and morphisms ---

struct cat_obj;
struct cat_mor;

using obj_payload = std::variant<std::monostate,            // ring star
                                 int,                       // quiver vertex
                                 rows_cat::Obj,             // rows rank
                                 std::vector<int>,          // quiver closure vertex list
                                 std::shared_ptr<cat_obj>,  // opposite wrap
                                 fp_obj,                    // freyd over rows
                                 qfreyd_cat::obj>;          // freyd over the quiver closure

struct cat_obj {
    cat_ptr cat;
    obj_payload pay;
};

using mor_payload = std::variant<scalar,                    // ring element
                                 path_lin,                  // quiver linear combination
                                 rows_cat::Mor,             // matrix
                                 qblock,                    // quiver closure block
                                 std::shared_ptr<cat_mor>,  // opposite wrap
                                 fp_mor,                    // freyd over rows
                                 qfreyd_cat::mor>;

struct cat_mor {
    cat_ptr cat;
    cat_obj source, range;
    mor_payload pay;
};

bool obj_eq(const cat_obj& a, const cat_obj& b);

cat_obj ring_star(const cat_ptr& c);
cat_obj quiver_vertex(const cat_ptr& c, int v);
cat_obj rows_object(const cat_ptr& c, int n);
cat_obj qadd_object(const cat_ptr& c, std::vector<int> vs);
cat_obj op_object(const cat_ptr& c, cat_obj inner);
cat_obj freyd_object(const cat_ptr& c, const cat_mor& rho);

cat_mor ring_mor(const cat_ptr& c, const scalar& s);
cat_mor quiver_mor(const cat_ptr& c, path_lin f);
cat_mor rows_mor(const cat_ptr& c, matrix m);
cat_mor qadd_mor(const cat_ptr& c, qblock b);
cat_mor freyd_mor(const cat_ptr& c, const cat_obj& src, const cat_obj& dst, const cat_mor& alpha);

cat_mor compose(const cat_mor& f, const cat_mor& g);
bool mor_eq(const cat_mor& f, const cat_mor& g);
cat_mor identity(const cat_obj& A);
cat_mor zero_morphism(const cat_obj& A, const cat_obj& B);
cat_mor add(const cat_mor& f, const cat_mor& g);
cat_mor negate(const cat_mor& f);

cat_obj direct_sum(const std::vector<cat_obj>& objs);
cat_mor injection(const std::vector<cat_obj>& objs, size_t j);
cat_mor projection(const std::vector<cat_obj>& objs, size_t j);
// the empty direct sum
cat_obj zero_object(const cat_ptr& c);

cat_mor op_wrap(const cat_mor& f);
cat_mor op_unwrap(const cat_mor& f);

// weak kernel of a Rows_R morphism: syzygy embedding (capability error elsewhere)
std::pair<cat_obj, cat_mor> weak_kernel_rows(const cat_mor& f);

// runtime homomorphism structure for the categories that carry one
struct hom_rt {
    cat_ptr source_cat, target_cat;
    cat_obj one;
    std::function<cat_obj(const cat_obj&, const cat_obj&)> H_obj;
    std::function<cat_mor(const cat_mor&, const cat_mor&)> H_mor;
    std::function<cat_mor(const cat_mor&)> nu;
    std::function<cat_mor(const cat_mor&, const cat_obj&, const cat_obj&)> nu_inv;
};
hom_rt hom_structure_of(const cat_ptr& c);

// decidable lifts through the homomorphism structure: some lambda with
// lambda * gamma = alpha, or nullopt
std::optional<cat_mor> lift_via_hom_structure(const cat_mor& alpha, const cat_mor& gamma);

} // namespace fpcat

#endif
