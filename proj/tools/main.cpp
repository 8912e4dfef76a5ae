#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fpcat/genmor.hpp"
#include "fpcat/io.hpp"
#include "fpcat/linalg.hpp"
#include "fpcat/specseq.hpp"

using namespace fpcat;

namespace {

struct options {
    std::string input = "-";
    std::string format = "presentation";
    std::string order = "degrevlex";
    std::string default_ring;
    int max_page = 2;
};

document load_document(const options& opt) {
    monomial_order mo = opt.order == "lex" ? monomial_order::lex : monomial_order::degrevlex;
    ring_ptr def = opt.default_ring.empty() ? nullptr : parse_ring_name(opt.default_ring, mo);
    if (opt.input == "-") return parse_document(std::cin, mo, def);
    std::ifstream in(opt.input);
    if (!in) throw usage_error("cannot open input file '" + opt.input + "'");
    return parse_document(in, mo, def);
}

void expect_query(const document& doc, const std::string& name, size_t args) {
    require(!doc.query.empty() && doc.query[0] == name,
            "expected a 'query " + name + " ...' line in the input document");
    require(doc.query.size() == args + 1,
            "query " + name + ": expected " + std::to_string(args) + " arguments");
}

std::string invariant_line(const fp_obj& M) {
    // reuse the tail of the presentation printer
    std::string pres = presentation_to_string(M);
    auto pos = pres.rfind("invariant_factors:");
    return pres.substr(pos, pres.find('\n', pos) - pos);
}

std::string compact_object(const fp_obj& M) {
    const ring_ptr& R = fp_rel(M).R;
    switch (R->kind) {
    case ring_kind::integers: return invariant_line(M);
    case ring_kind::rationals: return "dimension " + std::to_string(q_dimension(M));
    case ring_kind::polynomial: {
        matrix rel = canonical_relations(fp_rel(M));
        return "generators " + std::to_string(rel.n) + ", relations " + std::to_string(rel.m);
    }
    }
    return "?";
}

void print_module(std::ostream& os, const options& opt, const fp_obj& M) {
    if (opt.format == "factors")
        os << compact_object(M) << "\n";
    else
        os << presentation_to_string(M);
}

int run_smith(const options& opt) {
    document doc = load_document(opt);
    require(doc.bare.has_value(), "smith: expected a matrix after the ring header");
    snf_result s = smith_normal_form(*doc.bare);
    std::cout << "S:\n" << matrix_to_string(s.S);
    std::cout << "U:\n" << matrix_to_string(s.U);
    std::cout << "V:\n" << matrix_to_string(s.V);
    std::cout << invariant_line(fp_from_relations(s.S)) << "\n";
    return 0;
}

int run_groebner(const options& opt) {
    document doc = load_document(opt);
    require(doc.R && doc.R->kind == ring_kind::polynomial,
            "groebner: polynomial ring header required");
    auto gb = groebner_basis(doc.R, doc.generators);
    std::cout << "groebner_basis " << gb.size() << "\n";
    for (auto& g : gb) std::cout << poly_to_string(*doc.R, g) << "\n";
    return 0;
}

int run_syzygies(const options& opt) {
    document doc = load_document(opt);
    require(doc.bare.has_value(), "syzygies: expected a matrix after the ring header");
    matrix S = row_syzygies(*doc.bare);
    std::cout << "syzygies:\n" << matrix_to_string(S);
    return 0;
}

int run_kernel(const options& opt, bool kernel_side) {
    document doc = load_document(opt);
    expect_query(doc, kernel_side ? "kernel" : "cokernel", 1);
    fp_cat C = make_fp_cat(doc.R);
    auto& md = doc.morphism_named(doc.query[1]);
    fp_obj src = fp_from_relations(doc.module_named(md.src));
    fp_obj dst = fp_from_relations(doc.module_named(md.dst));
    fp_mor f = fp_mor_from(C, src, dst, md.mat);
    if (kernel_side) {
        auto kd = C.kernel(f);
        std::cout << "kernel of " << md.name << ":\n";
        print_module(std::cout, opt, kd.K);
        if (opt.format == "witnesses")
            std::cout << "embedding:\n" << matrix_to_string(kd.emb.alpha.a);
    } else {
        fp_obj Q = C.cokernel_obj(f);
        std::cout << "cokernel of " << md.name << ":\n";
        print_module(std::cout, opt, Q);
        if (opt.format == "witnesses")
            std::cout << "projection:\n" << matrix_to_string(C.cokernel_projection(f).alpha.a);
    }
    return 0;
}

int run_homnat(const options& opt) {
    document doc = load_document(opt);
    expect_query(doc, "homnat", 2);
    fp_tower T(doc.R);
    functor_obj F = build_functor(T.mod, T.fun, doc, parse_functor_expr(doc.query[1]));
    functor_obj G = build_functor(T.mod, T.fun, doc, parse_functor_expr(doc.query[2]));
    fp_obj H = hom_nat(T, F, G);
    std::cout << "homnat:\n";
    print_module(std::cout, opt, H);
    return 0;
}

int run_functor(const options& opt, bool ext_side) {
    document doc = load_document(opt);
    expect_query(doc, ext_side ? "ext" : "tor", 2);
    fp_cat C = make_fp_cat(doc.R);
    functor_cat F = make_functor_cat(doc.R);
    int degree = std::stoi(doc.query[1]);
    fp_obj M = fp_from_relations(doc.module_named(doc.query[2]));
    functor_obj out = ext_side ? ext_functor(C, M, degree) : tor_functor(C, F, M, degree);
    std::cout << functor_obj_to_string(out);
    return 0;
}

int run_snake(const options& opt) {
    document doc = load_document(opt);
    expect_query(doc, "snake", 7);
    fp_cat C = make_fp_cat(doc.R);
    auto mor = [&](const std::string& name) {
        auto& md = doc.morphism_named(name);
        return fp_mor_from(C, fp_from_relations(doc.module_named(md.src)),
                           fp_from_relations(doc.module_named(md.dst)), md.mat);
    };
    snake_input in{mor(doc.query[1]), mor(doc.query[2]), mor(doc.query[3]), mor(doc.query[4]),
                   mor(doc.query[5]), mor(doc.query[6]), mor(doc.query[7])};
    snake_output out = snake_connecting(C, in);
    std::cout << "ker_gamma:\n";
    print_module(std::cout, opt, out.ker_gamma);
    std::cout << "coker_alpha:\n";
    print_module(std::cout, opt, out.coker_alpha);
    std::cout << "connecting:\n" << matrix_to_string(out.delta.alpha.a);
    if (opt.format == "witnesses") {
        std::cout << "ker_embedding:\n" << matrix_to_string(out.ker_emb.alpha.a);
        std::cout << "coker_projection:\n" << matrix_to_string(out.coker_proj.alpha.a);
    }
    return 0;
}

int run_cohomology(const options& opt) {
    document doc = load_document(opt);
    expect_query(doc, "cohomology", 5);
    fp_cat C = make_fp_cat(doc.R);
    auto mor = [&](const std::string& name) {
        auto& md = doc.morphism_named(name);
        return fp_mor_from(C, fp_from_relations(doc.module_named(md.src)),
                           fp_from_relations(doc.module_named(md.dst)), md.mat);
    };
    fp_mor dA = mor(doc.query[1]), dB = mor(doc.query[2]), beta = mor(doc.query[3]),
           dAp = mor(doc.query[4]), dBp = mor(doc.query[5]);
    fp_mor induced = cohomology_induced(C, dA, dB, beta, dAp, dBp);
    std::cout << "source_cohomology:\n";
    print_module(std::cout, opt, cohomology_at(C, dA, dB));
    std::cout << "target_cohomology:\n";
    print_module(std::cout, opt, cohomology_at(C, dAp, dBp));
    std::cout << "induced:\n" << matrix_to_string(induced.alpha.a);
    return 0;
}

int run_specseq(const options& opt) {
    document doc = load_document(opt);
    expect_query(doc, "specseq", 0);
    require(doc.degrees.has_value(), "specseq: missing 'degrees imin imax'");
    require(doc.filtration.has_value(), "specseq: missing 'filtration jmin jmax'");
    fp_cat C = make_fp_cat(doc.R);
    auto [imin, imax] = *doc.degrees;
    auto [jmin, jmax] = *doc.filtration;
    require(imax >= imin && jmax >= jmin, "specseq: empty ranges");
    require(static_cast<int>(doc.modules.size()) == imax - imin + 1,
            "specseq: need one module per degree, in order");
    std::vector<fp_obj> objs;
    for (auto& [name, rel] : doc.modules) objs.push_back(fp_from_relations(rel));
    std::vector<fp_mor> diffs;
    for (int i = imin; i < imax; ++i) {
        require(static_cast<int>(doc.morphisms.size()) >= i - imin + 1,
                "specseq: need one differential per adjacent degree pair, in order");
        auto& md = doc.morphisms[static_cast<size_t>(i - imin)];
        diffs.push_back(fp_mor_from(C, fp_from_relations(doc.module_named(md.src)),
                                    fp_from_relations(doc.module_named(md.dst)), md.mat));
    }
    std::vector<std::vector<fp_sub>> filt(objs.size());
    for (int i = 0; i < static_cast<int>(objs.size()); ++i) {
        for (int j = jmin + 1; j <= jmax; ++j) {
            const std::string& name = doc.modules[static_cast<size_t>(i)].first;
            bool found = false;
            for (auto& [mn, jj, gens] : doc.filtered) {
                if (mn != name || jj != j) continue;
                fp_obj freeg = fp_free(doc.R, gens.m);
                fp_mor span = fp_mor_from(C, freeg, objs[static_cast<size_t>(i)], gens);
                filt[static_cast<size_t>(i)].push_back(C.sub_full_image(span));
                found = true;
                break;
            }
            require(found, "specseq: missing 'filtered " + name + " " + std::to_string(j) + "'");
        }
    }
    filtered_complex fc =
        make_filtered_complex(C, imin, std::move(objs), std::move(diffs), jmin, std::move(filt));
    spectral_sequence ss(C, fc);
    for (int r = 0; r <= opt.max_page; ++r) {
        std::cout << "page " << r << "\n";
        for (int p = jmin; p <= jmax; ++p) {
            for (int n = imin; n <= imax; ++n) {
                int q = n - p;
                fp_obj E = ss.page_object(r, p, q);
                std::cout << "E_" << r << "[" << p << "][" << q << "] = " << compact_object(E)
                          << "\n";
                fp_mor d = ss.page_diff(r, p, q);
                std::cout << "d_" << r << "[" << p << "][" << q << "]:\n"
                          << matrix_to_string(d.alpha.a, false);
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact kernel for finitely presented functors and spectral sequences"};
    app.require_subcommand(1);

    options opt;
    app.add_option("--format", opt.format, "presentation | factors | witnesses")
        ->check(CLI::IsMember({"presentation", "factors", "witnesses"}));
    app.add_option("--order", opt.order, "degrevlex | lex")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    app.add_option("--ring", opt.default_ring, "default ring when the document has no header");
    app.add_option("--max-page", opt.max_page, "last spectral sequence page to print");

    std::string sub;
    for (const char* name : {"homnat", "ext", "tor", "kernel", "cokernel", "snake", "cohomology",
                             "specseq", "smith", "groebner", "syzygies"}) {
        auto* s = app.add_subcommand(name);
        s->add_option("input", opt.input, "input document path, or - for standard input");
        s->fallthrough();
        s->callback([&sub, name] { sub = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (sub == "smith") return run_smith(opt);
        if (sub == "groebner") return run_groebner(opt);
        if (sub == "syzygies") return run_syzygies(opt);
        if (sub == "kernel") return run_kernel(opt, true);
        if (sub == "cokernel") return run_kernel(opt, false);
        if (sub == "homnat") return run_homnat(opt);
        if (sub == "ext") return run_functor(opt, true);
        if (sub == "tor") return run_functor(opt, false);
        if (sub == "snake") return run_snake(opt);
        if (sub == "cohomology") return run_cohomology(opt);
        if (sub == "specseq") return run_specseq(opt);
        throw usage_error("unknown subcommand");
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
