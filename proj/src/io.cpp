#include "fpcat/io.hpp"

#include <cctype>
#include <sstream>

namespace fpcat {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// line reader with positions for parse errors
struct line_reader {
    std::istream& in;
    int lineno = 0;
    std::optional<std::string> pushed;

    explicit line_reader(std::istream& input) : in(input) {}

    std::optional<std::string> next() {
        if (pushed) {
            auto out = pushed;
            pushed.reset();
            return out;
        }
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            std::string t = trim(line);
            if (!t.empty()) return t;
        }
        return std::nullopt;
    }
    void push_back(std::string line) { pushed = std::move(line); }
    [[noreturn]] void fail(const std::string& msg) const {
        throw usage_error("line " + std::to_string(lineno) + ": " + msg);
    }
};

matrix read_matrix_block(line_reader& rd, const ring_ptr& R) {
    auto dims = rd.next();
    if (!dims) rd.fail("expected matrix dimensions 'm n'");
    auto toks = split_ws(*dims);
    if (toks.size() != 2) rd.fail("expected matrix dimensions 'm n', got '" + *dims + "'");
    int m = 0, n = 0;
    try {
        m = std::stoi(toks[0]);
        n = std::stoi(toks[1]);
    } catch (...) {
        rd.fail("bad matrix dimensions '" + *dims + "'");
    }
    if (m < 0 || n < 0) rd.fail("negative matrix dimensions");
    matrix a(R, m, n);
    for (int i = 0; i < m; ++i) {
        auto row = rd.next();
        if (!row) rd.fail("matrix row missing");
        auto entries = split_ws(*row);
        if (static_cast<int>(entries.size()) != n)
            rd.fail("expected " + std::to_string(n) + " entries, got " +
                    std::to_string(entries.size()));
        for (int j = 0; j < n; ++j) {
            try {
                a.at(i, j) = parse_scalar(R, entries[j]);
            } catch (const usage_error& e) {
                rd.fail(std::string("column ") + std::to_string(j + 1) + ": " + e.what());
            }
        }
    }
    return a;
}

} // namespace

quiver_ptr parse_quiver(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(trim(cur));
            cur.clear();
        } else
            cur += c;
    }
    if (!trim(cur).empty()) parts.push_back(trim(cur));
    require(!parts.empty(), "quiver: empty description");
    auto head = split_ws(parts[0]);
    require(!head.empty() && head[0] == "quiver", "quiver: expected 'quiver v1 v2 ...'");
    std::vector<std::string> vertices(head.begin() + 1, head.end());
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].empty()) continue;
        size_t colon = parts[i].find(':');
        require(colon != std::string::npos, "quiver: expected 'name: v -> w' in '" + parts[i] + "'");
        std::string name = trim(parts[i].substr(0, colon));
        std::string rest = parts[i].substr(colon + 1);
        size_t arrow = rest.find("->");
        require(arrow != std::string::npos, "quiver: expected '->' in '" + parts[i] + "'");
        arrows.push_back({name, trim(rest.substr(0, arrow)), trim(rest.substr(arrow + 2))});
    }
    return make_quiver(std::move(vertices), std::move(arrows));
}

std::string quiver_to_string(const quiver& q) {
    std::string out = "quiver";
    for (auto& v : q.vertices) out += " " + v;
    for (auto& a : q.arrows)
        out += "; " + a.name + ": " + q.vertices[a.src] + " -> " + q.vertices[a.dst];
    return out;
}

const matrix& document::module_named(const std::string& name) const {
    for (auto& [n, m] : modules)
        if (n == name) return m;
    throw usage_error("unknown module '" + name + "'");
}

const document::morphism_decl& document::morphism_named(const std::string& name) const {
    for (auto& m : morphisms)
        if (m.name == name) return m;
    throw usage_error("unknown morphism '" + name + "'");
}

document parse_document(std::istream& in, monomial_order order, ring_ptr default_ring) {
    line_reader rd(in);
    document doc;
    doc.R = std::move(default_ring);
    while (auto line = rd.next()) {
        auto toks = split_ws(*line);
        const std::string& kw = toks[0];
        if (kw == "ring") {
            if (toks.size() < 2) rd.fail("ring: expected a name");
            std::string name = line->substr(line->find("ring") + 4);
            doc.R = parse_ring_name(name, order);
            // a bare matrix may follow immediately (smith / syzygies input)
            auto peek = rd.next();
            if (peek) {
                auto ptoks = split_ws(*peek);
                bool numeric = ptoks.size() == 2 &&
                               std::isdigit(static_cast<unsigned char>(ptoks[0][0]));
                rd.push_back(*peek);
                if (numeric) doc.bare = read_matrix_block(rd, doc.R);
            }
        } else if (kw == "module") {
            if (!doc.R) rd.fail("module before ring header");
            if (toks.size() != 2) rd.fail("module: expected 'module <name>'");
            doc.modules.push_back({toks[1], read_matrix_block(rd, doc.R)});
        } else if (kw == "morphism") {
            if (!doc.R) rd.fail("morphism before ring header");
            if (toks.size() != 4) rd.fail("morphism: expected 'morphism <name> <src> <dst>'");
            doc.morphisms.push_back({toks[1], toks[2], toks[3], read_matrix_block(rd, doc.R)});
        } else if (kw == "generators") {
            if (!doc.R) rd.fail("generators before ring header");
            if (toks.size() != 2) rd.fail("generators: expected a count");
            int k = std::stoi(toks[1]);
            for (int i = 0; i < k; ++i) {
                auto p = rd.next();
                if (!p) rd.fail("generator polynomial missing");
                doc.generators.push_back(std::get<polynomial>(parse_scalar(doc.R, *p).v));
            }
        } else if (kw == "degrees") {
            if (toks.size() != 3) rd.fail("degrees: expected 'degrees imin imax'");
            doc.degrees = {{std::stoi(toks[1]), std::stoi(toks[2])}};
        } else if (kw == "filtration") {
            if (toks.size() != 3) rd.fail("filtration: expected 'filtration jmin jmax'");
            doc.filtration = {{std::stoi(toks[1]), std::stoi(toks[2])}};
        } else if (kw == "filtered") {
            if (!doc.R) rd.fail("filtered before ring header");
            if (toks.size() != 3) rd.fail("filtered: expected 'filtered <module> <j>'");
            doc.filtered.push_back({toks[1], std::stoi(toks[2]), read_matrix_block(rd, doc.R)});
        } else if (kw == "query") {
            doc.query.assign(toks.begin() + 1, toks.end());
        } else {
            rd.fail("unknown keyword '" + kw + "'");
        }
    }
    return doc;
}

functor_expr parse_functor_expr(const std::string& token) {
    auto open = token.find('(');
    auto close = token.rfind(')');
    require(open != std::string::npos && close != std::string::npos && close > open,
            "functor expression: expected Name(...), got '" + token + "'");
    std::string head = token.substr(0, open);
    std::string args = token.substr(open + 1, close - open - 1);
    functor_expr e{};
    auto strip_dash = [&](const std::string& s) {
        auto comma = s.find(',');
        require(comma != std::string::npos && trim(s.substr(comma + 1)) == "-",
                "functor expression: expected (M,-) in '" + token + "'");
        return trim(s.substr(0, comma));
    };
    if (head == "Hom") {
        e.k = functor_expr::kind::hom;
        e.module_name = strip_dash(args);
    } else if (head.rfind("Ext^", 0) == 0 || head.rfind("Ext_", 0) == 0) {
        e.k = functor_expr::kind::ext;
        e.degree = std::stoi(head.substr(4));
        e.module_name = strip_dash(args);
    } else if (head == "Tensor") {
        e.k = functor_expr::kind::tensor;
        e.module_name = trim(args);
    } else if (head.rfind("Tor_", 0) == 0 || head.rfind("Tor^", 0) == 0) {
        e.k = functor_expr::kind::tor;
        e.degree = std::stoi(head.substr(4));
        e.module_name = strip_dash(args);
    } else {
        throw usage_error("unknown functor expression '" + token + "'");
    }
    require(!e.module_name.empty(), "functor expression: missing module name in '" + token + "'");
    return e;
}

functor_obj build_functor(fp_cat& C, functor_cat& F, const document& doc, const functor_expr& e) {
    fp_obj M = fp_from_relations(doc.module_named(e.module_name));
    switch (e.k) {
    case functor_expr::kind::hom: return representable(C, M);
    case functor_expr::kind::ext: return ext_functor(C, M, e.degree);
    case functor_expr::kind::tensor: return tensor_functor(C, M);
    case functor_expr::kind::tor: return tor_functor(C, F, M, e.degree);
    }
    throw internal_error("build_functor: unhandled kind");
}

} // namespace fpcat
