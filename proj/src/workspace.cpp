#include "jumploci/workspace.hpp"

#include <fstream>
#include <sstream>

namespace jumploci {

namespace {

struct Cursor {
    std::string file;
    int line = 0;

    [[noreturn]] void err(const std::string& msg) const {
        throw WorkspaceError(file + ":" + std::to_string(line) + ": " + msg);
    }
};

std::vector<std::string> tokens_of(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

long to_long(const std::string& s, const Cursor& at) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) at.err("expected an integer, got '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        at.err("expected an integer, got '" + s + "'");
    }
}

Rat to_rat(const std::string& s, const Cursor& at) {
    try {
        return parse_rat(s);
    } catch (const std::exception&) {
        at.err("expected a rational, got '" + s + "'");
    }
}

// key = v1 v2 ... lines; returns empty when the line is not of that shape
bool split_keyval(const std::string& line, std::string& key, std::vector<std::string>& vals) {
    auto eq = line.find('=');
    if (eq == std::string::npos) return false;
    auto keys = tokens_of(line.substr(0, eq));
    if (keys.size() != 1) return false;
    key = keys[0];
    vals = tokens_of(line.substr(eq + 1));
    return true;
}

struct RawSection {
    std::string kind, name;
    Cursor at;
    // key -> values, plus positional term lines with their cursors
    std::map<std::string, std::vector<std::string>> keys;
    std::vector<std::pair<std::vector<std::string>, Cursor>> terms;
};

std::vector<int> int_list(const std::vector<std::string>& vals, const Cursor& at) {
    std::vector<int> out;
    for (const auto& v : vals) out.push_back(int(to_long(v, at)));
    return out;
}

const std::vector<std::string>& require(const RawSection& s, const std::string& key) {
    auto it = s.keys.find(key);
    if (it == s.keys.end()) s.at.err("section [" + s.kind + " " + s.name + "] is missing '" + key + "'");
    return it->second;
}

int index1(long v, int limit, const std::string& what, const Cursor& at) {
    if (v < 1 || v > limit) at.err(what + " index " + std::to_string(v) + " out of range 1.." + std::to_string(limit));
    return int(v - 1);
}

GradedAlgebra build_algebra(const RawSection& s) {
    GradedAlgebra a;
    for (int d : int_list(require(s, "dims"), s.at)) {
        if (d < 0) s.at.err("negative dimension");
        a.dims.push_back(d);
    }
    if (a.dims.empty() || a.dims[0] != 1) s.at.err("dims must start with 1 (connected algebra)");
    int top = a.top();
    a.diff.assign(std::max(top, 0), QMat());
    for (int i = 0; i < top; ++i) a.diff[i] = QMat(a.dims[i + 1], a.dims[i]);
    for (const auto& [t, at] : s.terms) {
        if (t[0] == "mult") {
            if (t.size() != 7) at.err("mult lines take: mult i j a b k coeff");
            int i = int(to_long(t[1], at)), j = int(to_long(t[2], at));
            if (i < 1 || j < 1 || i + j > top) at.err("mult degrees out of range");
            int ai = index1(to_long(t[3], at), a.dims[i], "basis", at);
            int bi = index1(to_long(t[4], at), a.dims[j], "basis", at);
            int ki = index1(to_long(t[5], at), a.dims[i + j], "basis", at);
            a.set_mult(i, j, ai, bi, ki, to_rat(t[6], at));
        } else if (t[0] == "diff") {
            if (t.size() != 5) at.err("diff lines take: diff i r c coeff");
            int i = int(to_long(t[1], at));
            if (i < 0 || i >= top) at.err("diff degree out of range");
            int r = index1(to_long(t[2], at), a.dims[i + 1], "row", at);
            int c = index1(to_long(t[3], at), a.dims[i], "column", at);
            a.diff[i](r, c) = to_rat(t[4], at);
        } else {
            at.err("unknown term line '" + t[0] + "' in an algebra section");
        }
    }
    auto rep = validate_cdga(a);
    if (!rep.valid) s.at.err("algebra '" + s.name + "' is invalid: " + rep.violations.front());
    return a;
}

LaurentComplex build_complex(const RawSection& s) {
    LaurentComplex c;
    c.n = int(to_long(require(s, "n")[0], s.at));
    c.ranks = int_list(require(s, "ranks"), s.at);
    if (c.ranks.empty()) s.at.err("empty ranks");
    for (size_t i = 0; i + 1 < c.ranks.size(); ++i)
        c.boundaries.push_back(Mat<QPoly>(c.ranks[i], c.ranks[i + 1], QPoly(c.n)));
    for (const auto& [t, at] : s.terms) {
        if (t[0] != "boundary") at.err("unknown term line '" + t[0] + "' in a complex section");
        if (t.size() != 6) at.err("boundary lines take: boundary i row col monomial coeff");
        int i = int(to_long(t[1], at));
        if (i < 1 || i >= int(c.ranks.size())) at.err("boundary degree out of range");
        int r = index1(to_long(t[2], at), c.ranks[i - 1], "row", at);
        int col = index1(to_long(t[3], at), c.ranks[i], "column", at);
        QPoly m(c.n);
        try {
            m = parse_monomial(t[4], c.n);
        } catch (const std::exception& e) {
            at.err(e.what());
        }
        c.boundaries[i - 1](r, col) += m * QPoly::constant(c.n, to_rat(t[5], at));
    }
    auto rep = validate_complex(c);
    if (!rep.valid) s.at.err("complex '" + s.name + "' is invalid: " + rep.violations.front());
    return c;
}

Presentation build_presentation(const RawSection& s) {
    Presentation p;
    p.ngens = int(to_long(require(s, "generators")[0], s.at));
    if (p.ngens < 1) s.at.err("presentations need at least one generator");
    std::vector<std::vector<std::string>> abel_rows;
    for (const auto& [t, at] : s.terms) {
        if (t[0] == "relator") {
            std::vector<int> rel;
            for (size_t i = 1; i < t.size(); ++i) {
                long v = to_long(t[i], at);
                if (v == 0 || std::abs(v) > p.ngens) at.err("relator letter out of range");
                rel.push_back(int(v));
            }
            p.relators.push_back(std::move(rel));
        } else if (t[0] == "abel") {
            std::vector<std::string> row(t.begin() + 1, t.end());
            abel_rows.push_back(row);
        } else {
            at.err("unknown term line '" + t[0] + "' in a presentation section");
        }
    }
    if (!abel_rows.empty()) {
        IntMat m(int(abel_rows.size()), p.ngens);
        for (size_t i = 0; i < abel_rows.size(); ++i) {
            if (int(abel_rows[i].size()) != p.ngens) s.at.err("abel row width != generators");
            for (int j = 0; j < p.ngens; ++j) m(int(i), j) = Int(to_long(abel_rows[i][j], s.at));
        }
        p.abelianization = m;
    }
    try {
        presentation_to_complex(p);
    } catch (const std::exception& e) {
        s.at.err("presentation '" + s.name + "' is invalid: " + std::string(e.what()));
    }
    return p;
}

TranslatedSubtorus build_torus(const RawSection& s) {
    int n = int(to_long(require(s, "n")[0], s.at));
    if (n < 1) s.at.err("torus ambient dimension must be positive");
    std::vector<std::vector<long>> rows;
    for (const auto& [t, at] : s.terms) {
        if (t[0] != "row") at.err("unknown term line '" + t[0] + "' in a torus section");
        if (int(t.size()) != n + 1) at.err("lattice row width != n");
        std::vector<long> row;
        for (size_t i = 1; i < t.size(); ++i) row.push_back(to_long(t[i], at));
        rows.push_back(std::move(row));
    }
    std::vector<Rat> translate(n, Rat(0));
    if (auto it = s.keys.find("translate"); it != s.keys.end()) {
        if (int(it->second.size()) != n) s.at.err("translate width != n");
        for (int j = 0; j < n; ++j) translate[j] = to_rat(it->second[j], s.at);
    }
    IntMat lattice = rows.empty() ? IntMat(0, n) : IntMat::from_rows(rows);
    return make_translated_subtorus(n, lattice, translate);
}

AffineSubspaceQ build_affine(const RawSection& s) {
    AffineSubspaceQ v;
    v.n = int(to_long(require(s, "n")[0], s.at));
    if (v.n < 1) s.at.err("affine ambient dimension must be positive");
    v.base.assign(v.n, Rat(0));
    if (auto it = s.keys.find("base"); it != s.keys.end()) {
        if (int(it->second.size()) != v.n) s.at.err("base width != n");
        for (int j = 0; j < v.n; ++j) v.base[j] = to_rat(it->second[j], s.at);
    }
    for (const auto& [t, at] : s.terms) {
        if (t[0] != "direction") at.err("unknown term line '" + t[0] + "' in an affine section");
        if (int(t.size()) != v.n + 1) at.err("direction width != n");
        std::vector<Rat> d;
        for (size_t i = 1; i < t.size(); ++i) d.push_back(to_rat(t[i], at));
        v.directions.push_back(std::move(d));
    }
    Mat<Rat> m(int(v.directions.size()), v.n);
    for (size_t i = 0; i < v.directions.size(); ++i)
        for (int j = 0; j < v.n; ++j) m(int(i), j) = v.directions[i][j];
    if (rank_field(m) != int(v.directions.size())) s.at.err("direction vectors are dependent");
    return v;
}

LaurentZeroSet build_zeroset(const RawSection& s) {
    LaurentZeroSet w;
    w.n = int(to_long(require(s, "n")[0], s.at));
    if (w.n < 1) s.at.err("zeroset ambient dimension must be positive");
    for (const auto& [t, at] : s.terms) {
        if (t[0] != "gen") at.err("unknown term line '" + t[0] + "' in a zeroset section");
        if (t.size() != 4) at.err("gen lines take: gen k monomial coeff");
        int k = int(to_long(t[1], at));
        if (k < 1) at.err("generator index must be positive");
        while (int(w.generators.size()) < k) w.generators.push_back(QPoly(w.n));
        QPoly m(w.n);
        try {
            m = parse_monomial(t[2], w.n);
        } catch (const std::exception& e) {
            at.err(e.what());
        }
        w.generators[k - 1] += m * QPoly::constant(w.n, to_rat(t[3], at));
    }
    return w;
}

OneHodgeStructure build_hodge(const RawSection& s) {
    OneHodgeStructure h;
    h.rank = int(to_long(require(s, "rank")[0], s.at));
    if (h.rank < 0) s.at.err("negative rank");
    for (const auto& [t, at] : s.terms) {
        if (t[0] == "w") {
            if (int(t.size()) != h.rank + 1) at.err("w row width != rank");
            std::vector<Rat> row;
            for (size_t i = 1; i < t.size(); ++i) row.push_back(to_rat(t[i], at));
            h.w_basis.push_back(std::move(row));
        } else if (t[0] == "f") {
            // entries as re im pairs
            if (int(t.size()) != 2 * h.rank + 1) at.err("f rows take 2*rank entries (re im pairs)");
            std::vector<Cyclotomic> row;
            for (int j = 0; j < h.rank; ++j) {
                Rat re = to_rat(t[1 + 2 * j], at), im = to_rat(t[2 + 2 * j], at);
                row.push_back(Cyclotomic(re) + Cyclotomic(im) * Cyclotomic::root(4, 1));
            }
            h.f_basis.push_back(std::move(row));
        } else {
            at.err("unknown term line '" + t[0] + "' in a hodge section");
        }
    }
    try {
        auto rep = validate_1hs(h);
        if (!rep.valid) s.at.err("hodge structure '" + s.name + "' is invalid: " + rep.violations.front());
    } catch (const std::invalid_argument& e) {
        s.at.err("hodge structure '" + s.name + "': " + std::string(e.what()));
    }
    return h;
}

template <class T>
void insert_named(std::map<std::string, T>& into, const RawSection& s, T value) {
    if (!into.emplace(s.name, std::move(value)).second)
        s.at.err("duplicate " + s.kind + " name '" + s.name + "'");
}

void finish_section(Workspace& ws, const RawSection& s) {
    if (s.kind == "algebra")
        insert_named(ws.algebras, s, build_algebra(s));
    else if (s.kind == "complex")
        insert_named(ws.complexes, s, build_complex(s));
    else if (s.kind == "presentation")
        insert_named(ws.presentations, s, build_presentation(s));
    else if (s.kind == "torus")
        insert_named(ws.tori, s, build_torus(s));
    else if (s.kind == "affine")
        insert_named(ws.affines, s, build_affine(s));
    else if (s.kind == "zeroset")
        insert_named(ws.zerosets, s, build_zeroset(s));
    else if (s.kind == "hodge")
        insert_named(ws.hodges, s, build_hodge(s));
    else
        s.at.err("unknown section kind '" + s.kind + "'");
}

}  // namespace

QPoly parse_monomial(const std::string& token, int nvars) {
    if (token == "1") return QPoly::constant(nvars, Rat(1));
    Expo e(nvars, 0);
    size_t pos = 0;
    while (pos < token.size()) {
        if (token[pos] == '*') ++pos;
        if (pos >= token.size() || token[pos] != 't')
            throw std::invalid_argument("bad monomial '" + token + "'");
        ++pos;
        size_t start = pos;
        while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("bad monomial '" + token + "'");
        int var = std::stoi(token.substr(start, pos - start));
        if (var < 1 || var > nvars)
            throw std::invalid_argument("variable t" + std::to_string(var) + " out of range");
        long exp = 1;
        if (pos < token.size() && token[pos] == '^') {
            ++pos;
            size_t es = pos;
            if (pos < token.size() && token[pos] == '-') ++pos;
            while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
            if (es == pos) throw std::invalid_argument("bad exponent in '" + token + "'");
            exp = std::stol(token.substr(es, pos - es));
        }
        e[var - 1] += int(exp);
    }
    return QPoly::monomial(nvars, e, Rat(1));
}

void parse_workspace_text(Workspace& ws, const std::string& text, const std::string& filename) {
    std::istringstream is(text);
    std::string line;
    Cursor at{filename, 0};
    std::optional<RawSection> current;
    while (std::getline(is, line)) {
        ++at.line;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '[') {
            if (current) finish_section(ws, *current);
            std::string joined;
            for (const auto& t : toks) joined += (joined.empty() ? "" : " ") + t;
            if (joined.back() != ']') at.err("unterminated section header");
            auto inner = tokens_of(joined.substr(1, joined.size() - 2));
            if (inner.size() != 2) at.err("section headers take: [kind name]");
            current = RawSection{inner[0], inner[1], at, {}, {}};
            continue;
        }
        if (!current) at.err("content before the first section header");
        std::string key;
        std::vector<std::string> vals;
        if (split_keyval(line, key, vals)) {
            if (!current->keys.emplace(key, vals).second) at.err("duplicate key '" + key + "'");
        } else {
            current->terms.emplace_back(toks, at);
        }
    }
    if (current) finish_section(ws, *current);
}

Workspace parse_workspace(const std::vector<std::string>& paths) {
    Workspace ws;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw WorkspaceError("cannot open workspace file '" + p + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        parse_workspace_text(ws, buf.str(), p);
    }
    return ws;
}

LaurentComplex Workspace::resolve_complex(const std::string& name) const {
    if (auto it = complexes.find(name); it != complexes.end()) return it->second;
    if (auto it = presentations.find(name); it != presentations.end())
        return presentation_to_complex(it->second);
    throw WorkspaceError("no complex or presentation named '" + name + "'");
}

}  // namespace jumploci
