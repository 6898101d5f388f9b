#include "jumploci/torus.hpp"

#include <sstream>

#include "jumploci/cyclotomic.hpp"

namespace jumploci {

Subtorus make_subtorus(int n, const IntMat& rows) {
    if (rows.rows() > 0 && rows.cols() != n) throw std::invalid_argument("lattice width != n");
    Subtorus t;
    t.n = n;
    t.lattice = rows.rows() ? saturate_lattice(rows) : IntMat(0, n);
    return t;
}

namespace {

// inverse of a unimodular integer matrix, over Q (entries are integers)
std::vector<std::vector<Rat>> unimodular_inverse(const IntMat& m) {
    int n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (int j = col; j < 2 * n; ++j) a[col][j] /= p;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = col; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

}  // namespace

std::vector<Rat> coset_canonical(const IntMat& saturated_lattice, const std::vector<Rat>& v) {
    int n = int(v.size());
    int d = saturated_lattice.rows();
    std::vector<Rat> out(n);
    if (d == 0) {
        for (int i = 0; i < n; ++i) out[i] = mod1(v[i]);
        return out;
    }
    // u L V = (I_d | 0) for saturated L, so in the coordinates y = x V the
    // lattice spans the first d axes: kill those, reduce the rest mod 1, map
    // back through V^{-1} and reduce mod Z^n once more
    SnfResult s = smith_normal_form(saturated_lattice);
    std::vector<Rat> y(n, Rat(0));
    for (int j = d; j < n; ++j) {
        for (int i = 0; i < n; ++i) y[j] += v[i] * Rat(s.v(i, j));
        y[j] = mod1(y[j]);
    }
    auto b = unimodular_inverse(s.v);
    for (int j = 0; j < n; ++j) {
        Rat acc(0);
        for (int i = d; i < n; ++i) acc += y[i] * b[i][j];
        out[j] = mod1(acc);
    }
    return out;
}

TranslatedSubtorus make_translated_subtorus(int n, const IntMat& lattice_rows,
                                            const std::vector<Rat>& translate) {
    TranslatedSubtorus t;
    t.torus = make_subtorus(n, lattice_rows);
    t.torsion = true;
    t.translate = coset_canonical(t.torus.lattice, translate);
    return t;
}

TranslatedSubtorus exp_image(const AffineSubspaceQ& v) {
    IntMat dirs(v.dim(), v.n);
    for (int i = 0; i < v.dim(); ++i) {
        Int den(1);
        for (int j = 0; j < v.n; ++j) den = lcm(den, v.directions[i][j].get_den());
        for (int j = 0; j < v.n; ++j) {
            Rat scaled = v.directions[i][j] * Rat(den);
            dirs(i, j) = scaled.get_num();
        }
    }
    return make_translated_subtorus(v.n, dirs, v.base);
}

bool membership(const std::vector<Rat>& w, const TranslatedSubtorus& t) {
    if (!t.torsion) throw std::invalid_argument("membership needs a torsion translate");
    if (int(w.size()) != t.torus.n) throw std::invalid_argument("point dimension mismatch");
    return coset_canonical(t.torus.lattice, w) == t.translate;
}

bool containment(const TranslatedSubtorus& s, const TranslatedSubtorus& t) {
    if (!s.torsion || !t.torsion) throw std::invalid_argument("containment needs torsion translates");
    if (s.torus.n != t.torus.n) throw std::invalid_argument("ambient dimension mismatch");
    // direction containment: rowspan_Q(S) inside rowspan_Q(T)
    if (s.torus.rank() > 0) {
        IntMat stacked = t.torus.lattice.rows() ? t.torus.lattice.vstack(s.torus.lattice)
                                                : s.torus.lattice;
        if (int_rank(stacked) != t.torus.rank()) return false;
    }
    return membership(s.translate, t);
}

IntersectionResult intersection(const Subtorus& s, const Subtorus& t) {
    if (s.n != t.n) throw std::invalid_argument("ambient dimension mismatch");
    IntersectionResult res;
    int ds = s.rank(), dt = t.rank();
    if (ds == 0 || dt == 0) {
        res.identity_component = make_subtorus(s.n, IntMat(0, s.n));
        res.component_count = 1;
        return res;
    }
    // pairs (x, y) with x S = y T; their common values x S span the intersection
    IntMat m(ds + dt, s.n);
    for (int i = 0; i < ds; ++i)
        for (int j = 0; j < s.n; ++j) m(i, j) = s.lattice(i, j);
    for (int i = 0; i < dt; ++i)
        for (int j = 0; j < s.n; ++j) m(ds + i, j) = -t.lattice(i, j);
    IntMat ker = right_kernel(m.transpose());  // rows (x, y)
    IntMat inter(ker.rows(), s.n);
    for (int r = 0; r < ker.rows(); ++r)
        for (int j = 0; j < s.n; ++j) {
            Int acc(0);
            for (int i = 0; i < ds; ++i) acc += ker(r, i) * s.lattice(i, j);
            inter(r, j) = acc;
        }
    res.identity_component = make_subtorus(s.n, inter);
    res.component_count = saturation_index(s.lattice.vstack(t.lattice));
    return res;
}

SparsePoly<Cyclotomic> restrict_to_torus(const QPoly& f, const TranslatedSubtorus& t) {
    if (!t.torsion) throw std::invalid_argument("restriction needs a torsion translate");
    int d = t.torus.rank();
    int n = t.torus.n;
    SparsePoly<Cyclotomic> out(d);
    for (const auto& [e, coeff] : f.terms()) {
        std::vector<long> a(n);
        for (int j = 0; j < n; ++j) a[j] = e[j];
        Cyclotomic c = cyclotomic_eval(t.translate, a) * Cyclotomic(coeff);
        Expo ne(d, 0);
        for (int k = 0; k < d; ++k) {
            long acc = 0;
            for (int j = 0; j < n; ++j) acc += long(e[j]) * t.torus.lattice(k, j).get_si();
            ne[k] = int(acc);
        }
        out.add_term(ne, c);
    }
    return out;
}

VanishResult vanishes_on_exp_image(const QPoly& f, const AffineSubspaceQ& v) {
    VanishResult res;
    int d = v.dim();
    int n = v.n;
    // primitive integer direction vectors
    std::vector<std::vector<long>> dirs(d, std::vector<long>(n));
    for (int i = 0; i < d; ++i) {
        Int den(1);
        for (int j = 0; j < n; ++j) den = lcm(den, v.directions[i][j].get_den());
        Int content(0);
        std::vector<Int> row(n);
        for (int j = 0; j < n; ++j) {
            Rat s = v.directions[i][j] * Rat(den);
            row[j] = s.get_num();
            content = gcd(content, row[j]);
        }
        for (int j = 0; j < n; ++j) dirs[i][j] = (content == 0 ? row[j] : Int(row[j] / content)).get_si();
    }
    std::vector<Rat> base(n);
    for (int j = 0; j < n; ++j) base[j] = mod1(v.base[j]);

    // group monomials by the induced character exponent; distinct characters
    // s -> s^e are linearly independent, so f vanishes iff every group sum does
    std::map<std::vector<int>, Cyclotomic> groups;
    for (const auto& [e, coeff] : f.terms()) {
        std::vector<long> a(n);
        for (int j = 0; j < n; ++j) a[j] = e[j];
        std::vector<int> key(d, 0);
        for (int i = 0; i < d; ++i) {
            long acc = 0;
            for (int j = 0; j < n; ++j) acc += a[j] * dirs[i][j];
            key[i] = int(acc);
        }
        Cyclotomic add = cyclotomic_eval(base, a) * Cyclotomic(coeff);
        auto [it, fresh] = groups.emplace(key, add);
        if (!fresh) it->second += add;
    }
    for (const auto& [key, sum] : groups)
        if (!sum.is_zero()) {
            res.vanishes = false;
            res.witness_exponent = key;
            res.witness_sum = sum.str();
            return res;
        }
    return res;
}

AxlReport ax_lindemann_report(const AffineSubspaceQ& v, const LaurentZeroSet& w, int claimed_dim_w) {
    AxlReport rep;
    rep.exp_image_in_zeroset = true;
    for (size_t g = 0; g < w.generators.size(); ++g) {
        VanishResult r = vanishes_on_exp_image(w.generators[g], v);
        if (!r.vanishes) {
            rep.exp_image_in_zeroset = false;
            rep.failing_generator = int(g);
            rep.failure = r;
            break;
        }
    }
    rep.machine_checked.push_back("exp(V) lies in the zero set of every generator: " +
                                  std::string(rep.exp_image_in_zeroset ? "yes" : "NO"));
    rep.dims_match = (claimed_dim_w == v.dim());
    rep.user_asserted.push_back("W is irreducible (not machine-checked)");
    rep.user_asserted.push_back("dim W = " + std::to_string(claimed_dim_w) + " (not machine-checked)");
    if (rep.exp_image_in_zeroset && rep.dims_match) {
        rep.predicted = exp_image(v);
        rep.generators_vanish_on_predicted = true;
        for (const QPoly& f : w.generators)
            if (!restrict_to_torus(f, rep.predicted).is_zero()) {
                rep.generators_vanish_on_predicted = false;
                break;
            }
        rep.machine_checked.push_back(
            "every generator vanishes identically on the predicted translated subtorus: " +
            std::string(rep.generators_vanish_on_predicted ? "yes" : "NO"));
    }
    return rep;
}

}  // namespace jumploci
