#include "jumploci/twisted.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <sstream>

namespace jumploci {

namespace {

int numeric_rank(const Mat<std::complex<double>>& m, double rel_tol = 1e-9) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXcd em(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) em(i, j) = m(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(em);
    auto sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    double cutoff = sv(0) * rel_tol;
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

std::vector<int> free_reduce(const std::vector<int>& word) {
    std::vector<int> out;
    for (int letter : word) {
        if (letter == 0) throw std::invalid_argument("relator letter 0");
        if (!out.empty() && out.back() == -letter)
            out.pop_back();
        else
            out.push_back(letter);
    }
    return out;
}

}  // namespace

Character Character::torsion_char(std::vector<Rat> angles) {
    Character c;
    c.torsion = true;
    for (auto& a : angles) a = mod1(a);
    c.q = std::move(angles);
    return c;
}

Character Character::numeric_char(std::vector<std::complex<double>> values) {
    Character c;
    c.torsion = false;
    c.z = std::move(values);
    return c;
}

Character Character::inverse() const {
    Character c = *this;
    if (torsion)
        for (auto& a : c.q) a = mod1(-a);
    else
        for (auto& v : c.z) v = 1.0 / v;
    return c;
}

ValidationReport validate_complex(const LaurentComplex& c) {
    ValidationReport rep;
    for (size_t i = 0; i < c.boundaries.size(); ++i)
        if (c.boundaries[i].rows() != c.ranks[i] || c.boundaries[i].cols() != c.ranks[i + 1]) {
            rep.fail("boundary " + std::to_string(i + 1) + " has wrong shape");
            return rep;
        }
    for (size_t i = 0; i + 1 < c.boundaries.size(); ++i)
        for (int r = 0; r < c.ranks[i]; ++r)
            for (int col = 0; col < c.ranks[i + 2]; ++col) {
                QPoly acc(c.n);
                for (int k = 0; k < c.ranks[i + 1]; ++k)
                    acc += c.boundaries[i](r, k) * c.boundaries[i + 1](k, col);
                if (!acc.is_zero()) {
                    std::ostringstream os;
                    os << "dd != 0 in boundary pair " << i + 1 << "," << i + 2 << " at entry (" << r
                       << "," << col << ")";
                    rep.fail(os.str());
                }
            }
    return rep;
}

LaurentComplex presentation_to_complex(const Presentation& p) {
    int g = p.ngens;
    std::vector<std::vector<int>> relators;
    for (const auto& r : p.relators) relators.push_back(free_reduce(r));
    int nrel = int(relators.size());

    // exponent-sum matrix, generators x relators
    IntMat expo(g, std::max(nrel, 0));
    for (int r = 0; r < nrel; ++r)
        for (int letter : relators[r]) {
            int gi = std::abs(letter) - 1;
            if (gi >= g) throw std::invalid_argument("relator uses unknown generator");
            expo(gi, r) += letter > 0 ? 1 : -1;
        }

    IntMat ab;  // n x g
    if (p.abelianization.rows() > 0) {
        ab = p.abelianization;
        if (ab.cols() != g) throw std::invalid_argument("abelianization map has wrong width");
        // surjectivity onto Z^n: all invariant factors must be 1
        auto snf = smith_normal_form(ab);
        for (int i = 0; i < ab.rows(); ++i)
            if (snf.d(i, i) != 1)
                throw std::invalid_argument("abelianization map is not surjective onto Z^n");
        IntMat img = ab * expo;
        for (int i = 0; i < img.rows(); ++i)
            for (int j = 0; j < img.cols(); ++j)
                if (img(i, j) != 0)
                    throw std::invalid_argument("abelianization map does not kill the relators");
    } else {
        // free part of coker(expo): rows of U past the invariant factors
        auto snf = smith_normal_form(expo);
        int rank = 0;
        for (int i = 0; i < std::min(g, expo.cols()); ++i)
            if (snf.d(i, i) != 0) ++rank;
        ab = IntMat(g - rank, g);
        for (int i = rank; i < g; ++i)
            for (int j = 0; j < g; ++j) ab(i - rank, j) = snf.u(i, j);
    }
    int n = ab.rows();

    LaurentComplex c;
    c.n = n;
    c.ranks = {1, g};
    if (nrel > 0) c.ranks.push_back(nrel);

    auto gen_monomial = [&](int gi, int sign) {
        Expo e(n, 0);
        for (int i = 0; i < n; ++i) e[i] = sign * int(ab(i, gi).get_si());
        return e;
    };

    Mat<QPoly> d1(1, g, QPoly(n));
    for (int gi = 0; gi < g; ++gi) {
        QPoly e(n);
        e.add_term(gen_monomial(gi, +1), Rat(1));
        e.add_term(Expo(n, 0), Rat(-1));
        d1(0, gi) = e;
    }
    c.boundaries.push_back(d1);

    if (nrel > 0) {
        Mat<QPoly> d2(g, nrel, QPoly(n));
        for (int r = 0; r < nrel; ++r) {
            std::vector<QPoly> fox(g, QPoly(n));
            Expo prefix(n, 0);
            for (int letter : relators[r]) {
                int gi = std::abs(letter) - 1;
                if (letter > 0) {
                    fox[gi].add_term(prefix, Rat(1));
                    Expo step = gen_monomial(gi, +1);
                    for (int i = 0; i < n; ++i) prefix[i] += step[i];
                } else {
                    Expo step = gen_monomial(gi, -1);
                    for (int i = 0; i < n; ++i) prefix[i] += step[i];
                    fox[gi].add_term(prefix, Rat(-1));
                }
            }
            for (int gi = 0; gi < g; ++gi) d2(gi, r) = fox[gi];
        }
        c.boundaries.push_back(d2);
    }
    auto rep = validate_complex(c);
    if (!rep.valid) throw std::logic_error("fox complex failed validation: " + rep.violations[0]);
    return c;
}

LaurentComplex dualize(const LaurentComplex& c) {
    LaurentComplex d;
    d.n = c.n;
    d.ranks = c.ranks;
    std::reverse(d.ranks.begin(), d.ranks.end());
    for (auto it = c.boundaries.rbegin(); it != c.boundaries.rend(); ++it) {
        const Mat<QPoly>& b = *it;
        Mat<QPoly> t(b.cols(), b.rows(), QPoly(c.n));
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) {
                QPoly inv(c.n);
                for (const auto& [e, coeff] : b(i, j).terms()) {
                    Expo ne(c.n);
                    for (int v = 0; v < c.n; ++v) ne[v] = -e[v];
                    inv.add_term(ne, coeff);
                }
                t(j, i) = inv;
            }
        d.boundaries.push_back(t);
    }
    return d;
}

std::vector<int> twisted_betti(const LaurentComplex& c, const Character& rho) {
    if (rho.dim() != c.n) throw std::invalid_argument("character dimension mismatch");
    int top = c.top();
    std::vector<int> brank(c.boundaries.size(), 0);
    if (rho.torsion) {
        std::vector<Cyclotomic> point;
        for (const Rat& q : rho.q) point.push_back(Cyclotomic::unit_exp(q));
        for (size_t i = 0; i < c.boundaries.size(); ++i) {
            const auto& b = c.boundaries[i];
            CycMat m(b.rows(), b.cols());
            for (int r = 0; r < b.rows(); ++r)
                for (int col = 0; col < b.cols(); ++col) m(r, col) = b(r, col).eval(point);
            brank[i] = rank_field(m);
        }
    } else {
        for (size_t i = 0; i < c.boundaries.size(); ++i) {
            const auto& b = c.boundaries[i];
            Mat<std::complex<double>> m(b.rows(), b.cols());
            for (int r = 0; r < b.rows(); ++r)
                for (int col = 0; col < b.cols(); ++col) m(r, col) = b(r, col).eval(rho.z);
            brank[i] = numeric_rank(m);
        }
    }
    std::vector<int> betti(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        int out_rank = (i >= 1) ? brank[i - 1] : 0;
        int in_rank = (i < int(c.boundaries.size())) ? brank[i] : 0;
        betti[i] = c.ranks[i] - out_rank - in_rank;
    }
    return betti;
}

bool charvar_membership(const LaurentComplex& c, int i, int k, const Character& rho) {
    if (k <= 0) return true;
    if (i < 0 || i > c.top()) return false;
    return twisted_betti(c, rho)[i] >= k;
}

std::vector<Rat> sample_torsion_on(const TranslatedSubtorus& t, std::mt19937_64& rng,
                                   long order_bound) {
    int d = t.torus.rank();
    int n = t.torus.n;
    std::uniform_int_distribution<long> order(1, order_bound);
    long m = order(rng);
    std::uniform_int_distribution<long> num(0, m - 1);
    std::vector<Rat> q(n);
    for (int j = 0; j < n; ++j) q[j] = t.translate[j];
    for (int k = 0; k < d; ++k) {
        Rat coef = rat(num(rng), m);
        for (int j = 0; j < n; ++j) q[j] += coef * Rat(t.torus.lattice(k, j));
    }
    for (auto& x : q) x = mod1(x);
    return q;
}

TorusCertificate verify_torus_in_charvar(const LaurentComplex& c, const TranslatedSubtorus& t,
                                         int i, int k, std::uint64_t seed) {
    TorusCertificate cert;
    if (t.torus.n != c.n) throw std::invalid_argument("torus ambient dimension mismatch");

    if (!t.torsion) {
        // numeric translate: sampled check only, never an exact certificate
        cert.exact = false;
        std::mt19937_64 rng(seed ? seed : 7);
        std::uniform_real_distribution<double> ang(0.0, 2 * 3.14159265358979323846);
        bool all_member = true;
        for (int s = 0; s < 20 && all_member; ++s) {
            std::vector<std::complex<double>> z(c.n);
            for (int j = 0; j < c.n; ++j) z[j] = t.numeric_translate[j];
            for (int dk = 0; dk < t.torus.rank(); ++dk) {
                double a = ang(rng);
                std::complex<double> sv(std::cos(a), std::sin(a));
                for (int j = 0; j < c.n; ++j) {
                    long e = t.torus.lattice(dk, j).get_si();
                    for (long p = 0; p < std::abs(e); ++p) z[j] *= (e > 0 ? sv : 1.0 / sv);
                }
            }
            all_member = charvar_membership(c, i, k, Character::numeric_char(z));
        }
        cert.success = all_member;
        cert.note = "numeric-only check: translate is not torsion";
        return cert;
    }

    int d = t.torus.rank();
    std::vector<int> brank(c.boundaries.size(), 0);
    if (d == 0) {
        cert.generic_betti = twisted_betti(c, Character::torsion_char(t.translate));
    } else {
        for (size_t bi = 0; bi < c.boundaries.size(); ++bi) {
            const auto& b = c.boundaries[bi];
            Mat<SparsePoly<Cyclotomic>> m(b.rows(), b.cols(), SparsePoly<Cyclotomic>(d));
            for (int r = 0; r < b.rows(); ++r)
                for (int col = 0; col < b.cols(); ++col) m(r, col) = restrict_to_torus(b(r, col), t);
            brank[bi] = generic_rank(m);
        }
        cert.generic_betti.assign(c.top() + 1, 0);
        for (int deg = 0; deg <= c.top(); ++deg) {
            int out_rank = (deg >= 1) ? brank[deg - 1] : 0;
            int in_rank = (deg < int(c.boundaries.size())) ? brank[deg] : 0;
            cert.generic_betti[deg] = c.ranks[deg] - out_rank - in_rank;
        }
    }
    bool in_range = i >= 0 && i <= c.top();
    cert.success = k <= 0 || (in_range && cert.generic_betti[i] >= k);
    if (!cert.success) {
        std::mt19937_64 rng(seed ? seed : 99);
        for (int attempt = 0; attempt < 200; ++attempt) {
            std::vector<Rat> q = attempt == 0 ? t.translate : sample_torsion_on(t, rng);
            if (!charvar_membership(c, i, k, Character::torsion_char(q))) {
                cert.refutation = q;
                break;
            }
        }
    }
    return cert;
}

CompareExpReport compare_exp(const GradedAlgebra& a, const LaurentComplex& c, int i, int k,
                             int samples, long denominator_bound, std::uint64_t seed) {
    AomotoComplex ac = aomoto(a);
    if (ac.nvars != c.n)
        throw std::invalid_argument("flat-connection coordinate count differs from torus rank");
    CompareExpReport rep;
    std::mt19937_64 rng(seed ? seed : 12345);
    auto check_point = [&](const std::vector<Rat>& omega) {
        bool res = resonance_membership(ac, i, k, omega);
        std::vector<Rat> angles(omega.size());
        for (size_t j = 0; j < omega.size(); ++j) angles[j] = mod1(omega[j]);
        bool cv = charvar_membership(c, i, k, Character::torsion_char(angles));
        ++rep.samples;
        if (res == cv)
            ++rep.agreements;
        else
            rep.disagreement_points.push_back(omega);
    };
    check_point(std::vector<Rat>(ac.nvars, Rat(0)));
    // base samples with entries in [-1, 1], then scaled toward the origin so
    // the comparison happens near the germ
    long base_scale = 2L * (ac.nvars + 1);
    for (int s = 1; s < samples; ++s) {
        std::vector<Rat> omega(ac.nvars);
        for (int j = 0; j < ac.nvars; ++j) {
            Rat q = random_rat(rng, denominator_bound, denominator_bound);
            omega[j] = q / Rat(denominator_bound);
        }
        for (long scale : {base_scale, 2 * base_scale}) {
            std::vector<Rat> w(omega);
            for (auto& x : w) x /= scale;
            check_point(w);
        }
    }
    return rep;
}

LaurentComplex wedge_two_circles() {
    Presentation p;
    p.ngens = 2;
    return presentation_to_complex(p);
}

LaurentComplex two_torus_complex() {
    Presentation p;
    p.ngens = 2;
    p.relators = {{1, 2, -1, -2}};
    return presentation_to_complex(p);
}

Presentation pencil_presentation() {
    Presentation p;
    p.ngens = 3;
    p.relators = {{1, 2, 3, -1, -3, -2}, {2, 3, 1, -2, -1, -3}};
    return p;
}

std::vector<Character> torsion_sweep(int n, long order) {
    std::vector<Character> out;
    std::vector<long> idx(n, 0);
    while (true) {
        std::vector<Rat> q(n);
        for (int j = 0; j < n; ++j) q[j] = rat(idx[j], order);
        out.push_back(Character::torsion_char(q));
        int j = n - 1;
        while (j >= 0 && idx[j] == order - 1) idx[j--] = 0;
        if (j < 0) break;
        ++idx[j];
    }
    return out;
}

std::vector<std::vector<int>> sweep_betti_serial(const LaurentComplex& c,
                                                 const std::vector<Character>& chars) {
    std::vector<std::vector<int>> out(chars.size());
    for (size_t i = 0; i < chars.size(); ++i) out[i] = twisted_betti(c, chars[i]);
    return out;
}

std::vector<std::vector<int>> sweep_betti(const LaurentComplex& c,
                                          const std::vector<Character>& chars) {
    std::vector<std::vector<int>> out(chars.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(chars.size()); ++i) out[i] = twisted_betti(c, chars[i]);
    return out;
}

}  // namespace jumploci
