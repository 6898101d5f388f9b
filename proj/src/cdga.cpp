#include "jumploci/cdga.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jumploci {

namespace {

std::string pos(int i, int a) {
    std::ostringstream os;
    os << "(deg " << i << ", idx " << a << ")";
    return os.str();
}

// wedge of two disjoint sorted index sets; returns (sign, merged) or sign 0
std::pair<int, std::vector<int>> wedge_sets(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> merged = s;
    int sign = 1;
    for (size_t ti = 0; ti < t.size(); ++ti) {
        int g = t[ti];
        // count elements of merged greater than g; inserting g past them flips signs
        int greater = 0;
        for (int x : merged) {
            if (x == g) return {0, {}};
            if (x > g) ++greater;
        }
        if (greater % 2) sign = -sign;
        merged.push_back(g);
        std::sort(merged.begin(), merged.end());
    }
    return {sign, merged};
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return out;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

Rat GradedAlgebra::mult_c(int i, int j, int a, int b, int k) const {
    auto it = mult.find({i, j});
    if (it == mult.end()) return Rat(0);
    return it->second[size_t(a * dims[j] + b) * dims[i + j] + k];
}

void GradedAlgebra::set_mult(int i, int j, int a, int b, int k, const Rat& c) {
    auto& block = mult[{i, j}];
    if (block.empty()) block.assign(size_t(dims[i]) * dims[j] * dims[i + j], Rat(0));
    block[size_t(a * dims[j] + b) * dims[i + j] + k] = c;
}

std::vector<Rat> GradedAlgebra::basis_product(int i, int a, int j, int b) const {
    if (i + j > top()) return {};
    std::vector<Rat> out(dims[i + j], Rat(0));
    if (i == 0) {  // A^0 = Q * 1
        out[b] = 1;
        return out;
    }
    if (j == 0) {
        out[a] = 1;
        return out;
    }
    for (int k = 0; k < dims[i + j]; ++k) out[k] = mult_c(i, j, a, b, k);
    return out;
}

Rat DGModule::action_c(int i, int j, int a, int b, int k) const {
    auto it = action.find({i, j});
    if (it == action.end()) return Rat(0);
    return it->second[size_t(a * dims[j] + b) * dims[i + j] + k];
}

void DGModule::set_action(int i, int j, int a, int b, int k, const Rat& c) {
    auto& blk = action[{i, j}];
    if (blk.empty()) blk.assign(size_t(alg_dims[i]) * dims[j] * dims[i + j], Rat(0));
    blk[size_t(a * dims[j] + b) * dims[i + j] + k] = c;
}

ValidationReport validate_cdga(const GradedAlgebra& a) {
    ValidationReport rep;
    int top = a.top();
    if (top < 0 || a.dims.empty() || a.dims[0] != 1) {
        rep.fail("connectedness: dim A^0 must be 1");
        return rep;
    }
    if (int(a.diff.size()) < top) {
        rep.fail("missing differential matrices");
        return rep;
    }
    for (int i = 0; i < top; ++i)
        if (a.diff[i].rows() != a.dim(i + 1) || a.diff[i].cols() != a.dim(i)) {
            rep.fail("differential d^" + std::to_string(i) + " has wrong shape");
            return rep;
        }
    // d^0 = 0
    if (!a.diff.empty())
        for (int r = 0; r < a.diff[0].rows(); ++r)
            if (a.diff[0](r, 0) != 0) rep.fail("connectedness: d^0 must vanish");

    // d^2 = 0
    for (int i = 0; i + 1 < top; ++i) {
        for (int r = 0; r < a.dim(i + 2); ++r)
            for (int c = 0; c < a.dim(i); ++c) {
                Rat acc(0);
                for (int k = 0; k < a.dim(i + 1); ++k) acc += a.diff[i + 1](r, k) * a.diff[i](k, c);
                if (acc != 0) {
                    rep.fail("d^2 != 0 at " + pos(i, c) + " -> " + pos(i + 2, r));
                    goto after_d2;
                }
            }
    }
after_d2:

    // graded commutativity
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j)
            for (int x = 0; x < a.dim(i); ++x)
                for (int y = 0; y < a.dim(j); ++y)
                    for (int k = 0; k < a.dim(i + j); ++k) {
                        Rat lhs = a.mult_c(i, j, x, y, k);
                        Rat rhs = a.mult_c(j, i, y, x, k);
                        int sign = (i * j) % 2 ? -1 : 1;
                        if (lhs != Rat(sign) * rhs)
                            rep.fail("graded commutativity fails at " + pos(i, x) + " * " + pos(j, y));
                    }

    // associativity on basis triples
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j)
            for (int l = 1; i + j + l <= top; ++l)
                for (int x = 0; x < a.dim(i); ++x)
                    for (int y = 0; y < a.dim(j); ++y)
                        for (int z = 0; z < a.dim(l); ++z)
                            for (int k = 0; k < a.dim(i + j + l); ++k) {
                                Rat lhs(0), rhs(0);
                                for (int m = 0; m < a.dim(i + j); ++m)
                                    lhs += a.mult_c(i, j, x, y, m) * a.mult_c(i + j, l, m, z, k);
                                for (int m = 0; m < a.dim(j + l); ++m)
                                    rhs += a.mult_c(j, l, y, z, m) * a.mult_c(i, j + l, x, m, k);
                                if (lhs != rhs)
                                    rep.fail("associativity fails at " + pos(i, x) + ", " + pos(j, y) +
                                             ", " + pos(l, z));
                            }

    // graded Leibniz rule on basis pairs
    for (int i = 1; i <= top; ++i)
        for (int j = 1; i + j <= top; ++j) {
            for (int x = 0; x < a.dim(i); ++x)
                for (int y = 0; y < a.dim(j); ++y)
                    for (int k = 0; k < a.dim(i + j + 1); ++k) {
                        Rat lhs(0);
                        if (i + j < top)
                            for (int m = 0; m < a.dim(i + j); ++m)
                                lhs += a.diff[i + j](k, m) * a.mult_c(i, j, x, y, m);
                        Rat rhs(0);
                        if (i < top)
                            for (int m = 0; m < a.dim(i + 1); ++m)
                                rhs += a.diff[i](m, x) * a.mult_c(i + 1, j, m, y, k);
                        if (j < top) {
                            Rat sgn = (i % 2) ? Rat(-1) : Rat(1);
                            for (int m = 0; m < a.dim(j + 1); ++m)
                                rhs += sgn * a.diff[j](m, y) * a.mult_c(i, j + 1, x, m, k);
                        }
                        if (lhs != rhs)
                            rep.fail("Leibniz rule fails at " + pos(i, x) + " * " + pos(j, y));
                    }
        }
    return rep;
}

FlatConnectionBasis flat_connections(const GradedAlgebra& a) {
    FlatConnectionBasis fb;
    int n1 = a.dim(1);
    if (n1 == 0) return fb;
    QMat d1(a.dim(2), n1);
    if (a.top() >= 2)
        for (int r = 0; r < a.dim(2); ++r)
            for (int c = 0; c < n1; ++c) d1(r, c) = a.diff[1](r, c);
    fb.vectors = kernel_field(d1);
    return fb;
}

AomotoComplex aomoto(const GradedAlgebra& a) {
    FlatConnectionBasis fb = flat_connections(a);
    int m = fb.count();
    AomotoComplex c;
    c.nvars = m;
    c.dims = a.dims;
    int top = a.top();
    c.mats.resize(top + 1);
    for (int i = 0; i <= top; ++i) {
        Mat<QPoly> mi(a.dim(i + 1), a.dim(i), QPoly(m));
        for (int r = 0; r < a.dim(i + 1); ++r)
            for (int col = 0; col < a.dim(i); ++col) {
                QPoly e(m);
                if (i < top && a.diff[i](r, col) != 0)
                    e.add_term(Expo(m, 0), a.diff[i](r, col));
                for (int j = 0; j < m; ++j) {
                    // coefficient of basis r in omega_j /\ e_col
                    Rat coeff(0);
                    if (i == 0) {
                        coeff = fb.vectors[j][r];
                    } else if (i + 1 <= top) {
                        for (int g = 0; g < a.dim(1); ++g)
                            coeff += fb.vectors[j][g] * a.mult_c(1, i, g, col, r);
                    }
                    if (coeff != 0) {
                        Expo ex(m, 0);
                        ex[j] = 1;
                        e.add_term(ex, coeff);
                    }
                }
                mi(r, col) = e;
            }
        c.mats[i] = mi;
    }
    return c;
}

bool aomoto_is_flat(const AomotoComplex& c) {
    int top = int(c.dims.size()) - 1;
    for (int i = 0; i + 1 <= top; ++i) {
        for (int r = 0; r < c.mats[i + 1].rows(); ++r)
            for (int col = 0; col < c.mats[i].cols(); ++col) {
                QPoly acc(c.nvars);
                for (int k = 0; k < c.mats[i].rows(); ++k)
                    acc += c.mats[i + 1](r, k) * c.mats[i](k, col);
                if (!acc.is_zero()) return false;
            }
    }
    return true;
}

template <class K>
std::vector<int> betti_at(const AomotoComplex& c, const std::vector<K>& point) {
    int top = int(c.dims.size()) - 1;
    std::vector<int> ranks(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        Mat<K> m(c.mats[i].rows(), c.mats[i].cols());
        for (int r = 0; r < m.rows(); ++r)
            for (int col = 0; col < m.cols(); ++col) m(r, col) = c.mats[i](r, col).template eval<K>(point);
        ranks[i] = rank_field(m);
    }
    std::vector<int> b(top + 1, 0);
    for (int i = 0; i <= top; ++i) b[i] = c.dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
    return b;
}

template <class K>
bool resonance_membership(const AomotoComplex& c, int i, int k, const std::vector<K>& point) {
    if (k <= 0) return true;
    if (i < 0 || i >= int(c.dims.size())) return false;
    return betti_at(c, point)[i] >= k;
}

template std::vector<int> betti_at<Rat>(const AomotoComplex&, const std::vector<Rat>&);
template std::vector<int> betti_at<Cyclotomic>(const AomotoComplex&, const std::vector<Cyclotomic>&);
template bool resonance_membership<Rat>(const AomotoComplex&, int, int, const std::vector<Rat>&);
template bool resonance_membership<Cyclotomic>(const AomotoComplex&, int, int,
                                               const std::vector<Cyclotomic>&);

namespace {

// x = P t for an affine-linear polynomial entry; basis holds the columns of P
QPoly substitute_linear(const QPoly& p, const std::vector<std::vector<Rat>>& basis) {
    int d = int(basis.size());
    QPoly out(d);
    for (const auto& [e, coeff] : p.terms()) {
        int var = -1;
        long deg = 0;
        for (size_t j = 0; j < e.size(); ++j) {
            deg += e[j];
            if (e[j] != 0) var = int(j);
        }
        if (deg == 0) {
            out.add_term(Expo(d, 0), coeff);
        } else if (deg == 1) {
            for (int t = 0; t < d; ++t) {
                Rat c = coeff * basis[t][var];
                if (c != 0) {
                    Expo ex(d, 0);
                    ex[t] = 1;
                    out.add_term(ex, c);
                }
            }
        } else {
            throw std::logic_error("aomoto entry is not affine-linear");
        }
    }
    return out;
}

}  // namespace

std::vector<int> generic_betti_on_subspace(const AomotoComplex& c, const LinearSubspaceQ& l) {
    if (l.ambient != c.nvars) throw std::invalid_argument("subspace lives in the wrong space");
    int top = int(c.dims.size()) - 1;
    if (l.dim() == 0) return betti_at<Rat>(c, std::vector<Rat>(c.nvars, Rat(0)));
    std::vector<int> ranks(top + 1, 0);
    for (int i = 0; i <= top; ++i) {
        Mat<QPoly> m(c.mats[i].rows(), c.mats[i].cols(), QPoly(l.dim()));
        for (int r = 0; r < m.rows(); ++r)
            for (int col = 0; col < m.cols(); ++col)
                m(r, col) = substitute_linear(c.mats[i](r, col), l.basis);
        ranks[i] = generic_rank(m);
    }
    std::vector<int> b(top + 1, 0);
    for (int i = 0; i <= top; ++i) b[i] = c.dims[i] - ranks[i] - (i > 0 ? ranks[i - 1] : 0);
    return b;
}

SubspaceCertificate verify_subspace_in_resonance(const AomotoComplex& c, const LinearSubspaceQ& l,
                                                 int i, int k) {
    SubspaceCertificate cert;
    cert.generic_betti = generic_betti_on_subspace(c, l);
    bool in_range = i >= 0 && i < int(c.dims.size());
    cert.success = k <= 0 || (in_range && cert.generic_betti[i] >= k);
    if (cert.success) return cert;

    // find a rational point of L refuting membership (the generic point does)
    std::mt19937_64 rng(2024);
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<Rat> x(c.nvars, Rat(0));
        for (int t = 0; t < l.dim(); ++t) {
            Rat coef = attempt == 0 ? Rat(t == 0 ? 1 : 0) : random_rat(rng, 3 + attempt / 20, 4);
            for (int j = 0; j < c.nvars; ++j) x[j] += coef * l.basis[t][j];
        }
        if (!resonance_membership(c, i, k, x)) {
            cert.refutation_point = x;
            return cert;
        }
    }
    // subspace is the origin, or no refuting sample found: report the base point
    cert.refutation_point.assign(c.nvars, Rat(0));
    return cert;
}

std::vector<LinearSubspaceQ> probe_components(const AomotoComplex& c, int i, int k, int trials,
                                              std::uint64_t seed) {
    int m = c.nvars;
    std::vector<LinearSubspaceQ> found;

    auto contains = [](const LinearSubspaceQ& s, const std::vector<Rat>& p) {
        int d = s.dim();
        QMat stacked(d + 1, s.ambient);
        for (int r = 0; r < d; ++r)
            for (int j = 0; j < s.ambient; ++j) stacked(r, j) = s.basis[r][j];
        for (int j = 0; j < s.ambient; ++j) stacked(d, j) = p[j];
        return rank_field(stacked) == d;
    };

    // full space first: if it verifies, it is the single maximal component
    LinearSubspaceQ full{m, {}};
    for (int j = 0; j < m; ++j) {
        std::vector<Rat> e(m, Rat(0));
        e[j] = 1;
        full.basis.push_back(e);
    }
    if (m > 0 && verify_subspace_in_resonance(c, full, i, k).success) return {full};

    LinearSubspaceQ origin{m, {}};
    if (resonance_membership(c, i, k, std::vector<Rat>(m, Rat(0)))) found.push_back(origin);

    // random 2-plane slices; rational slopes of small height catch rational
    // intersection lines with linear components
    std::mt19937_64 rng(seed ? seed : 0x9e3779b9u);
    std::uniform_int_distribution<int> ent(-2, 2);
    std::vector<std::vector<Rat>> hits;
    const int height = 6;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<long> u(m), v(m);
        bool uz = true, vz = true;
        for (int j = 0; j < m; ++j) {
            u[j] = ent(rng);
            v[j] = ent(rng);
            uz = uz && u[j] == 0;
            vz = vz && v[j] == 0;
        }
        if (uz || vz) continue;
        for (int p = -height; p <= height; ++p)
            for (int q = 0; q <= height; ++q) {
                if (p == 0 && q == 0) continue;
                if (std::gcd(std::abs(p), q) != 1) continue;
                std::vector<Rat> w(m, Rat(0));
                bool zero = true;
                for (int j = 0; j < m; ++j) {
                    w[j] = Rat(p) * Rat(u[j]) + Rat(q) * Rat(v[j]);
                    zero = zero && w[j] == 0;
                }
                if (zero) continue;
                if (resonance_membership(c, i, k, w)) hits.push_back(w);
            }
    }

    for (const auto& p : hits) {
        bool covered = false;
        for (const auto& s : found)
            if (s.dim() > 0 && contains(s, p)) { covered = true; break; }
        if (covered) continue;
        bool merged = false;
        for (auto& s : found) {
            if (s.dim() == 0) continue;
            LinearSubspaceQ ext = s;
            ext.basis.push_back(p);
            if (verify_subspace_in_resonance(c, ext, i, k).success) {
                s = ext;
                merged = true;
                break;
            }
        }
        if (merged) continue;
        LinearSubspaceQ line{m, {p}};
        if (verify_subspace_in_resonance(c, line, i, k).success) found.push_back(line);
    }
    return found;
}

GradedAlgebra exterior_algebra(int n, const std::map<int, std::vector<Rat>>& d_of_gen) {
    GradedAlgebra a;
    std::vector<std::vector<std::vector<int>>> basis(n + 1);
    std::map<std::vector<int>, int> index_of;
    for (int k = 0; k <= n; ++k) {
        basis[k] = subsets_of_size(n, k);
        for (size_t idx = 0; idx < basis[k].size(); ++idx) index_of[basis[k][idx]] = int(idx);
        a.dims.push_back(int(basis[k].size()));
    }
    // products
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            for (size_t x = 0; x < basis[i].size(); ++x)
                for (size_t y = 0; y < basis[j].size(); ++y) {
                    auto [sign, merged] = wedge_sets(basis[i][x], basis[j][y]);
                    if (sign != 0)
                        a.set_mult(i, j, int(x), int(y), index_of[merged], Rat(sign));
                }
    // differential: d on generators extended by the Leibniz rule
    a.diff.assign(n, QMat());
    for (int i = 0; i < n; ++i) a.diff[i] = QMat(a.dims[i + 1], a.dims[i]);
    for (size_t gi = 0; gi < size_t(n); ++gi) {
        auto it = d_of_gen.find(int(gi));
        if (it == d_of_gen.end()) continue;
        for (int r = 0; r < a.dims[2]; ++r) a.diff[1](r, int(gi)) = it->second[r];
    }
    for (int deg = 2; deg < n; ++deg)
        for (size_t x = 0; x < basis[deg].size(); ++x) {
            const auto& s = basis[deg][x];
            // d(e_{s1..sk}) = sum_i (-1)^{i-1} e_{s minus s_i} /\ d(e_{s_i})
            for (size_t pos_i = 0; pos_i < s.size(); ++pos_i) {
                auto it = d_of_gen.find(s[pos_i]);
                if (it == d_of_gen.end()) continue;
                std::vector<int> rest = s;
                rest.erase(rest.begin() + pos_i);
                int sgn = (pos_i % 2) ? -1 : 1;
                for (int t2 = 0; t2 < a.dims[2]; ++t2) {
                    if (it->second[t2] == 0) continue;
                    auto [wsign, merged] = wedge_sets(rest, basis[2][t2]);
                    if (wsign == 0) continue;
                    a.diff[deg](index_of[merged], int(x)) += Rat(sgn * wsign) * it->second[t2];
                }
            }
        }
    return a;
}

GradedAlgebra heisenberg_algebra() {
    // Lambda(a,b,c), all degree 1; da = db = 0, dc = a /\ b
    std::map<int, std::vector<Rat>> d;
    d[2] = {Rat(1), Rat(0), Rat(0)};  // A^2 basis: ab, ac, bc
    GradedAlgebra a = exterior_algebra(3, d);
    a.names = {{"1"}, {"a", "b", "c"}, {"ab", "ac", "bc"}, {"abc"}};
    return a;
}

GradedAlgebra torus_algebra() {
    GradedAlgebra a = exterior_algebra(2);
    a.names = {{"1"}, {"a", "b"}, {"ab"}};
    return a;
}

GradedAlgebra pencil_os_algebra() {
    GradedAlgebra a;
    a.dims = {1, 3, 2};
    // A^2 basis: f1 = e1 e2, f2 = e1 e3; relation e2 e3 = f2 - f1
    auto set_pair = [&](int x, int y, Rat c1, Rat c2) {
        a.set_mult(1, 1, x, y, 0, c1);
        a.set_mult(1, 1, x, y, 1, c2);
        a.set_mult(1, 1, y, x, 0, -c1);
        a.set_mult(1, 1, y, x, 1, -c2);
    };
    set_pair(0, 1, Rat(1), Rat(0));
    set_pair(0, 2, Rat(0), Rat(1));
    set_pair(1, 2, Rat(-1), Rat(1));
    a.diff = {QMat(3, 1), QMat(2, 3)};
    a.names = {{"1"}, {"e1", "e2", "e3"}, {"e1e2", "e1e3"}};
    return a;
}

ValidationReport validate_dgmodule(const GradedAlgebra& a, const DGModule& m) {
    ValidationReport rep;
    int topm = m.top();
    if (topm < 0) {
        rep.fail("module has no degrees");
        return rep;
    }
    for (int i = 0; i < topm; ++i)
        if (m.diff[i].rows() != m.dim(i + 1) || m.diff[i].cols() != m.dim(i)) {
            rep.fail("module differential d^" + std::to_string(i) + " has wrong shape");
            return rep;
        }
    for (int i = 0; i + 1 < topm; ++i)
        for (int r = 0; r < m.dim(i + 2); ++r)
            for (int c = 0; c < m.dim(i); ++c) {
                Rat acc(0);
                for (int k = 0; k < m.dim(i + 1); ++k) acc += m.diff[i + 1](r, k) * m.diff[i](k, c);
                if (acc != 0) rep.fail("module d^2 != 0 at " + pos(i, c));
            }
    // associativity (a b) x = a (b x)
    for (int i = 1; i <= a.top(); ++i)
        for (int j = 1; j <= a.top() - i; ++j)
            for (int l = 0; i + j + l <= topm; ++l)
                for (int x = 0; x < a.dim(i); ++x)
                    for (int y = 0; y < a.dim(j); ++y)
                        for (int z = 0; z < m.dim(l); ++z)
                            for (int k = 0; k < m.dim(i + j + l); ++k) {
                                Rat lhs(0), rhs(0);
                                for (int q = 0; q < a.dim(i + j); ++q)
                                    lhs += a.mult_c(i, j, x, y, q) * m.action_c(i + j, l, q, z, k);
                                for (int q = 0; q < m.dim(j + l); ++q)
                                    rhs += m.action_c(j, l, y, z, q) * m.action_c(i, j + l, x, q, k);
                                if (lhs != rhs)
                                    rep.fail("module associativity fails at " + pos(i, x) + ", " +
                                             pos(j, y) + ", " + pos(l, z));
                            }
    // Leibniz d(a x) = (da) x + (-1)^|a| a dx
    for (int i = 1; i <= a.top(); ++i)
        for (int j = 0; i + j <= topm; ++j)
            for (int x = 0; x < a.dim(i); ++x)
                for (int y = 0; y < m.dim(j); ++y)
                    for (int k = 0; k < m.dim(i + j + 1); ++k) {
                        Rat lhs(0), rhs(0);
                        if (i + j < topm)
                            for (int q = 0; q < m.dim(i + j); ++q)
                                lhs += m.diff[i + j](k, q) * m.action_c(i, j, x, y, q);
                        if (i < a.top())
                            for (int q = 0; q < a.dim(i + 1); ++q)
                                rhs += a.diff[i](q, x) * m.action_c(i + 1, j, q, y, k);
                        if (j < topm) {
                            Rat sgn = (i % 2) ? Rat(-1) : Rat(1);
                            for (int q = 0; q < m.dim(j + 1); ++q)
                                rhs += sgn * m.diff[j](q, y) * m.action_c(i, j + 1, x, q, k);
                        }
                        if (lhs != rhs)
                            rep.fail("module Leibniz rule fails at " + pos(i, x) + " . " + pos(j, y));
                    }
    return rep;
}

AomotoComplex aomoto_module(const GradedAlgebra& a, const DGModule& mod) {
    FlatConnectionBasis fb = flat_connections(a);
    int m = fb.count();
    AomotoComplex c;
    c.nvars = m;
    c.dims = mod.dims;
    int top = mod.top();
    c.mats.resize(top + 1);
    for (int i = 0; i <= top; ++i) {
        Mat<QPoly> mi(mod.dim(i + 1), mod.dim(i), QPoly(m));
        for (int r = 0; r < mod.dim(i + 1); ++r)
            for (int col = 0; col < mod.dim(i); ++col) {
                QPoly e(m);
                if (i < top && mod.diff[i](r, col) != 0) e.add_term(Expo(m, 0), mod.diff[i](r, col));
                for (int j = 0; j < m; ++j) {
                    Rat coeff(0);
                    if (i + 1 <= top)
                        for (int g = 0; g < a.dim(1); ++g)
                            coeff += fb.vectors[j][g] * mod.action_c(1, i, g, col, r);
                    if (coeff != 0) {
                        Expo ex(m, 0);
                        ex[j] = 1;
                        e.add_term(ex, coeff);
                    }
                }
                mi(r, col) = e;
            }
        c.mats[i] = mi;
    }
    return c;
}

}  // namespace jumploci
