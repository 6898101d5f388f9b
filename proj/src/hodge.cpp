#include "jumploci/hodge.hpp"

#include <sstream>

#include "jumploci/linalg.hpp"

namespace jumploci {

namespace {

using CRow = std::vector<Cyclotomic>;

Mat<Cyclotomic> mat_rows(const std::vector<CRow>& rows, int width) {
    Mat<Cyclotomic> m(int(rows.size()), width);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < width; ++j) m(int(i), j) = rows[i][j];
    return m;
}

std::vector<CRow> to_cyc(const std::vector<std::vector<Rat>>& rows) {
    std::vector<CRow> out;
    for (const auto& r : rows) {
        CRow c;
        for (const Rat& q : r) c.push_back(Cyclotomic(q));
        out.push_back(std::move(c));
    }
    return out;
}

int span_dim(const std::vector<CRow>& rows, int width) {
    return rows.empty() ? 0 : rank_field(mat_rows(rows, width));
}

// independent subset spanning the same space (Gaussian sweep)
std::vector<CRow> row_basis(const std::vector<CRow>& rows, int width) {
    std::vector<CRow> kept;
    for (const auto& r : rows) {
        auto trial = kept;
        trial.push_back(r);
        if (span_dim(trial, width) > int(kept.size())) kept.push_back(r);
    }
    return kept;
}

std::vector<CRow> conj_rows(const std::vector<CRow>& rows) {
    std::vector<CRow> out = rows;
    for (auto& r : out)
        for (auto& e : r) e = e.conj();
    return out;
}

// basis of span(a) cap span(b) inside K^width
std::vector<CRow> intersect_spans(const std::vector<CRow>& a, const std::vector<CRow>& b,
                                  int width) {
    if (a.empty() || b.empty()) return {};
    int na = int(a.size()), nb = int(b.size());
    Mat<Cyclotomic> m(width, na + nb);  // columns a_i^T and -b_j^T
    for (int j = 0; j < width; ++j) {
        for (int i = 0; i < na; ++i) m(j, i) = a[i][j];
        for (int i = 0; i < nb; ++i) m(j, na + i) = -b[i][j];
    }
    std::vector<CRow> out;
    for (const auto& xy : kernel_field(m)) {
        CRow v(width, Cyclotomic(Rat(0)));
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < width; ++j) v[j] += xy[i] * a[i][j];
        out.push_back(std::move(v));
    }
    return row_basis(out, width);
}

bool spans_equal(const std::vector<CRow>& a, const std::vector<CRow>& b, int width) {
    int da = span_dim(a, width), db = span_dim(b, width);
    if (da != db) return false;
    auto stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return span_dim(stacked, width) == da;
}

void check_shape(const OneHodgeStructure& h) {
    for (const auto& r : h.w_basis)
        if (int(r.size()) != h.rank) throw std::invalid_argument("W basis row width != rank");
    for (const auto& r : h.f_basis) {
        if (int(r.size()) != h.rank) throw std::invalid_argument("F basis row width != rank");
        for (const auto& e : r)
            if (4 % e.order() != 0)
                throw std::invalid_argument("F coefficients must lie in Q(i)");
    }
}

IntMat clear_denominators(const std::vector<std::vector<Rat>>& rows, int width) {
    IntMat m(int(rows.size()), width);
    for (size_t i = 0; i < rows.size(); ++i) {
        Int den(1);
        for (int j = 0; j < width; ++j) den = lcm(den, rows[i][j].get_den());
        for (int j = 0; j < width; ++j) {
            Rat s = rows[i][j] * Rat(den);
            m(int(i), j) = s.get_num();
        }
    }
    return m;
}

// coordinates of each row of `vecs` in the basis given by the rows of `l`
std::vector<CRow> coords_in(const std::vector<CRow>& vecs, const IntMat& l) {
    Mat<Cyclotomic> cols(l.cols(), l.rows());
    for (int i = 0; i < l.rows(); ++i)
        for (int j = 0; j < l.cols(); ++j) cols(j, i) = Cyclotomic(Rat(l(i, j)));
    std::vector<CRow> out;
    for (const auto& v : vecs) {
        auto sol = solve_field(cols, v);
        if (!sol) throw std::logic_error("vector not in sublattice span");
        out.push_back(*sol);
    }
    return out;
}

std::vector<std::vector<Rat>> to_rat(const std::vector<CRow>& rows) {
    std::vector<std::vector<Rat>> out;
    for (const auto& r : rows) {
        std::vector<Rat> q;
        for (const auto& e : r) {
            if (!e.is_rational()) throw std::logic_error("expected rational entry");
            q.push_back(e.rational_part());
        }
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

ValidationReport validate_1hs(const OneHodgeStructure& h) {
    check_shape(h);
    ValidationReport rep;
    auto w = to_cyc(h.w_basis);
    const auto& f = h.f_basis;
    if (span_dim(w, h.rank) != int(w.size()))
        throw std::invalid_argument("W basis rows are dependent");
    if (span_dim(f, h.rank) != int(f.size()))
        throw std::invalid_argument("F basis rows are dependent");

    int dw = int(w.size());
    auto fbar = conj_rows(f);
    auto wf = intersect_spans(w, f, h.rank);
    auto wfbar = intersect_spans(w, fbar, h.rank);
    int a = int(wf.size()), b = int(wfbar.size());
    auto sum = wf;
    sum.insert(sum.end(), wfbar.begin(), wfbar.end());
    int dsum = span_dim(sum, h.rank);
    if (a + b != dw || dsum != dw) {
        std::ostringstream os;
        os << "W_C is not the direct sum of W_C cap F and W_C cap conj(F): "
           << "dim W = " << dw << ", dims " << a << " + " << b << ", span " << dsum;
        rep.fail(os.str());
    }
    auto total = w;
    total.insert(total.end(), f.begin(), f.end());
    if (span_dim(total, h.rank) != h.rank)
        rep.fail("Lambda_C != W_C + F");
    return rep;
}

HodgeNumbers hodge_numbers(const OneHodgeStructure& h) {
    if (!validate_1hs(h).valid) throw std::invalid_argument("invalid 1-Hodge structure");
    auto w = to_cyc(h.w_basis);
    HodgeNumbers n;
    n.h10 = int(intersect_spans(w, h.f_basis, h.rank).size());
    n.h01 = int(intersect_spans(w, conj_rows(h.f_basis), h.rank).size());
    n.h11 = h.rank - int(w.size());
    return n;
}

IntMat lambda_zero(const OneHodgeStructure& h) {
    int r = h.rank;
    if (h.w_basis.empty()) return IntMat(0, r);
    Mat<Rat> wm(int(h.w_basis.size()), r);
    for (size_t i = 0; i < h.w_basis.size(); ++i)
        for (int j = 0; j < r; ++j) wm(int(i), j) = h.w_basis[i][j];
    auto ann = kernel_field(wm);  // annihilator of W under the dot pairing
    if (ann.empty()) return IntMat::identity(r);
    return right_kernel(clear_denominators(ann, r));
}

SubHSResult sub_hs(const OneHodgeStructure& h, const IntMat& sublattice) {
    SubHSResult res;
    if (sublattice.rows() > 0 && sublattice.cols() != h.rank)
        throw std::invalid_argument("sublattice width != rank");
    IntMat l = hnf_rows(sublattice);
    if (!(saturate_lattice(l) == l)) {
        res.reason = "Lambda/Lambda' has torsion";
        return res;
    }
    int d = l.rows();
    std::vector<CRow> lq;
    for (int i = 0; i < d; ++i) {
        CRow row(h.rank, Cyclotomic(Rat(0)));
        for (int j = 0; j < h.rank; ++j) row[j] = Cyclotomic(Rat(l(i, j)));
        lq.push_back(std::move(row));
    }
    auto wsub = intersect_spans(to_cyc(h.w_basis), lq, h.rank);
    auto fsub = intersect_spans(h.f_basis, lq, h.rank);

    OneHodgeStructure s;
    s.rank = d;
    s.w_basis = to_rat(coords_in(wsub, l));
    s.f_basis = coords_in(fsub, l);
    auto rep = validate_1hs(s);
    if (!rep.valid) {
        res.reason = "induced data is not a 1-Hodge structure: " + rep.violations.front();
        return res;
    }
    res.accepted = true;
    res.witness.sublattice = l;
    res.witness.structure = std::move(s);
    return res;
}

namespace {

// lattice-coordinate rows of a witness structure mapped back to the ambient
std::vector<CRow> ambient_rows(const std::vector<CRow>& coords, const IntMat& l, int r) {
    std::vector<CRow> out;
    for (const auto& c : coords) {
        CRow v(r, Cyclotomic(Rat(0)));
        for (int i = 0; i < l.rows(); ++i)
            for (int j = 0; j < r; ++j) v[j] += c[i] * Cyclotomic(Rat(l(i, j)));
        out.push_back(std::move(v));
    }
    return out;
}

bool witness_matches(const SubHSResult& derived, const SubHSWitness& given, int r) {
    if (!(derived.witness.sublattice == hnf_rows(given.sublattice))) return false;
    const IntMat& l = derived.witness.sublattice;
    auto dw = ambient_rows(to_cyc(derived.witness.structure.w_basis), l, r);
    auto gw = ambient_rows(to_cyc(given.structure.w_basis), l, r);
    auto df = ambient_rows(derived.witness.structure.f_basis, l, r);
    auto gf = ambient_rows(given.structure.f_basis, l, r);
    return spans_equal(dw, gw, r) && spans_equal(df, gf, r);
}

}  // namespace

OneHodgeStructure quotient_hs(const OneHodgeStructure& h, const SubHSWitness& witness) {
    SubHSResult derived = sub_hs(h, witness.sublattice);
    if (!derived.accepted || !witness_matches(derived, witness, h.rank))
        throw std::invalid_argument("witness does not validate against the structure");
    const IntMat& l = derived.witness.sublattice;
    int d = l.rows(), r = h.rank;
    if (d == 0) return h;
    OneHodgeStructure q;
    q.rank = r - d;
    if (d == r) return q;
    SnfResult s = smith_normal_form(l);
    // quotient coordinates of x are the last r - d entries of x * V
    auto project = [&](const std::vector<CRow>& rows) {
        std::vector<CRow> out;
        for (const auto& x : rows) {
            CRow y(r - d, Cyclotomic(Rat(0)));
            for (int j = d; j < r; ++j)
                for (int i = 0; i < r; ++i) y[j - d] += x[i] * Cyclotomic(Rat(s.v(i, j)));
            out.push_back(std::move(y));
        }
        return row_basis(out, r - d);
    };
    q.w_basis = to_rat(project(to_cyc(h.w_basis)));
    q.f_basis = project(h.f_basis);
    return q;
}

BdrReport verify_bdr_certificate(const OneHodgeStructure& h, const BdrCertificate& cert) {
    BdrReport rep;
    rep.all_certified = true;
    for (size_t p = 0; p < cert.pieces.size(); ++p) {
        const BdrPiece& piece = cert.pieces[p];
        if (piece.torus.torus.n != h.rank)
            throw std::invalid_argument("piece ambient rank != structure rank");
        std::string tag = "piece " + std::to_string(p) + ": ";
        SubHSResult derived = sub_hs(h, piece.witness.sublattice);
        bool ok = false;
        if (!derived.accepted) {
            tag += derived.reason;
        } else if (!(piece.torus.torus.lattice == derived.witness.sublattice)) {
            tag += "subtorus lattice differs from the witness sublattice";
        } else if (!witness_matches(derived, piece.witness, h.rank)) {
            tag += "supplied witness spans differ from the derived sub structure";
        } else {
            ok = true;
            tag += "certified";
        }
        rep.certified.push_back(ok);
        rep.detail.push_back(tag);
        if (!ok) rep.all_certified = false;
    }
    return rep;
}

SesReport ses_bookkeeping(const OneHodgeStructure& h) {
    HodgeNumbers n = hodge_numbers(h);
    IntMat l0 = lambda_zero(h);
    int rank0 = l0.rows();
    int dw = int(h.w_basis.size());
    SesReport rep;
    rep.exact = true;
    auto line = [&](const std::string& what, long lhs, long rhs) {
        std::ostringstream os;
        os << what << ": " << lhs << (lhs == rhs ? " = " : " != ") << rhs;
        rep.lines.push_back(os.str());
        if (lhs != rhs) rep.exact = false;
    };
    line("rank Lambda_0 = dim W", rank0, dw);
    line("dim W + h11 = rank", dw + n.h11, h.rank);
    int free_quot = h.rank;
    if (rank0 > 0) {
        SnfResult s = smith_normal_form(l0);
        int nonzero = 0;
        for (int i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
            if (s.d(i, i) != 0) ++nonzero;
        free_quot = h.rank - nonzero;
    }
    line("rank Lambda_0 + rank Lambda/Lambda_0 = rank", rank0 + free_quot, h.rank);
    return rep;
}

OneHodgeStructure elliptic_block() {
    OneHodgeStructure h;
    h.rank = 2;
    h.w_basis = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    h.f_basis = {{Cyclotomic(Rat(1)), Cyclotomic::root(4, 1)}};
    return h;
}

OneHodgeStructure pure11_block() {
    OneHodgeStructure h;
    h.rank = 1;
    h.f_basis = {{Cyclotomic(Rat(1))}};
    return h;
}

OneHodgeStructure direct_sum(const OneHodgeStructure& a, const OneHodgeStructure& b) {
    OneHodgeStructure h;
    h.rank = a.rank + b.rank;
    for (const auto& r : a.w_basis) {
        std::vector<Rat> row(h.rank, Rat(0));
        for (int j = 0; j < a.rank; ++j) row[j] = r[j];
        h.w_basis.push_back(std::move(row));
    }
    for (const auto& r : b.w_basis) {
        std::vector<Rat> row(h.rank, Rat(0));
        for (int j = 0; j < b.rank; ++j) row[a.rank + j] = r[j];
        h.w_basis.push_back(std::move(row));
    }
    for (const auto& r : a.f_basis) {
        CRow row(h.rank, Cyclotomic(Rat(0)));
        for (int j = 0; j < a.rank; ++j) row[j] = r[j];
        h.f_basis.push_back(std::move(row));
    }
    for (const auto& r : b.f_basis) {
        CRow row(h.rank, Cyclotomic(Rat(0)));
        for (int j = 0; j < b.rank; ++j) row[a.rank + j] = r[j];
        h.f_basis.push_back(std::move(row));
    }
    return h;
}

OneHodgeStructure base_change(const OneHodgeStructure& h, const IntMat& u) {
    Int det = int_det(u);
    if (!(det == 1 || det == -1)) throw std::invalid_argument("base change must be unimodular");
    OneHodgeStructure out;
    out.rank = h.rank;
    for (const auto& r : h.w_basis) {
        std::vector<Rat> row(h.rank, Rat(0));
        for (int j = 0; j < h.rank; ++j)
            for (int i = 0; i < h.rank; ++i) row[j] += r[i] * Rat(u(i, j));
        out.w_basis.push_back(std::move(row));
    }
    for (const auto& r : h.f_basis) {
        CRow row(h.rank, Cyclotomic(Rat(0)));
        for (int j = 0; j < h.rank; ++j)
            for (int i = 0; i < h.rank; ++i) row[j] += r[i] * Cyclotomic(Rat(u(i, j)));
        out.f_basis.push_back(std::move(row));
    }
    return out;
}

}  // namespace jumploci
