#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <set>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/torus.hpp"

using namespace jumploci;

namespace {

AffineSubspaceQ affine(int n, std::vector<Rat> base, std::vector<std::vector<Rat>> dirs) {
    AffineSubspaceQ v;
    v.n = n;
    v.base = std::move(base);
    v.directions = std::move(dirs);
    return v;
}

QPoly mono(int n, std::vector<int> e, Rat c) {
    Expo ex(e.begin(), e.end());
    return QPoly::monomial(n, ex, c);
}

Rat rnd_rat(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return rat(num(rng), den(rng));
}

// numeric evaluation of a Laurent polynomial at a point of (C*)^n
std::complex<double> eval_num(const QPoly& f, const std::vector<std::complex<double>>& z) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> t(c.get_d(), 0.0);
        for (size_t j = 0; j < z.size(); ++j) t *= std::pow(z[j], double(e[j]));
        acc += t;
    }
    return acc;
}

std::vector<std::complex<double>> exp_point(const AffineSubspaceQ& v, const std::vector<Rat>& s) {
    const double tau = 2.0 * 3.14159265358979323846;
    std::vector<std::complex<double>> z(v.n);
    for (int j = 0; j < v.n; ++j) {
        Rat zj = v.base[j];
        for (int i = 0; i < v.dim(); ++i) zj += s[i] * v.directions[i][j];
        z[j] = std::exp(std::complex<double>(0.0, tau * zj.get_d()));
    }
    return z;
}

}  // namespace

TEST_CASE("exp image of rational affine subspaces") {
    auto diag = exp_image(affine(2, {Rat(0), Rat(0)}, {{Rat(1), Rat(1)}}));
    CHECK(diag.torus.lattice == IntMat::from_rows({{1, 1}}));
    CHECK(diag.translate == std::vector<Rat>{Rat(0), Rat(0)});

    auto shifted = exp_image(affine(2, {rat(1, 3), Rat(0)}, {{Rat(0), Rat(1)}}));
    CHECK(shifted.torus.lattice == IntMat::from_rows({{0, 1}}));
    CHECK(shifted.translate == std::vector<Rat>{rat(1, 3), Rat(0)});

    auto sat = exp_image(affine(2, {Rat(0), Rat(0)}, {{Rat(2), Rat(4)}}));
    CHECK(sat.torus.lattice == IntMat::from_rows({{1, 2}}));
    // oracle: points of exp(span{(2,4)}) satisfy z2 = z1^2
    std::mt19937_64 rng(7);
    auto v24 = affine(2, {Rat(0), Rat(0)}, {{Rat(2), Rat(4)}});
    for (int s = 0; s < 20; ++s) {
        auto z = exp_point(v24, {rnd_rat(rng, 40)});
        CHECK(std::abs(z[1] - z[0] * z[0]) < 1e-9);
    }
}

TEST_CASE("exp image is independent of the presentation of V") {
    auto a = exp_image(affine(3, {rat(1, 4), Rat(0), Rat(0)},
                              {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(0), rat(1, 2)}}));
    // same set: base moved along V, directions rescaled and mixed
    auto b = exp_image(affine(3, {rat(5, 4), Rat(1), rat(3, 2)},
                              {{rat(-2, 3), rat(-2, 3), Rat(0)}, {Rat(3), Rat(3), Rat(5)}}));
    CHECK(a == b);
}

TEST_CASE("membership in translated subtori") {
    auto diag = make_translated_subtorus(2, IntMat::from_rows({{1, 1}}), {Rat(0), Rat(0)});
    CHECK(membership({rat(1, 2), rat(1, 2)}, diag));
    CHECK(!membership({rat(1, 2), Rat(0)}, diag));
    CHECK(membership(diag.translate, diag));

    // oracle for the negative case: exhaustive small-denominator search for
    // (1/2, 0) = a(1,1) mod Z^2
    bool found = false;
    for (long num = 0; num < 120 && !found; ++num)
        if (mod1(rat(num, 120)) == rat(1, 2) && mod1(rat(num, 120)) == Rat(0)) found = true;
    CHECK(!found);

    // random rational points of V map into exp_image(V)
    std::mt19937_64 rng(11);
    auto v = affine(3, {rat(1, 6), rat(2, 5), Rat(0)},
                    {{Rat(1), rat(1, 2), Rat(0)}, {Rat(0), rat(1, 3), Rat(1)}});
    auto t = exp_image(v);
    for (int s = 0; s < 50; ++s) {
        std::vector<Rat> p(3);
        Rat s1 = rnd_rat(rng, 12), s2 = rnd_rat(rng, 12);
        for (int j = 0; j < 3; ++j)
            p[j] = mod1(v.base[j] + s1 * v.directions[0][j] + s2 * v.directions[1][j]);
        CHECK(membership(p, t));
    }
}

TEST_CASE("containment of translated subtori") {
    auto diag = make_translated_subtorus(2, IntMat::from_rows({{1, 1}}), {Rat(0), Rat(0)});
    auto full = make_translated_subtorus(2, IntMat::identity(2), {Rat(0), Rat(0)});
    auto point = make_translated_subtorus(2, IntMat(0, 2), {rat(1, 3), Rat(0)});

    CHECK(containment(diag, diag));
    CHECK(containment(diag, full));
    CHECK(!containment(full, diag));
    CHECK(containment(point, full));
    CHECK(!containment(point, diag));
    auto line_through = make_translated_subtorus(2, IntMat::from_rows({{0, 1}}), {rat(1, 3), Rat(0)});
    CHECK(containment(point, line_through));

    // transitivity on randomized chains point < line < full
    std::mt19937_64 rng(5);
    for (int s = 0; s < 20; ++s) {
        std::uniform_int_distribution<long> d(-3, 3);
        long a = d(rng), b = d(rng);
        if (a == 0 && b == 0) a = 1;
        std::vector<Rat> v0 = {mod1(rnd_rat(rng, 8)), mod1(rnd_rat(rng, 8))};
        auto line = make_translated_subtorus(2, IntMat::from_rows({{a, b}}), v0);
        auto pt = make_translated_subtorus(2, IntMat(0, 2), v0);
        CHECK(containment(pt, line));
        CHECK(containment(line, full));
        CHECK(containment(pt, full));
    }
}

TEST_CASE("subtorus intersections and component counts") {
    auto s1 = make_subtorus(2, IntMat::from_rows({{1, 0}}));
    auto t1 = make_subtorus(2, IntMat::from_rows({{0, 1}}));
    auto r1 = intersection(s1, t1);
    CHECK(r1.identity_component.rank() == 0);
    CHECK(r1.component_count == 1);

    auto s2 = make_subtorus(2, IntMat::from_rows({{1, 1}}));
    auto t2 = make_subtorus(2, IntMat::from_rows({{1, -1}}));
    auto r2 = intersection(s2, t2);
    CHECK(r2.identity_component.rank() == 0);
    CHECK(r2.component_count == 2);

    auto r3 = intersection(s2, s2);
    CHECK(r3.identity_component == s2);
    CHECK(r3.component_count == 1);

    // brute-force oracle: count order-N torsion points on both subtori for
    // small lattices in n <= 3
    auto count_common = [](const Subtorus& a, const Subtorus& b, long N) {
        auto on = [&](const Subtorus& t, const std::vector<Rat>& w) {
            auto tt = make_translated_subtorus(t.n, t.lattice, std::vector<Rat>(t.n, Rat(0)));
            return membership(w, tt);
        };
        long cnt = 0;
        std::vector<long> idx(a.n, 0);
        while (true) {
            std::vector<Rat> w(a.n);
            for (int j = 0; j < a.n; ++j) w[j] = rat(idx[j], N);
            if (on(a, w) && on(b, w)) ++cnt;
            int j = 0;
            for (; j < a.n; ++j) {
                if (++idx[j] < N) break;
                idx[j] = 0;
            }
            if (j == a.n) break;
        }
        return cnt;
    };
    // intersection is finite here, so every common point is torsion of order
    // dividing a common N
    CHECK(count_common(s2, t2, 12) == 2);
    auto s3 = make_subtorus(3, IntMat::from_rows({{1, 1, 0}, {0, 0, 1}}));
    auto t3 = make_subtorus(3, IntMat::from_rows({{1, -1, 0}, {0, 0, 1}}));
    auto r4 = intersection(s3, t3);
    CHECK(r4.identity_component.lattice == IntMat::from_rows({{0, 0, 1}}));
    CHECK(r4.component_count == 2);
}

TEST_CASE("vanishing on exponential images, exactly") {
    auto v_diag = affine(2, {Rat(0), Rat(0)}, {{Rat(1), Rat(1)}});
    QPoly f1 = mono(2, {1, -1}, Rat(1)) + mono(2, {0, 0}, Rat(-1));
    CHECK(vanishes_on_exp_image(f1, v_diag).vanishes);

    QPoly f2 = mono(2, {1, 0}, Rat(1)) + mono(2, {0, 1}, Rat(1)) + mono(2, {0, 0}, Rat(-2));
    auto r2 = vanishes_on_exp_image(f2, v_diag);
    CHECK(!r2.vanishes);
    CHECK(!r2.witness_sum.empty());

    auto v_shift = affine(2, {rat(1, 2), Rat(0)}, {{Rat(1), Rat(1)}});
    QPoly f3 = mono(2, {1, 0}, Rat(1)) + mono(2, {0, 1}, Rat(1));
    CHECK(vanishes_on_exp_image(f3, v_shift).vanishes);

    // numeric oracle on all three
    std::mt19937_64 rng(3);
    auto agree = [&](const QPoly& f, const AffineSubspaceQ& v, bool expect_zero) {
        for (int s = 0; s < 1000; ++s) {
            auto z = exp_point(v, {rnd_rat(rng, 30)});
            double val = std::abs(eval_num(f, z));
            if (expect_zero)
                CHECK(val < 1e-8);
            else if (val > 1e-8)
                return;  // found a numeric witness
        }
        CHECK(expect_zero);
    };
    agree(f1, v_diag, true);
    agree(f2, v_diag, false);
    agree(f3, v_shift, true);
}

TEST_CASE("ax-lindemann style reports") {
    auto v_diag = affine(2, {Rat(0), Rat(0)}, {{Rat(1), Rat(1)}});
    LaurentZeroSet w_diag;
    w_diag.n = 2;
    w_diag.generators = {mono(2, {1, 0}, Rat(1)) + mono(2, {0, 1}, Rat(-1))};
    auto rep = ax_lindemann_report(v_diag, w_diag, 1);
    CHECK(rep.exp_image_in_zeroset);
    CHECK(rep.dims_match);
    CHECK(rep.generators_vanish_on_predicted);
    CHECK(rep.predicted.torus.lattice == IntMat::from_rows({{1, 1}}));
    CHECK(rep.user_asserted.size() == 2);

    auto v_third = affine(2, {rat(1, 3), Rat(0)}, {{Rat(0), Rat(1)}});
    LaurentZeroSet w_cube;
    w_cube.n = 2;
    w_cube.generators = {mono(2, {3, 0}, Rat(1)) + mono(2, {0, 0}, Rat(-1))};
    auto rep2 = ax_lindemann_report(v_third, w_cube, 1);
    CHECK(rep2.exp_image_in_zeroset);
    CHECK(rep2.generators_vanish_on_predicted);
    CHECK(rep2.predicted.translate == std::vector<Rat>{rat(1, 3), Rat(0)});
    CHECK(rep2.predicted.torus.lattice == IntMat::from_rows({{0, 1}}));

    // hypothesis failure carries a witness
    LaurentZeroSet w_bad;
    w_bad.n = 2;
    w_bad.generators = {w_diag.generators[0],
                        mono(2, {1, 0}, Rat(1)) + mono(2, {0, 0}, Rat(-1))};
    auto rep3 = ax_lindemann_report(v_diag, w_bad, 1);
    CHECK(!rep3.exp_image_in_zeroset);
    CHECK(rep3.failing_generator == 1);
    CHECK(!rep3.failure.vanishes);
}

TEST_CASE("canonicalization gives decidable equality") {
    IntMat l = IntMat::from_rows({{1, 1}});
    auto a = make_translated_subtorus(2, l, {rat(1, 4), Rat(0)});
    auto b = make_translated_subtorus(2, l, {rat(3, 4), rat(1, 2)});  // differs by (1/2)(1,1)
    auto c = make_translated_subtorus(2, l, {rat(1, 4), rat(1, 3)});
    CHECK(a == b);
    CHECK(!(a == c));

    // equivalence relation on random cosets: reflexive, symmetric via
    // representative shifts along lattice_Q + Z^n
    std::mt19937_64 rng(9);
    for (int s = 0; s < 30; ++s) {
        std::vector<Rat> v0 = {mod1(rnd_rat(rng, 10)), mod1(rnd_rat(rng, 10))};
        Rat shift = rnd_rat(rng, 6);
        std::vector<Rat> v1 = {v0[0] + shift + Rat(std::uniform_int_distribution<long>(-2, 2)(rng)),
                               v0[1] + shift};
        CHECK(make_translated_subtorus(2, l, v0) == make_translated_subtorus(2, l, v1));
    }
}

TEST_CASE("restriction to a torus parametrization") {
    auto t = make_translated_subtorus(2, IntMat::from_rows({{1, 1}}), {rat(1, 2), Rat(0)});
    QPoly f = mono(2, {1, 0}, Rat(1)) + mono(2, {0, 1}, Rat(1));
    // on (−s, s) the two monomials cancel
    CHECK(restrict_to_torus(f, t).is_zero());
    QPoly g = mono(2, {1, 0}, Rat(1)) + mono(2, {0, 1}, Rat(-1));
    CHECK(!restrict_to_torus(g, t).is_zero());
}
