#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jumploci/twisted.hpp"

using namespace jumploci;

namespace {

Character random_torsion(int n, std::mt19937_64& rng, long max_order = 12) {
    // one common denominator keeps the cyclotomic degree small
    long d = std::uniform_int_distribution<long>(1, max_order)(rng);
    std::vector<Rat> q(n);
    for (int j = 0; j < n; ++j) q[j] = rat(std::uniform_int_distribution<long>(0, d - 1)(rng), d);
    return Character::torsion_char(q);
}

}  // namespace

TEST_CASE("fox complexes of the standard presentations validate") {
    auto wedge = wedge_two_circles();
    CHECK(wedge.ranks == std::vector<int>{1, 2});
    CHECK(validate_complex(wedge).valid);
    // boundary entries t_j - 1
    auto t1 = QPoly::monomial(2, {1, 0}, Rat(1)) - QPoly::constant(2, Rat(1));
    CHECK(wedge.boundaries[0](0, 0) == t1);

    auto torus = two_torus_complex();
    CHECK(torus.ranks == std::vector<int>{1, 2, 1});
    CHECK(validate_complex(torus).valid);

    auto pencil = presentation_to_complex(pencil_presentation());
    CHECK(pencil.n == 3);
    CHECK(pencil.ranks == std::vector<int>{1, 3, 2});
    CHECK(validate_complex(pencil).valid);

    // a flipped sign breaks dd = 0
    auto broken = torus;
    broken.boundaries[1](0, 0) = -broken.boundaries[1](0, 0);
    CHECK(!validate_complex(broken).valid);
}

TEST_CASE("user-supplied abelianization maps are checked") {
    Presentation p;
    p.ngens = 2;
    p.relators = {{1, 2, -1, -2}};
    p.abelianization = IntMat::from_rows({{2, 0}, {0, 1}});
    CHECK_THROWS_AS(presentation_to_complex(p), std::invalid_argument);
    p.abelianization = IntMat::from_rows({{1, 0}, {0, 1}});
    CHECK(validate_complex(presentation_to_complex(p)).valid);
}

TEST_CASE("twisted betti numbers on the pinned examples") {
    auto wedge = wedge_two_circles();
    auto at_one = twisted_betti(wedge, Character::torsion_char({Rat(0), Rat(0)}));
    CHECK(at_one == std::vector<int>{1, 2});
    auto at_z3 = twisted_betti(wedge, Character::torsion_char({rat(1, 3), Rat(0)}));
    CHECK(at_z3 == std::vector<int>{0, 1});

    auto torus = two_torus_complex();
    CHECK(twisted_betti(torus, Character::torsion_char({Rat(0), Rat(0)})) ==
          std::vector<int>{1, 2, 1});
    std::mt19937_64 rng(8);
    for (int s = 0; s < 25; ++s) {
        Character rho = random_torsion(2, rng);
        bool trivial = rho.q[0] == 0 && rho.q[1] == 0;
        if (!trivial)
            CHECK(twisted_betti(torus, rho) == std::vector<int>{0, 0, 0});
    }
}

TEST_CASE("characteristic variety membership of the wedge") {
    auto wedge = wedge_two_circles();
    CHECK(charvar_membership(wedge, 1, 2, Character::torsion_char({Rat(0), Rat(0)})));
    for (const Character& rho : torsion_sweep(2, 12)) {
        bool trivial = rho.q[0] == 0 && rho.q[1] == 0;
        CHECK(charvar_membership(wedge, 1, 1, rho));
        CHECK(charvar_membership(wedge, 1, 2, rho) == trivial);
        CHECK(charvar_membership(wedge, 0, 1, rho) == trivial);  // H_0 law
        CHECK(charvar_membership(wedge, 1, 0, rho));
    }
    std::mt19937_64 rng(21);
    for (int s = 0; s < 50; ++s) CHECK(charvar_membership(wedge, 1, 1, random_torsion(2, rng, 60)));
}

TEST_CASE("euler characteristic is constant across characters") {
    std::mt19937_64 rng(4);
    for (const auto& c : {wedge_two_circles(), two_torus_complex(),
                          presentation_to_complex(pencil_presentation())}) {
        long chi_ranks = 0;
        for (int i = 0; i <= c.top(); ++i) chi_ranks += (i % 2 ? -1 : 1) * c.ranks[i];
        for (int s = 0; s < 20; ++s) {
            auto b = twisted_betti(c, random_torsion(c.n, rng));
            long chi = 0;
            for (int i = 0; i <= c.top(); ++i) chi += (i % 2 ? -1 : 1) * b[i];
            CHECK(chi == chi_ranks);
        }
    }
}

TEST_CASE("conjugation symmetry of twisted betti numbers") {
    std::mt19937_64 rng(14);
    auto pencil = presentation_to_complex(pencil_presentation());
    for (int s = 0; s < 15; ++s) {
        Character rho = random_torsion(3, rng);
        CHECK(twisted_betti(pencil, rho) == twisted_betti(pencil, rho.inverse()));
    }
}

TEST_CASE("torsion and numeric evaluations agree") {
    std::mt19937_64 rng(6);
    for (const auto& c : {wedge_two_circles(), two_torus_complex(),
                          presentation_to_complex(pencil_presentation())}) {
        for (int s = 0; s < 10; ++s) {
            Character rho = random_torsion(c.n, rng);
            std::vector<std::complex<double>> z;
            for (const Rat& q : rho.q) z.push_back(Cyclotomic::unit_exp(q).to_complex());
            CHECK(twisted_betti(c, rho) == twisted_betti(c, Character::numeric_char(z)));
        }
    }
}

TEST_CASE("torus certificates in characteristic varieties") {
    auto wedge = wedge_two_circles();
    auto full2 = make_translated_subtorus(2, IntMat::identity(2), {Rat(0), Rat(0)});
    auto cert = verify_torus_in_charvar(wedge, full2, 1, 1);
    CHECK(cert.success);
    CHECK(cert.exact);

    auto cert12 = verify_torus_in_charvar(wedge, full2, 1, 2);
    CHECK(!cert12.success);
    REQUIRE(!cert12.refutation.empty());
    CHECK(!(cert12.refutation[0] == 0 && cert12.refutation[1] == 0));
    CHECK(!charvar_membership(wedge, 1, 2, Character::torsion_char(cert12.refutation)));

    auto torus = two_torus_complex();
    auto certt = verify_torus_in_charvar(torus, full2, 1, 1);
    CHECK(!certt.success);
    CHECK(!certt.refutation.empty());

    auto pencil = presentation_to_complex(pencil_presentation());
    IntMat dir = right_kernel(IntMat::from_rows({{1, 1, 1}}).transpose());
    // rows orthogonal... direction lattice = kernel of the exponent (1,1,1)
    auto sub = make_translated_subtorus(3, right_kernel(IntMat::from_rows({{1, 1, 1}})),
                                        {Rat(0), Rat(0), Rat(0)});
    REQUIRE(sub.torus.rank() == 2);
    auto certp = verify_torus_in_charvar(pencil, sub, 1, 1);
    CHECK(certp.success);

    // certificate soundness: random torsion characters on the subtorus are members,
    // and characters off it are not
    std::mt19937_64 rng(33);
    int off_checked = 0;
    for (int s = 0; s < 50; ++s) {
        auto on_q = sample_torsion_on(sub, rng);
        CHECK(charvar_membership(pencil, 1, 1, Character::torsion_char(on_q)));
        Character rho = random_torsion(3, rng);
        if (!membership(rho.q, sub) &&
            !(rho.q[0] == 0 && rho.q[1] == 0 && rho.q[2] == 0)) {
            CHECK(!charvar_membership(pencil, 1, 1, rho));
            ++off_checked;
        }
    }
    CHECK(off_checked > 10);
}

TEST_CASE("numeric translates only give numeric-only answers") {
    auto wedge = wedge_two_circles();
    TranslatedSubtorus t;
    t.torus = make_subtorus(2, IntMat::identity(2));
    t.torsion = false;
    t.numeric_translate = {{1.0, 0.0}, {1.0, 0.0}};
    auto cert = verify_torus_in_charvar(wedge, t, 1, 1);
    CHECK(!cert.exact);
    CHECK(cert.success);
}

TEST_CASE("dualize transposes and inverts") {
    auto torus = two_torus_complex();
    auto d = dualize(torus);
    CHECK(d.ranks == std::vector<int>{1, 2, 1});
    CHECK(validate_complex(d).valid);
    std::mt19937_64 rng(2);
    for (int s = 0; s < 10; ++s) {
        Character rho = random_torsion(2, rng);
        auto bd = twisted_betti(d, rho.inverse());
        auto b = twisted_betti(torus, rho);
        std::reverse(b.begin(), b.end());
        CHECK(bd == b);
    }
}

TEST_CASE("exp comparison near the origin") {
    auto rep1 = compare_exp(torus_algebra(), two_torus_complex(), 1, 1, 10, 6, 5);
    CHECK(rep1.samples > 0);
    CHECK(rep1.all_agree());

    auto rep2 = compare_exp(pencil_os_algebra(), presentation_to_complex(pencil_presentation()),
                            1, 1, 10, 6, 5);
    CHECK(rep2.all_agree());

    CHECK_THROWS_AS(compare_exp(torus_algebra(), presentation_to_complex(pencil_presentation()),
                                1, 1, 3, 4),
                    std::invalid_argument);
}
