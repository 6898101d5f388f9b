// Acceptance checks: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses its own oracle.
#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <random>

#include "jumploci/hodge.hpp"
#include "jumploci/twisted.hpp"
#include "jumploci/workspace.hpp"

using namespace jumploci;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, double seconds) {
    std::cout << (ok ? "[pass] " : "[FAIL] ") << "criterion " << n << ": " << what << "  ("
              << seconds << "s)\n";
    if (!ok) ++failures;
}

template <class F>
void criterion(int n, const std::string& what, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::cout << "  exception: " << e.what() << "\n";
    }
    report(n, what, ok, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

Rat rnd_rat(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    return rat(num(rng), den(rng));
}

std::vector<Rat> rnd_torsion(int n, std::mt19937_64& rng, long max_order = 12) {
    std::vector<Rat> q(n);
    for (int j = 0; j < n; ++j) {
        long d = std::uniform_int_distribution<long>(1, max_order)(rng);
        q[j] = rat(std::uniform_int_distribution<long>(0, d - 1)(rng), d);
    }
    return q;
}

AffineSubspaceQ rnd_affine(std::mt19937_64& rng) {
    AffineSubspaceQ v;
    v.n = std::uniform_int_distribution<int>(1, 4)(rng);
    int d = std::uniform_int_distribution<int>(1, std::min(3, v.n))(rng);
    for (int j = 0; j < v.n; ++j) v.base.push_back(rnd_rat(rng, 12));
    while (int(v.directions.size()) < d) {
        std::vector<Rat> dir(v.n);
        for (int j = 0; j < v.n; ++j) dir[j] = rnd_rat(rng, 12);
        v.directions.push_back(dir);
        Mat<Rat> m(int(v.directions.size()), v.n);
        for (size_t i = 0; i < v.directions.size(); ++i)
            for (int j = 0; j < v.n; ++j) m(int(i), j) = v.directions[i][j];
        if (rank_field(m) < int(v.directions.size())) v.directions.pop_back();
    }
    return v;
}

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

IntMat rnd_unimodular(int n, std::mt19937_64& rng) {
    IntMat u = IntMat::identity(n);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<long> coeff(-2, 2);
    for (int step = 0; step < 3 * n; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        long c = coeff(rng);
        for (int k = 0; k < n; ++k) u(i, k) += c * u(j, k);
    }
    return u;
}

}  // namespace

int main() {
    criterion(1, "Heisenberg model has R^1_1 = {0}", [] {
        auto ac = aomoto(heisenberg_algebra());
        std::vector<Rat> origin(ac.nvars, Rat(0));
        if (betti_at(ac, origin)[1] != 2) return false;
        std::mt19937_64 rng(101);
        for (int s = 0; s < 50; ++s) {
            std::vector<Rat> p(ac.nvars);
            bool zero = true;
            for (auto& x : p) {
                x = rnd_rat(rng, 9);
                if (x != 0) zero = false;
            }
            if (zero) p[0] = 1;
            if (betti_at(ac, p)[1] != 0) return false;
        }
        auto comps = probe_components(ac, 1, 1, 40);
        return comps.size() == 1 && comps[0].dim() == 0;
    });

    criterion(2, "wedge of circles: Sigma^1_1 = full torus, Sigma^1_2 = {1}", [] {
        auto c = wedge_two_circles();
        for (const auto& rho : torsion_sweep(2, 12)) {
            bool trivial = rho.q[0] == 0 && rho.q[1] == 0;
            if (!charvar_membership(c, 1, 1, rho)) return false;
            if (charvar_membership(c, 1, 2, rho) != trivial) return false;
        }
        std::mt19937_64 rng(103);
        for (int s = 0; s < 50; ++s)
            if (!charvar_membership(c, 1, 1, Character::torsion_char(rnd_torsion(2, rng)))) return false;
        auto full = make_translated_subtorus(2, IntMat::identity(2), {Rat(0), Rat(0)});
        auto ok = verify_torus_in_charvar(c, full, 1, 1);
        auto bad = verify_torus_in_charvar(c, full, 1, 2);
        bool witness_nontrivial =
            !bad.refutation.empty() && !(bad.refutation[0] == 0 && bad.refutation[1] == 0);
        return ok.success && ok.exact && !bad.success && witness_nontrivial;
    });

    criterion(3, "pencil of three lines: resonance plane and its exponential", [] {
        auto ac = aomoto(pencil_os_algebra());
        LinearSubspaceQ plane{3, {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}}};
        auto rcert = verify_subspace_in_resonance(ac, plane, 1, 1);
        if (!rcert.success) return false;

        AffineSubspaceQ v;
        v.n = 3;
        v.base = {Rat(0), Rat(0), Rat(0)};
        v.directions = plane.basis;
        auto sub = exp_image(v);
        if (!(sub.torus.lattice == right_kernel(IntMat::from_rows({{1, 1, 1}})))) return false;

        auto c = presentation_to_complex(pencil_presentation());
        auto tcert = verify_torus_in_charvar(c, sub, 1, 1);
        if (!tcert.success || !tcert.exact) return false;

        std::mt19937_64 rng(107);
        int refuted = 0;
        while (refuted < 50) {
            auto q = rnd_torsion(3, rng);
            if (membership(q, sub) || (q[0] == 0 && q[1] == 0 && q[2] == 0)) continue;
            if (charvar_membership(c, 1, 1, Character::torsion_char(q))) return false;
            ++refuted;
        }
        return true;
    });

    criterion(4, "exponential images: canonical forms, membership, vanishing oracle", [] {
        std::mt19937_64 rng(109);
        for (int s = 0; s < 200; ++s) {
            auto v = rnd_affine(rng);
            auto t = exp_image(v);
            // re-present: move the base along V, mix the directions invertibly
            AffineSubspaceQ w = v;
            for (int i = 0; i < v.dim(); ++i) {
                Rat c = rnd_rat(rng, 6);
                for (int j = 0; j < v.n; ++j) w.base[j] += c * v.directions[i][j];
            }
            for (int rep = 0; rep < 4; ++rep) {
                int i = std::uniform_int_distribution<int>(0, v.dim() - 1)(rng);
                int j = std::uniform_int_distribution<int>(0, v.dim() - 1)(rng);
                Rat c = rnd_rat(rng, 4);
                if (i == j) c = (c == 0) ? Rat(2) : c;  // keep the basis invertible: scale
                for (int col = 0; col < v.n; ++col)
                    if (i == j)
                        w.directions[i][col] *= c;
                    else
                        w.directions[i][col] += c * v.directions[j][col];
            }
            Mat<Rat> m(v.dim(), v.n);
            for (int i = 0; i < v.dim(); ++i)
                for (int j = 0; j < v.n; ++j) m(i, j) = w.directions[i][j];
            if (rank_field(m) < v.dim()) continue;  // degenerate mix, skip
            if (!(exp_image(w) == t)) return false;
            for (int p = 0; p < 50; ++p) {
                std::vector<Rat> pt(v.n);
                std::vector<Rat> coeff(v.dim());
                for (auto& c : coeff) c = rnd_rat(rng, 12);
                for (int j = 0; j < v.n; ++j) {
                    pt[j] = v.base[j];
                    for (int i = 0; i < v.dim(); ++i) pt[j] += coeff[i] * v.directions[i][j];
                    pt[j] = mod1(pt[j]);
                }
                if (!membership(pt, t)) return false;
            }
        }
        // vanishing vs numeric sampling on random (f, V) pairs
        for (int s = 0; s < 100; ++s) {
            auto v = rnd_affine(rng);
            QPoly f(v.n);
            int terms = std::uniform_int_distribution<int>(1, 5)(rng);
            for (int t = 0; t < terms; ++t) {
                Expo e(v.n, 0);
                for (int j = 0; j < v.n; ++j) e[j] = std::uniform_int_distribution<int>(-3, 3)(rng);
                f += QPoly::monomial(v.n, e, rnd_rat(rng, 5));
            }
            if (f.is_zero()) continue;
            bool vanishes = vanishes_on_exp_image(f, v).vanishes;
            double worst = 0;
            for (int p = 0; p < 1000; ++p) {
                std::vector<Rat> coeff(v.dim());
                for (auto& c : coeff) c = rnd_rat(rng, 30);
                worst = std::max(worst, std::abs(eval_num(f, exp_point(v, coeff))));
            }
            if (vanishes && worst > 1e-8) return false;
            if (!vanishes && worst < 1e-8) return false;
        }
        return true;
    });

    criterion(5, "integer lattice suite: SNF contract and intersection counts", [] {
        std::mt19937_64 rng(113);
        for (int s = 0; s < 500; ++s) {
            int r = std::uniform_int_distribution<int>(1, 6)(rng);
            int c = std::uniform_int_distribution<int>(1, 6)(rng);
            IntMat a(r, c);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j)
                    a(i, j) = std::uniform_int_distribution<long>(-20, 20)(rng);
            auto snf = smith_normal_form(a);
            if (!(snf.u * a * snf.v == snf.d)) return false;
            Int du = int_det(snf.u), dv = int_det(snf.v);
            if (!((du == 1 || du == -1) && (dv == 1 || dv == -1))) return false;
            Int prev(0);
            for (int i = 0; i < std::min(r, c); ++i) {
                Int cur = snf.d(i, i);
                if (cur < 0) return false;
                if (prev != 0 && cur != 0 && cur % prev != 0) return false;
                if (prev == 0 && i > 0 && cur != 0) return false;
                prev = cur;
            }
        }
        // finite intersections vs brute-force torsion enumeration
        int checked = 0;
        while (checked < 25) {
            int n = std::uniform_int_distribution<int>(2, 3)(rng);
            auto rnd_lat = [&](int rows) {
                IntMat m(rows, n);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < n; ++j)
                        m(i, j) = std::uniform_int_distribution<long>(-3, 3)(rng);
                return m;
            };
            auto s1 = make_subtorus(n, rnd_lat(std::uniform_int_distribution<int>(1, n - 1)(rng)));
            auto s2 = make_subtorus(n, rnd_lat(std::uniform_int_distribution<int>(1, n - 1)(rng)));
            if (s1.rank() == 0 || s2.rank() == 0) continue;
            auto res = intersection(s1, s2);
            if (res.identity_component.rank() != 0) continue;
            if (res.component_count > 36) continue;  // keep the enumeration small
            long k = res.component_count.get_si();
            auto t1 = make_translated_subtorus(n, s1.lattice, std::vector<Rat>(n, Rat(0)));
            auto t2 = make_translated_subtorus(n, s2.lattice, std::vector<Rat>(n, Rat(0)));
            long count = 0;
            std::vector<long> idx(n, 0);
            while (true) {
                std::vector<Rat> w(n);
                for (int j = 0; j < n; ++j) w[j] = rat(idx[j], k);
                if (membership(w, t1) && membership(w, t2)) ++count;
                int j = 0;
                for (; j < n; ++j) {
                    if (++idx[j] < k) break;
                    idx[j] = 0;
                }
                if (j == n) break;
            }
            if (count != k) return false;
            ++checked;
        }
        return true;
    });

    criterion(6, "Euler characteristic is constant in the character", [] {
        std::mt19937_64 rng(127);
        for (const auto& c : {wedge_two_circles(), two_torus_complex(),
                              presentation_to_complex(pencil_presentation())}) {
            long chi_ranks = 0;
            for (int i = 0; i <= c.top(); ++i) chi_ranks += (i % 2 ? -1 : 1) * c.ranks[i];
            for (int s = 0; s < 100; ++s) {
                auto b = twisted_betti(c, Character::torsion_char(rnd_torsion(c.n, rng)));
                long chi = 0;
                for (int i = 0; i <= c.top(); ++i) chi += (i % 2 ? -1 : 1) * b[i];
                if (chi != chi_ranks) return false;
            }
        }
        return true;
    });

    criterion(7, "1-Hodge suite: validation, perturbations, additivity, bookkeeping", [] {
        std::mt19937_64 rng(131);
        for (int s = 0; s < 100; ++s) {
            auto h = elliptic_block();
            auto broken = h;
            broken.f_basis[0][1] = Cyclotomic(rat(1 + s, 4));  // F row turns real
            int extra = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int b = 0; b < extra; ++b) {
                auto block = (b % 2) ? elliptic_block() : pure11_block();
                h = direct_sum(h, block);
                broken = direct_sum(broken, block);
            }
            IntMat u = rnd_unimodular(h.rank, rng);
            h = base_change(h, u);
            broken = base_change(broken, u);
            if (!validate_1hs(h).valid) return false;
            if (validate_1hs(broken).valid) return false;
            if (!ses_bookkeeping(h).exact) return false;
        }
        int accepted = 0;
        while (accepted < 50) {
            auto h = elliptic_block();
            for (int b = 0; b < std::uniform_int_distribution<int>(0, 2)(rng); ++b)
                h = direct_sum(h, (b % 2) ? elliptic_block() : pure11_block());
            h = base_change(h, rnd_unimodular(h.rank, rng));
            int d = std::uniform_int_distribution<int>(0, h.rank)(rng);
            IntMat rows(d, h.rank);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < h.rank; ++j)
                    rows(i, j) = std::uniform_int_distribution<long>(-3, 3)(rng);
            auto sub = sub_hs(h, saturate_lattice(rows));
            if (!sub.accepted) continue;
            ++accepted;
            auto quot = quotient_hs(h, sub.witness);
            auto nh = hodge_numbers(h);
            auto ns = hodge_numbers(sub.witness.structure);
            HodgeNumbers nq = quot.rank ? hodge_numbers(quot) : HodgeNumbers{};
            if (nh.h10 != ns.h10 + nq.h10 || nh.h01 != ns.h01 + nq.h01 ||
                nh.h11 != ns.h11 + nq.h11)
                return false;
        }
        return true;
    });

    criterion(8, "soundness audit: every exact success re-checked by sampling", [] {
        std::mt19937_64 rng(137);
        // resonance subspace certificate for the pencil plane
        auto ac = aomoto(pencil_os_algebra());
        LinearSubspaceQ plane{3, {{Rat(1), Rat(-1), Rat(0)}, {Rat(0), Rat(1), Rat(-1)}}};
        if (!verify_subspace_in_resonance(ac, plane, 1, 1).success) return false;
        for (int s = 0; s < 30; ++s) {
            std::vector<Rat> p(3, Rat(0));
            Rat c1 = rnd_rat(rng, 10), c2 = rnd_rat(rng, 10);
            for (int j = 0; j < 3; ++j)
                p[j] = c1 * plane.basis[0][j] + c2 * plane.basis[1][j];
            if (!resonance_membership(ac, 1, 1, p)) return false;
        }
        // torus certificates: wedge full torus and the pencil subtorus
        auto wedge = wedge_two_circles();
        auto full = make_translated_subtorus(2, IntMat::identity(2), {Rat(0), Rat(0)});
        if (!verify_torus_in_charvar(wedge, full, 1, 1).success) return false;
        for (int s = 0; s < 30; ++s)
            if (!charvar_membership(wedge, 1, 1,
                                    Character::torsion_char(sample_torsion_on(full, rng))))
                return false;
        auto pencil = presentation_to_complex(pencil_presentation());
        auto sub = make_translated_subtorus(3, right_kernel(IntMat::from_rows({{1, 1, 1}})),
                                            {Rat(0), Rat(0), Rat(0)});
        if (!verify_torus_in_charvar(pencil, sub, 1, 1).success) return false;
        for (int s = 0; s < 30; ++s)
            if (!charvar_membership(pencil, 1, 1,
                                    Character::torsion_char(sample_torsion_on(sub, rng))))
                return false;
        // heisenberg origin component from the probe
        auto hac = aomoto(heisenberg_algebra());
        for (const auto& comp : probe_components(hac, 1, 1, 40)) {
            for (int s = 0; s < 30; ++s) {
                std::vector<Rat> p(hac.nvars, Rat(0));
                for (const auto& b : comp.basis) {
                    Rat c = rnd_rat(rng, 10);
                    for (int j = 0; j < hac.nvars; ++j) p[j] += c * b[j];
                }
                if (!resonance_membership(hac, 1, 1, p)) return false;
            }
        }
        return true;
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
