#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/linalg.hpp"
#include "jumploci/torus.hpp"

namespace jumploci {

// Twisted cellular chain complex over the Laurent polynomial ring
// Q[t_1^{±1}..t_n^{±1}]. boundaries[i] is the matrix of the boundary map
// C_{i+1} -> C_i (shape ranks[i] x ranks[i+1]).
struct LaurentComplex {
    int n = 0;
    std::vector<int> ranks;
    std::vector<Mat<QPoly>> boundaries;  // size ranks.size() - 1

    int top() const { return int(ranks.size()) - 1; }
};

// Rank-one character of the deck group Z^n: torsion (rational angles mod 1)
// or numeric (complex values, never certified).
struct Character {
    bool torsion = true;
    std::vector<Rat> q;                     // entries in [0,1)
    std::vector<std::complex<double>> z;

    static Character torsion_char(std::vector<Rat> angles);
    static Character numeric_char(std::vector<std::complex<double>> values);
    Character inverse() const;
    int dim() const { return torsion ? int(q.size()) : int(z.size()); }
};

// Finite group presentation; letters are signed 1-based generator indices
// (+g for the generator, -g for its inverse).
struct Presentation {
    int ngens = 0;
    std::vector<std::vector<int>> relators;
    // optional user-supplied abelianization map Z^ngens -> Z^n (rows);
    // empty means: computed from the relators (free part of the cokernel)
    IntMat abelianization;
};

ValidationReport validate_complex(const LaurentComplex& c);

// Standard 2-complex of a presentation with boundaries abelianized through
// Fox calculus. Throws on a user map that is not surjective or does not kill
// the relators.
LaurentComplex presentation_to_complex(const Presentation& p);

// Transposes boundaries and inverts the torus coordinates (the homology vs
// cohomology duality convention).
LaurentComplex dualize(const LaurentComplex& c);

// Exact dims of twisted homology for torsion characters; numeric
// (singular-value, tolerance 1e-9 relative) for numeric characters.
std::vector<int> twisted_betti(const LaurentComplex& c, const Character& rho);

bool charvar_membership(const LaurentComplex& c, int i, int k, const Character& rho);

struct TorusCertificate {
    bool success = false;
    bool exact = true;  // false when the translate was numeric (sampled check only)
    std::vector<int> generic_betti;
    std::vector<Rat> refutation;  // torsion character on T violating membership
    std::string note;
};

// Certifies T subset Sigma^i_k by computing generic twisted Betti numbers on
// the monomial parametrization of T over Q(zeta_N).
TorusCertificate verify_torus_in_charvar(const LaurentComplex& c, const TranslatedSubtorus& t,
                                         int i, int k, std::uint64_t seed = 0);

// Random torsion character on a translated subtorus.
std::vector<Rat> sample_torsion_on(const TranslatedSubtorus& t, std::mt19937_64& rng,
                                   long order_bound = 12);

struct CompareExpReport {
    int samples = 0;
    int agreements = 0;
    std::vector<std::vector<Rat>> disagreement_points;
    bool all_agree() const { return agreements == samples; }
};

// Samples rational flat connections scaled toward the origin and compares
// resonance membership with characteristic-variety membership at exp(omega).
// Reports sampled agreement only; no germ statement is asserted.
CompareExpReport compare_exp(const GradedAlgebra& a, const LaurentComplex& c, int i, int k,
                             int samples, long denominator_bound, std::uint64_t seed = 0);

// --- builders for the bundled examples ---
LaurentComplex wedge_two_circles();  // free group F_2
LaurentComplex two_torus_complex();  // Z^2
Presentation pencil_presentation();  // pi_1 of the complement of 3 concurrent lines

// All torsion characters with every coordinate order dividing `order`.
std::vector<Character> torsion_sweep(int n, long order);

// Twisted Betti numbers for a batch of characters. sweep_betti runs the
// characters in parallel (OpenMP when available); sweep_betti_serial is the
// plain loop kept as the reference implementation.
std::vector<std::vector<int>> sweep_betti(const LaurentComplex& c, const std::vector<Character>& chars);
std::vector<std::vector<int>> sweep_betti_serial(const LaurentComplex& c,
                                                 const std::vector<Character>& chars);

}  // namespace jumploci
