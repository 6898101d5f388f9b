#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/intmat.hpp"
#include "jumploci/linalg.hpp"

namespace jumploci {

// Algebraic subgroup of (C*)^n, stored as a saturated direction lattice in HNF.
struct Subtorus {
    int n = 0;
    IntMat lattice;  // rank-d basis, rows, saturated, HNF

    int rank() const { return lattice.rows(); }
    bool operator==(const Subtorus& o) const { return n == o.n && lattice == o.lattice; }
};

Subtorus make_subtorus(int n, const IntMat& rows);

// Coset of a subtorus. The torsion translate is kept in a canonical
// representative of its coset modulo lattice_Q + Z^n, so equality is plain
// field comparison.
struct TranslatedSubtorus {
    Subtorus torus;
    bool torsion = true;
    std::vector<Rat> translate;                     // in [0,1)^n, canonical (torsion case)
    std::vector<std::complex<double>> numeric_translate;  // non-certified path

    bool operator==(const TranslatedSubtorus& o) const {
        return torsion && o.torsion && torus == o.torus && translate == o.translate;
    }
};

TranslatedSubtorus make_translated_subtorus(int n, const IntMat& lattice_rows,
                                            const std::vector<Rat>& translate);

// Canonical representative of v modulo lattice_Q + Z^n, computed through a
// unimodular coordinate change aligning the lattice with the first axes.
std::vector<Rat> coset_canonical(const IntMat& saturated_lattice, const std::vector<Rat>& v);

// Rational affine subspace v0 + span(directions) of C^n.
struct AffineSubspaceQ {
    int n = 0;
    std::vector<Rat> base;
    std::vector<std::vector<Rat>> directions;  // linearly independent

    int dim() const { return int(directions.size()); }
};

struct LaurentZeroSet {
    int n = 0;
    std::vector<QPoly> generators;  // Laurent polynomials in n variables
};

// Euclidean closure of exp(V) for rational V, as a translated subtorus.
TranslatedSubtorus exp_image(const AffineSubspaceQ& v);

// w - v0 in lattice_Q + Z^n, decided exactly (torsion translate only).
bool membership(const std::vector<Rat>& w, const TranslatedSubtorus& t);

bool containment(const TranslatedSubtorus& s, const TranslatedSubtorus& t);

struct IntersectionResult {
    Subtorus identity_component;
    Int component_count;
};

IntersectionResult intersection(const Subtorus& s, const Subtorus& t);

struct VanishResult {
    bool vanishes = true;
    // on failure: exponent group (in the direction parameters) whose
    // cyclotomic coefficient sum is nonzero
    std::vector<int> witness_exponent;
    std::string witness_sum;
};

// Decides exactly whether f restricted to exp(V) is identically zero, by
// grouping monomials along the character s -> s^e and testing each
// cyclotomic coefficient sum for zero.
VanishResult vanishes_on_exp_image(const QPoly& f, const AffineSubspaceQ& v);

struct AxlReport {
    bool exp_image_in_zeroset = false;
    int failing_generator = -1;
    VanishResult failure;
    bool dims_match = false;
    TranslatedSubtorus predicted;
    bool generators_vanish_on_predicted = false;
    std::vector<std::string> machine_checked;
    std::vector<std::string> user_asserted;
};

// Checks exp(V) in W generator by generator; when the claimed dimension of W
// matches dim V, emits the predicted translated subtorus and re-checks every
// generator on its monomial parametrization. Irreducibility and dim W stay
// user assertions and are echoed as such.
AxlReport ax_lindemann_report(const AffineSubspaceQ& v, const LaurentZeroSet& w, int claimed_dim_w);

// f restricted to the monomial parametrization of a torsion-translated
// subtorus, as a Laurent polynomial over Q(zeta_N) in rank-many variables.
SparsePoly<Cyclotomic> restrict_to_torus(const QPoly& f, const TranslatedSubtorus& t);

}  // namespace jumploci
