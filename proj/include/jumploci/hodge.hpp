#pragma once

#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/cyclotomic.hpp"
#include "jumploci/intmat.hpp"
#include "jumploci/torus.hpp"

namespace jumploci {

// Weight-one mixed Hodge data on a free lattice Z^r: a rational subspace
// W of Q^r and a Q(i) subspace F of C^r, both given by basis rows.
struct OneHodgeStructure {
    int rank = 0;
    std::vector<std::vector<Rat>> w_basis;
    std::vector<std::vector<Cyclotomic>> f_basis;  // coefficients in Q(i)
};

struct HodgeNumbers {
    int h10 = 0, h01 = 0, h11 = 0;

    bool operator==(const HodgeNumbers& o) const {
        return h10 == o.h10 && h01 == o.h01 && h11 == o.h11;
    }
};

// Throws std::invalid_argument on dependent W or F basis rows. Reports the
// two axioms: W_C = (W_C cap F) + (W_C cap conj F) as a direct sum, and
// Lambda_C = W_C + F.
ValidationReport validate_1hs(const OneHodgeStructure& h);

HodgeNumbers hodge_numbers(const OneHodgeStructure& h);

// Saturated lattice Lambda cap W, rows in HNF; rank = dim W.
IntMat lambda_zero(const OneHodgeStructure& h);

// Sub 1-Hodge structure induced on a saturated sublattice, expressed in the
// coordinates of the sublattice basis rows.
struct SubHSWitness {
    IntMat sublattice;  // saturated, HNF rows
    OneHodgeStructure structure;
};

struct SubHSResult {
    bool accepted = false;
    std::string reason;
    SubHSWitness witness;
};

SubHSResult sub_hs(const OneHodgeStructure& h, const IntMat& sublattice);

// Quotient structure on Z^r / sublattice in SNF-completed complement
// coordinates. Throws if the witness does not validate against h.
OneHodgeStructure quotient_hs(const OneHodgeStructure& h, const SubHSWitness& witness);

struct BdrPiece {
    TranslatedSubtorus torus;
    SubHSWitness witness;
};

struct BdrCertificate {
    std::vector<BdrPiece> pieces;
};

struct BdrReport {
    bool all_certified = false;
    std::vector<bool> certified;
    std::vector<std::string> detail;  // one line per piece
};

// Re-derives sub_hs on each piece's lattice and compares spans with the
// supplied witness. Ambient-rank mismatches are input errors (throw).
BdrReport verify_bdr_certificate(const OneHodgeStructure& h, const BdrCertificate& cert);

struct SesReport {
    bool exact = false;
    std::vector<std::string> lines;
};

// Rank bookkeeping of the weight exact sequences: rank Lambda_0 = dim W,
// dim W + h11 = r, rank Lambda_0 + rank(Lambda/Lambda_0) = r.
SesReport ses_bookkeeping(const OneHodgeStructure& h);

// --- builders ---
OneHodgeStructure elliptic_block();                  // r=2, W=Q^2, F=span{(1,i)}
OneHodgeStructure pure11_block();                    // r=1, W=0, F=C
OneHodgeStructure direct_sum(const OneHodgeStructure& a, const OneHodgeStructure& b);
// coordinate change by a unimodular matrix u (basis rows transform by u)
OneHodgeStructure base_change(const OneHodgeStructure& h, const IntMat& u);

}  // namespace jumploci
