#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "jumploci/linalg.hpp"

namespace jumploci {

// Finite connected commutative differential graded algebra over Q, given by
// basis dimensions per degree, structure constants and differential matrices.
struct GradedAlgebra {
    // dims[i] = dim A^i, i = 0..top; dims[0] must be 1
    std::vector<int> dims;
    // product blocks for degrees i,j >= 1 with i+j <= top;
    // entry (a,b,k) at index (a*dims[j]+b)*dims[i+j]+k
    std::map<std::pair<int, int>, std::vector<Rat>> mult;
    // diff[i]: matrix of d^i : A^i -> A^{i+1}, i = 0..top-1
    std::vector<QMat> diff;
    // optional basis names per degree (printing only)
    std::vector<std::vector<std::string>> names;

    int top() const { return int(dims.size()) - 1; }
    int dim(int i) const { return (i >= 0 && i <= top()) ? dims[i] : 0; }

    Rat mult_c(int i, int j, int a, int b, int k) const;
    void set_mult(int i, int j, int a, int b, int k, const Rat& c);

    // product of basis elements e_a^i and e_b^j as a vector in A^{i+j};
    // degree-0 factors act as scalars
    std::vector<Rat> basis_product(int i, int a, int j, int b) const;
};

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
    void fail(std::string msg) {
        valid = false;
        violations.push_back(std::move(msg));
    }
};

struct FlatConnectionBasis {
    // each vector is an element of A^1 (closed under d^1)
    std::vector<std::vector<Rat>> vectors;
    int count() const { return int(vectors.size()); }
};

// Cochain complex whose matrices are affine-linear in the flat-connection
// coordinates. mats[i] : A^i -> A^{i+1}, entries in Q[x_1..x_m], degree <= 1.
struct AomotoComplex {
    std::vector<int> dims;
    std::vector<Mat<QPoly>> mats;  // size dims.size(); the top one is empty
    int nvars = 0;
};

struct LinearSubspaceQ {
    int ambient = 0;
    std::vector<std::vector<Rat>> basis;  // linearly independent direction vectors
    int dim() const { return int(basis.size()); }
};

// Differential graded module over a GradedAlgebra.
struct DGModule {
    std::vector<int> dims;      // dim M^j
    std::vector<int> alg_dims;  // dims of the underlying algebra (for block sizing)
    // action blocks A^i (x) M^j -> M^{i+j}, entry (a,b,k) at (a*dims[j]+b)*dims[i+j]+k
    std::map<std::pair<int, int>, std::vector<Rat>> action;
    std::vector<QMat> diff;

    int top() const { return int(dims.size()) - 1; }
    int dim(int i) const { return (i >= 0 && i <= top()) ? dims[i] : 0; }
    Rat action_c(int i, int j, int a, int b, int k) const;
    void set_action(int i, int j, int a, int b, int k, const Rat& c);
};

ValidationReport validate_cdga(const GradedAlgebra& a);
ValidationReport validate_dgmodule(const GradedAlgebra& a, const DGModule& m);

FlatConnectionBasis flat_connections(const GradedAlgebra& a);

// d_omega = d + omega /\ (-) with omega = sum_j x_j * (j-th flat basis vector)
AomotoComplex aomoto(const GradedAlgebra& a);
AomotoComplex aomoto_module(const GradedAlgebra& a, const DGModule& m);

// Checks M^{i+1} M^i = 0 identically; true when flat.
bool aomoto_is_flat(const AomotoComplex& c);

// dim H^i at an exact evaluation point, for i = 0..top.
template <class K>
std::vector<int> betti_at(const AomotoComplex& c, const std::vector<K>& point);

template <class K>
bool resonance_membership(const AomotoComplex& c, int i, int k, const std::vector<K>& point);

// Betti numbers at the generic point of the parametrized subspace x = P t.
std::vector<int> generic_betti_on_subspace(const AomotoComplex& c, const LinearSubspaceQ& l);

struct SubspaceCertificate {
    bool success = false;
    std::vector<int> generic_betti;
    std::vector<Rat> refutation_point;  // a rational point of L outside R^i_k, on failure
};

SubspaceCertificate verify_subspace_in_resonance(const AomotoComplex& c, const LinearSubspaceQ& l,
                                                 int i, int k);

// Heuristic, non-exhaustive search for linear components of R^i_k. Every
// returned subspace has passed verify_subspace_in_resonance.
std::vector<LinearSubspaceQ> probe_components(const AomotoComplex& c, int i, int k, int trials,
                                              std::uint64_t seed = 0);

// --- builders used by tests, tools and the bundled examples ---

// Full exterior algebra on n degree-1 generators; d given on generators as
// elements of A^2 (empty map means d = 0). Leibniz extends d to all degrees.
GradedAlgebra exterior_algebra(int n, const std::map<int, std::vector<Rat>>& d_of_gen = {});
GradedAlgebra heisenberg_algebra();    // Lambda(a,b,c), dc = ab
GradedAlgebra torus_algebra();         // Lambda(a,b), d = 0
GradedAlgebra pencil_os_algebra();     // Orlik-Solomon algebra of a pencil of 3 lines

extern template std::vector<int> betti_at<Rat>(const AomotoComplex&, const std::vector<Rat>&);
extern template std::vector<int> betti_at<Cyclotomic>(const AomotoComplex&, const std::vector<Cyclotomic>&);
extern template bool resonance_membership<Rat>(const AomotoComplex&, int, int, const std::vector<Rat>&);
extern template bool resonance_membership<Cyclotomic>(const AomotoComplex&, int, int,
                                                      const std::vector<Cyclotomic>&);

}  // namespace jumploci
