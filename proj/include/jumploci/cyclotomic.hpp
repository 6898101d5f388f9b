#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jumploci/rational.hpp"

namespace jumploci {

// Element of Q(zeta_N) in the power basis {zeta^j : 0 <= j < deg Phi_N},
// kept reduced modulo the N-th cyclotomic polynomial, so zero-testing is
// coefficientwise.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(const Rat& q) : order_(1), c_(1, q) {}
    explicit Cyclotomic(long n) : order_(1), c_(1, Rat(n)) {}
    Cyclotomic(long num, long den) : order_(1), c_(1, rat(num, den)) {}

    // zeta_N^k
    static Cyclotomic root(long order, long exponent);
    // e^{2 pi i q} for rational q
    static Cyclotomic unit_exp(const Rat& q);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // valid when is_rational()

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inv() const;
    Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Galois conjugation zeta -> zeta^-1 (complex conjugation).
    Cyclotomic conj() const;

    std::complex<double> to_complex() const;

    // Rewrites into Q(zeta_M); requires order_ | M.
    Cyclotomic promoted(long m) const;

    std::string str() const;

    // Coefficient vector of Phi_N (dense, degree ascending, monic integer poly).
    static const std::vector<Int>& cyclotomic_poly(long n);

private:
    Cyclotomic(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}
    static Cyclotomic from_dense(long order, std::vector<Rat> dense);

    long order_;
    std::vector<Rat> c_;
};

inline Cyclotomic operator*(const Rat& q, const Cyclotomic& c) { return Cyclotomic(q) * c; }

// Value of the character exp(q) on the monomial with exponent vector a:
// zeta_N^{N (a . q)} where N = lcm of the denominators of q.
Cyclotomic cyclotomic_eval(const std::vector<Rat>& q, const std::vector<long>& a);

}  // namespace jumploci
