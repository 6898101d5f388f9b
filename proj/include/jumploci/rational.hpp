#pragma once

#include <gmpxx.h>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace jumploci {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p/q" or a decimal-free rational token.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat{Int(s)};
        }
        Rat q(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    }
}

inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

// Reduction of a rational to the half-open interval [0, 1).
inline Rat mod1(const Rat& q) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - Rat(fl);
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Uniform random rational num/den with |num| <= num_bound, 1 <= den <= den_bound.
inline Rat random_rat(std::mt19937_64& rng, long num_bound, long den_bound) {
    std::uniform_int_distribution<long> num_d(-num_bound, num_bound);
    std::uniform_int_distribution<long> den_d(1, den_bound);
    return rat(num_d(rng), den_d(rng));
}

}  // namespace jumploci
