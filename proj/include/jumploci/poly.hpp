#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "jumploci/cyclotomic.hpp"
#include "jumploci/rational.hpp"

namespace jumploci {

inline bool is_zero_k(const Rat& q) { return q == 0; }
inline bool is_zero_k(const Cyclotomic& c) { return c.is_zero(); }
inline Rat inv_k(const Rat& q) { return Rat(1) / q; }
inline Cyclotomic inv_k(const Cyclotomic& c) { return c.inv(); }
inline std::complex<double> inv_k(const std::complex<double>& z) { return 1.0 / z; }

template <class K>
K from_rat_k(const Rat& q);
template <>
inline Rat from_rat_k<Rat>(const Rat& q) { return q; }
template <>
inline Cyclotomic from_rat_k<Cyclotomic>(const Rat& q) { return Cyclotomic(q); }
template <>
inline std::complex<double> from_rat_k<std::complex<double>>(const Rat& q) { return {q.get_d(), 0.0}; }

using Expo = std::vector<int>;

// Graded lexicographic order on exponent vectors (total degree first).
struct GrlexLess {
    bool operator()(const Expo& a, const Expo& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse polynomial (or Laurent polynomial, when exponents go negative)
// in a fixed number of variables over the field K.
template <class K>
class SparsePoly {
public:
    using TermMap = std::map<Expo, K, GrlexLess>;

    SparsePoly() : nvars_(0) {}
    explicit SparsePoly(int nvars) : nvars_(nvars) {}

    static SparsePoly constant(int nvars, const K& c) {
        SparsePoly p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }
    static SparsePoly variable(int nvars, int i, const K& coeff) {
        SparsePoly p(nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        p.add_term(e, coeff);
        return p;
    }
    static SparsePoly monomial(int nvars, const Expo& e, const K& coeff) {
        SparsePoly p(nvars);
        p.add_term(e, coeff);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const K& c) {
        if (int(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
        if (is_zero_k(c)) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_k(it->second)) terms_.erase(it);
        }
    }

    long total_degree() const {  // of the leading (grlex-max) term; 0 for the zero poly
        if (terms_.empty()) return 0;
        long d = 0;
        for (int e : terms_.rbegin()->first) d += e;
        return d;
    }
    long min_exponent(int var) const {
        long m = 0;
        for (const auto& [e, c] : terms_) m = std::min<long>(m, e[var]);
        return m;
    }

    SparsePoly operator+(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    SparsePoly operator-(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, K(-1) * c);
        return r;
    }
    SparsePoly operator-() const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, K(-1) * c);
        return r;
    }
    SparsePoly operator*(const SparsePoly& o) const {
        check_arity(o);
        SparsePoly r(nvars_);
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
    SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly scaled(const K& c) const {
        SparsePoly r(nvars_);
        if (is_zero_k(c)) return r;
        for (const auto& [e, co] : terms_) r.terms_.emplace(e, c * co);
        return r;
    }
    // multiply by the monomial x^shift (Laurent shift)
    SparsePoly shifted(const Expo& shift) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            Expo ne(nvars_);
            for (int i = 0; i < nvars_; ++i) ne[i] = e[i] + shift[i];
            r.terms_.emplace(ne, c);
        }
        return r;
    }

    bool operator==(const SparsePoly& o) const { return (*this - o).is_zero(); }

    // Exact division; throws if the division leaves a remainder. Requires
    // ordinary (non-negative) exponents in both operands.
    SparsePoly div_exact(const SparsePoly& d) const {
        check_arity(d);
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        SparsePoly q(nvars_);
        SparsePoly r = *this;
        const auto& [de, dc] = *d.terms_.rbegin();
        K dinv = inv_k(dc);
        while (!r.is_zero()) {
            const auto& [re, rc] = *r.terms_.rbegin();
            Expo qe(nvars_);
            for (int i = 0; i < nvars_; ++i) {
                qe[i] = re[i] - de[i];
                if (qe[i] < 0) throw std::logic_error("div_exact: not divisible");
            }
            K qc = rc * dinv;
            SparsePoly t = SparsePoly::monomial(nvars_, qe, qc);
            q = q + t;
            r = r - t * d;
        }
        return q;
    }

    // Evaluation; Laurent exponents need invertible values.
    template <class K2>
    K2 eval(const std::vector<K2>& point) const {
        if (int(point.size()) != nvars_) throw std::invalid_argument("eval arity mismatch");
        K2 acc = from_rat_k<K2>(Rat(0));
        for (const auto& [e, c] : terms_) {
            K2 term = convert_coeff<K2>(c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                K2 base = e[i] > 0 ? point[i] : inv_k(point[i]);
                for (int k = 0; k < std::abs(e[i]); ++k) term *= base;
            }
            acc += term;
        }
        return acc;
    }

    std::string str() const {
        std::vector<std::string> names;
        for (int i = 0; i < nvars_; ++i) names.push_back("t" + std::to_string(i + 1));
        return str(names);
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(it->second) << ")";
            for (int i = 0; i < nvars_; ++i)
                if (it->first[i] != 0) os << "*" << names[i] << "^" << it->first[i];
        }
        return os.str();
    }

private:
    void check_arity(const SparsePoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }
    template <class K2>
    static K2 convert_coeff(const K& c);
    static std::string coeff_str(const Rat& q) { return rat_str(q); }
    static std::string coeff_str(const Cyclotomic& c) { return c.str(); }

    int nvars_;
    TermMap terms_;
};

template <>
template <>
inline Rat SparsePoly<Rat>::convert_coeff<Rat>(const Rat& c) { return c; }
template <>
template <>
inline Cyclotomic SparsePoly<Rat>::convert_coeff<Cyclotomic>(const Rat& c) { return Cyclotomic(c); }
template <>
template <>
inline std::complex<double> SparsePoly<Rat>::convert_coeff<std::complex<double>>(const Rat& c) {
    return {c.get_d(), 0.0};
}
template <>
template <>
inline Cyclotomic SparsePoly<Cyclotomic>::convert_coeff<Cyclotomic>(const Cyclotomic& c) { return c; }
template <>
template <>
inline std::complex<double> SparsePoly<Cyclotomic>::convert_coeff<std::complex<double>>(const Cyclotomic& c) {
    return c.to_complex();
}

using QPoly = SparsePoly<Rat>;
using CycPoly = SparsePoly<Cyclotomic>;

}  // namespace jumploci
