#include "jumploci/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jumploci {

namespace {

// Exact division of integer polynomials (dense, ascending); divisor monic-led.
std::vector<Int> poly_divexact(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> r = num;
    int dn = int(den.size()) - 1;
    int dr = int(r.size()) - 1;
    while (dr >= 0 && r[dr] == 0) --dr;
    std::vector<Int> q(std::max(dr - dn + 1, 0), Int(0));
    for (int k = dr - dn; k >= 0; --k) {
        Int c;
        mpz_divexact(c.get_mpz_t(), r[k + dn].get_mpz_t(), den[dn].get_mpz_t());
        q[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dn; ++i) r[k + i] -= c * den[i];
    }
    for (const Int& c : r)
        if (c != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& Cyclotomic::cyclotomic_poly(long n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    std::function<const std::vector<Int>&(long)> get = [&](long m) -> const std::vector<Int>& {
        auto jt = g_phi_cache.find(m);
        if (jt != g_phi_cache.end()) return jt->second;
        std::vector<Int> num(m + 1, Int(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_divexact(num, get(d));
        return g_phi_cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

Cyclotomic Cyclotomic::from_dense(long order, std::vector<Rat> dense) {
    const std::vector<Int>& phi = cyclotomic_poly(order);
    int deg = int(phi.size()) - 1;
    // reduce mod Phi (monic): subtract c * x^{k-deg} * Phi from the top down
    for (int k = int(dense.size()) - 1; k >= deg; --k) {
        Rat c = dense[k];
        if (c == 0) continue;
        for (int i = 0; i <= deg; ++i) dense[k - deg + i] -= c * Rat(phi[i]);
    }
    dense.resize(deg, Rat(0));
    return Cyclotomic(order, std::move(dense));
}

Cyclotomic Cyclotomic::root(long order, long exponent) {
    if (order <= 0) throw std::invalid_argument("root order must be positive");
    long e = exponent % order;
    if (e < 0) e += order;
    // drop to the reduced order order/gcd
    long g = std::gcd(e == 0 ? order : e, order);
    long n = order / g;
    e /= g;
    std::vector<Rat> dense(e + 1, Rat(0));
    dense[e] = 1;
    return from_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::unit_exp(const Rat& q) {
    Rat r = mod1(q);
    long den = r.get_den().get_si();
    long num = r.get_num().get_si();
    return root(den, num);
}

bool Cyclotomic::is_zero() const {
    for (const Rat& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_part() const {
    if (!is_rational()) throw std::logic_error("not a rational cyclotomic");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(long m) const {
    if (m == order_) return *this;
    if (m % order_ != 0) throw std::invalid_argument("promotion order not a multiple");
    long step = m / order_;
    std::vector<Rat> dense(size_t((c_.size() - 1) * step + 1), Rat(0));
    for (size_t j = 0; j < c_.size(); ++j) dense[j * step] = c_[j];
    return from_dense(m, std::move(dense));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long n = std::lcm(order_, o.order_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    std::vector<Rat> dense(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) dense[i + j] += a.c_[i] * b.c_[j];
    }
    return from_dense(n, std::move(dense));
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw std::domain_error("cyclotomic division by zero");
    if (is_rational()) return Cyclotomic(Rat(1) / c_[0]);
    // extended Euclid in Q[x]: s * this + t * Phi = 1
    const std::vector<Int>& phi_int = cyclotomic_poly(order_);
    std::vector<Rat> r0(phi_int.begin(), phi_int.end());
    std::vector<Rat> r1 = c_;
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    auto deg = [](const std::vector<Rat>& p) {
        for (int i = int(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    while (true) {
        int d1 = deg(r1);
        if (d1 < 0) throw std::logic_error("cyclotomic inv: element not invertible");
        if (d1 == 0) break;
        int d0 = deg(r0);
        // r0 -= (lead quotient) x^{d0-d1} r1, repeatedly: full poly division step
        std::vector<Rat> q(d0 - d1 + 1, Rat(0));
        std::vector<Rat> rem = r0;
        for (int k = d0 - d1; k >= 0; --k) {
            Rat c = rem[k + d1] / r1[d1];
            q[k] = c;
            if (c == 0) continue;
            for (int i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
        }
        // s_new = s0 - q * s1
        std::vector<Rat> snew(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    Rat lead = r1[deg(r1)];
    std::vector<Rat> res(s1.size(), Rat(0));
    for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] / lead;
    return from_dense(order_, std::move(res));
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^j -> zeta^{N-j}
    std::vector<Rat> dense(order_, Rat(0));
    dense[0] = c_[0];
    for (size_t j = 1; j < c_.size(); ++j) dense[order_ - j] += c_[j];
    return from_dense(order_, std::move(dense));
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> z(0.0, 0.0);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        double arg = 2.0 * std::numbers::pi * double(j) / double(order_);
        z += c_[j].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(c_[j]);
        if (j > 0) os << "*z" << order_ << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic cyclotomic_eval(const std::vector<Rat>& q, const std::vector<long>& a) {
    if (q.size() != a.size()) throw std::invalid_argument("cyclotomic_eval length mismatch");
    Rat dot(0);
    for (size_t i = 0; i < q.size(); ++i) dot += Rat(a[i]) * q[i];
    return Cyclotomic::unit_exp(dot);
}

}  // namespace jumploci
