#include "wmod/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wmod {

long euler_phi(long n) {
    if (n <= 0) throw std::domain_error("euler_phi needs a positive argument");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rat>;  // ascending degree

// Exact division of integer polynomials, used only for cyclotomic factors.
std::vector<Int> exact_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> r = num;
    std::vector<Int> q(num.size() - den.size() + 1, 0);
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        Int c = r[i + den.size() - 1];  // den is monic
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k < den.size(); ++k) r[i + k] -= c * den[k];
    }
    for (const auto& x : r)
        if (x != 0) throw std::logic_error("inexact cyclotomic division");
    return q;
}

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex phi_mutex;

const std::vector<Int>& phi_poly_locked(long n) {
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = exact_div(num, phi_poly_locked(d));
    return cache.emplace(n, std::move(num)).first->second;
}

std::vector<Int> phi_poly(long n) {
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_poly_locked(n);
}

// Reduce a polynomial in zeta_N against Phi_N; result has degree < phi(N).
void reduce_mod_phi(Poly& p, long n, const std::vector<Int>& phi) {
    std::size_t deg_phi = phi.size() - 1;  // = euler_phi(n)
    (void)n;
    while (p.size() > deg_phi) {
        Rat lead = p.back();
        std::size_t off = p.size() - 1 - deg_phi;
        if (lead != 0)
            for (std::size_t k = 0; k < phi.size(); ++k) p[off + k] -= lead * Rat(phi[k]);
        p.pop_back();
    }
    p.resize(deg_phi, Rat(0));
}

Poly reduced_poly(Poly p, long n, const std::vector<Int>& phi) {
    reduce_mod_phi(p, n, phi);
    return p;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
    std::lock_guard<std::mutex> lock(phi_mutex);
    return phi_poly_locked(n);
}

Cyc Cyc::zero(long order) { return Cyc(order, std::vector<Rat>(euler_phi(order), Rat(0))); }

Cyc Cyc::one() { return from_rational(Rat(1)); }

Cyc Cyc::from_rational(const Rat& r) { return Cyc(1, std::vector<Rat>{r}); }

Cyc Cyc::zeta(long order, long power) {
    if (order < 1) throw std::domain_error("zeta needs a positive order");
    power %= order;
    if (power < 0) power += order;
    Poly p(power + 1, Rat(0));
    p[power] = 1;
    auto phi = phi_poly(order);
    return Cyc(order, reduced_poly(std::move(p), order, phi));
}

Cyc Cyc::from_buckets(long order, const std::vector<Rat>& b) {
    if (static_cast<long>(b.size()) != order)
        throw std::domain_error("bucket vector length must equal the order");
    long g = 0;
    for (long e = 0; e < order; ++e)
        if (b[e] != 0) g = std::gcd(g, std::gcd(e, order));
    if (g == 0) return Cyc::zero(1);
    long m = order / g;
    Poly p(m, Rat(0));
    for (long e = 0; e < order; ++e)
        if (b[e] != 0) p[e / g] += b[e];
    auto phi = phi_poly(m);
    return Cyc(m, reduced_poly(std::move(p), m, phi));
}

bool Cyc::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool Cyc::is_rational() const {
    for (std::size_t t = 1; t < coeffs_.size(); ++t)
        if (coeffs_[t] != 0) return false;
    return true;
}

Cyc Cyc::embedded(long bigger_order) const {
    if (bigger_order % order_ != 0)
        throw std::domain_error("embedding target must be a multiple of the order");
    if (bigger_order == order_) return *this;
    long step = bigger_order / order_;
    Poly p(static_cast<std::size_t>((coeffs_.size() - 1)) * step + 1, Rat(0));
    for (std::size_t t = 0; t < coeffs_.size(); ++t) p[t * step] = coeffs_[t];
    auto phi = phi_poly(bigger_order);
    return Cyc(bigger_order, reduced_poly(std::move(p), bigger_order, phi));
}

Cyc Cyc::operator+(const Cyc& o) const {
    long m = std::lcm(order_, o.order_);
    Cyc a = embedded(m), b = o.embedded(m);
    for (std::size_t t = 0; t < a.coeffs_.size(); ++t) a.coeffs_[t] += b.coeffs_[t];
    return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator-() const {
    Cyc a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyc Cyc::operator*(const Cyc& o) const {
    long m = std::lcm(order_, o.order_);
    Cyc a = embedded(m), b = o.embedded(m);
    Poly prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    auto phi = phi_poly(m);
    return Cyc(m, reduced_poly(std::move(prod), m, phi));
}

Cyc operator*(const Rat& s, const Cyc& x) {
    Cyc a = x;
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

bool Cyc::operator==(const Cyc& o) const {
    long m = std::lcm(order_, o.order_);
    return embedded(m).coeffs_ == o.embedded(m).coeffs_;
}

Cyc Cyc::galois(long a) const {
    long r = a % order_;
    if (r < 0) r += order_;
    if (std::gcd(r, order_) != 1)
        throw std::domain_error("galois exponent must be coprime to the order");
    if (r == 1 || order_ == 1) return *this;
    Poly p(order_, Rat(0));
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        if (coeffs_[t] != 0) p[(t * r) % order_] += coeffs_[t];
    auto phi = phi_poly(order_);
    return Cyc(order_, reduced_poly(std::move(p), order_, phi));
}

Cyc Cyc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (order_ == 1) return Cyc::from_rational(Rat(1) / coeffs_[0]);
    // product of the other Galois conjugates over the field norm
    Cyc prod = Cyc::one();
    for (long a = 2; a <= order_; ++a)
        if (std::gcd(a, order_) == 1) prod = prod * galois(a);
    Cyc norm = *this * prod;
    auto r = norm.to_rational();
    if (!r || *r == 0) throw std::logic_error("field norm failed to be a nonzero rational");
    return (Rat(1) / *r) * prod;
}

std::optional<Cyc> Cyc::descended(long smaller_order) const {
    if (order_ % smaller_order != 0)
        throw std::domain_error("descent target must divide the order");
    if (smaller_order == order_) return *this;
    long phi_small = euler_phi(smaller_order);
    long phi_big = static_cast<long>(coeffs_.size());
    // columns: zeta_small^t embedded at the big order, t < phi(small)
    std::vector<Poly> cols;
    long step = order_ / smaller_order;
    auto phi = phi_poly(order_);
    for (long t = 0; t < phi_small; ++t) {
        Poly p(static_cast<std::size_t>(t) * step + 1, Rat(0));
        p.back() = 1;
        cols.push_back(reduced_poly(std::move(p), order_, phi));
    }
    // solve cols * x = coeffs by elimination
    std::vector<std::vector<Rat>> m(phi_big, std::vector<Rat>(phi_small + 1, Rat(0)));
    for (long r = 0; r < phi_big; ++r) {
        for (long c = 0; c < phi_small; ++c) m[r][c] = cols[c][r];
        m[r][phi_small] = coeffs_[r];
    }
    long row = 0;
    std::vector<long> pivot_col(phi_small, -1);
    for (long c = 0; c < phi_small && row < phi_big; ++c) {
        long piv = -1;
        for (long r = row; r < phi_big; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[row]);
        Rat inv = Rat(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (long r = 0; r < phi_big; ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rat f = m[r][c];
            for (long k = c; k <= phi_small; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col[c] = row;
        ++row;
    }
    for (long r = row; r < phi_big; ++r)
        if (m[r][phi_small] != 0) return std::nullopt;  // not in the subfield
    std::vector<Rat> x(phi_small, Rat(0));
    for (long c = 0; c < phi_small; ++c)
        if (pivot_col[c] >= 0) x[c] = m[pivot_col[c]][phi_small];
    return Cyc(smaller_order, std::move(x));
}

Cyc Cyc::reduced() const {
    for (long m = 1; m < order_; ++m) {
        if (order_ % m != 0) continue;
        if (auto d = descended(m)) return *d;
    }
    return *this;
}

std::complex<double> Cyc::to_complex() const {
    std::complex<double> s(0.0, 0.0);
    const double tau = 6.283185307179586476925286766559;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        double arg = tau * static_cast<double>(t) / static_cast<double>(order_);
        s += to_double(coeffs_[t]) * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return s;
}

std::optional<Rat> Cyc::to_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        if (coeffs_[t] == 0) continue;
        Rat c = coeffs_[t];
        if (!first) {
            os << (c > 0 ? " + " : " - ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        if (t == 0) {
            os << rat_str(c);
        } else {
            if (c != 1) os << rat_str(c) << "*";
            os << "z" << order_;
            if (t > 1) os << "^" << t;
        }
        first = false;
    }
    return os.str();
}

}  // namespace wmod
