#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "wmod/rational.hpp"

namespace wmod {

// An element of the cyclotomic field Q(zeta_N), reduced against the N-th
// cyclotomic polynomial: coeffs()[t] multiplies zeta_N^t for t < phi(N).
// Mixed-order arithmetic embeds both operands into the lcm order first.
class Cyc {
   public:
    Cyc() : order_(1), coeffs_(1, Rat(0)) {}
    static Cyc zero(long order);
    static Cyc one();
    static Cyc from_rational(const Rat& r);
    static Cyc zeta(long order, long power);
    // sum of b[e] * zeta_N^e; shrinks to the smallest subfield the support
    // exponents allow (gcd of exponents with N).
    static Cyc from_buckets(long order, const std::vector<Rat>& b);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator*(const Cyc& o) const;
    Cyc operator-() const;
    bool operator==(const Cyc& o) const;
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    friend Cyc operator*(const Rat& s, const Cyc& x);

    // Field automorphism zeta -> zeta^a, gcd(a, order) = 1.
    Cyc galois(long a) const;
    Cyc conj() const { return galois(-1); }
    // Multiplicative inverse via the product of the other Galois conjugates
    // over the field norm.
    Cyc inverse() const;

    Cyc embedded(long bigger_order) const;           // order | bigger_order
    std::optional<Cyc> descended(long smaller_order) const;  // exact subfield test
    Cyc reduced() const;                             // smallest cyclotomic subfield

    std::complex<double> to_complex() const;
    std::optional<Rat> to_rational() const;
    std::string str() const;

   private:
    Cyc(long order, std::vector<Rat> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
    long order_;
    std::vector<Rat> coeffs_;
};

long euler_phi(long n);

// Integer coefficients of the n-th cyclotomic polynomial, ascending degree.
const std::vector<Int>& cyclotomic_polynomial(long n);

}  // namespace wmod
