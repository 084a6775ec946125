#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cmdihedral {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown on violated preconditions of the public operations.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct prime_power {
    std::int64_t p;
    int e;
};

std::vector<prime_power> factor(std::int64_t n);
std::vector<prime_power> factor(Integer const & n);
std::vector<std::int64_t> divisors(std::int64_t n);
bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// Fits-in-int64 conversion; throws domain_error when it does not fit.
std::int64_t to_i64(Integer const & x);

std::int64_t gcd_i64(std::int64_t a, std::int64_t b);
std::int64_t lcm_i64(std::int64_t a, std::int64_t b);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t m);
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// A square root of a modulo the odd prime p (Tonelli-Shanks); a must be a residue.
std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p);

/// Kronecker symbol (d/n) with the usual conventions at 2, -1 and 0.
int kronecker(Integer const & d, Integer const & n);
int kronecker(std::int64_t d, std::int64_t n);

/// Largest divisor of n prime to p.
Integer prime_to_part(Integer n, std::int64_t p);
int valuation(Integer n, std::int64_t p);

/// Euler phi and the multiplicative order of a mod m (gcd(a, m) = 1).
std::int64_t euler_phi(std::int64_t n);
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);

Integer isqrt(Integer const & n);
bool is_square(Integer const & n, Integer & root);

}  // namespace cmdihedral
