#pragma once

#include <cstdint>
#include <vector>

#include "artin/fields.hpp"

namespace artin {

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Multiplicative order of r modulo p (r coprime to p).
std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t p);

struct PrimeWithRoot {
  std::uint64_t p;
  std::uint64_t root;  // element of exact multiplicative order n in F_p

  bool operator==(const PrimeWithRoot&) const = default;
};

// Smallest prime p = 1 mod n together with the smallest residue of exact
// order n modulo p.
PrimeWithRoot prime_with_root(std::uint64_t n);

// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

}  // namespace artin
