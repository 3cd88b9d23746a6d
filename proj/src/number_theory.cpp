#include "artin/number_theory.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "artin/error.hpp"

namespace artin {

// Miller-Rabin with the first twelve prime bases, deterministic below 2^64.
bool is_prime(std::uint64_t n) {
  constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  auto mul = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  std::uint64_t d = n - 1;
  int s = 0;
  for (; d % 2 == 0; d /= 2) ++s;
  for (auto b : kBases) {
    std::uint64_t x = 1, base = b, e = d;
    for (; e > 0; e >>= 1, base = mul(base, base)) {
      if (e & 1) x = mul(x, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mul(x, x);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t r, std::uint64_t p) {
  if (std::gcd(r, p) != 1) throw Error(ErrorCode::InvariantBreach, "order of a non-unit");
  std::uint64_t x = r % p;
  std::uint64_t k = 1;
  while (x != 1 % p) {
    x = x * r % p;
    ++k;
  }
  return k;
}

PrimeWithRoot prime_with_root(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::SchemaError, "root of unity of order 0");
  std::uint64_t p = n + 1;
  while (!is_prime(p)) p += n;
  for (std::uint64_t r = 1; r < p; ++r) {
    if (multiplicative_order(r, p) == n) return {p, r};
  }
  throw Error(ErrorCode::InvariantBreach, "no root of the required order");
}

namespace {

std::vector<Integer> compute_cyclotomic(unsigned m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<Integer> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<Integer> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      Integer c = poly[i];  // divisor is monic
      quotient[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw Error(ErrorCode::SchemaError, "cyclotomic polynomial of index 0");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);
  std::lock_guard lock(mutex);
  cache.emplace(m, poly);
  return poly;
}

}  // namespace artin
