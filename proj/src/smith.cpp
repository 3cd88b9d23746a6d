#include "artin/smith.hpp"

#include <climits>

namespace artin {

long IntegerRing::norm(const Element& a) const {
  Integer m = abs(a);
  return m.fits_slong_p() ? m.get_si() : LONG_MAX;
}

std::pair<Integer, Integer> IntegerRing::divmod(const Element& a, const Element& b) const {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

SmithForm<Integer> integer_snf(const Matrix<Integer>& a, bool with_transforms) {
  return smith_normal_form(IntegerRing{}, a, with_transforms);
}

}  // namespace artin
