#include "bicirc/exact_linear.hpp"

#include <utility>

namespace bicirc {

mpz_class det_exact(const BigMatrix& m) {
  if (m.rows != m.cols)
    throw NotSquare("determinant of a " + std::to_string(m.rows) + "x" +
                    std::to_string(m.cols) + " matrix");
  const long n = m.rows;
  BigMatrix w = m;
  int sign = 1;
  mpz_class prev = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (w(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (long j = k; j < n; ++j) std::swap(w(k, j), w(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        mpz_class num = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  mpz_class det = w(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

ForestCount forest_count_oracle(const BicirculantSpec& spec) {
  return ForestCount{det_exact(forest_matrix(spec))};
}

}  // namespace bicirc
