#pragma once

// Fraction-free (Bareiss) row echelon form shared by the exact rank,
// determinant and solvability routines.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace dmimage::detail {

struct WordOverflow {};

inline std::int64_t ff_update(std::int64_t piv, std::int64_t aij, std::int64_t aic,
                              std::int64_t arj, std::int64_t prev) {
  const __int128 num = static_cast<__int128>(piv) * aij - static_cast<__int128>(aic) * arj;
  const __int128 q = num / prev;
  if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min())
    throw WordOverflow{};
  return static_cast<std::int64_t>(q);
}

inline mpz_class ff_update(const mpz_class& piv, const mpz_class& aij, const mpz_class& aic,
                           const mpz_class& arj, const mpz_class& prev) {
  mpz_class t = piv * aij - aic * arj;
  mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return t;
}

template <class T>
struct Echelon {
  std::size_t rank = 0;
  /// A row with zero coefficient part has a nonzero entry in the trailing
  /// (non-pivot) columns.
  bool inconsistent = false;
  int sign = 1;
};

/// Eliminates in place. Pivots are searched only in the first `pivot_cols`
/// columns; the remaining columns are carried along as right-hand sides.
/// After step k every entry is a (k+1)-minor of the input, so each division
/// by the previous pivot is exact.
template <class T>
Echelon<T> fraction_free_echelon(std::vector<T>& a, std::size_t rows, std::size_t cols,
                                 std::size_t pivot_cols) {
  Echelon<T> out;
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      out.sign = -out.sign;
    }
    const T piv = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const T aic = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i * cols + j] = ff_update(piv, a[i * cols + j], aic, a[r * cols + j], prev);
      a[i * cols + c] = 0;
    }
    // Rows above r keep their pre-step values; only the trailing block matters.
    prev = piv;
    ++r;
  }
  out.rank = r;
  for (std::size_t i = r; i < rows && !out.inconsistent; ++i)
    for (std::size_t j = pivot_cols; j < cols; ++j)
      if (a[i * cols + j] != 0) {
        out.inconsistent = true;
        break;
      }
  return out;
}

/// Runs the echelon form on machine words, retrying with GMP on overflow.
/// `load` fills a vector<T> with the row-major input.
template <class Load>
auto echelon_with_fallback(std::size_t rows, std::size_t cols, std::size_t pivot_cols,
                           Load&& load) {
  struct Result {
    Echelon<mpz_class> info;
    mpz_class last_pivot;
  };
  Result res;
  try {
    std::vector<std::int64_t> w;
    if (load(w)) {
      auto e = fraction_free_echelon(w, rows, cols, pivot_cols);
      res.info = {e.rank, e.inconsistent, e.sign};
      if (rows > 0 && cols > 0) res.last_pivot = w[(rows - 1) * cols + (cols - 1)];
      return res;
    }
  } catch (const WordOverflow&) {
  }
  std::vector<mpz_class> big;
  load(big);
  res.info = fraction_free_echelon(big, rows, cols, pivot_cols);
  if (rows > 0 && cols > 0) res.last_pivot = big[(rows - 1) * cols + (cols - 1)];
  return res;
}

/// Exact solvability of D x = 1 for a small row-major integer matrix.
inline bool ones_in_image_words(const std::int32_t* d, int n) {
  const std::size_t cols = static_cast<std::size_t>(n) + 1;
  auto res = echelon_with_fallback(n, cols, n, [&](auto& buf) {
    buf.assign(n * cols, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) buf[i * cols + j] = d[i * n + j];
      buf[i * cols + n] = 1;
    }
    return true;
  });
  return !res.info.inconsistent;
}

}  // namespace dmimage::detail
