#include "dmimage/exact_linalg.hpp"

#include <algorithm>

#include "fraction_free.hpp"

namespace dmimage {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw LinalgError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

std::vector<BigInt> ones_vector(std::size_t n) { return std::vector<BigInt>(n, BigInt(1)); }

RationalVector multiply(const IntMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) throw LinalgError("multiply: vector length does not match column count");
  RationalVector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0 && x[j] != 0) y[i] += m(i, j) * x[j];
  return y;
}

SolveReport solve_exact(const IntMatrix& m, std::span<const BigInt> b) {
  if (b.size() != m.rows())
    throw LinalgError("solve_exact: right-hand side has length " + std::to_string(b.size()) +
                      " but the matrix has " + std::to_string(m.rows()) + " rows");
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  const std::size_t cols = n + 1;
  std::vector<Rational> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * cols + j] = m(i, j);
    a[i * cols + n] = b[i];
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
    const Rational inv = 1 / a[r * cols + c];
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      const Rational f = a[i * cols + c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r * cols + j] != 0) a[i * cols + j] -= f * a[r * cols + j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  SolveReport rep;
  rep.rank = r;
  rep.aug_rank = r;
  for (std::size_t i = r; i < rows; ++i)
    if (a[i * cols + n] != 0) {
      rep.aug_rank = r + 1;
      break;
    }
  rep.solvable = rep.rank == rep.aug_rank;

  std::vector<char> is_pivot(n, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector k(n);
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivot_col[i]] = -a[i * cols + f];
    rep.kernel_basis.push_back(std::move(k));
  }
  if (rep.solvable) {
    RationalVector x(n);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i * cols + n];
    rep.particular = std::move(x);
  }

  // Substitution checks.
  if (rep.rank + rep.kernel_basis.size() != n)
    throw ConsistencyError("solve_exact: rank-nullity violated");
  if (rep.particular) {
    auto y = multiply(m, *rep.particular);
    for (std::size_t i = 0; i < rows; ++i)
      if (y[i] != b[i]) throw ConsistencyError("solve_exact: particular solution fails substitution");
  }
  for (const auto& k : rep.kernel_basis)
    for (const auto& y : multiply(m, k))
      if (y != 0) throw ConsistencyError("solve_exact: kernel vector fails substitution");
  return rep;
}

SolveReport ones_in_image(const IntMatrix& d, bool symmetric) {
  if (!d.square()) throw LinalgError("ones_in_image: matrix must be square");
  if (symmetric && !d.symmetric())
    throw LinalgError("ones_in_image: symmetric flag set on an asymmetric matrix");
  auto ones = ones_vector(d.rows());
  SolveReport rep = solve_exact(d, ones);
  if (symmetric) {
    // im(D) = ker(D^T)^perp = ker(D)^perp.
    bool orthogonal = true;
    for (const auto& k : rep.kernel_basis) {
      Rational s;
      for (const auto& x : k) s += x;
      if (s != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal != rep.solvable)
      throw ConsistencyError("ones_in_image: primal verdict (" + std::string(rep.solvable ? "solvable" : "unsolvable") +
                             ") disagrees with the kernel-orthogonality verdict");
  }
  return rep;
}

SolveReport solve_with_sum(const IntMatrix& m, std::span<const BigInt> b, const Rational& s) {
  if (b.size() != m.rows()) throw LinalgError("solve_with_sum: right-hand side length mismatch");
  const std::size_t rows = m.rows();
  IntMatrix stacked(rows + 1, m.cols());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) stacked(i, j) = m(i, j);
  // <x, 1> = p/q  <=>  q <x, 1> = p.
  for (std::size_t j = 0; j < m.cols(); ++j) stacked(rows, j) = s.get_den();
  std::vector<BigInt> rhs(b.begin(), b.end());
  rhs.push_back(s.get_num());
  return solve_exact(stacked, rhs);
}

namespace {

template <class T>
bool load_matrix(const IntMatrix& m, std::vector<T>& buf) {
  buf.assign(m.rows() * m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, std::int64_t>) {
        if (!m(i, j).fits_slong_p()) return false;
        buf[i * m.cols() + j] = m(i, j).get_si();
      } else {
        buf[i * m.cols() + j] = m(i, j);
      }
    }
  return true;
}

}  // namespace

BigInt determinant_exact(const IntMatrix& m) {
  if (!m.square()) throw LinalgError("determinant_exact: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  auto res = detail::echelon_with_fallback(n, n, n, [&](auto& buf) { return load_matrix(m, buf); });
  if (res.info.rank < n) return 0;
  return res.info.sign * res.last_pivot;
}

std::size_t rank_exact(const IntMatrix& m) {
  auto res = detail::echelon_with_fallback(m.rows(), m.cols(), m.cols(),
                                           [&](auto& buf) { return load_matrix(m, buf); });
  return res.info.rank;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  // Deterministic below 2^64 (BPSW plus Miller-Rabin rounds).
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::size_t rank_mod_p_words(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                             std::uint64_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = powmod(a[r * cols + c], p - 2, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = mulmod(a[i * cols + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t t = mulmod(f, a[r * cols + j], p);
        a[i * cols + j] = a[i * cols + j] >= t ? a[i * cols + j] - t : a[i * cols + j] + p - t;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (!is_prime(p)) throw LinalgError("rank_mod_p: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> a(m.rows() * m.cols());
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      a[i * m.cols() + j] = mpz_fdiv_ui(m(i, j).get_mpz_t(), p);
  return rank_mod_p_words(a, m.rows(), m.cols(), p);
}

std::uint64_t random_prime(std::mt19937_64& rng, int bits) {
  if (bits < 2 || bits > 62) throw LinalgError("random_prime: bits must lie in 2..62");
  for (;;) {
    std::uint64_t c = (rng() >> (64 - bits)) | (1ULL << (bits - 1)) | 1ULL;
    if (is_prime(c)) return c;
  }
}

bool ones_in_image_solvable(const DistanceMatrix& d) {
  return detail::ones_in_image_words(d.data().data(), d.order());
}

SingularityVerdict singularity_check(const IntMatrix& m, std::span<const std::uint64_t> primes) {
  if (!m.square()) throw LinalgError("singularity_check: matrix must be square");
  for (auto p : primes)
    if (rank_mod_p(m, p) == m.rows()) return {false, false};
  return {determinant_exact(m) == 0, true};
}

SingularityVerdict singularity_check(const DistanceMatrix& d, std::span<const std::uint64_t> primes) {
  const auto n = static_cast<std::size_t>(d.order());
  for (auto p : primes) {
    if (!is_prime(p)) throw LinalgError("singularity_check: " + std::to_string(p) + " is not prime");
    std::vector<std::uint64_t> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = static_cast<std::uint64_t>(d.data()[k]) % p;
    if (rank_mod_p_words(a, n, n, p) == n) return {false, false};
  }
  auto res = detail::echelon_with_fallback(n, n, n, [&](auto& buf) {
    buf.assign(n * n, 0);
    for (std::size_t k = 0; k < n * n; ++k) buf[k] = d.data()[k];
    return true;
  });
  return {res.info.rank < n, true};
}

}  // namespace dmimage
