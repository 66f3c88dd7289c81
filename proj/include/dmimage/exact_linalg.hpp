#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dmimage/int_matrix.hpp"

namespace dmimage {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "p/q" with q > 0 and gcd(p, q) = 1; integers render as "p/1".
std::string to_string(const Rational& r);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation contradicted itself (substitution failure, or the
/// primal and dual image-membership verdicts disagree). Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SolveReport {
  bool solvable = false;
  std::optional<RationalVector> particular;
  std::vector<RationalVector> kernel_basis;
  std::size_t rank = 0;
  std::size_t aug_rank = 0;
};

std::vector<BigInt> ones_vector(std::size_t n);

/// Rational Gauss-Jordan on [M | b]. Pivots are the first nonzero entry in
/// each column scanning rows top-down; free variables are zero in the
/// particular solution and the kernel basis has one vector per free column.
/// Every output is checked by substitution.
SolveReport solve_exact(const IntMatrix& m, std::span<const BigInt> b);

/// solve_exact(d, 1). With `symmetric`, the verdict is also derived from
/// the kernel (1 is in the image iff it is orthogonal to ker d) and the two
/// must agree.
SolveReport ones_in_image(const IntMatrix& d, bool symmetric);

/// Solves [m; 1^T] x = [b; s].
SolveReport solve_with_sum(const IntMatrix& m, std::span<const BigInt> b, const Rational& s);

/// Bareiss elimination; machine-word arithmetic until an intermediate
/// would overflow, then GMP.
BigInt determinant_exact(const IntMatrix& m);
std::size_t rank_exact(const IntMatrix& m);

bool is_prime(std::uint64_t p);
/// Rank over GF(p). Throws LinalgError if p is not prime.
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);
/// Uniform prime with exactly `bits` bits.
std::uint64_t random_prime(std::mt19937_64& rng, int bits = 30);

/// Exact image-membership verdict for 1 without building a SolveReport:
/// compares rank(D) with rank([D | 1]).
bool ones_in_image_solvable(const DistanceMatrix& d);

struct SingularityVerdict {
  bool singular = false;
  /// True when every modular rank was deficient and the exact determinant
  /// had to be computed.
  bool exact_confirmation = false;
};

/// Full rank modulo any of `primes` certifies nonsingularity; otherwise the
/// exact determinant decides.
SingularityVerdict singularity_check(const IntMatrix& m, std::span<const std::uint64_t> primes);
SingularityVerdict singularity_check(const DistanceMatrix& d, std::span<const std::uint64_t> primes);

/// Exact M * x.
RationalVector multiply(const IntMatrix& m, std::span<const Rational> x);

}  // namespace dmimage
