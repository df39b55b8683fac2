#ifndef VISIPOLY_POLYNOMIAL_HPP
#define VISIPOLY_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace visipoly {

/// Exact arbitrary-precision integer used for every coefficient.
using Coefficient = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when k < 0 or k > n.
Coefficient binomial(std::int64_t n, std::int64_t k);

/// Polynomial with nonnegative integer coefficients, indexed by degree.
///
/// Coefficient vectors are kept trimmed: the zero polynomial has no
/// coefficients and every other polynomial has a nonzero leading entry, so
/// structural equality is polynomial equality.
class Polynomial {
public:
  Polynomial() = default;

  /// Throws parameter_error on a negative coefficient.
  explicit Polynomial(std::vector<Coefficient> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial from_counts(std::span<const std::uint64_t> counts);

  /// (1 + x)^n
  static Polynomial binomial_row(std::int64_t n);

  const std::vector<Coefficient> &coefficients() const noexcept { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Zero beyond the degree.
  Coefficient coefficient(std::size_t i) const;
  const Coefficient &leading() const;

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
  void trim();

  std::vector<Coefficient> coeffs_;
};

Polynomial add(const Polynomial &p, const Polynomial &q);
Polynomial multiply(const Polynomial &p, const Polynomial &q);

/// p - k. Requires the constant term to be at least k (precondition_error
/// otherwise).
Polynomial subtract_scalar(const Polynomial &p, const Coefficient &k);

Coefficient evaluate(const Polynomial &p, const Coefficient &x);

inline int degree(const Polynomial &p) noexcept { return p.degree(); }
inline Coefficient coefficient(const Polynomial &p, std::size_t i) { return p.coefficient(i); }

inline Polynomial operator+(const Polynomial &p, const Polynomial &q) { return add(p, q); }
inline Polynomial operator*(const Polynomial &p, const Polynomial &q) { return multiply(p, q); }

/// "[c0,c1,...,ck]" in decimal, ascending degree, no whitespace. "[]" is the
/// zero polynomial.
std::string to_canonical_string(const Polynomial &p);

/// Inverse of to_canonical_string. Rejects whitespace, signs and trailing
/// zeros (format_error with byte offset).
Polynomial parse_canonical(std::string_view text);

/// "1 + 4x + 6x^2 + 4x^3"; "0" for the zero polynomial.
std::string to_pretty_string(const Polynomial &p);

}  // namespace visipoly

#endif
