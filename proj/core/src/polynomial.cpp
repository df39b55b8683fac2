#include "visipoly/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "visipoly/errors.hpp"

namespace visipoly {

Coefficient binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Coefficient result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Polynomial::Polynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto &c : coeffs_) {
    if (c < 0) throw parameter_error("polynomial coefficients must be nonnegative");
  }
  trim();
}

Polynomial::Polynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) {
    if (c < 0) throw parameter_error("polynomial coefficients must be nonnegative");
    coeffs_.emplace_back(c);
  }
  trim();
}

Polynomial Polynomial::from_counts(std::span<const std::uint64_t> counts) {
  std::vector<Coefficient> coeffs(counts.begin(), counts.end());
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::binomial_row(std::int64_t n) {
  if (n < 0) throw parameter_error("binomial_row: negative exponent");
  std::vector<Coefficient> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  Coefficient c = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    coeffs.push_back(c);
    c = c * (n - k) / (k + 1);
  }
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coefficient Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Coefficient{0};
}

const Coefficient &Polynomial::leading() const {
  if (coeffs_.empty()) throw precondition_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial add(const Polynomial &p, const Polynomial &q) {
  const auto &a = p.coefficients();
  const auto &b = q.coefficients();
  std::vector<Coefficient> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return Polynomial(std::move(out));
}

Polynomial multiply(const Polynomial &p, const Polynomial &q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto &a = p.coefficients();
  const auto &b = q.coefficients();
  std::vector<Coefficient> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

Polynomial subtract_scalar(const Polynomial &p, const Coefficient &k) {
  if (k < 0) throw parameter_error("subtract_scalar: negative scalar");
  auto coeffs = p.coefficients();
  if (coeffs.empty() ? k != 0 : coeffs[0] < k) {
    throw precondition_error("subtract_scalar: constant term smaller than the scalar");
  }
  if (!coeffs.empty()) coeffs[0] -= k;
  return Polynomial(std::move(coeffs));
}

Coefficient evaluate(const Polynomial &p, const Coefficient &x) {
  Coefficient acc = 0;
  const auto &c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_canonical_string(const Polynomial &p) {
  std::string out = "[";
  bool first = true;
  for (const auto &c : p.coefficients()) {
    if (!first) out += ',';
    out += c.str();
    first = false;
  }
  out += ']';
  return out;
}

Polynomial parse_canonical(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw format_error("canonical polynomial must be enclosed in brackets", 0);
  }
  std::vector<Coefficient> coeffs;
  std::size_t pos = 1;
  const std::size_t end = text.size() - 1;
  if (pos == end) return {};
  while (true) {
    const std::size_t start = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw format_error("expected a decimal coefficient", pos);
    if (text[start] == '0' && pos - start > 1) {
      throw format_error("leading zero in coefficient", start);
    }
    coeffs.emplace_back(std::string(text.substr(start, pos - start)));
    if (pos == end) break;
    if (text[pos] != ',') throw format_error("expected ','", pos);
    ++pos;
  }
  if (coeffs.back() == 0) throw format_error("trailing zero coefficient", end - 1);
  return Polynomial(std::move(coeffs));
}

std::string to_pretty_string(const Polynomial &p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto &c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c[i] != 1) out += c[i].str();
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace visipoly
