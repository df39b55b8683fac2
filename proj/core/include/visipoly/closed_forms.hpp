#ifndef VISIPOLY_CLOSED_FORMS_HPP
#define VISIPOLY_CLOSED_FORMS_HPP

#include <cstddef>
#include <span>

#include "visipoly/class_spec.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/mutual_visibility.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

/// 1 + n x + C(n,2) x^2. n >= 1.
Polynomial poly_path(std::int64_t n);

/// (1 + x)^n. n >= 1.
Polynomial poly_complete(std::int64_t n);

/// Star of order n + 1: x + n x^2 + (1 + x)^n. Holds for every n >= 0,
/// including the degenerate stars K1 (n = 0) and K2 (n = 1).
Polynomial poly_star(std::int64_t n);

/// 1 + n x + C(n,2) x^2 + r3 x^3 with r3 = r_mu_cycle(n). n >= 3.
Polynomial poly_cycle(std::int64_t n);

/// Number of maximum MV sets of C_n:
///   n (n^2 - 1) / 24       for odd n
///   (n - 2) n (n + 8) / 24 for even n
Coefficient r_mu_cycle(std::int64_t n);

/// K_{m,n} for 3 <= min(m,n); arguments are taken in either order. Throws
/// dispatch_error below the hypothesis (star formula for a part of size 1,
/// enumeration for a part of size 2).
Polynomial poly_complete_bipartite(std::int64_t m, std::int64_t n);

/// K_{n,n} special case: C(2n,i) - 2 C(n,i-n) for n+2 <= i <= 2n-2.
Polynomial poly_complete_bipartite_balanced(std::int64_t n);

/// V(G1) + ... + V(Gm) - (m - 1) for a graph whose parts share no edges.
/// Throws parameter_error on an empty list.
Polynomial poly_disconnected(std::span<const Polynomial> parts);

/// One side of a join, with statistics already computed (k_max >= order - 1).
struct JoinOperand {
  std::size_t order = 0;
  bool complete = false;
  VisStats stats;
};

JoinOperand make_join_operand(const Graph &g);

/// Join coefficients from operand statistics, for two non-complete operands
/// of order >= 2 (dispatch_error otherwise). Operands may come in either
/// order. With m <= n:
///
///   i <= m              C(m+n, i)
///   m+1 <= i <= n       sum_{k=0}^{m-1} C(m,k) C(n,i-k) + c_{i-m}(H) + T_{i-m}(H)
///   n+1 <= i <= m+n-2   sum_{k=i-n+1}^{m-1} C(m,k) C(n,i-k)
///                         + c_{i-m}(H) + T_{i-m}(H) + c_{i-n}(G) + T_{i-n}(G)
///   i = m+n-1           c_{n-1}(H) + T_{n-1}(H) + c_{m-1}(G) + T_{m-1}(G)
///
/// where T_k counts MV sets of size k and diameter 2.
Polynomial poly_join_from_stats(const JoinOperand &a, const JoinOperand &b);

/// Visibility polynomial of G v H. Two complete operands give the product
/// (1+x)^m (1+x)^n; two non-complete operands use poly_join_from_stats on
/// freshly computed statistics; exactly one complete operand falls back to
/// enumeration of the built join. dispatch_error when an operand is empty.
Polynomial poly_join(const Graph &g, const Graph &h);

/// Closed form when the family's hypotheses hold, otherwise enumeration of
/// the built graph (which needs order <= 64).
Polynomial poly_for_class(const ClassSpec &spec);

}  // namespace visipoly

#endif
