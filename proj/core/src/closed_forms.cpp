#include "visipoly/closed_forms.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "visipoly/errors.hpp"
#include "visipoly/vis_poly.hpp"

namespace visipoly {

namespace {

void require(bool ok, const std::string &why) {
  if (!ok) throw parameter_error(why);
}

}  // namespace

Polynomial poly_path(std::int64_t n) {
  require(n >= 1, "poly_path: n must be >= 1");
  return Polynomial(std::vector<Coefficient>{1, n, binomial(n, 2)});
}

Polynomial poly_complete(std::int64_t n) {
  require(n >= 1, "poly_complete: n must be >= 1");
  return Polynomial::binomial_row(n);
}

Polynomial poly_star(std::int64_t n) {
  require(n >= 0, "poly_star: n must be >= 0");
  return add(Polynomial({0, 1, n}), Polynomial::binomial_row(n));
}

Coefficient r_mu_cycle(std::int64_t n) {
  require(n >= 3, "r_mu_cycle: n must be >= 3");
  const Coefficient c = n;
  if (n % 2 == 1) return c * (c * c - 1) / 24;
  return (c - 2) * c * (c + 8) / 24;
}

Polynomial poly_cycle(std::int64_t n) {
  require(n >= 3, "poly_cycle: n must be >= 3");
  return Polynomial(std::vector<Coefficient>{1, n, binomial(n, 2), r_mu_cycle(n)});
}

Polynomial poly_complete_bipartite(std::int64_t m, std::int64_t n) {
  if (m > n) std::swap(m, n);
  if (m < 1) throw parameter_error("poly_complete_bipartite: parts must be nonempty");
  if (m == 1) {
    throw dispatch_error("K_{1," + std::to_string(n) + "} is the star S_" + std::to_string(n) +
                         "; use poly_star");
  }
  if (m == 2) {
    throw dispatch_error("K_{2," + std::to_string(n) +
                         "} has no closed form here; enumerate the built graph");
  }
  std::vector<Coefficient> r(static_cast<std::size_t>(m + n - 1));
  for (std::int64_t i = 0; i <= m + n - 2; ++i) {
    Coefficient value = binomial(m + n, i);
    if (i >= m + 2) value -= binomial(n, i - m);
    if (i >= n + 2) value -= binomial(m, i - n);
    r[static_cast<std::size_t>(i)] = value;
  }
  return Polynomial(std::move(r));
}

Polynomial poly_complete_bipartite_balanced(std::int64_t n) {
  if (n < 3) {
    throw dispatch_error("K_{n,n} closed form needs n >= 3; enumerate the built graph");
  }
  std::vector<Coefficient> r(static_cast<std::size_t>(2 * n - 1));
  for (std::int64_t i = 0; i <= 2 * n - 2; ++i) {
    Coefficient value = binomial(2 * n, i);
    if (i >= n + 2) value -= 2 * binomial(n, i - n);
    r[static_cast<std::size_t>(i)] = value;
  }
  return Polynomial(std::move(r));
}

Polynomial poly_disconnected(std::span<const Polynomial> parts) {
  require(!parts.empty(), "poly_disconnected: needs at least one part");
  Polynomial sum;
  for (const auto &p : parts) sum = add(sum, p);
  return subtract_scalar(sum, static_cast<long long>(parts.size()) - 1);
}

JoinOperand make_join_operand(const Graph &g) {
  JoinOperand op;
  op.order = g.order();
  op.complete = g.is_complete();
  op.stats = compute_stats(g, g.order() == 0 ? 0 : static_cast<int>(g.order()) - 1);
  return op;
}

Polynomial poly_join_from_stats(const JoinOperand &a, const JoinOperand &b) {
  const bool swap = a.order > b.order;
  const JoinOperand &small = swap ? b : a;
  const JoinOperand &large = swap ? a : b;
  if (small.complete || large.complete) {
    throw dispatch_error(
        "join formula needs two non-complete operands; use the product law when both are "
        "complete, or enumerate the join when exactly one is");
  }
  if (small.order < 2) {
    throw dispatch_error("join formula needs operands of order >= 2; enumerate the join");
  }
  const auto m = static_cast<std::int64_t>(small.order);
  const auto n = static_cast<std::int64_t>(large.order);
  for (const auto *op : {&small, &large}) {
    if (!op->stats.cliques.contains(static_cast<int>(op->order) - 1)) {
      throw parameter_error("join operand statistics must cover k up to order - 1");
    }
  }

  // Clique plus diameter-2 MV sets of size k: the sets B that can sit next to
  // the whole other operand.
  const auto attachable = [](const JoinOperand &op, std::int64_t k) -> Coefficient {
    const int kk = static_cast<int>(k);
    return Coefficient(op.stats.clique_at(kk)) + Coefficient(op.stats.theta_at(kk, 2));
  };
  const auto cross_sum = [&](std::int64_t i, std::int64_t k_from) {
    Coefficient sum = 0;
    for (std::int64_t k = std::max<std::int64_t>(k_from, 0); k <= m - 1; ++k) {
      sum += binomial(m, k) * binomial(n, i - k);
    }
    return sum;
  };

  std::vector<Coefficient> r(static_cast<std::size_t>(m + n));
  for (std::int64_t i = 0; i <= m + n - 1; ++i) {
    Coefficient value;
    if (i <= m) {
      value = binomial(m + n, i);
    } else if (i <= n) {
      value = cross_sum(i, 0) + attachable(large, i - m);
    } else if (i <= m + n - 2) {
      value = cross_sum(i, i - n + 1) + attachable(large, i - m) + attachable(small, i - n);
    } else {
      value = attachable(large, n - 1) + attachable(small, m - 1);
    }
    r[static_cast<std::size_t>(i)] = value;
  }
  return Polynomial(std::move(r));
}

Polynomial poly_join(const Graph &g, const Graph &h) {
  if (g.order() == 0 || h.order() == 0) {
    throw dispatch_error("join with an empty operand is the other operand; enumerate it directly");
  }
  const bool g_complete = g.is_complete();
  const bool h_complete = h.is_complete();
  if (g_complete && h_complete) {
    return multiply(poly_complete(static_cast<std::int64_t>(g.order())),
                    poly_complete(static_cast<std::int64_t>(h.order())));
  }
  if (g_complete != h_complete) return polynomial_pruned(join(g, h));
  return poly_join_from_stats(make_join_operand(g), make_join_operand(h));
}

Polynomial poly_for_class(const ClassSpec &spec) {
  const auto as_int = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  const auto &v = spec.variant();
  if (const auto *p = std::get_if<family::Path>(&v)) return poly_path(as_int(p->n));
  if (const auto *c = std::get_if<family::Cycle>(&v)) return poly_cycle(as_int(c->n));
  if (const auto *k = std::get_if<family::Complete>(&v)) return poly_complete(as_int(k->n));
  if (const auto *s = std::get_if<family::Star>(&v)) return poly_star(as_int(s->n));
  if (const auto *b = std::get_if<family::CompleteBipartite>(&v)) {
    const auto lo = std::min(b->m, b->n);
    const auto hi = std::max(b->m, b->n);
    if (lo >= 3) return poly_complete_bipartite(as_int(lo), as_int(hi));
    if (lo == 1) return poly_star(as_int(hi));
    return polynomial_pruned(build_class(spec));
  }
  if (const auto *j = std::get_if<family::Join>(&v)) {
    return poly_join(build_class(*j->left), build_class(*j->right));
  }
  if (const auto *u = std::get_if<family::DisjointUnion>(&v)) {
    std::vector<Polynomial> parts;
    parts.reserve(u->parts.size());
    for (const auto &part : u->parts) parts.push_back(poly_for_class(part));
    return poly_disconnected(parts);
  }
  return polynomial_pruned(std::get<family::Raw>(v).graph);
}

}  // namespace visipoly
