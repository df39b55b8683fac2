#ifndef VISIPOLY_VERIFY_HPP
#define VISIPOLY_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "visipoly/class_spec.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

struct VerifyOutcome {
  std::string label;
  std::size_t order = 0;
  Polynomial closed_form;
  Polynomial pruned;
  std::optional<Polynomial> bruteforce;  ///< absent above the brute-force limit
  bool pass = false;
  std::string error;  ///< non-empty when an engine threw
};

struct VerifyReport {
  std::vector<VerifyOutcome> outcomes;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

/// Closed form (poly_for_class) vs pruned enumeration vs brute force for
/// every spec; brute force runs only up to `bruteforce_limit` vertices.
VerifyReport run_verify(std::span<const ClassSpec> specs, std::size_t bruteforce_limit = 20);

/// Named instance lists: "paper" (every family at desk scale, unions, the
/// worked join example and the two four-vertex collision graphs), "cycles"
/// (C3..C12), "join" (paw v C6 and K3 v K2). Throws parameter_error on an
/// unknown name.
std::vector<ClassSpec> verify_suite(std::string_view name);

/// One PASS/FAIL line per instance.
std::string verify_to_text(const VerifyReport &report);

}  // namespace visipoly

#endif
