#ifndef APN_POLY_HPP
#define APN_POLY_HPP

#include "apn/field.hpp"

#include <functional>
#include <vector>

namespace apn::poly {

/// True iff x^{q+1} + x + alpha (q = 2^k) has a root in the field.
/// Requires gcd(k, m) = 1; throws std::invalid_argument otherwise.
bool phi_has_root(const Field& f, unsigned k, Elt alpha);

/// All alpha for which x^{q+1} + x + alpha is rootless, ascending.
/// Nonempty for gcd(k, m) = 1 (Bluher); throws std::logic_error if not.
std::vector<Elt> find_good_alphas(const Field& f, unsigned k);

/// Self-test: phi_{q,alpha} and phi_{q,alpha^2} are rootless together.
bool square_root_closure_check(const Field& f, unsigned k, Elt alpha);

/// Is x -> a x^{q^2} + b x^q + c x a bijection? (kernel triviality)
bool linearized_is_permutation(const Field& f, Elt a, Elt b, Elt c, unsigned k);

/// Kernel-triviality test for an arbitrary GF(2)-linear map.
bool linear_map_is_permutation(const Field& f, const std::function<Elt(Elt)>& map);

/// Root structure of z^3 + a z + b, b != 0.
struct CubicReport {
    enum class Branch { one_root, three_roots, no_roots };
    int root_count = 0;
    std::vector<Elt> roots;
    Branch branch = Branch::one_root;
};

/// Classifies z^3 + a z + b by the trace/cube criterion, then recovers the
/// roots by exhaustive scan and cross-checks the predicted count
/// (std::logic_error on disagreement). If m is odd the quadratic resolvent
/// lives in GF(2^{2m}); pass `ext` to reuse a prebuilt extension.
CubicReport cubic_roots(const Field& f, Elt a, Elt b, const Field* ext = nullptr);

/// Exhaustive check that
///   a^3 + alpha b a^2 + (alpha^2 b^2 + b^2 + 1) a + alpha^3 b^3 + alpha b^2 + alpha = 0
/// has exactly the solution (a, b) = (alpha, 1).
bool lemma6_unique_solution(const Field& f, Elt alpha);

/// Some beta with beta^2 + beta + 1 = 1/alpha^2; throws std::domain_error if
/// the trace condition fails and no solution exists.
Elt beta_decomposition(const Field& f, Elt alpha);

} // namespace apn::poly

#endif
