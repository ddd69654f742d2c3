#pragma once

#include <span>
#include <utility>

#include "schurweyl/partition.hpp"

namespace schurweyl {

/// M_alpha(eta) = sum_i eta_i^alpha. At alpha = 0 counts strictly positive
/// entries (0^0 := 0). Negative entries with non-integral alpha are a domain
/// error.
double power_sum(std::span<const double> eta, double alpha);

/// M_mu(eta) = prod_i M_{mu_i}(eta). Empty partition gives 1.
double power_sum_product(std::span<const double> eta, const Partition& mu);

/// Schur polynomial s_lambda(x), computed via Newton's identities (power sums
/// -> complete homogeneous h_k) and the Jacobi-Trudi determinant. Well-defined
/// for repeated and signed coordinates. Exactly 0 when l(lambda) > |x|.
double schur_eval(const Partition& shape, std::span<const double> x);

/// s_lambda(1^d): number of SSYT of the shape with entries in [d], by the
/// specialization product formula. 0 when l(lambda) > d.
double schur_ones(const Partition& shape, int d);

/// Symmetric-group character chi_lambda(mu), exact, by the Murnaghan-Nakayama
/// border-strip recursion. Requires |lambda| == |mu|.
BigCount character(const Partition& shape, const Partition& cls);

/// Centralizer size z_mu = prod_v v^{m_v} m_v! over distinct parts v of mu.
BigCount centralizer_size(const Partition& mu);

/// p#_mu(lambda) = n^{r_falling} chi_lambda(mu u 1^{n-r}) / dim(lambda) for
/// n = |lambda| >= r = |mu|, else 0. Exact big-integer path.
double p_sharp(const Partition& mu, const Partition& shape);

/// p#_{(k)}(lambda) for a single-part mu, evaluated through one layer of
/// border-strip removals with log-gamma dimension ratios. Handles |lambda| far
/// beyond the exact path (n! never materialized); matches p_sharp((k), .) to
/// 1e-9 relative on the exact range.
double p_sharp_single_cycle(int k, const Partition& shape);

/// Both sides of M_mu(x) = sum_{lambda |- |mu|} chi_lambda(mu) s_lambda(x).
std::pair<double, double> verify_basis_change(const Partition& mu, std::span<const double> x);

/// Both sides of s_mu(z) = sum_{lambda interlacing mu} z_1^{|mu|-|lambda|} s_lambda(z_2..z_d).
std::pair<double, double> verify_branching(const Partition& mu, std::span<const double> z);

}  // namespace schurweyl
