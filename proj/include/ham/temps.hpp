#pragma once

#include <optional>
#include <vector>

namespace ham {

/// Almost-linear uniform mapping: x -> c*x for x < tau, tau -> tau'.
struct UniformMapping {
    int tau = 1;
    int tau_prime = 1;
    int c = 1;
    std::vector<int> table;  // table[x-1] = M(x)

    int operator()(int x) const;  // 0 maps to 0; throws outside [0, tau]
};

/// The mapping with the only viable constant c = ceil(tau'/tau), if
/// c(tau-1) < tau' holds. Throws InputError unless 1 <= tau <= tau'.
std::optional<UniformMapping> find_uniform_mapping(int tau, int tau_prime);

/// A multiset on which the threshold biconditional fails.
struct MappingCounterexample {
    std::vector<int> multiset;  // sorted
    int sum = 0;
    int mapped_sum = 0;
};

/**
 * Decides whether `table` (table[x-1] = M(x)) is a uniform mapping from
 * {1..tau} to {1..tau'} and returns a violating multiset if not.
 *
 * Only multisets of cardinality < tau' can violate: one with sum >= tau but
 * mapped sum < tau' has fewer than tau' elements since every image is >= 1,
 * and one with mapped sum >= tau' but sum < tau has fewer than tau elements.
 * Within that range the search reduces to two unbounded knapsacks over the
 * sums: the least mapped sum reaching tau, and the greatest mapped sum
 * staying below tau.
 */
std::optional<MappingCounterexample> find_mapping_counterexample(const std::vector<int>& table, int tau,
                                                                 int tau_prime);
bool is_uniform_mapping_oracle(const std::vector<int>& table, int tau, int tau_prime);

/// Literal enumeration of all multisets of cardinality < tau'; exponential,
/// kept to cross-check the knapsack oracle on small instances.
bool is_uniform_mapping_exhaustive(const std::vector<int>& table, int tau, int tau_prime);

/// c = M(1); throws InputError if `table` fails the oracle.
UniformMapping almost_linear_from(const std::vector<int>& table, int tau, int tau_prime);

/// All tau' in [tau, limit] without a uniform mapping from tau.
std::vector<int> no_mapping_gaps(int tau, int limit);

/// (tau-1) * ceil(tau'/tau) >= tau'. Requires 1 < tau < tau' and no mapping.
bool check_gap_implication(int tau, int tau_prime);

}  // namespace ham
