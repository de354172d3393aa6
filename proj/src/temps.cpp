#include "ham/temps.hpp"

#include "ham/core.hpp"

#include <algorithm>
#include <limits>

namespace ham {

int UniformMapping::operator()(int x) const {
    if (x == 0) return 0;
    if (x < 0 || x > tau) throw InputError("strength " + std::to_string(x) + " outside the mapping domain");
    return table[x - 1];
}

std::optional<UniformMapping> find_uniform_mapping(int tau, int tau_prime) {
    if (tau < 1) throw InputError("temperature must be positive");
    if (tau > tau_prime) throw InputError("no mappings downward: tau " + std::to_string(tau) + " > tau' " +
                                          std::to_string(tau_prime));
    // c(tau-1) < tau' <= c*tau: the right inequality forces c >= ceil(tau'/tau)
    // and the left one only gets harder as c grows.
    const int c = (tau_prime + tau - 1) / tau;
    if (static_cast<long>(c) * (tau - 1) >= tau_prime) return std::nullopt;
    UniformMapping m{tau, tau_prime, c, {}};
    for (int x = 1; x < tau; ++x) m.table.push_back(c * x);
    m.table.push_back(tau_prime);
    return m;
}

namespace {

void check_table(const std::vector<int>& table, int tau, int tau_prime) {
    if (tau < 1 || tau_prime < 1) throw InputError("temperatures must be positive");
    if (static_cast<int>(table.size()) != tau)
        throw InputError("mapping must be total on {1.." + std::to_string(tau) + "}, got " +
                         std::to_string(table.size()) + " values");
    for (int v : table)
        if (v < 1 || v > tau_prime)
            throw InputError("mapping value " + std::to_string(v) + " outside {1.." + std::to_string(tau_prime) + "}");
}

}  // namespace

std::optional<MappingCounterexample> find_mapping_counterexample(const std::vector<int>& table, int tau,
                                                                 int tau_prime) {
    check_table(table, tau, tau_prime);
    const int inf = std::numeric_limits<int>::max() / 2;

    // lo[s]: least mapped sum of a multiset whose sum is >= s
    std::vector<int> lo(tau + 1, inf), lo_pick(tau + 1, 0);
    lo[0] = 0;
    for (int s = 1; s <= tau; ++s)
        for (int x = 1; x <= tau; ++x) {
            int v = table[x - 1] + lo[std::max(0, s - x)];
            if (v < lo[s]) {
                lo[s] = v;
                lo_pick[s] = x;
            }
        }
    if (lo[tau] < tau_prime) {
        MappingCounterexample w;
        for (int s = tau; s > 0; s = std::max(0, s - lo_pick[s])) w.multiset.push_back(lo_pick[s]);
        std::sort(w.multiset.begin(), w.multiset.end());
        for (int x : w.multiset) {
            w.sum += x;
            w.mapped_sum += table[x - 1];
        }
        return w;
    }

    // hi[s]: greatest mapped sum of a multiset whose sum is <= s
    std::vector<int> hi(tau, 0), hi_pick(tau, 0);
    for (int s = 1; s < tau; ++s) {
        hi[s] = hi[s - 1];
        for (int x = 1; x <= s; ++x) {
            int v = table[x - 1] + hi[s - x];
            if (v > hi[s]) {
                hi[s] = v;
                hi_pick[s] = x;
            }
        }
    }
    if (tau > 1 && hi[tau - 1] >= tau_prime) {
        MappingCounterexample w;
        int s = tau - 1;
        while (s > 0) {
            if (hi_pick[s] == 0 || hi[s] == hi[s - 1]) {
                --s;
                continue;
            }
            w.multiset.push_back(hi_pick[s]);
            s -= hi_pick[s];
        }
        std::sort(w.multiset.begin(), w.multiset.end());
        for (int x : w.multiset) {
            w.sum += x;
            w.mapped_sum += table[x - 1];
        }
        return w;
    }
    return std::nullopt;
}

bool is_uniform_mapping_oracle(const std::vector<int>& table, int tau, int tau_prime) {
    return !find_mapping_counterexample(table, tau, tau_prime).has_value();
}

namespace {

// Non-decreasing sequences over {1..tau} of length < max_len.
bool enumerate_multisets(const std::vector<int>& table, int tau, int tau_prime, int max_len, int min_elem, int len,
                         int sum, int mapped) {
    if ((sum >= tau) != (mapped >= tau_prime)) return false;
    if (len + 1 >= max_len) return true;
    for (int x = min_elem; x <= tau; ++x)
        if (!enumerate_multisets(table, tau, tau_prime, max_len, x, len + 1, sum + x, mapped + table[x - 1]))
            return false;
    return true;
}

}  // namespace

bool is_uniform_mapping_exhaustive(const std::vector<int>& table, int tau, int tau_prime) {
    check_table(table, tau, tau_prime);
    // the empty multiset satisfies the biconditional trivially
    for (int x = 1; x <= tau; ++x)
        if (!enumerate_multisets(table, tau, tau_prime, tau_prime, x, 1, x, table[x - 1])) return false;
    return true;
}

UniformMapping almost_linear_from(const std::vector<int>& table, int tau, int tau_prime) {
    if (auto w = find_mapping_counterexample(table, tau, tau_prime)) {
        std::string ms;
        for (int x : w->multiset) ms += (ms.empty() ? "" : ",") + std::to_string(x);
        throw InputError("not a uniform mapping: multiset {" + ms + "} has sum " + std::to_string(w->sum) +
                         " and mapped sum " + std::to_string(w->mapped_sum));
    }
    UniformMapping m{tau, tau_prime, table[0], {}};
    for (int x = 1; x < tau; ++x) m.table.push_back(m.c * x);
    m.table.push_back(tau_prime);
    return m;
}

std::vector<int> no_mapping_gaps(int tau, int limit) {
    std::vector<int> out;
    for (int tp = tau; tp <= limit; ++tp)
        if (!find_uniform_mapping(tau, tp)) out.push_back(tp);
    return out;
}

bool check_gap_implication(int tau, int tau_prime) {
    if (!(1 < tau && tau < tau_prime))
        throw InputError("gap implication needs 1 < tau < tau'");
    if (find_uniform_mapping(tau, tau_prime))
        throw InputError("a uniform mapping exists from " + std::to_string(tau) + " to " + std::to_string(tau_prime));
    long lhs = static_cast<long>(tau - 1) * ((tau_prime + tau - 1) / tau);
    return lhs >= tau_prime;
}

}  // namespace ham
