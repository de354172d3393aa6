#pragma once

#include "ham/core.hpp"
#include "ham/representation.hpp"
#include "ham/temps.hpp"

#include <string>
#include <vector>

namespace ham {

/// Suffix appended to tile names in a lifted system.
inline constexpr const char* kLiftSuffix = "'";

struct LiftedSystem {
    Tas original;
    Tas lifted;
    UniformMapping mapping;
    RepresentationFunction representation;  // scale 1, lifted tile i -> original tile i
};

/// Rewrites every glue strength s > 0 to M(s). Throws InputError naming the
/// temperature pair when no uniform mapping exists.
LiftedSystem lift_system(const Tas& sys, int tau_prime);

/// Same rewrite with an explicit strength table (table[s-1] replaces s);
/// no validation, used to build deliberately broken lifts.
LiftedSystem lift_with_table(const Tas& sys, int tau_prime, const std::vector<int>& table);

struct LiftDiscrepancy {
    std::string kind;  // "missing-image", "extra-image", "combination-mismatch"
    std::vector<Supertile> original;
    std::vector<Supertile> lifted;
    std::string detail;
};

struct LiftReport {
    int bound = 0;
    std::size_t original_producibles = 0;
    std::size_t lifted_producibles = 0;
    std::size_t pairs_checked = 0;
    std::vector<LiftDiscrepancy> discrepancies;

    bool ok() const { return discrepancies.empty(); }
};

/// Producible sets correspond under the bijection up to `max_size`, and for
/// every original producible pair the combination sets correspond.
LiftReport verify_lift(const LiftedSystem& ls, int max_size);

}  // namespace ham
