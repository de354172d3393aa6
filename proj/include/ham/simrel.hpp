#pragma once

#include "ham/core.hpp"
#include "ham/engine.hpp"
#include "ham/representation.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ham {

enum class Relation { EquivalentProductions, Follows, WeaklyModels, StronglyModels, CleanMapping };
enum class RelationStatus { NotChecked, Verified, Violated };

const char* relation_name(Relation r);
const char* status_name(RelationStatus s);

/// Obstruction classes for strong-modeling failures, judged at the placement
/// that lines up the block grids of both operands.
inline constexpr const char* kStericObstruction = "steric";
inline constexpr const char* kGlueMismatch = "glue-mismatch";
inline constexpr const char* kWeakSeam = "insufficient-strength";

struct SimWitness {
    Relation relation = Relation::EquivalentProductions;
    std::string kind;
    std::vector<Supertile> simulator;  // simulator supertiles involved, in role order
    std::vector<Supertile> simulated;  // simulated supertiles involved
    std::optional<Vec2> translation;   // second simulator operand relative to the first
    std::optional<int> seam;           // seam strength at that translation
    std::optional<Vec2> block;         // offending block, for fuzz
    std::string detail;
};

struct SimCheckOptions {
    int max_size = 0;                           // simulated bound N
    int path_cap = 0;                           // reachability steps; 0 = 4*m*m
    std::size_t max_simulator_items = 4000000;  // enumeration guard
};

struct SimCheckReport {
    int bound = 0;
    int simulator_bound = 0;
    int path_cap = 0;
    int scale = 1;
    std::map<Relation, RelationStatus> relations;
    std::vector<SimWitness> witnesses;
    std::size_t simulator_producibles = 0;
    std::size_t simulated_producibles = 0;
    std::size_t simulator_steps = 0;
    std::size_t simulated_steps = 0;
    std::vector<std::string> notes;

    RelationStatus status(Relation r) const;
    bool ok() const;  // no checked relation violated
};

/**
 * Bounded checker for the simulation relations between a simulator system
 * and a simulated one under an m-block representation function.
 *
 * Simulated supertiles are bounded by N tiles and simulator supertiles by
 * N*m*m. A step's operands respect the bounds, its result may not, so ladder
 * formation is in scope even when no full ladder fits the bound. Growth
 * "a' ->_U a''" is searched within the simulator producibles over at most
 * path_cap image-preserving steps.
 */
class SimulationChecker {
public:
    SimulationChecker(const Tas& simulator, const Tas& simulated, const RepresentationFunction& rep,
                      const SimCheckOptions& opts);
    ~SimulationChecker();
    SimulationChecker(const SimulationChecker&) = delete;
    SimulationChecker& operator=(const SimulationChecker&) = delete;

    /// Runs the check once; later calls return the cached status.
    RelationStatus check(Relation r);
    const SimCheckReport& report() const;

    const ProducibleSet& simulator_producibles() const;
    const ProducibleSet& simulated_producibles() const;
    /// Image of a simulator producible; nullopt when it represents nothing.
    std::optional<Supertile> image_of(std::uint32_t simulator_item) const;
    const SupertileImage& image_info(std::uint32_t simulator_item) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

SimCheckReport check_equivalent_productions(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                            int max_size);
SimCheckReport check_follows(const Tas& sim, const Tas& simd, const RepresentationFunction& rep, int max_size);
SimCheckReport check_weakly_models(const Tas& sim, const Tas& simd, const RepresentationFunction& rep, int max_size);
SimCheckReport check_strongly_models(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                     int max_size);
SimCheckReport check_clean_mapping_all(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                       int max_size);

enum class SimMode { Standard, Strong };

/// Standard: equivalent productions, follows, weakly models, clean mapping.
/// Strong additionally checks strongly models.
SimCheckReport check_simulation(const Tas& sim, const Tas& simd, const RepresentationFunction& rep,
                                const SimCheckOptions& opts, SimMode mode);

}  // namespace ham
