#pragma once

#include <cstdint>

#include "faiscc/channel.hpp"
#include "faiscc/combining.hpp"
#include "faiscc/latency.hpp"
#include "faiscc/scenario.hpp"

namespace faiscc {

struct TaskMask {
  bool comm = true;
  bool sense = true;
};

/// Variable blocks held fixed while antenna positions are searched.
/// Data of a disabled task type must already be zeroed (then its latency
/// contributions vanish identically).
struct FrozenBlocks {
  const CombinerSet* combiners = nullptr;
  const CpuAllocation* alloc = nullptr;
  const SlotData* data = nullptr;
};

/// Full latency evaluation of one candidate layout under frozen blocks.
LatencyReport evaluate_layout(const AntennaLayout& layout, const FrozenBlocks& frozen,
                              const ChannelGeometry& geometry,
                              const ScenarioConfig& config, double t_seconds);

/// Penalized placement objective: exact system total when C2-C4 hold, plus
/// mu * (sum of squared spacing violations + squared threshold excesses).
double placement_fitness(const AntennaLayout& layout, const FrozenBlocks& frozen,
                         const ChannelGeometry& geometry, const ScenarioConfig& config,
                         double t_seconds, double penalty_weight);

/// Penalty weight used by solve_placement: penalty_factor times the system
/// total at the given layout (1 if that total is not finite).
double placement_penalty_weight(const AntennaLayout& layout,
                                const FrozenBlocks& frozen,
                                const ChannelGeometry& geometry,
                                const ScenarioConfig& config, double t_seconds,
                                const PsoSettings& settings);

/// Particle swarm search over the 2M position coordinates. The initial
/// layout is seeded as a particle, region membership is enforced by
/// projection, spacing/threshold constraints by quadratic penalty with a
/// terminal pairwise-separation repair. The returned layout never has a
/// worse penalized fitness than the initial one and satisfies C1 exactly
/// and C2 within 1e-9. Throws InfeasibleError if the initial layout itself
/// is not C1/C2-feasible.
AntennaLayout solve_placement(const AntennaLayout& initial, const FrozenBlocks& frozen,
                              const ChannelGeometry& geometry,
                              const ScenarioConfig& config, const PsoSettings& settings,
                              double t_seconds);

inline constexpr double kSpacingTol = 1e-9;

}  // namespace faiscc
