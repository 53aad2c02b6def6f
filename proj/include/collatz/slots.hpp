#pragma once

#include <collatz/exact_ratio.hpp>
#include <collatz/level_sets.hpp>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace collatz {

/// [sigma0 * 2^nu / 6^kappa, 2^nu / 6^kappa]
struct Slot {
    std::size_t nu = 0;
    std::size_t kappa = 0;
    ExactRatio lower;
    ExactRatio upper;
    ExactRatio sigma0_used;

    bool contains(const ExactRatio& x) const { return lower <= x && x <= upper; }
};

/// Throws InvalidInput unless 0 < sigma0 <= 1.
Slot slot_bounds(std::size_t nu, std::size_t kappa, const ExactRatio& sigma0);

struct SlotEntry {
    BigNat n;
    std::size_t kappa = 0;
    bool in_slot = false;
    ExactRatio ratio;  ///< n * 6^kappa / 2^nu
};

struct SlotAssignment {
    std::size_t nu = 0;
    ExactRatio sigma0_used;
    std::vector<SlotEntry> entries;
    bool contained = false;
    /// ratio <= 1 for every entry. Holds unconditionally; false means a bug.
    bool upper_bound_holds = false;
};

/// Maps every element to S_{nu, kappa(n)}. A cap overrun is a logic_error since
/// level-set members reach 1 by construction.
SlotAssignment assign_and_verify(const LevelSet& level, const ExactRatio& sigma0,
                                 std::size_t cap = kDefaultCap);

struct SlotConditions {
    bool disjoint = false;   ///< sigma0 > 1/6
    bool separated = false;  ///< sigma0 > 1/2
    /// Exact interval checks on the (nu <= grid_nu, 1 <= kappa <= nu) grid; only
    /// evaluated when the matching condition holds, otherwise nullopt.
    std::optional<bool> disjoint_grid_verified;
    std::optional<bool> separation_grid_verified;
};

inline constexpr std::size_t kSlotGridNu = 30;

SlotConditions check_slot_conditions(const ExactRatio& sigma0, std::size_t grid_nu = kSlotGridNu);

enum class ClusterMethod { by_kappa, by_gap };

std::string_view to_string(ClusterMethod m);

struct ClusterPartition {
    std::size_t nu = 0;
    ClusterMethod method = ClusterMethod::by_kappa;
    std::optional<ExactRatio> gap_factor;
    std::vector<std::vector<BigNat>> clusters;
    /// by_kappa only: kappa of each cluster, descending.
    std::vector<std::size_t> kappas;
    /// by_kappa only: two kappa groups overlap in value order.
    bool interleaved = false;

    std::vector<std::size_t> sizes() const;
};

ClusterPartition clusters_by_kappa(const LevelSet& level, std::size_t cap = kDefaultCap);

/// Starts a new cluster at e whenever e > factor * (previous element).
/// Throws InvalidInput unless factor > 1.
ClusterPartition clusters_by_gap(const LevelSet& level, const ExactRatio& factor);

struct PartitionComparison {
    bool equal = false;
    std::optional<std::size_t> first_difference;  ///< index of the first differing cluster
};

/// Throws InvalidInput if the partitions cover different element sequences.
PartitionComparison compare_partitions(const ClusterPartition& a, const ClusterPartition& b);

inline ExactRatio default_gap_factor() { return {5, 2}; }

}  // namespace collatz
