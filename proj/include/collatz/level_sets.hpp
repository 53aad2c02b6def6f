#pragma once

#include <collatz/bignat.hpp>
#include <collatz/orbit.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace collatz {

/// L_nu: every n whose trajectory first reaches 1 after exactly nu steps.
struct LevelSet {
    std::size_t nu = 0;
    std::vector<BigNat> elements;  // strictly ascending

    static LevelSet root() { return {0, {BigNat(1)}}; }

    friend bool operator==(const LevelSet&, const LevelSet&) = default;
};

/// Structural checks that need no orbit computation: strictly ascending, and the
/// maximum is 2^nu. Throws IntegrityError.
void check_level_shape(const LevelSet& level);

/// L_{nu+1} = {2n : n in L_nu} together with {(n-1)/3 : n in L_nu, n > 4, n = 4 mod 6}.
LevelSet next_level(const LevelSet& level);

struct LevelSummary {
    std::vector<std::size_t> cardinalities;  // index = nu
};

using LevelSink = std::function<void(const LevelSet&)>;

/// Emits L_0 ... L_{nu_max} in order; at most two levels are alive at a time.
/// A throwing sink is rethrown as SinkError carrying the level index.
LevelSummary generate_levels(std::size_t nu_max, const LevelSink& sink);

/// Convenience: returns L_nu only.
LevelSet level(std::size_t nu);

struct LevelStats {
    std::size_t count = 0;
    BigNat min;
    BigNat max;
    std::map<std::size_t, std::size_t> kappa_histogram;
};

LevelStats level_stats(const LevelSet& level, std::size_t cap = kDefaultCap);

/// Number of elements n > 4 with n = 4 mod 6, i.e. how many odd predecessors the
/// next level gains.
std::size_t spawning_count(const LevelSet& level);

}  // namespace collatz
