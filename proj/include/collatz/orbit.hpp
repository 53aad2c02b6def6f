#pragma once

#include <collatz/bignat.hpp>

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace collatz {

inline constexpr std::size_t kDefaultCap = 100000;

/// c(n) = n/2 for even n, 3n+1 for odd n. Throws InvalidInput for n = 0.
BigNat collatz_step(const BigNat& n);

/// The trajectory c^0(n), ..., c^nu(n) = 1 together with its parity bookkeeping.
struct OrbitRecord {
    BigNat n;
    std::vector<BigNat> steps;
    std::size_t nu = 0;
    std::size_t kappa = 0;
    /// c^i(n) for every i whose predecessor c^{i-1}(n) is odd. All are 4 mod 6.
    std::vector<BigNat> odd_images;
    /// set(steps) plus the trivial cycle {1, 2, 4}.
    std::set<BigNat> orbit_set;
};

/// Iterates c from n until it reaches 1, at most `cap` steps.
/// Throws OrbitCapExceeded if 1 is not reached, InvalidInput if n = 0 or cap = 0.
OrbitRecord trajectory(const BigNat& n, std::size_t cap = kDefaultCap);

std::set<BigNat> orbit_set_of(const OrbitRecord& rec);

/// Streaming counterpart of trajectory(): level, odd-step count and log2 of both
/// steadiness products, without materializing the steps. Runs on 64-bit words
/// while the orbit fits and switches to BigNat arithmetic when it does not.
struct OrbitSummary {
    std::size_t nu = 0;
    std::size_t kappa = 0;
    double log2_literal = 0.0;
    double log2_telescoping = 0.0;
};

OrbitSummary summarize_orbit(const BigNat& n, std::size_t cap = kDefaultCap);
OrbitSummary summarize_orbit(std::uint64_t n, std::size_t cap = kDefaultCap);

/// log2((k-1)/k) for k >= 2.
double log2_steadiness_factor(std::uint64_t k);
double log2_steadiness_factor(const BigNat& k);

}  // namespace collatz
