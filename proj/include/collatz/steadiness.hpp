#pragma once

#include <collatz/exact_ratio.hpp>
#include <collatz/orbit.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace collatz {

/// literal: product of (k-1)/k over the orbit set, k = 4 mod 6.
/// telescoping: the same product restricted to the images of odd steps.
enum class SteadinessMode { literal, telescoping };

enum class ModeSelection { literal, telescoping, both };

std::string_view to_string(SteadinessMode mode);
std::string_view to_string(ModeSelection sel);
SteadinessMode parse_steadiness_mode(std::string_view text);
ModeSelection parse_mode_selection(std::string_view text);
std::vector<SteadinessMode> modes_of(ModeSelection sel);

struct SteadinessValue {
    SteadinessMode mode = SteadinessMode::literal;
    ExactRatio exact;
    double log2_approx = 0.0;

    static SteadinessValue from_exact(SteadinessMode mode, ExactRatio exact);

    friend bool operator==(const SteadinessValue&, const SteadinessValue&) = default;
};

SteadinessValue sigma_literal(const OrbitRecord& rec);
SteadinessValue sigma_telescoping(const OrbitRecord& rec);
SteadinessValue sigma(const OrbitRecord& rec, SteadinessMode mode);

/// Sum of log2((k-1)/k) over the mode's factors, accumulated in floating point
/// independently of the exact product.
double sigma_log2(const OrbitRecord& rec, SteadinessMode mode);

struct IdentityVerdict {
    bool holds = false;
    BigNat lhs;  ///< n * 6^kappa * den
    BigNat rhs;  ///< 2^nu * num
};

/// Checks n * 6^kappa * den(s) = 2^nu * num(s) exactly for the telescoping product.
IdentityVerdict verify_level_identity(const OrbitRecord& rec);

/// The same cross-multiplied check applied to the literal orbit-set product.
/// Fails for most n (e.g. n = 5); used to surface the discrepancy.
IdentityVerdict verify_literal_chain(const OrbitRecord& rec);

// ---------------------------------------------------------------------------
// Infimum scanning

enum class DomainKind { integers, levels };

/// Closed range [lo, hi] of start values (integers) or level indices (levels).
struct ScanDomain {
    DomainKind kind = DomainKind::integers;
    std::uint64_t lo = 1;
    std::uint64_t hi = 1;

    std::uint64_t size() const { return hi - lo + 1; }
    friend bool operator==(const ScanDomain&, const ScanDomain&) = default;
};

struct ScanMinimum {
    SteadinessValue value;
    BigNat argmin;

    friend bool operator==(const ScanMinimum&, const ScanMinimum&) = default;
};

inline constexpr int kCheckpointFormatVersion = 1;

/// Resumable state of a scan. One minimum per scanned mode, in the order literal,
/// telescoping.
struct ScanCheckpoint {
    int format_version = kCheckpointFormatVersion;
    ScanDomain domain;
    std::vector<SteadinessMode> modes;
    std::size_t cap = kDefaultCap;
    /// Last fully processed unit; empty before any progress.
    std::optional<std::uint64_t> cursor;
    std::uint64_t processed_count = 0;
    std::vector<BigNat> skipped_cap_exceeded;
    std::vector<ScanMinimum> minima;

    bool complete() const { return cursor && *cursor == domain.hi; }
    const ScanMinimum* minimum(SteadinessMode mode) const;

    friend bool operator==(const ScanCheckpoint&, const ScanCheckpoint&) = default;
};

struct ScanRequest {
    ScanDomain domain;
    ModeSelection modes = ModeSelection::literal;
    std::size_t cap = kDefaultCap;
    unsigned workers = 1;
    /// Units (integers or levels) handed to the workers per round.
    std::uint64_t chunk = 1u << 16;
    /// Stop after this many units in this call (leaves an incomplete checkpoint).
    std::optional<std::uint64_t> limit;
    /// Called after every round with the running checkpoint.
    std::function<void(const ScanCheckpoint&)> on_progress;
};

/// Running exact minimum of the selected steadiness over the tree members of the
/// domain. Candidates are screened in the log domain and confirmed exactly; ties
/// go to the smaller argmin, so the result does not depend on `workers` or `chunk`.
///
/// Throws EmptyDomain when hi < lo or when a completed scan found no tree member,
/// CheckpointError when `resume_from` does not match the request.
ScanCheckpoint scan_min_sigma(const ScanRequest& req,
                              const std::optional<ScanCheckpoint>& resume_from = std::nullopt);

/// Merges complete checkpoints of adjacent disjoint domains (either order).
/// Throws CheckpointError for incompatible inputs.
ScanCheckpoint merge_checkpoints(const ScanCheckpoint& a, const ScanCheckpoint& b);

}  // namespace collatz
