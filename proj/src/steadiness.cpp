#include <collatz/steadiness.hpp>

#include <collatz/level_sets.hpp>

#include "detail/compensated_sum.hpp"

#include <algorithm>
#include <exception>
#include <span>
#include <thread>

namespace collatz {

std::string_view to_string(SteadinessMode mode) {
    return mode == SteadinessMode::literal ? "literal" : "telescoping";
}

std::string_view to_string(ModeSelection sel) {
    switch (sel) {
        case ModeSelection::literal: return "literal";
        case ModeSelection::telescoping: return "telescoping";
        case ModeSelection::both: return "both";
    }
    return "?";
}

SteadinessMode parse_steadiness_mode(std::string_view text) {
    if (text == "literal") return SteadinessMode::literal;
    if (text == "telescoping") return SteadinessMode::telescoping;
    throw InvalidInput("unknown steadiness mode '" + std::string(text) + "'");
}

ModeSelection parse_mode_selection(std::string_view text) {
    if (text == "both") return ModeSelection::both;
    return parse_steadiness_mode(text) == SteadinessMode::literal ? ModeSelection::literal
                                                                  : ModeSelection::telescoping;
}

std::vector<SteadinessMode> modes_of(ModeSelection sel) {
    switch (sel) {
        case ModeSelection::literal: return {SteadinessMode::literal};
        case ModeSelection::telescoping: return {SteadinessMode::telescoping};
        case ModeSelection::both: return {SteadinessMode::literal, SteadinessMode::telescoping};
    }
    return {};
}

SteadinessValue SteadinessValue::from_exact(SteadinessMode mode, ExactRatio exact) {
    const double l = exact.log2();
    return {mode, std::move(exact), l};
}

SteadinessValue sigma_literal(const OrbitRecord& rec) {
    ExactRatio p = ExactRatio::one();
    for (const BigNat& k : rec.orbit_set.empty() ? orbit_set_of(rec) : rec.orbit_set)
        if (k.mod(6) == 4) p.mul_steadiness_factor(k);
    return SteadinessValue::from_exact(SteadinessMode::literal, std::move(p));
}

SteadinessValue sigma_telescoping(const OrbitRecord& rec) {
    ExactRatio p = ExactRatio::one();
    for (const BigNat& k : rec.odd_images) p.mul_steadiness_factor(k);
    return SteadinessValue::from_exact(SteadinessMode::telescoping, std::move(p));
}

SteadinessValue sigma(const OrbitRecord& rec, SteadinessMode mode) {
    return mode == SteadinessMode::literal ? sigma_literal(rec) : sigma_telescoping(rec);
}

double sigma_log2(const OrbitRecord& rec, SteadinessMode mode) {
    detail::CompensatedSum sum;
    if (mode == SteadinessMode::telescoping) {
        for (const BigNat& k : rec.odd_images) sum.add(log2_steadiness_factor(k));
    } else {
        for (const BigNat& k : rec.orbit_set.empty() ? orbit_set_of(rec) : rec.orbit_set)
            if (k.mod(6) == 4) sum.add(log2_steadiness_factor(k));
    }
    return sum.value();
}

namespace {

IdentityVerdict cross_check(const OrbitRecord& rec, const ExactRatio& s) {
    IdentityVerdict v;
    v.lhs = rec.n * BigNat::pow(6, rec.kappa) * s.den();
    v.rhs = BigNat::pow2(rec.nu) * s.num();
    v.holds = v.lhs == v.rhs;
    return v;
}

}  // namespace

IdentityVerdict verify_level_identity(const OrbitRecord& rec) {
    return cross_check(rec, sigma_telescoping(rec).exact);
}

IdentityVerdict verify_literal_chain(const OrbitRecord& rec) {
    return cross_check(rec, sigma_literal(rec).exact);
}

// ---------------------------------------------------------------------------

const ScanMinimum* ScanCheckpoint::minimum(SteadinessMode mode) const {
    for (const ScanMinimum& m : minima)
        if (m.value.mode == mode) return &m;
    return nullptr;
}

namespace {

// Log-domain candidates within this margin of the current minimum get an exact check.
// The streaming sum is accurate to ~1e-12, so nothing below the minimum is missed.
constexpr double kScreenMargin = 1e-9;

bool better(const ScanMinimum& candidate, const ScanMinimum& incumbent) {
    const auto c = candidate.value.exact <=> incumbent.value.exact;
    return c < 0 || (c == 0 && candidate.argmin < incumbent.argmin);
}

/// Per-mode running minima during a scan, indexed like `modes`.
struct Partial {
    std::vector<std::optional<ScanMinimum>> best;
    std::vector<BigNat> skipped;
    std::uint64_t processed = 0;

    explicit Partial(std::size_t n_modes) : best(n_modes) {}

    void absorb(Partial&& other) {
        for (std::size_t i = 0; i < best.size(); ++i) {
            if (!other.best[i]) continue;
            if (!best[i] || better(*other.best[i], *best[i])) best[i] = std::move(other.best[i]);
        }
        skipped.insert(skipped.end(), std::make_move_iterator(other.skipped.begin()),
                       std::make_move_iterator(other.skipped.end()));
        processed += other.processed;
    }
};

double summary_log2(const OrbitSummary& s, SteadinessMode mode) {
    return mode == SteadinessMode::literal ? s.log2_literal : s.log2_telescoping;
}

template <class N>
void scan_one(const N& n, const std::vector<SteadinessMode>& modes, std::size_t cap, Partial& out) {
    ++out.processed;
    OrbitSummary summary;
    try {
        summary = summarize_orbit(n, cap);
    } catch (const OrbitCapExceeded&) {
        out.skipped.emplace_back(n);
        return;
    }
    std::optional<OrbitRecord> rec;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        auto& best = out.best[i];
        if (best && summary_log2(summary, modes[i]) > best->value.log2_approx + kScreenMargin) continue;
        if (!rec) rec = trajectory(BigNat(n), cap);
        ScanMinimum cand{sigma(*rec, modes[i]), BigNat(n)};
        if (!best || better(cand, *best)) best = std::move(cand);
    }
}

/// Runs fn(worker_index) on `workers` threads, rethrowing the first failure.
template <class Fn>
void run_parallel(unsigned workers, Fn&& fn) {
    if (workers <= 1) {
        fn(0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&, w] {
                try {
                    fn(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// Scans [lo, hi] split into `workers` contiguous slices, merged in order.
Partial scan_integer_round(std::uint64_t lo, std::uint64_t hi, const std::vector<SteadinessMode>& modes,
                           std::size_t cap, unsigned workers) {
    const std::uint64_t count = hi - lo + 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), count));
    std::vector<Partial> parts(workers, Partial(modes.size()));
    run_parallel(workers, [&](unsigned w) {
        const std::uint64_t a = lo + count * w / workers;
        const std::uint64_t b = lo + count * (w + 1) / workers;  // exclusive
        for (std::uint64_t n = a; n < b; ++n) scan_one(n, modes, cap, parts[w]);
    });
    Partial out(modes.size());
    for (auto& p : parts) out.absorb(std::move(p));
    return out;
}

Partial scan_elements(std::span<const BigNat> elements, const std::vector<SteadinessMode>& modes,
                      std::size_t cap, unsigned workers) {
    const std::size_t count = elements.size();
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
    std::vector<Partial> parts(workers, Partial(modes.size()));
    run_parallel(workers, [&](unsigned w) {
        const std::size_t a = count * w / workers;
        const std::size_t b = count * (w + 1) / workers;
        for (std::size_t i = a; i < b; ++i) {
            if (auto small = elements[i].to_u64())
                scan_one(*small, modes, cap, parts[w]);
            else
                scan_one(elements[i], modes, cap, parts[w]);
        }
    });
    Partial out(modes.size());
    for (auto& p : parts) out.absorb(std::move(p));
    return out;
}

Partial partial_from(const ScanCheckpoint& cp) {
    Partial p(cp.modes.size());
    for (std::size_t i = 0; i < cp.modes.size(); ++i)
        if (const ScanMinimum* m = cp.minimum(cp.modes[i])) p.best[i] = *m;
    p.skipped = cp.skipped_cap_exceeded;
    p.processed = cp.processed_count;
    return p;
}

void store(ScanCheckpoint& cp, Partial&& p) {
    cp.minima.clear();
    for (auto& b : p.best)
        if (b) cp.minima.push_back(std::move(*b));
    cp.skipped_cap_exceeded = std::move(p.skipped);
    cp.processed_count = p.processed;
}

void check_modes(const std::vector<SteadinessMode>& modes) {
    if (modes.empty()) throw CheckpointError("checkpoint has no modes");
    if (modes.size() > 1 && !(modes.size() == 2 && modes[0] == SteadinessMode::literal &&
                              modes[1] == SteadinessMode::telescoping))
        throw CheckpointError("checkpoint modes must be literal, telescoping, or both in that order");
}

void check_resume(const ScanRequest& req, const std::vector<SteadinessMode>& modes, const ScanCheckpoint& cp) {
    if (cp.format_version != kCheckpointFormatVersion)
        throw CheckpointError("unsupported checkpoint format version " + std::to_string(cp.format_version));
    if (cp.domain.kind != req.domain.kind) throw CheckpointError("checkpoint domain kind differs from request");
    if (cp.domain.lo != req.domain.lo) throw CheckpointError("checkpoint domain start differs from request");
    if (cp.modes != modes) throw CheckpointError("checkpoint modes differ from request");
    if (cp.cap != req.cap) throw CheckpointError("checkpoint cap differs from request");
    if (cp.cursor && (*cp.cursor < cp.domain.lo || *cp.cursor > req.domain.hi))
        throw CheckpointError("checkpoint cursor outside the requested domain");
    const std::uint64_t done = cp.cursor ? *cp.cursor - cp.domain.lo + 1 : 0;
    if (cp.processed_count != done)
        throw CheckpointError("checkpoint processed_count does not match its cursor");
    for (const ScanMinimum& m : cp.minima) {
        if (std::find(modes.begin(), modes.end(), m.value.mode) == modes.end())
            throw CheckpointError("checkpoint minimum for an unscanned mode");
        if (!m.value.exact.is_reduced()) throw CheckpointError("checkpoint minimum is not reduced");
    }
}

}  // namespace

ScanCheckpoint scan_min_sigma(const ScanRequest& req, const std::optional<ScanCheckpoint>& resume_from) {
    if (req.domain.hi < req.domain.lo) throw EmptyDomain("scan domain is empty");
    if (req.domain.kind == DomainKind::integers && req.domain.lo == 0)
        throw InvalidInput("integer scan domain must start at 1 or above");
    if (req.cap == 0) throw InvalidInput("cap must be >= 1");
    if (req.chunk == 0) throw InvalidInput("chunk must be >= 1");
    const std::vector<SteadinessMode> modes = modes_of(req.modes);

    ScanCheckpoint cp;
    if (resume_from) {
        check_resume(req, modes, *resume_from);
        cp = *resume_from;
    } else {
        cp.modes = modes;
        cp.cap = req.cap;
    }
    cp.domain = req.domain;
    Partial running = partial_from(cp);

    std::uint64_t next = cp.cursor ? *cp.cursor + 1 : cp.domain.lo;
    std::uint64_t budget = req.limit.value_or(cp.domain.hi - next + 1);
    const unsigned workers = std::max(1u, req.workers);

    if (req.domain.kind == DomainKind::integers) {
        while (next <= cp.domain.hi && budget > 0) {
            const std::uint64_t len = std::min({req.chunk, cp.domain.hi - next + 1, budget});
            const std::uint64_t last = next + len - 1;
            running.absorb(scan_integer_round(next, last, modes, req.cap, workers));
            cp.cursor = last;
            budget -= len;
            next = last + 1;
            if (req.on_progress) {
                store(cp, Partial(running));
                req.on_progress(cp);
            }
        }
    } else {
        if (next <= cp.domain.hi && budget > 0) {
            LevelSet current = LevelSet::root();
            while (current.nu < next) current = next_level(current);
            while (true) {
                Partial part = scan_elements(current.elements, modes, req.cap, workers);
                part.processed = 1;  // level mode counts levels, not elements
                running.absorb(std::move(part));
                cp.cursor = current.nu;
                --budget;
                if (req.on_progress) {
                    store(cp, Partial(running));
                    req.on_progress(cp);
                }
                if (current.nu == cp.domain.hi || budget == 0) break;
                current = next_level(current);
            }
        }
    }

    store(cp, std::move(running));
    if (cp.complete() && cp.minima.size() != modes.size())
        throw EmptyDomain("no tree member within the cap in the scanned domain");
    return cp;
}

ScanCheckpoint merge_checkpoints(const ScanCheckpoint& a, const ScanCheckpoint& b) {
    for (const ScanCheckpoint* cp : {&a, &b}) {
        if (cp->format_version != kCheckpointFormatVersion)
            throw CheckpointError("unsupported checkpoint format version");
        if (!cp->complete()) throw CheckpointError("only complete checkpoints can be merged");
        check_modes(cp->modes);
    }
    if (a.domain.kind != b.domain.kind) throw CheckpointError("cannot merge different domain kinds");
    if (a.modes != b.modes) throw CheckpointError("cannot merge checkpoints with different modes");
    if (a.cap != b.cap) throw CheckpointError("cannot merge checkpoints with different caps");

    const ScanCheckpoint& lo = a.domain.lo <= b.domain.lo ? a : b;
    const ScanCheckpoint& hi = &lo == &a ? b : a;
    if (lo.domain.hi >= hi.domain.lo) throw CheckpointError("checkpoint domains overlap");
    if (lo.domain.hi + 1 != hi.domain.lo) throw CheckpointError("checkpoint domains are not adjacent");

    Partial p = partial_from(lo);
    p.absorb(partial_from(hi));

    ScanCheckpoint out;
    out.domain = {lo.domain.kind, lo.domain.lo, hi.domain.hi};
    out.modes = lo.modes;
    out.cap = lo.cap;
    out.cursor = hi.domain.hi;
    store(out, std::move(p));
    return out;
}

}  // namespace collatz
