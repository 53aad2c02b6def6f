// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "golden_l20.hpp"

#include <collatz/cli.hpp>
#include <collatz/slots.hpp>
#include <collatz/steadiness.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace collatz;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

using Clock = std::chrono::steady_clock;

std::vector<LevelSet> levels_upto(std::size_t nu) {
    std::vector<LevelSet> out;
    generate_levels(nu, [&](const LevelSet& l) { out.push_back(l); });
    return out;
}

bool matches_printed(const std::vector<BigNat>& cluster, const golden::PrintedCluster& p) {
    if (cluster.size() != p.size()) return false;
    if (p.elided) return cluster.front() == BigNat(p.members.front()) && cluster.back() == BigNat(p.members.back());
    for (std::size_t i = 0; i < cluster.size(); ++i)
        if (cluster[i] != BigNat(p.members[i])) return false;
    return true;
}

Outcome l20_golden() {
    Outcome o;
    const auto start = Clock::now();
    const std::vector<LevelSet> levels = levels_upto(20);
    const LevelSet& l20 = levels.back();
    o.require(l20.elements.size() == 72, "|L20| != 72");
    o.require(l20.elements.front() == BigNat(18), "min != 18");
    o.require(l20.elements.back() == BigNat(1048576), "max != 1048576");
    const ClusterPartition by_kappa = clusters_by_kappa(l20);
    const ClusterPartition by_gap = clusters_by_gap(l20, ExactRatio(5, 2));
    for (const ClusterPartition* p : {&by_kappa, &by_gap}) {
        const std::string name(to_string(p->method));
        o.require(p->sizes() == golden::kL20Sizes, name + " sizes differ");
        if (p->clusters.size() != 7) continue;
        for (std::size_t i = 0; i < 7; ++i)
            o.require(matches_printed(p->clusters[i], golden::l20_clusters()[i]),
                      name + " cluster " + std::to_string(i + 1) + " differs from the printed list");
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s >= 1 s");
    return o;
}

Outcome telescoping_identity() {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checked = 0, failures = 0;
    for (const LevelSet& l : levels_upto(25))
        for (const BigNat& n : l.elements) {
            ++checked;
            if (!verify_level_identity(trajectory(n)).holds) ++failures;
        }
    std::mt19937_64 rng(20201220);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1000000000);
    std::size_t sampled = 0;
    while (sampled < 10000) {
        try {
            const OrbitRecord rec = trajectory(BigNat(dist(rng)), kDefaultCap);
            ++sampled;
            if (!verify_level_identity(rec).holds) ++failures;
        } catch (const OrbitCapExceeded&) {
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(failures == 0, std::to_string(failures) + " identity failures");
    o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s >= 60 s");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " level elements + " +
                std::to_string(sampled) + " random n (seed 20201220)";
    return o;
}

Outcome discrepancy_witness() {
    Outcome o;
    const OrbitRecord five = trajectory(BigNat(5));
    const ExactRatio lit = sigma_literal(five).exact;
    o.require(lit == ExactRatio(45, 64), "literal sigma(5) != 45/64");
    const ExactRatio chain = ExactRatio(32, 6) * lit;
    o.require(chain == ExactRatio(15, 4), "2^5/6 * 45/64 != 15/4");
    o.require(chain != ExactRatio(5, 1), "literal chain unexpectedly gives 5");
    o.require(!verify_literal_chain(five).holds, "literal chain verdict holds");
    o.require(verify_level_identity(five).holds, "telescoping identity fails for 5");

    std::ostringstream out, err;
    const int code = cli::main({"collatz-slots", "sigma", "--n", "5", "--mode", "both"}, out, err);
    o.require(code == 0, "sigma --n 5 exit code " + std::to_string(code));
    if (code == 0) {
        const ReportDocument doc = parse_report(out.str());
        const bool warned = std::any_of(doc.warnings.begin(), doc.warnings.end(), [](const std::string& w) {
            return w.find("literal steadiness") != std::string::npos;
        });
        o.require(warned, "report lacks the discrepancy warning");
    }
    return o;
}

Outcome domination_ceiling() {
    Outcome o;
    std::size_t failures = 0, checked = 0;
    const ExactRatio three_quarters(3, 4);
    for (const LevelSet& l : levels_upto(25))
        for (const BigNat& n : l.elements) {
            const OrbitRecord rec = trajectory(n);
            const ExactRatio lit = sigma_literal(rec).exact;
            const ExactRatio tel = sigma_telescoping(rec).exact;
            ++checked;
            if (!(lit <= tel) || !(lit <= three_quarters)) ++failures;
        }
    o.require(failures == 0, std::to_string(failures) + " failures");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checked) + " elements";
    return o;
}

Outcome containment() {
    Outcome o;
    constexpr std::size_t N = 30;
    ScanRequest req;
    req.domain = {DomainKind::levels, 0, N};
    const ScanCheckpoint cp = scan_min_sigma(req);
    const ExactRatio sigma0 = cp.minima.at(0).value.exact;
    std::size_t violations = 0, equality = 0;
    for (const LevelSet& l : levels_upto(N)) {
        const SlotAssignment sa = assign_and_verify(l, sigma0);
        if (!sa.contained || !sa.upper_bound_holds) ++violations;
        const BigNat top = BigNat::pow2(l.nu);
        for (const SlotEntry& e : sa.entries)
            if ((e.ratio == ExactRatio::one()) != (e.n == top)) ++equality;
    }
    o.require(violations == 0, std::to_string(violations) + " levels not contained");
    o.require(equality == 0, std::to_string(equality) + " ratio = 1 away from 2^nu");
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("sigma0* = ") + sigma0.str() + " ~ " +
                std::to_string(sigma0.to_double()) + " at n = " + cp.minima[0].argmin.str();
    return o;
}

Outcome cardinality_recurrence() {
    Outcome o;
    const std::vector<LevelSet> levels = levels_upto(30);
    for (std::size_t v = 0; v + 1 < levels.size(); ++v) {
        std::size_t spawn = 0;
        for (const BigNat& n : levels[v].elements)
            if (n > BigNat(4) && n.mod(6) == 4) ++spawn;
        o.require(levels[v + 1].elements.size() == levels[v].elements.size() + spawn,
                  "recurrence fails at nu = " + std::to_string(v));
    }
    return o;
}

Outcome sigma0_estimate() {
    Outcome o;
    constexpr std::uint64_t kMax = 1000000;
    ScanRequest req;
    req.domain = {DomainKind::integers, 1, kMax};
    req.modes = ModeSelection::both;
    const ScanCheckpoint reference = scan_min_sigma(req);

    // (a) interrupted half-way, persisted, resumed.
    const auto path = std::filesystem::temp_directory_path() / "collatz-acceptance-checkpoint.json";
    ScanRequest first = req;
    first.limit = kMax / 2;
    write_checkpoint(scan_min_sigma(first), path);
    const ScanCheckpoint resumed = scan_min_sigma(req, read_checkpoint(path));
    std::filesystem::remove(path);
    o.require(resumed == reference, "resumed scan differs from one-shot scan");

    // (b) literal minimum inside [0.45, 0.5407].
    const ScanMinimum* lit = reference.minimum(SteadinessMode::literal);
    const ScanMinimum* tel = reference.minimum(SteadinessMode::telescoping);
    o.require(lit && tel, "missing minima");
    if (!lit || !tel) return o;
    o.require(lit->value.exact <= ExactRatio(5407, 10000), "literal minimum above 0.5407");
    o.require(lit->value.exact >= ExactRatio(45, 100), "literal minimum below 0.45");

    // (c) the CLI report names value, argmin and mode for both, and --workers 2 matches --workers 1.
    std::ostringstream out, err;
    const int code = cli::main({"collatz-slots", "sigma0", "--n", std::to_string(kMax), "--mode", "both", "--workers", "2"},
                               out, err);
    o.require(code == 0, "sigma0 exit code " + std::to_string(code));
    if (code == 0) {
        const ReportDocument doc = parse_report(out.str());
        const auto& minima = doc.results["minima"];
        o.require(minima.size() == 2, "report does not list both modes");
        for (const auto& m : minima)
            o.require(m.contains("mode") && m.contains("argmin") && m.contains("exact"),
                      "report minimum lacks mode/argmin/value");
        o.require(doc.results["checkpoint"] == checkpoint_to_json(reference),
                  "--workers 2 result differs from the sequential scan");
    }

    o.detail += (o.detail.empty() ? "" : "; ") + std::string("literal min ") + std::to_string(lit->value.exact.to_double()) +
                " at n = " + lit->argmin.str() + " (" + lit->value.exact.str() + "), telescoping min " +
                std::to_string(tel->value.exact.to_double()) + " at n = " + tel->argmin.str();
    return o;
}

Outcome condition_checks() {
    Outcome o;
    const SlotConditions reference = check_slot_conditions(ExactRatio(5152, 10000));
    o.require(reference.disjoint && reference.separated, "5152/10000 should be (true, true)");
    o.require(reference.disjoint_grid_verified == true, "disjointness grid failed");
    o.require(reference.separation_grid_verified == true, "separation grid failed");
    const SlotConditions sixth = check_slot_conditions(ExactRatio(1, 6));
    o.require(!sixth.disjoint && !sixth.separated, "1/6 should be (false, false)");
    const SlotConditions quarter = check_slot_conditions(ExactRatio(1, 4));
    o.require(quarter.disjoint && !quarter.separated, "1/4 should be (true, false)");
    o.require(quarter.disjoint_grid_verified == true, "disjointness grid failed for 1/4");

    // Independent sweep of the separation inequality for sigma0 = 5152/10000.
    const ExactRatio s(5152, 10000);
    for (std::size_t nu = 0; nu <= kSlotGridNu; ++nu)
        for (std::size_t k = 1; k <= nu; ++k) {
            const ExactRatio max_k(BigNat::pow2(nu), BigNat::pow(6, k));
            const ExactRatio min_prev = s * ExactRatio(BigNat::pow2(nu), BigNat::pow(6, k - 1));
            if (!(max_k < ExactRatio(1, 3) * min_prev)) {
                o.require(false, "separation fails at nu=" + std::to_string(nu) + " kappa=" + std::to_string(k));
                return o;
            }
        }
    return o;
}

Outcome scan_merge() {
    Outcome o;
    constexpr std::uint64_t kMax = 10000;
    ScanRequest req;
    req.domain = {DomainKind::integers, 1, kMax};
    req.modes = ModeSelection::both;
    const ScanCheckpoint whole = scan_min_sigma(req);

    std::mt19937_64 rng(9);
    for (int round = 0; round < 20; ++round) {
        std::uniform_int_distribution<int> pieces(2, 12);
        std::uniform_int_distribution<std::uint64_t> cut(2, kMax);
        std::vector<std::uint64_t> cuts{1, kMax + 1};
        for (int i = pieces(rng); i > 1; --i) cuts.push_back(cut(rng));
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        std::vector<ScanCheckpoint> parts;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            ScanRequest sub = req;
            sub.domain = {DomainKind::integers, cuts[i], cuts[i + 1] - 1};
            parts.push_back(scan_min_sigma(sub));
        }
        std::shuffle(parts.begin(), parts.end(), rng);
        // Repeatedly merge any adjacent pair, in whatever order they were shuffled.
        while (parts.size() > 1) {
            bool merged = false;
            for (std::size_t i = 0; i < parts.size() && !merged; ++i)
                for (std::size_t j = 0; j < parts.size() && !merged; ++j) {
                    if (i == j) continue;
                    if (parts[i].domain.hi + 1 == parts[j].domain.lo) {
                        parts[i] = merge_checkpoints(parts[j], parts[i]);
                        parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
                        merged = true;
                    }
                }
            if (!merged) break;
        }
        o.require(parts.size() == 1 && parts.front() == whole,
                  "partition round " + std::to_string(round) + " differs");
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 L20 golden clusters", l20_golden},
        {"AC2 telescoping identity (levels <= 25, 10^4 random n <= 10^9)", telescoping_identity},
        {"AC3 discrepancy witness n = 5", discrepancy_witness},
        {"AC4 domination and ceiling (levels <= 25)", domination_ceiling},
        {"AC5 containment with scanned sigma0* (levels <= 30)", containment},
        {"AC6 cardinality recurrence (nu <= 30)", cardinality_recurrence},
        {"AC7 sigma0 scan over n <= 10^6", sigma0_estimate},
        {"AC8 slot condition checks", condition_checks},
        {"AC9 scan merge over 20 random partitions of [1, 10^4]", scan_merge},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("[%s] %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
