#include <collatz/slots.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace collatz {

namespace {

void require_sigma0(const ExactRatio& sigma0) {
    if (sigma0.is_zero() || sigma0 > ExactRatio::one())
        throw InvalidInput("sigma0 must lie in (0, 1], got " + sigma0.str());
}

ExactRatio slot_upper(std::size_t nu, std::size_t kappa) {
    return {BigNat::pow2(nu), BigNat::pow(6, kappa)};
}

}  // namespace

Slot slot_bounds(std::size_t nu, std::size_t kappa, const ExactRatio& sigma0) {
    require_sigma0(sigma0);
    Slot s;
    s.nu = nu;
    s.kappa = kappa;
    s.upper = slot_upper(nu, kappa);
    s.lower = sigma0 * s.upper;
    s.sigma0_used = sigma0;
    return s;
}

SlotAssignment assign_and_verify(const LevelSet& level, const ExactRatio& sigma0, std::size_t cap) {
    require_sigma0(sigma0);
    SlotAssignment out;
    out.nu = level.nu;
    out.sigma0_used = sigma0;
    out.contained = true;
    out.upper_bound_holds = true;
    out.entries.reserve(level.elements.size());
    const BigNat two_nu = BigNat::pow2(level.nu);
    const ExactRatio one = ExactRatio::one();
    for (const BigNat& n : level.elements) {
        OrbitSummary s;
        try {
            s = summarize_orbit(n, cap);
        } catch (const OrbitCapExceeded& e) {
            throw std::logic_error(std::string("level-set element exceeded the orbit cap: ") + e.what());
        }
        if (s.nu != level.nu)
            throw IntegrityError(n.str() + " has level " + std::to_string(s.nu) + ", not " + std::to_string(level.nu));
        SlotEntry entry;
        entry.n = n;
        entry.kappa = s.kappa;
        entry.ratio = ExactRatio(n * BigNat::pow(6, s.kappa), two_nu);
        const bool below_one = entry.ratio <= one;
        entry.in_slot = sigma0 <= entry.ratio && below_one;
        out.upper_bound_holds = out.upper_bound_holds && below_one;
        out.contained = out.contained && entry.in_slot;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

SlotConditions check_slot_conditions(const ExactRatio& sigma0, std::size_t grid_nu) {
    require_sigma0(sigma0);
    SlotConditions c;
    c.disjoint = sigma0 > ExactRatio(1, 6);
    c.separated = sigma0 > ExactRatio(1, 2);
    if (c.disjoint) c.disjoint_grid_verified = true;
    if (c.separated) c.separation_grid_verified = true;
    if (!c.disjoint) return c;

    const ExactRatio third(1, 3);
    for (std::size_t nu = 0; nu <= grid_nu; ++nu) {
        for (std::size_t kappa = 1; kappa <= nu; ++kappa) {
            const Slot s = slot_bounds(nu, kappa, sigma0);
            const Slot prev = slot_bounds(nu, kappa - 1, sigma0);
            if (!(s.upper < prev.lower)) c.disjoint_grid_verified = false;
            if (c.separated && !(s.upper < third * prev.lower)) c.separation_grid_verified = false;
        }
    }
    return c;
}

std::string_view to_string(ClusterMethod m) {
    return m == ClusterMethod::by_kappa ? "by_kappa" : "by_gap";
}

std::vector<std::size_t> ClusterPartition::sizes() const {
    std::vector<std::size_t> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back(c.size());
    return out;
}

ClusterPartition clusters_by_kappa(const LevelSet& level, std::size_t cap) {
    std::map<std::size_t, std::vector<BigNat>, std::greater<>> groups;
    for (const BigNat& n : level.elements) groups[summarize_orbit(n, cap).kappa].push_back(n);

    ClusterPartition out;
    out.nu = level.nu;
    out.method = ClusterMethod::by_kappa;
    for (auto& [kappa, members] : groups) {
        out.kappas.push_back(kappa);
        out.clusters.push_back(std::move(members));
    }
    // Contiguous iff the groups, laid end to end, reproduce the sorted level.
    std::size_t i = 0;
    for (const auto& c : out.clusters)
        for (const BigNat& n : c)
            if (level.elements[i++] != n) out.interleaved = true;
    return out;
}

ClusterPartition clusters_by_gap(const LevelSet& level, const ExactRatio& factor) {
    if (!(factor > ExactRatio::one())) throw InvalidInput("gap factor must exceed 1, got " + factor.str());
    ClusterPartition out;
    out.nu = level.nu;
    out.method = ClusterMethod::by_gap;
    out.gap_factor = factor;
    for (std::size_t i = 0; i < level.elements.size(); ++i) {
        const BigNat& e = level.elements[i];
        // e > factor * prev  <=>  e * den > num * prev
        if (i == 0 || e * factor.den() > factor.num() * level.elements[i - 1]) out.clusters.emplace_back();
        out.clusters.back().push_back(e);
    }
    return out;
}

PartitionComparison compare_partitions(const ClusterPartition& a, const ClusterPartition& b) {
    if (a.nu != b.nu) throw InvalidInput("partitions belong to different levels");
    std::vector<BigNat> flat_a, flat_b;
    for (const auto& c : a.clusters) flat_a.insert(flat_a.end(), c.begin(), c.end());
    for (const auto& c : b.clusters) flat_b.insert(flat_b.end(), c.begin(), c.end());
    // An interleaved kappa partition lists the same elements in another order.
    std::sort(flat_a.begin(), flat_a.end());
    std::sort(flat_b.begin(), flat_b.end());
    if (flat_a != flat_b) throw InvalidInput("partitions cover different element sets");

    PartitionComparison out;
    const std::size_t common = std::min(a.clusters.size(), b.clusters.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (a.clusters[i] != b.clusters[i]) {
            out.first_difference = i;
            return out;
        }
    }
    if (a.clusters.size() != b.clusters.size()) {
        out.first_difference = common;
        return out;
    }
    out.equal = true;
    return out;
}

}  // namespace collatz
