#include <collatz/orbit.hpp>

#include "detail/compensated_sum.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace collatz {

BigNat collatz_step(const BigNat& n) {
    if (n.is_zero()) throw InvalidInput("collatz_step: n must be >= 1");
    if (n.is_even()) return n >> 1;
    return n * BigNat(3) + BigNat(1);
}

OrbitRecord trajectory(const BigNat& n, std::size_t cap) {
    if (n.is_zero()) throw InvalidInput("trajectory: n must be >= 1");
    if (cap == 0) throw InvalidInput("trajectory: cap must be >= 1");

    OrbitRecord rec;
    rec.n = n;
    rec.steps.push_back(n);
    while (!rec.steps.back().is_one()) {
        if (rec.steps.size() - 1 == cap) throw OrbitCapExceeded(n.str(), cap);
        const BigNat& cur = rec.steps.back();
        const bool odd = !cur.is_even();
        BigNat next = collatz_step(cur);
        if (odd) {
            ++rec.kappa;
            rec.odd_images.push_back(next);
        }
        rec.steps.push_back(std::move(next));
    }
    rec.nu = rec.steps.size() - 1;
    rec.orbit_set = orbit_set_of(rec);
    return rec;
}

std::set<BigNat> orbit_set_of(const OrbitRecord& rec) {
    std::set<BigNat> out(rec.steps.begin(), rec.steps.end());
    out.insert(BigNat(1));
    out.insert(BigNat(2));
    out.insert(BigNat(4));
    return out;
}

double log2_steadiness_factor(std::uint64_t k) {
    if (k < 2) throw InvalidInput("steadiness factor needs k >= 2");
    return std::log1p(-1.0 / static_cast<double>(k)) * std::numbers::log2e;
}

double log2_steadiness_factor(const BigNat& k) {
    if (auto small = k.to_u64()) return log2_steadiness_factor(*small);
    return std::log1p(-1.0 / k.to_double()) * std::numbers::log2e;
}

namespace {

struct Accumulator {
    std::size_t nu = 0;
    std::size_t kappa = 0;
    detail::CompensatedSum literal;
    detail::CompensatedSum telescoping;
    bool saw_four = false;

    template <class K>
    void visit(const K& k, bool is_four, bool four_mod_six) {
        if (four_mod_six) literal.add(log2_steadiness_factor(k));
        if (is_four) saw_four = true;
    }

    OrbitSummary finish() {
        if (!saw_four) literal.add(log2_steadiness_factor(std::uint64_t{4}));
        return {nu, kappa, literal.value(), telescoping.value()};
    }
};

OrbitSummary continue_big(BigNat x, Accumulator& acc, const BigNat& start, std::size_t cap) {
    while (!x.is_one()) {
        if (acc.nu == cap) throw OrbitCapExceeded(start.str(), cap);
        if (x.is_even()) {
            x >>= 1;
        } else {
            x *= BigNat(3);
            x += BigNat(1);
            ++acc.kappa;
            acc.telescoping.add(log2_steadiness_factor(x));
        }
        ++acc.nu;
        acc.visit(x, x == BigNat(4), x.mod(6) == 4);
    }
    return acc.finish();
}

}  // namespace

OrbitSummary summarize_orbit(std::uint64_t n, std::size_t cap) {
    if (n == 0) throw InvalidInput("summarize_orbit: n must be >= 1");
    if (cap == 0) throw InvalidInput("summarize_orbit: cap must be >= 1");
    constexpr std::uint64_t kMaxOdd = (std::numeric_limits<std::uint64_t>::max() - 1) / 3;

    Accumulator acc;
    std::uint64_t x = n;
    acc.visit(x, x == 4, x % 6 == 4);
    while (x != 1) {
        if (acc.nu == cap) throw OrbitCapExceeded(std::to_string(n), cap);
        if ((x & 1) == 0) {
            x >>= 1;
        } else {
            if (x > kMaxOdd) {
                // Finish the odd step in BigNat, then carry on there.
                BigNat big = BigNat(x) * BigNat(3) + BigNat(1);
                ++acc.kappa;
                acc.telescoping.add(log2_steadiness_factor(big));
                ++acc.nu;
                acc.visit(big, false, big.mod(6) == 4);
                return continue_big(std::move(big), acc, BigNat(n), cap);
            }
            x = 3 * x + 1;
            ++acc.kappa;
            acc.telescoping.add(log2_steadiness_factor(x));
        }
        ++acc.nu;
        acc.visit(x, x == 4, x % 6 == 4);
    }
    return acc.finish();
}

OrbitSummary summarize_orbit(const BigNat& n, std::size_t cap) {
    if (auto small = n.to_u64()) return summarize_orbit(*small, cap);
    if (cap == 0) throw InvalidInput("summarize_orbit: cap must be >= 1");
    Accumulator acc;
    acc.visit(n, false, n.mod(6) == 4);
    return continue_big(n, acc, n, cap);
}

}  // namespace collatz
