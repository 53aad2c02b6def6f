#include <collatz/level_sets.hpp>

#include <algorithm>
#include <iterator>

namespace collatz {

void check_level_shape(const LevelSet& level) {
    if (level.elements.empty()) throw IntegrityError("level " + std::to_string(level.nu) + " is empty");
    for (std::size_t i = 1; i < level.elements.size(); ++i)
        if (!(level.elements[i - 1] < level.elements[i]))
            throw IntegrityError("level " + std::to_string(level.nu) + " is not strictly ascending at index " +
                                 std::to_string(i));
    if (level.elements.back() != BigNat::pow2(level.nu))
        throw IntegrityError("max of level " + std::to_string(level.nu) + " is not 2^" + std::to_string(level.nu));
}

std::size_t spawning_count(const LevelSet& level) {
    return static_cast<std::size_t>(std::count_if(level.elements.begin(), level.elements.end(), [](const BigNat& n) {
        return n > BigNat(4) && n.mod(6) == 4;
    }));
}

LevelSet next_level(const LevelSet& level) {
    // Both branches are monotone in n, so each comes out ascending.
    std::vector<BigNat> doubles;
    doubles.reserve(level.elements.size());
    std::vector<BigNat> odd_preimages;
    for (const BigNat& n : level.elements) {
        doubles.push_back(n << 1);
        if (n > BigNat(4) && n.mod(6) == 4) odd_preimages.push_back((n - BigNat(1)) / BigNat(3));
    }
    for (const BigNat& m : odd_preimages)
        if (m.is_even()) throw IntegrityError("odd-branch preimage " + m.str() + " is even");

    LevelSet out;
    out.nu = level.nu + 1;
    out.elements.reserve(doubles.size() + odd_preimages.size());
    std::merge(std::make_move_iterator(doubles.begin()), std::make_move_iterator(doubles.end()),
               std::make_move_iterator(odd_preimages.begin()), std::make_move_iterator(odd_preimages.end()),
               std::back_inserter(out.elements));
    return out;
}

LevelSummary generate_levels(std::size_t nu_max, const LevelSink& sink) {
    LevelSummary summary;
    LevelSet current = LevelSet::root();
    while (true) {
        summary.cardinalities.push_back(current.elements.size());
        if (sink) {
            try {
                sink(current);
            } catch (const std::exception& e) {
                throw SinkError(current.nu, e.what());
            }
        }
        if (current.nu == nu_max) break;
        current = next_level(current);
    }
    return summary;
}

LevelSet level(std::size_t nu) {
    LevelSet current = LevelSet::root();
    while (current.nu < nu) current = next_level(current);
    return current;
}

LevelStats level_stats(const LevelSet& level, std::size_t cap) {
    if (level.elements.empty()) throw InvalidInput("level_stats: empty level");
    LevelStats s;
    s.count = level.elements.size();
    s.min = level.elements.front();
    s.max = level.elements.back();
    for (const BigNat& n : level.elements) ++s.kappa_histogram[summarize_orbit(n, cap).kappa];
    return s;
}

}  // namespace collatz
