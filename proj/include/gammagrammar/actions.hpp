#pragma once

// Foata-Strehl style group actions, the insertion/deletion maps, and orbit decomposition.

#include <string>
#include <vector>

#include "gammagrammar/combinat.hpp"
#include "gammagrammar/polynomial.hpp"

namespace gg {

/// Type-B action on the standard cycle form. `letter` is an absolute value in [n].
CycleForm fs_typeB(const CycleForm& pi, int letter);

/// Stirling action at 1-based position k. Throws PositionOutOfRange.
GenWord fs_stirling_at(const GenWord& w, std::size_t k);
/// Letter-indexed form: acts at the first occurrence of `letter`.
GenWord fs_stirling(const GenWord& w, int letter);

/// Jacobi-Stirling action at 1-based position k. Throws PositionOutOfRange.
GenWord fs_jacobi_at(const GenWord& w, std::size_t k);
/// Letter-indexed form: acts at the barred letter, or at the first unbarred copy.
GenWord fs_jacobi(const GenWord& w, GenLetter letter);

/// Valley hopping on plain permutations (boundary sentinels 0).
GenWord fs_plain(const GenWord& w, int letter);

/// Inserts the pair vv so that it starts at 0-based index `gap` (0..size). Throws InvalidGap.
GenWord insert_pair(const GenWord& w, int value, std::size_t gap);
/// Removes both unbarred copies of value. Throws MissingLetter.
GenWord delete_pair(const GenWord& w, int value);
GenWord insert_barred(const GenWord& w, int value, std::size_t gap);
GenWord delete_barred(const GenWord& w, int value);

struct OrbitReport {
    std::string representative;
    std::vector<std::string> members;  // canonical generation order
    std::size_t orbit_size = 0;
    Polynomial weight;
    StatValues rep_stats;
};

/// Statistics summed into the orbit weight: (stat, variable) pairs.
std::vector<StatBinding> orbit_weight_stats(Family f);
/// Statistics reported for the representative; the first ones are the movable statistics
/// that vanish on it.
std::vector<std::string> orbit_rep_stats(Family f);

/// Orbits of the letter-indexed action on the family. Supported: perm, typeB-derangements,
/// stirling, jacobi, jacobi-deleted. Throws UnsupportedFamily, BudgetExceeded.
std::vector<OrbitReport> orbit_decompose(Family f, unsigned n, const GenOptions& opts = {});

nlohmann::json to_json(const OrbitReport& r);

}  // namespace gg
