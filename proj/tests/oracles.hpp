#pragma once

// Independent brute-force oracles used only by the tests.

#include <cstdint>
#include <map>
#include <vector>

#include "kneser/code.hpp"

namespace kneser::oracle {

/// |Aut(C)| by running through all N! coordinate permutations.
std::uint64_t brute_force_aut_order(const Code& c);

/// Every self-dual code of the given length (each subspace once), by a
/// depth-first search over RREF generator matrices with pairwise orthogonal,
/// isotropic rows.
std::vector<Code> all_self_dual_codes(const Field& field, int length, FormKind kind);

struct OrbitSummary {
    std::size_t codes = 0;
    /// Orbit sizes under S_N, one entry per orbit, in order of first appearance.
    std::vector<std::size_t> orbit_sizes;
};

/// Splits a permutation-closed set of codes into S_N-orbits using only the
/// generators (0 1) and (0 1 ... N-1) of S_N; no canonical forms involved.
OrbitSummary symmetric_group_orbits(const std::vector<Code>& codes);

/// Weight distribution by listing all codewords.
std::vector<std::uint64_t> weight_distribution(const Code& c);

/// Generator matrix of the extended [8,4,4] Hamming code.
Code extended_hamming8();
/// Direct sum of copies of <(1,1)> over the given field.
Code repeated_pairs(const Field& field, int copies);

}  // namespace kneser::oracle
