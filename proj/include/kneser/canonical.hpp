#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kneser/code.hpp"
#include "kneser/exact.hpp"
#include "kneser/permutation.hpp"

namespace kneser {

struct CanonicalOptions {
    /// Upper bound on q^k, the number of codewords enumerated to build the search graph.
    std::size_t word_cap = 1'000'000;
};

/// Distinguished representative of the S_N-orbit of a code plus its automorphism data.
struct CanonicalCode {
    Code canon;
    BigInt aut_order;
    /// SHA-256 (hex) of the serialised canonical generator matrix.
    std::string fingerprint;
    /// Coordinate map i -> labeling[i] taking the input code onto canon.
    Permutation labeling;
    /// Generators of Aut of the input code (acting on its coordinates).
    std::vector<Permutation> automorphisms;
};

/// Canonical form under coordinate permutations.
///
/// Individualisation/refinement search on the bipartite graph of coordinates
/// and the codewords of the lowest weights that already span the code. Leaves
/// are ordered by the refinement trace along their path, then by the generator
/// matrix of the relabelled code; the least leaf is the canonical form.
/// Automorphisms come from leaves carrying equal codes and prune the search;
/// the group order is the product of the orbit lengths of the successive
/// point stabilisers along the first leaf path.
///
/// Throws std::length_error when q^k exceeds options.word_cap.
CanonicalCode canonical_form(const Code& c, const CanonicalOptions& options = {});

bool are_equivalent(const Code& c, const Code& d, const CanonicalOptions& options = {});

/// Serialisation used for fingerprints: "q:N:k:" followed by the rows as digits.
std::string canonical_serialization(const Code& c);
std::string sha256_hex(const std::string& data);

}  // namespace kneser
