#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kneser/canonical.hpp"
#include "kneser/types.hpp"

namespace kneser {

/// All D of the type with dim(C n D) = n - 1, each once, in a fixed order.
///
/// One hyperplane E = ker(a) of C per projective functional a (only those with
/// 1 in E for the types that require the all-ones vector, since otherwise C is
/// the only member containing E), then the q lines of E^perp/E other than C/E.
/// Throws std::invalid_argument unless is_member(c, t).
std::vector<Code> neighbors(const Code& c, const TypeSpec& t);

/// Number of members D with D n C = E for the hyperplane E = ker(functional),
/// found by running through the q + 1 lines of E^perp/E with the full
/// membership test (no shortcuts).
std::size_t neighbors_through(const Code& c, const TypeSpec& t, std::span<const Symbol> functional);

/// Sum of neighbors_through over the hyperplanes containing every word of the tuple.
std::size_t condition_star_sum(const Code& c, const TypeSpec& t, const Matrix& tuple);

/// All members D with dim(C n D) = n - k, each once. Throws std::length_error when
/// the number of (hyperplane, complement) pairs to examine exceeds the cap.
std::vector<Code> k_neighbors(const Code& c, const TypeSpec& t, int k, std::size_t work_cap = std::size_t{1} << 24);

struct CodeClass {
    /// Canonical representative.
    Code representative;
    BigInt aut_order;
    std::string fingerprint;
    /// Generators of Aut(representative); not persisted.
    std::vector<Permutation> automorphisms;
};

struct NeighborRecord {
    std::size_t source = 0;
    std::size_t target = 0;
    std::uint64_t count = 0;
};

struct ClassDatabase {
    TypeSpec type;
    int length = 0;
    std::vector<CodeClass> classes;
    /// Sorted by (source, target); only nonzero counts.
    std::vector<NeighborRecord> records;
    bool complete = false;

    int dimension() const { return length / 2; }
    /// Index of the class containing the code, if any.
    std::optional<std::size_t> find(const Code& c, const CanonicalOptions& options = {}) const;
    /// sum over classes of N!/|Aut(C)|, the number of distinct codes reached.
    BigInt mass() const;
};

struct ClassifyOptions {
    int threads = 1;
    /// Canonicalise one neighbor per Aut(C)-orbit and weight it by the orbit size.
    bool use_automorphisms = false;
    CanonicalOptions canonical;
    /// Called after each class has been processed with (processed, known classes).
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Breadth-first closure of the neighbor graph from the seed (seed_code() when absent).
/// Throws std::invalid_argument when the seed is not a member of the type.
ClassDatabase classify(const TypeSpec& t, int length, std::optional<Code> seed = std::nullopt,
                       const ClassifyOptions& options = {});

/// Number of members of the type at this length, by exhaustive search over
/// generator matrices in echelon form. Meant for N <= 10.
BigInt count_members(const TypeSpec& t, int length);

inline constexpr int database_schema_version = 1;

/// Deterministic JSON serialisation (fixed key order, no whitespace variation).
std::string to_json(const ClassDatabase& db);
/// Throws std::invalid_argument on schema or content errors.
ClassDatabase database_from_json(const std::string& text);

}  // namespace kneser
