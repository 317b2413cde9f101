#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kneser/code.hpp"
#include "kneser/exact.hpp"
#include "kneser/neighbor.hpp"

namespace kneser {

/// A degree-N monomial prod x_a^{e_a} in the variables indexed by a in GF(q)^m.
///
/// The vector a = (a_1, ..., a_m) is encoded as sum_i a_i q^(i-1), so a_m is the
/// most significant digit and the Phi-operator keeps exactly the indices below
/// q^(m-1). Only nonzero exponents are stored, sorted by index.
struct Monomial {
    int m = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents;

    int degree() const;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Decodes a variable index into its vector in GF(q)^m.
Vector decode_index(std::uint32_t index, int q, int m);
std::uint32_t encode_vector(std::span<const Symbol> a, int q);

/// The monomial of a tuple of codewords: e_a counts the positions whose column equals a.
/// The empty tuple (m = 0) needs the length. Throws std::invalid_argument on ragged input.
Monomial mon(const Field& f, const Matrix& tuple, int length);

/// rank(X): dimension of the span of the vectors a with e_a > 0.
int rank(const Monomial& x, const Field& f);
/// rank(X) = m and the all-ones vector is outside the span of any tuple with monomial X.
bool in_M_one(const Monomial& x, const Field& f);
/// One tuple with monomial X (columns grouped by increasing index).
Matrix preimage(const Monomial& x, const Field& f);

struct SparseWE {
    int m = 0;
    std::map<Monomial, std::uint64_t> terms;

    std::uint64_t total() const;
    friend bool operator==(const SparseWE&, const SparseWE&) = default;
};

inline constexpr std::uint64_t default_tuple_budget = std::uint64_t{1} << 26;

/// cwe_m(C): the sum of mon(c) over all q^(km) tuples. Throws std::length_error
/// when q^(km) exceeds the budget.
SparseWE cwe(const Code& c, int m, std::uint64_t budget = default_tuple_budget);

/// Drops the monomials involving any x_a with a_m != 0 and lowers the genus by one.
/// Throws std::invalid_argument for m = 0.
SparseWE phi(const SparseWE& p, int q);

/// Number of tuples in C^m with the given monomial.
std::uint64_t a_X(const Code& c, const Monomial& x, std::uint64_t budget = default_tuple_budget);

/// dim span{cwe_m(C) : C in the database} for m = 0..m_max, by exact rank.
std::vector<std::size_t> filtration_dims(const ClassDatabase& db, int m_max,
                                         std::uint64_t budget = default_tuple_budget);

/// b_X = sum_C a_X(C)/|Aut(C)| [C].
RationalVector sigma_and_bX(const ClassDatabase& db, const Monomial& x,
                            std::uint64_t budget = default_tuple_budget);

/// mon(tuple) lies in the type's admissible set: rank m, plus 1 outside the span
/// for the types whose codes all contain 1.
bool admissible(const Monomial& x, const TypeSpec& t);

struct ConditionStarSample {
    std::size_t class_index = 0;
    Matrix tuple;
    std::size_t sum = 0;
};

struct ConditionStarReport {
    int m = 0;
    Rational expected;
    std::vector<ConditionStarSample> samples;
    /// Samples whose neighbor sum differs from expected.
    std::vector<ConditionStarSample> failures;
};

/// Draws random admissible m-tuples from random class representatives and compares
/// the neighbor sum over the hyperplanes containing each tuple with alpha(m).
/// Returns fewer samples when admissible tuples are absent (for instance m = n).
ConditionStarReport sample_condition_star(const ClassDatabase& db, int m, std::size_t samples, std::mt19937_64& rng);

/// Polynomial text such as "x0^8 + 14*x0^4*x1^4 + x1^8" (variables by encoded index).
std::string to_string(const SparseWE& p);
std::string to_json(const SparseWE& p);

}  // namespace kneser
