#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kneser/field.hpp"

namespace kneser {

using Matrix = std::vector<Vector>;

/// A linear code over GF(q), held as its reduced row echelon generator matrix.
///
/// RREF is unique per row space, so two codes are equal as subspaces exactly
/// when their generator matrices agree.
class Code {
public:
    /// The zero code of the given length.
    Code(const Field& field, int length);

    const Field& field() const { return *field_; }
    int length() const { return length_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const Matrix& generators() const { return rows_; }
    /// Pivot column of each generator row.
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(std::span<const Symbol> v) const;
    /// Coefficients of v in the generator basis; nullopt if v is not in the code.
    std::optional<Vector> coordinates(std::span<const Symbol> v) const;
    /// sum_i coeffs[i] * row_i
    Vector combine(std::span<const Symbol> coeffs) const;
    /// All q^k codewords, in the order of the base-q expansion of the coefficient vector.
    Matrix codewords() const;

    /// The image under the coordinate permutation i -> perm[i].
    Code permuted(std::span<const int> perm) const;

    /// Compact byte string of the generator matrix (for hashing and ordering).
    std::string key() const;

    friend bool operator==(const Code& a, const Code& b) {
        return a.field_ == b.field_ && a.length_ == b.length_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const Code& a, const Code& b);

private:
    friend Code rref(const Field& field, int length, Matrix rows);

    const Field* field_;
    int length_;
    Matrix rows_;
    std::vector<int> pivots_;
};

/// Row-reduces to the canonical basis of the row space; zero and duplicate rows drop out.
/// Throws std::invalid_argument if a row has the wrong length or out-of-range symbols.
Code rref(const Field& field, int length, Matrix rows);

/// Dual with respect to the Euclidean or Hermitian form.
Code dual(const Code& c, FormKind kind);
Code intersect(const Code& c, const Code& d);
Code sum(const Code& c, const Code& d);
/// Adds one vector to the span.
Code extend(const Code& c, std::span<const Symbol> v);
/// Direct sum on disjoint coordinate blocks.
Code direct_sum(const Code& c, const Code& d);
bool is_subcode(const Code& sub, const Code& super);

Vector all_ones(int length);
int weight(std::span<const Symbol> v);

bool is_self_orthogonal(const Code& c, FormKind kind);
bool is_self_dual(const Code& c, FormKind kind);
/// Binary only: every codeword weight divisible by 4. Throws std::invalid_argument for q != 2.
bool is_doubly_even(const Code& c);
bool contains_allones(const Code& c);

/// Normalised nonzero vectors of GF(q)^dim (first nonzero entry 1), in increasing
/// base-q order. Each projective point appears once.
std::vector<Vector> projective_points(const Field& field, int dim);

/// Walks the codimension-1 subspaces of a code, optionally only those containing a
/// fixed vector. Each hyperplane is the kernel of a functional on the code, one
/// functional per projective point.
class SubspaceIterator {
public:
    /// Throws std::invalid_argument if must_contain is given but not in the code.
    explicit SubspaceIterator(Code ambient, std::optional<Vector> must_contain = std::nullopt);

    /// Next hyperplane, or nullopt when exhausted.
    std::optional<Code> next();
    /// Functional (values on the generator rows) of the most recent hyperplane.
    const Vector& functional() const { return functionals_[pos_ - 1]; }
    std::size_t count() const { return functionals_.size(); }

    /// Kernel of the functional with the given values on the generator rows.
    static Code hyperplane(const Code& ambient, std::span<const Symbol> functional);

private:
    Code ambient_;
    std::vector<Vector> functionals_;
    std::size_t pos_ = 0;
};

}  // namespace kneser
