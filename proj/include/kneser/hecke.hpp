#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneser/exact.hpp"
#include "kneser/neighbor.hpp"

namespace kneser {

/// T_k on the class basis: entries[D][C] counts the k-neighbors of the
/// representative C that are equivalent to D. Acts on column vectors.
struct HeckeMatrix {
    int k = 1;
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t size() const { return entries.size(); }
    RationalMatrix to_rational() const;
};

/// k = 1 reads the stored neighbor records; k > 1 enumerates k-neighbors of every
/// representative. Throws std::invalid_argument for an incomplete database, and
/// std::runtime_error if a k-neighbor falls outside the known classes.
HeckeMatrix hecke_matrix(const ClassDatabase& db, int k = 1, std::size_t work_cap = std::size_t{1} << 24);

/// sum_C v_C w_C |Aut(C)|. Throws std::invalid_argument on a size mismatch.
Rational inner_product(const RationalVector& v, const RationalVector& w, const ClassDatabase& db);

/// sigma_N: coordinates 1/|Aut(C)|.
RationalVector mass_vector(const ClassDatabase& db);

struct AdjointViolation {
    std::size_t row = 0;
    std::size_t column = 0;
    /// |Aut(row)| * T[row][column]
    BigInt lhs;
    /// |Aut(column)| * T[column][row]
    BigInt rhs;
};

/// Every unordered pair (D, C) with |Aut(D)| T[D][C] != |Aut(C)| T[C][D], row < column.
std::vector<AdjointViolation> check_self_adjoint(const HeckeMatrix& t, const ClassDatabase& db);

/// Columns whose sum differs from the expected value.
std::vector<std::size_t> column_sum_violations(const HeckeMatrix& t, const BigInt& expected);

struct Eigenspace {
    /// Indices m sharing this eigenvalue (more than one only when nu values coincide).
    std::vector<int> ms;
    Rational eigenvalue;
    std::vector<RationalVector> basis;
};

struct Spectrum {
    std::size_t classes = 0;
    /// One entry per distinct eigenvalue, in increasing m.
    std::vector<Eigenspace> spaces;
    /// dim ker(T - nu_m I) for m = 0..n (a merged space is counted at each of its m).
    std::vector<std::size_t> dims;
    /// Pairs of coinciding eigenvalue indices, copied from the type data.
    std::vector<std::pair<int, int>> collisions;
    /// Sum of the eigenspace dimensions equals the number of classes.
    bool complete = false;
    /// T sigma_N = nu_0 sigma_N.
    bool mass_vector_ok = false;
    /// Distinct eigenspaces are orthogonal for the weighted inner product.
    bool orthogonal = false;

    /// dims with trailing zero entries removed, as printed in the summary tables.
    std::vector<std::size_t> table_row() const;
};

/// Exact eigenspaces of the k = 1 operator at the predicted eigenvalues nu_m.
Spectrum spectrum(const HeckeMatrix& t, const ClassDatabase& db);

/// Coefficients c_0..c_d with T_k = sum c_i T^i, of least degree, or nullopt when
/// T_k is not a polynomial in T. Throws std::invalid_argument on a size mismatch.
std::optional<RationalVector> polynomial_relation(const HeckeMatrix& tk, const HeckeMatrix& t);

std::string to_json(const HeckeMatrix& t);
/// Reads the output of to_json(HeckeMatrix). Throws std::invalid_argument on malformed input.
HeckeMatrix hecke_matrix_from_json(const std::string& text);
std::string to_json(const Spectrum& s, const ClassDatabase& db);

}  // namespace kneser
