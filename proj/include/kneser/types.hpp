#pragma once

#include <string>
#include <vector>

#include "kneser/code.hpp"
#include "kneser/exact.hpp"

namespace kneser {

enum class TypeName { qE, qE1, qEI, qEII, qH, qH1 };

enum class MonomialSet { m_star, m_one };

/// One of the six classical families of self-dual codes.
class TypeSpec {
public:
    /// Throws std::invalid_argument when the field does not suit the type
    /// (odd q for qE/qE1, even q for qEI/qEII, q = 2 for qEII, square q for qH/qH1).
    TypeSpec(TypeName name, int q);

    /// Accepts "2eI", "2eII", "qE:q=3", "qE1:q=3", "qEI:q=4", "qH:q=4", "qH1:q=4"
    /// and the case-insensitive variants of these.
    static TypeSpec parse(const std::string& text);

    TypeName name() const { return name_; }
    int q() const { return field_->q(); }
    const Field& field() const { return *field_; }
    FormKind form_kind() const { return form_; }
    bool requires_allones() const;
    bool requires_doubly_even() const { return name_ == TypeName::qEII; }
    MonomialSet monomial_set() const { return requires_allones() ? MonomialSet::m_one : MonomialSet::m_star; }

    /// "qE", "qEI", ... without the field.
    std::string base_name() const;
    /// CLI spelling: "2eI", "2eII", or "qE:q=3" style.
    std::string label() const;

    /// Throws std::invalid_argument when no code of this type can have the length
    /// (odd N, N not divisible by 8 for qEII, 1.1 = N nonzero in GF(q) when 1 is required).
    void check_length(int length) const;

    friend bool operator==(const TypeSpec& a, const TypeSpec& b) {
        return a.name_ == b.name_ && a.field_ == b.field_;
    }

private:
    TypeName name_;
    const Field* field_;
    FormKind form_;
};

/// Self-dual for the type's form plus the all-ones / doubly-even conditions.
/// Throws std::invalid_argument when the code lives over another field.
bool is_member(const Code& c, const TypeSpec& t);

/// (q^m - 1)/(q - 1)
BigInt beta(int m, int q);
/// Neighbor sum of Condition star for genus m and dimension n = N/2, per the closed-form table.
/// Throws std::out_of_range unless 0 <= m <= n.
Rational alpha(int m, const TypeSpec& t, int n);
/// alpha(m) - beta(m): the eigenvalue of T on Y_m.
Rational nu(int m, const TypeSpec& t, int n);

struct SpectralData {
    int n = 0;
    std::vector<BigInt> beta;
    std::vector<Rational> alpha;
    std::vector<Rational> nu;
    /// Pairs (m, m') with m < m' and nu_m = nu_m'.
    std::vector<std::pair<int, int>> collisions;
};

SpectralData spectral_data(const TypeSpec& t, int n);

/// A member of the type at the given length, built as an orthogonal sum of small
/// blocks when one is available and otherwise by extending a totally isotropic
/// code one vector at a time. Throws std::runtime_error if none exists.
Code seed_code(const TypeSpec& t, int length);

}  // namespace kneser
