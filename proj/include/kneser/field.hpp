#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kneser {

/// Index of a field element in the fixed enumeration 0..q-1.
using Symbol = std::uint8_t;
using Vector = std::vector<Symbol>;

enum class FormKind { euclidean, hermitian };

std::string to_string(FormKind kind);

/// GF(q) for small prime powers q, backed by full add/mul tables.
///
/// Prime fields index elements by residue. Extension fields GF(p^e) index
/// the polynomial c_0 + c_1 x + ... + c_{e-1} x^{e-1} as sum c_i p^i, reduced
/// modulo a fixed monic defining polynomial (GF(4): x^2+x+1, GF(8): x^3+x+1,
/// GF(9): x^2+2x+2, GF(16): x^4+x+1). Instances are interned; compare by
/// address or by q().
class Field {
public:
    static constexpr int max_order = 16;

    /// Throws std::invalid_argument for unsupported q.
    static const Field& of(int q);
    static std::vector<int> supported_orders();

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return e_; }
    /// Defining polynomial coefficients, constant term first, monic (size e+1).
    std::span<const int> polynomial() const { return poly_; }
    /// r with q = r^2 when q is a perfect square.
    std::optional<int> conj_exponent() const { return conj_exp_; }
    bool is_square() const { return conj_exp_.has_value(); }

    Symbol add(Symbol a, Symbol b) const { return add_[a][b]; }
    Symbol sub(Symbol a, Symbol b) const { return add_[a][neg_[b]]; }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[a][b]; }
    /// Throws std::domain_error on zero.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, unsigned k) const;

    /// x -> x^r; throws std::logic_error when q is not a square.
    Symbol conj(Symbol a) const;
    /// Identity for Euclidean forms, conj for Hermitian.
    Symbol form_conj(Symbol a, FormKind kind) const {
        return kind == FormKind::euclidean ? a : conj_[a];
    }
    /// Integer n mapped into the prime subfield.
    Symbol from_int(long n) const;
    Symbol primitive_element() const { return primitive_; }

    /// sum_i x_i * conj(y_i); throws std::invalid_argument on length mismatch.
    Symbol form(std::span<const Symbol> x, std::span<const Symbol> y, FormKind kind) const;

    /// Human-readable element name ("0", "1", "w", "w^2", ...).
    std::string element_name(Symbol a) const;

private:
    explicit Field(int q);

    int q_ = 0;
    int p_ = 0;
    int e_ = 0;
    std::vector<int> poly_;
    std::optional<int> conj_exp_;
    Symbol primitive_ = 0;
    std::array<std::array<Symbol, max_order>, max_order> add_{};
    std::array<std::array<Symbol, max_order>, max_order> mul_{};
    std::array<Symbol, max_order> neg_{};
    std::array<Symbol, max_order> inv_{};
    std::array<Symbol, max_order> conj_{};
    std::array<int, max_order> log_{};
};

/// A field element bound to its field; arithmetic checks that operands agree.
class FieldElement {
public:
    FieldElement(const Field& field, Symbol value);

    const Field& field() const { return *field_; }
    Symbol value() const { return value_; }

    FieldElement inv() const;
    FieldElement conj() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    const Field* field_;
    Symbol value_;
};

}  // namespace kneser
