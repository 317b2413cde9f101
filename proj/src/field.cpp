#include "kneser/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace kneser {

std::string to_string(FormKind kind) {
    return kind == FormKind::euclidean ? "euclidean" : "hermitian";
}

namespace {

struct FieldParams {
    int p;
    int e;
    std::vector<int> poly;  // constant term first, monic
};

std::optional<FieldParams> params_for(int q) {
    switch (q) {
        case 2: return FieldParams{2, 1, {0, 1}};
        case 3: return FieldParams{3, 1, {0, 1}};
        case 4: return FieldParams{2, 2, {1, 1, 1}};
        case 5: return FieldParams{5, 1, {0, 1}};
        case 7: return FieldParams{7, 1, {0, 1}};
        case 8: return FieldParams{2, 3, {1, 1, 0, 1}};
        case 9: return FieldParams{3, 2, {2, 2, 1}};
        case 11: return FieldParams{11, 1, {0, 1}};
        case 13: return FieldParams{13, 1, {0, 1}};
        case 16: return FieldParams{2, 4, {1, 1, 0, 0, 1}};
        default: return std::nullopt;
    }
}

std::vector<int> digits(int a, int p, int e) {
    std::vector<int> d(e);
    for (int i = 0; i < e; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int a = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
    return a;
}

}  // namespace

Field::Field(int q) : q_(q) {
    auto params = params_for(q);
    if (!params) throw std::invalid_argument("unsupported field order " + std::to_string(q));
    p_ = params->p;
    e_ = params->e;
    poly_ = params->poly;

    for (int a = 0; a < q; ++a) {
        auto da = digits(a, p_, e_);
        for (int b = 0; b < q; ++b) {
            auto db = digits(b, p_, e_);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a][b] = static_cast<Symbol>(undigits(s, p_));

            // Schoolbook product, then reduce by the monic defining polynomial.
            std::vector<int> prod(2 * e_, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            if (e_ == 1) {
                prod[0] = (da[0] * db[0]) % p_;
            } else {
                for (int deg = 2 * e_ - 1; deg >= e_; --deg) {
                    int c = prod[deg];
                    if (c == 0) continue;
                    for (int i = 0; i <= e_; ++i) {
                        int idx = deg - e_ + i;
                        prod[idx] = ((prod[idx] - c * poly_[i]) % p_ + p_) % p_;
                    }
                }
            }
            prod.resize(e_);
            mul_[a][b] = static_cast<Symbol>(undigits(prod, p_));
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add_[a][b] == 0) neg_[a] = static_cast<Symbol>(b);
            if (mul_[a][b] == 1) inv_[a] = static_cast<Symbol>(b);
        }
    }

    // Smallest-index generator of the multiplicative group.
    for (int g = 1; g < q; ++g) {
        int order = 1;
        Symbol x = static_cast<Symbol>(g);
        while (x != 1) {
            x = mul_[x][g];
            ++order;
        }
        if (order == q - 1) {
            primitive_ = static_cast<Symbol>(g);
            break;
        }
    }
    Symbol x = 1;
    for (int k = 0; k < q - 1; ++k) {
        log_[x] = k;
        x = mul_[x][primitive_];
    }

    for (int r = 2; r * r <= q; ++r) {
        if (r * r == q) conj_exp_ = r;
    }
    for (int a = 0; a < q; ++a) {
        conj_[a] = conj_exp_ ? pow(static_cast<Symbol>(a), static_cast<unsigned>(*conj_exp_))
                             : static_cast<Symbol>(a);
    }
}

const Field& Field::of(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Field>> registry;
    std::lock_guard lock(mu);
    auto it = registry.find(q);
    if (it == registry.end()) {
        it = registry.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    }
    return *it->second;
}

std::vector<int> Field::supported_orders() { return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}; }

Symbol Field::inv(Symbol a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(q_) + ")");
    return inv_[a];
}

Symbol Field::pow(Symbol a, unsigned k) const {
    Symbol r = 1;
    Symbol base = a;
    while (k) {
        if (k & 1u) r = mul_[r][base];
        base = mul_[base][base];
        k >>= 1u;
    }
    return r;
}

Symbol Field::conj(Symbol a) const {
    if (!conj_exp_) {
        throw std::logic_error("GF(" + std::to_string(q_) + ") has no order-2 automorphism");
    }
    return conj_[a];
}

Symbol Field::from_int(long n) const {
    long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Symbol>(r);
}

Symbol Field::form(std::span<const Symbol> x, std::span<const Symbol> y, FormKind kind) const {
    if (x.size() != y.size()) throw std::invalid_argument("form: length mismatch");
    if (kind == FormKind::hermitian && !conj_exp_) {
        throw std::logic_error("hermitian form over non-square field");
    }
    Symbol s = 0;
    if (kind == FormKind::euclidean) {
        for (std::size_t i = 0; i < x.size(); ++i) s = add_[s][mul_[x[i]][y[i]]];
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) s = add_[s][mul_[x[i]][conj_[y[i]]]];
    }
    return s;
}

std::string Field::element_name(Symbol a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    if (a == 1) return "1";
    int k = log_[a];
    return k == 1 ? "w" : "w^" + std::to_string(k);
}

FieldElement::FieldElement(const Field& field, Symbol value) : field_(&field), value_(value) {
    if (value >= field.q()) throw std::out_of_range("field element index out of range");
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (&a.field() != &b.field()) throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement FieldElement::inv() const { return {*field_, field_->inv(value_)}; }
FieldElement FieldElement::conj() const { return {*field_, field_->conj(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field().add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field().sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field(), a.field().mul(a.value(), b.value())};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return &a.field() == &b.field() && a.value() == b.value();
}

}  // namespace kneser
