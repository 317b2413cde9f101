#include "kneser/types.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kneser {

namespace {

bool is_square_order(int q) {
    for (int r = 1; r * r <= q; ++r)
        if (r * r == q) return true;
    return false;
}

int int_sqrt(int q) {
    int r = 1;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r;
}

/// q^e for any integer e, exactly.
Rational rational_pow(int q, int e) {
    BigInt p = 1;
    for (int i = 0; i < std::abs(e); ++i) p *= q;
    return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

TypeSpec::TypeSpec(TypeName name, int q) : name_(name), field_(&Field::of(q)) {
    const bool odd = q % 2 == 1;
    switch (name) {
        case TypeName::qE:
        case TypeName::qE1:
            if (!odd) throw std::invalid_argument("types qE and qE1 need odd q");
            form_ = FormKind::euclidean;
            break;
        case TypeName::qEI:
            if (odd) throw std::invalid_argument("type qEI needs even q");
            form_ = FormKind::euclidean;
            break;
        case TypeName::qEII:
            // The doubly-even notion is only implemented over GF(2).
            if (q != 2) throw std::invalid_argument("type qEII is supported for q = 2 only");
            form_ = FormKind::euclidean;
            break;
        case TypeName::qH:
        case TypeName::qH1:
            if (!is_square_order(q)) throw std::invalid_argument("Hermitian types need square q");
            form_ = FormKind::hermitian;
            break;
    }
}

TypeSpec TypeSpec::parse(const std::string& text) {
    std::string s = lower(text);
    if (s == "2ei") return {TypeName::qEI, 2};
    if (s == "2eii") return {TypeName::qEII, 2};
    auto colon = s.find(':');
    if (colon == std::string::npos || s.compare(colon + 1, 2, "q=") != 0)
        throw std::invalid_argument("unrecognised type '" + text + "' (expected e.g. 2eI, 2eII, qE:q=3, qH:q=4)");
    std::string base = s.substr(0, colon);
    int q = 0;
    try {
        std::size_t used = 0;
        q = std::stoi(s.substr(colon + 3), &used);
        if (colon + 3 + used != s.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad field size in type '" + text + "'");
    }
    if (base == "qe") return {TypeName::qE, q};
    if (base == "qe1") return {TypeName::qE1, q};
    if (base == "qei") return {TypeName::qEI, q};
    if (base == "qeii") return {TypeName::qEII, q};
    if (base == "qh") return {TypeName::qH, q};
    if (base == "qh1") return {TypeName::qH1, q};
    throw std::invalid_argument("unrecognised type name '" + text + "'");
}

bool TypeSpec::requires_allones() const {
    return name_ == TypeName::qE1 || name_ == TypeName::qH1 || name_ == TypeName::qEI || name_ == TypeName::qEII;
}

std::string TypeSpec::base_name() const {
    switch (name_) {
        case TypeName::qE: return "qE";
        case TypeName::qE1: return "qE1";
        case TypeName::qEI: return "qEI";
        case TypeName::qEII: return "qEII";
        case TypeName::qH: return "qH";
        case TypeName::qH1: return "qH1";
    }
    return "?";
}

std::string TypeSpec::label() const {
    if (q() == 2 && name_ == TypeName::qEI) return "2eI";
    if (q() == 2 && name_ == TypeName::qEII) return "2eII";
    return base_name() + ":q=" + std::to_string(q());
}

void TypeSpec::check_length(int length) const {
    if (length < 2 || length % 2 != 0)
        throw std::invalid_argument("length must be a positive even number, got " + std::to_string(length));
    if (name_ == TypeName::qEII && length % 8 != 0)
        throw std::invalid_argument("doubly-even self-dual codes need length divisible by 8");
    if (requires_allones() && length % field_->characteristic() != 0)
        throw std::invalid_argument(label() + " needs the all-ones vector to be isotropic, i.e. length divisible by " +
                                    std::to_string(field_->characteristic()));
}

bool is_member(const Code& c, const TypeSpec& t) {
    if (&c.field() != &t.field()) throw std::invalid_argument("is_member: code and type use different fields");
    if (!is_self_dual(c, t.form_kind())) return false;
    if (t.requires_allones() && !contains_allones(c)) return false;
    if (t.requires_doubly_even() && !is_doubly_even(c)) return false;
    return true;
}

BigInt beta(int m, int q) {
    if (m < 0) throw std::out_of_range("beta: negative m");
    BigInt s = 0, p = 1;
    for (int i = 0; i < m; ++i) {
        s += p;
        p *= q;
    }
    return s;
}

Rational alpha(int m, const TypeSpec& t, int n) {
    if (m < 0 || m > n) throw std::out_of_range("alpha: m outside 0..n");
    const int q = t.q();
    Rational times_q_minus_1;
    switch (t.name()) {
        case TypeName::qEI: times_q_minus_1 = rational_pow(q, n - m) - q; break;
        case TypeName::qEII:
        case TypeName::qE1: times_q_minus_1 = rational_pow(q, n - m - 1) - 1; break;
        case TypeName::qE: times_q_minus_1 = rational_pow(q, n - m) - 1; break;
        case TypeName::qH: times_q_minus_1 = int_sqrt(q) * (rational_pow(q, n - m) - 1); break;
        case TypeName::qH1: times_q_minus_1 = int_sqrt(q) * (rational_pow(q, n - m - 1) - 1); break;
    }
    return times_q_minus_1 / (q - 1);
}

Rational nu(int m, const TypeSpec& t, int n) { return alpha(m, t, n) - Rational(beta(m, t.q())); }

SpectralData spectral_data(const TypeSpec& t, int n) {
    SpectralData d;
    d.n = n;
    for (int m = 0; m <= n; ++m) {
        d.beta.push_back(beta(m, t.q()));
        d.alpha.push_back(alpha(m, t, n));
        d.nu.push_back(d.alpha.back() - Rational(d.beta.back()));
    }
    for (int a = 0; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (d.nu[a] == d.nu[b]) d.collisions.emplace_back(a, b);
    return d;
}

namespace {

Code repeat_block(const Code& block, int copies) {
    Code out(block.field(), 0);
    for (int i = 0; i < copies; ++i) out = direct_sum(out, block);
    return out;
}

/// Smallest c with 1 + c * conj(c) = 0, i.e. <(1, c)> is self-dual of length 2.
std::optional<Symbol> pair_block_entry(const Field& f, FormKind kind) {
    for (int c = 1; c < f.q(); ++c) {
        Symbol s = static_cast<Symbol>(c);
        if (f.add(1, f.mul(s, f.form_conj(s, kind))) == 0) return s;
    }
    return std::nullopt;
}

/// A self-dual [4,2] code with generator rows (1,0,a,b), (0,1,c,d), if any.
std::optional<Code> length4_block(const Field& f, FormKind kind) {
    const int q = f.q();
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    Code cand = rref(f, 4, {{1, 0, Symbol(a), Symbol(b)}, {0, 1, Symbol(c), Symbol(d)}});
                    if (is_self_dual(cand, kind)) return cand;
                }
    return std::nullopt;
}

/// Extends a totally isotropic code to dimension N/2 by adding isotropic vectors
/// from its dual. All maximal totally isotropic subspaces of a non-degenerate
/// space share one dimension, so getting stuck means no self-dual code exists.
std::optional<Code> greedy_extension(Code u, FormKind kind) {
    const Field& f = u.field();
    const int q = f.q();
    const int length = u.length();
    constexpr std::size_t max_tries = std::size_t{1} << 22;
    while (2 * u.dimension() < length) {
        Code perp = dual(u, kind);
        const int k = perp.dimension();
        bool found = false;
        Vector coeff(k, 0);
        for (std::size_t t = 1; t < max_tries && !found; ++t) {
            std::size_t x = t;
            bool overflow = false;
            for (int i = 0; i < k; ++i) {
                coeff[i] = static_cast<Symbol>(x % q);
                x /= q;
            }
            if (x != 0) overflow = true;
            if (overflow) break;
            Vector v = perp.combine(coeff);
            if (f.form(v, v, kind) != 0 || u.contains(v)) continue;
            u = extend(u, v);
            found = true;
        }
        if (!found) return std::nullopt;
    }
    return u;
}

}  // namespace

Code seed_code(const TypeSpec& t, int length) {
    t.check_length(length);
    const Field& f = t.field();
    const FormKind kind = t.form_kind();
    std::optional<Code> seed;
    if (t.name() == TypeName::qEII) {
        Code e8 = rref(f, 8,
                       {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}, {1, 0, 1, 0, 1, 0, 1, 0}});
        seed = repeat_block(e8, length / 8);
    } else if (auto c = pair_block_entry(f, kind); c && (!t.requires_allones() || *c == 1)) {
        seed = repeat_block(rref(f, 2, {{1, *c}}), length / 2);
    } else if (!t.requires_allones() && length % 4 == 0) {
        if (auto block = length4_block(f, kind)) seed = repeat_block(*block, length / 4);
    }
    if (!seed) {
        Code start = t.requires_allones() ? rref(f, length, {all_ones(length)}) : Code(f, length);
        seed = greedy_extension(start, kind);
    }
    if (!seed || !is_member(*seed, t))
        throw std::runtime_error("no self-dual code of type " + t.label() + " and length " + std::to_string(length) +
                                 " could be constructed");
    return *seed;
}

}  // namespace kneser
