#include "kneser/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace kneser {

Code::Code(const Field& field, int length) : field_(&field), length_(length) {
    if (length < 0) throw std::invalid_argument("negative code length");
}

Code rref(const Field& field, int length, Matrix rows) {
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != length) throw std::invalid_argument("rref: ragged matrix");
        for (Symbol s : r)
            if (s >= field.q()) throw std::invalid_argument("rref: symbol out of range");
    }
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < length && r < nrows; ++col) {
        int sel = -1;
        for (int i = r; i < nrows; ++i) {
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Symbol inv = field.inv(rows[r][col]);
        if (inv != 1)
            for (int j = col; j < length; ++j) rows[r][j] = field.mul(rows[r][j], inv);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Symbol f = field.neg(rows[i][col]);
            for (int j = col; j < length; ++j)
                rows[i][j] = field.add(rows[i][j], field.mul(f, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    Code c(field, length);
    c.rows_ = std::move(rows);
    c.pivots_ = std::move(pivots);
    return c;
}

std::optional<Vector> Code::coordinates(std::span<const Symbol> v) const {
    if (static_cast<int>(v.size()) != length_) throw std::invalid_argument("coordinates: length mismatch");
    Vector w(v.begin(), v.end());
    Vector coeff(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Symbol c = w[pivots_[i]];
        coeff[i] = c;
        if (c == 0) continue;
        Symbol f = field_->neg(c);
        for (int j = pivots_[i]; j < length_; ++j) w[j] = field_->add(w[j], field_->mul(f, rows_[i][j]));
    }
    for (Symbol s : w)
        if (s != 0) return std::nullopt;
    return coeff;
}

bool Code::contains(std::span<const Symbol> v) const { return coordinates(v).has_value(); }

Vector Code::combine(std::span<const Symbol> coeffs) const {
    Vector v(length_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (int j = 0; j < length_; ++j) v[j] = field_->add(v[j], field_->mul(coeffs[i], rows_[i][j]));
    }
    return v;
}

Matrix Code::codewords() const {
    const int q = field_->q();
    const int k = dimension();
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::size_t>(q);
    Matrix words;
    words.reserve(total);
    Vector coeff(k, 0);
    Vector cur(length_, 0);
    words.push_back(cur);
    // Odometer over coefficient digits (row 0 least significant).
    for (std::size_t t = 1; t < total; ++t) {
        int i = 0;
        while (true) {
            Symbol old = coeff[i];
            Symbol nxt = static_cast<Symbol>((old + 1) % q);
            Symbol delta = field_->sub(nxt, old);
            for (int j = 0; j < length_; ++j) cur[j] = field_->add(cur[j], field_->mul(delta, rows_[i][j]));
            coeff[i] = nxt;
            if (nxt != 0) break;
            ++i;
        }
        words.push_back(cur);
    }
    return words;
}

Code Code::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != length_) throw std::invalid_argument("permuted: wrong permutation size");
    Matrix rows(rows_.size(), Vector(length_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < length_; ++j) rows[i][perm[j]] = rows_[i][j];
    return rref(*field_, length_, std::move(rows));
}

std::string Code::key() const {
    std::string s;
    s.reserve(rows_.size() * static_cast<std::size_t>(length_));
    for (const auto& r : rows_) s.append(r.begin(), r.end());
    return s;
}

bool operator<(const Code& a, const Code& b) {
    if (a.field_->q() != b.field_->q()) return a.field_->q() < b.field_->q();
    if (a.length_ != b.length_) return a.length_ < b.length_;
    return a.rows_ < b.rows_;
}

Code dual(const Code& c, FormKind kind) {
    const Field& f = c.field();
    const int n = c.length();
    const auto& rows = c.generators();
    // Kernel of the matrix whose rows are conj(g_i): b(v, g) = sum v_j conj(g_j).
    Matrix m(rows.size(), Vector(n));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m[i][j] = f.form_conj(rows[i][j], kind);
    Code mr = rref(f, n, std::move(m));
    const auto& mrows = mr.generators();
    const auto& mpiv = mr.pivots();
    std::vector<char> is_pivot(n, 0);
    for (int p : mpiv) is_pivot[p] = 1;
    Matrix basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        Vector v(n, 0);
        v[col] = 1;
        for (std::size_t i = 0; i < mrows.size(); ++i) v[mpiv[i]] = f.neg(mrows[i][col]);
        basis.push_back(std::move(v));
    }
    return rref(f, n, std::move(basis));
}

namespace {
void require_same_ambient(const Code& c, const Code& d) {
    if (&c.field() != &d.field() || c.length() != d.length())
        throw std::invalid_argument("codes live in different ambient spaces");
}
}  // namespace

Code sum(const Code& c, const Code& d) {
    require_same_ambient(c, d);
    Matrix rows = c.generators();
    rows.insert(rows.end(), d.generators().begin(), d.generators().end());
    return rref(c.field(), c.length(), std::move(rows));
}

Code intersect(const Code& c, const Code& d) {
    require_same_ambient(c, d);
    return dual(sum(dual(c, FormKind::euclidean), dual(d, FormKind::euclidean)), FormKind::euclidean);
}

Code extend(const Code& c, std::span<const Symbol> v) {
    Matrix rows = c.generators();
    rows.emplace_back(v.begin(), v.end());
    return rref(c.field(), c.length(), std::move(rows));
}

Code direct_sum(const Code& c, const Code& d) {
    if (&c.field() != &d.field()) throw std::invalid_argument("direct_sum: field mismatch");
    const int n = c.length() + d.length();
    Matrix rows;
    for (const auto& r : c.generators()) {
        Vector v(n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rows.push_back(std::move(v));
    }
    for (const auto& r : d.generators()) {
        Vector v(n, 0);
        std::copy(r.begin(), r.end(), v.begin() + c.length());
        rows.push_back(std::move(v));
    }
    return rref(c.field(), n, std::move(rows));
}

bool is_subcode(const Code& sub, const Code& super) {
    require_same_ambient(sub, super);
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const Vector& r) { return super.contains(r); });
}

Vector all_ones(int length) { return Vector(length, 1); }

int weight(std::span<const Symbol> v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](Symbol s) { return s != 0; }));
}

bool is_self_orthogonal(const Code& c, FormKind kind) {
    const auto& rows = c.generators();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (c.field().form(rows[i], rows[j], kind) != 0) return false;
    return true;
}

bool is_self_dual(const Code& c, FormKind kind) {
    return 2 * c.dimension() == c.length() && is_self_orthogonal(c, kind);
}

bool is_doubly_even(const Code& c) {
    if (c.field().q() != 2) throw std::invalid_argument("is_doubly_even: requires q = 2");
    const auto& rows = c.generators();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (weight(rows[i]) % 4 != 0) return false;
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            int overlap = 0;
            for (int t = 0; t < c.length(); ++t) overlap += rows[i][t] & rows[j][t];
            if (overlap % 2 != 0) return false;
        }
    }
    return true;
}

bool contains_allones(const Code& c) { return c.contains(all_ones(c.length())); }

std::vector<Vector> projective_points(const Field& field, int dim) {
    const int q = field.q();
    std::vector<Vector> pts;
    Vector v(dim, 0);
    // Leading nonzero coordinate fixed to 1, everything after it free.
    for (int lead = 0; lead < dim; ++lead) {
        std::size_t tail = 1;
        for (int i = lead + 1; i < dim; ++i) tail *= static_cast<std::size_t>(q);
        for (std::size_t t = 0; t < tail; ++t) {
            std::fill(v.begin(), v.end(), 0);
            v[lead] = 1;
            std::size_t x = t;
            for (int i = dim - 1; i > lead; --i) {
                v[i] = static_cast<Symbol>(x % q);
                x /= q;
            }
            pts.push_back(v);
        }
    }
    return pts;
}

SubspaceIterator::SubspaceIterator(Code ambient, std::optional<Vector> must_contain)
    : ambient_(std::move(ambient)) {
    const Field& f = ambient_.field();
    std::optional<Vector> mu;
    if (must_contain) {
        mu = ambient_.coordinates(*must_contain);
        if (!mu) throw std::invalid_argument("subspace constraint vector is not in the code");
    }
    for (auto& a : projective_points(f, ambient_.dimension())) {
        if (mu) {
            Symbol s = 0;
            for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], (*mu)[i]));
            if (s != 0) continue;
        }
        functionals_.push_back(std::move(a));
    }
}

std::optional<Code> SubspaceIterator::next() {
    if (pos_ >= functionals_.size()) return std::nullopt;
    return hyperplane(ambient_, functionals_[pos_++]);
}

Code SubspaceIterator::hyperplane(const Code& ambient, std::span<const Symbol> a) {
    const Field& f = ambient.field();
    const auto& g = ambient.generators();
    int j = 0;
    while (j < static_cast<int>(a.size()) && a[j] == 0) ++j;
    if (j == static_cast<int>(a.size())) throw std::invalid_argument("hyperplane: zero functional");
    Symbol aj_inv = f.inv(a[j]);
    Matrix rows;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        if (i == j) continue;
        // g_i - (a_i / a_j) g_j lies in the kernel.
        Symbol c = f.neg(f.mul(a[i], aj_inv));
        Vector v = g[i];
        if (c != 0)
            for (int t = 0; t < ambient.length(); ++t) v[t] = f.add(v[t], f.mul(c, g[j][t]));
        rows.push_back(std::move(v));
    }
    return rref(f, ambient.length(), std::move(rows));
}

}  // namespace kneser
