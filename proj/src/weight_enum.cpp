#include "kneser/weight_enum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace kneser {

int Monomial::degree() const {
    int d = 0;
    for (const auto& [idx, e] : exponents) d += static_cast<int>(e);
    return d;
}

Vector decode_index(std::uint32_t index, int q, int m) {
    Vector a(m);
    for (int i = 0; i < m; ++i) {
        a[i] = static_cast<Symbol>(index % q);
        index /= q;
    }
    return a;
}

std::uint32_t encode_vector(std::span<const Symbol> a, int q) {
    std::uint32_t idx = 0;
    for (std::size_t i = a.size(); i-- > 0;) idx = idx * q + a[i];
    return idx;
}

Monomial mon(const Field& f, const Matrix& tuple, int length) {
    for (const auto& w : tuple)
        if (static_cast<int>(w.size()) != length) throw std::invalid_argument("mon: codeword length mismatch");
    std::map<std::uint32_t, std::uint32_t> counts;
    Vector col(tuple.size());
    for (int p = 0; p < length; ++p) {
        for (std::size_t i = 0; i < tuple.size(); ++i) col[i] = tuple[i][p];
        ++counts[encode_vector(col, f.q())];
    }
    Monomial x;
    x.m = static_cast<int>(tuple.size());
    x.exponents.assign(counts.begin(), counts.end());
    return x;
}

namespace {

Matrix support_vectors(const Monomial& x, const Field& f) {
    Matrix vs;
    for (const auto& [idx, e] : x.exponents)
        if (e > 0) vs.push_back(decode_index(idx, f.q(), x.m));
    return vs;
}

}  // namespace

int rank(const Monomial& x, const Field& f) {
    if (x.m == 0) return 0;
    return rref(f, x.m, support_vectors(x, f)).dimension();
}

Matrix preimage(const Monomial& x, const Field& f) {
    Matrix tuple(x.m);
    for (const auto& [idx, e] : x.exponents) {
        Vector a = decode_index(idx, f.q(), x.m);
        for (std::uint32_t r = 0; r < e; ++r)
            for (int i = 0; i < x.m; ++i) tuple[i].push_back(a[i]);
    }
    return tuple;
}

bool in_M_one(const Monomial& x, const Field& f) {
    if (rank(x, f) != x.m) return false;
    // The span of the rows of a preimage does not depend on the column order,
    // and by basis independence neither does the answer.
    Matrix tuple = preimage(x, f);
    const int length = x.degree();
    Code u = rref(f, length, tuple);
    return !u.contains(all_ones(length));
}

std::uint64_t SparseWE::total() const {
    std::uint64_t s = 0;
    for (const auto& [mono, c] : terms) s += c;
    return s;
}

namespace {

std::uint64_t checked_tuple_count(int q, int k, int m, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < k * m; ++i) {
        if (total > budget / static_cast<std::uint64_t>(q))
            throw std::length_error("cwe: q^(km) tuples exceed the enumeration budget");
        total *= static_cast<std::uint64_t>(q);
    }
    if (total > budget) throw std::length_error("cwe: q^(km) tuples exceed the enumeration budget");
    return total;
}

// How a tuple's monomial is turned into a hash key. When it fits, the key is a
// single 64-bit word: either every exponent in a fixed-width field, or the
// sorted column indices. Otherwise the exponent histogram as a byte string.
enum class KeyMode { exponents, sorted_indices, text };

struct CweWalker {
    const Matrix& words;
    int q;
    int m;
    int length;
    std::size_t vars;
    KeyMode mode;
    int width;
    std::vector<std::vector<std::uint32_t>> partial;  // column indices after each level
    std::vector<std::uint32_t> scratch;
    std::string hist;
    std::unordered_map<std::uint64_t, std::uint64_t> packed;
    std::unordered_map<std::string, std::uint64_t> text;

    void leaf(const std::vector<std::uint32_t>& cols) {
        switch (mode) {
            case KeyMode::exponents: {
                std::uint64_t key = 0;
                for (int p = 0; p < length; ++p) key += std::uint64_t{1} << (width * cols[p]);
                ++packed[key];
                return;
            }
            case KeyMode::sorted_indices: {
                std::copy(cols.begin(), cols.end(), scratch.begin());
                std::sort(scratch.begin(), scratch.end());
                std::uint64_t key = 0;
                for (auto v : scratch) key = (key << width) | v;
                ++packed[key];
                return;
            }
            case KeyMode::text:
                std::fill(hist.begin(), hist.end(), 0);
                for (int p = 0; p < length; ++p) ++hist[cols[p]];
                ++text[hist];
                return;
        }
    }

    void walk(int level, std::uint32_t place) {
        const auto& prev = partial[level];
        if (level == m) {
            leaf(prev);
            return;
        }
        auto& cur = partial[level + 1];
        for (const auto& w : words) {
            for (int p = 0; p < length; ++p) cur[p] = prev[p] + place * w[p];
            walk(level + 1, place * q);
        }
    }

    std::vector<std::uint32_t> exponents_of(std::uint64_t key) const {
        std::vector<std::uint32_t> e(vars, 0);
        const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
        if (mode == KeyMode::exponents) {
            for (std::size_t idx = 0; idx < vars; ++idx) e[idx] = static_cast<std::uint32_t>((key >> (width * idx)) & mask);
        } else {
            for (int p = 0; p < length; ++p) ++e[(key >> (width * p)) & mask];
        }
        return e;
    }
};

}  // namespace

SparseWE cwe(const Code& c, int m, std::uint64_t budget) {
    if (m < 0) throw std::invalid_argument("cwe: negative genus");
    const Field& f = c.field();
    const int q = f.q();
    checked_tuple_count(q, c.dimension(), m, budget);
    if (c.length() > 255) throw std::invalid_argument("cwe: length above 255 is not supported");
    const Matrix words = c.codewords();
    const int length = c.length();
    std::size_t vars = 1;
    for (int i = 0; i < m; ++i) vars *= q;

    KeyMode mode = KeyMode::text;
    int width = 0;
    const int exp_width = std::bit_width(static_cast<unsigned>(length));
    const int idx_width = std::max(1, static_cast<int>(std::bit_width(vars - 1)));
    if (vars * exp_width <= 64) {
        mode = KeyMode::exponents;
        width = exp_width;
    } else if (static_cast<std::size_t>(length) * idx_width <= 64) {
        mode = KeyMode::sorted_indices;
        width = idx_width;
    }
    CweWalker w{words,
                q,
                m,
                length,
                vars,
                mode,
                width,
                std::vector<std::vector<std::uint32_t>>(m + 1, std::vector<std::uint32_t>(length, 0)),
                std::vector<std::uint32_t>(length),
                std::string(vars, '\0'),
                {},
                {}};
    w.walk(0, 1);

    SparseWE out;
    out.m = m;
    auto add = [&](const std::vector<std::uint32_t>& e, std::uint64_t count) {
        Monomial x;
        x.m = m;
        for (std::size_t idx = 0; idx < vars; ++idx)
            if (e[idx]) x.exponents.emplace_back(static_cast<std::uint32_t>(idx), e[idx]);
        out.terms.emplace(std::move(x), count);
    };
    for (const auto& [key, count] : w.packed) add(w.exponents_of(key), count);
    for (const auto& [h, count] : w.text) {
        std::vector<std::uint32_t> e(vars);
        for (std::size_t idx = 0; idx < vars; ++idx) e[idx] = static_cast<unsigned char>(h[idx]);
        add(e, count);
    }
    return out;
}

SparseWE phi(const SparseWE& p, int q) {
    if (p.m == 0) throw std::invalid_argument("phi: genus 0 has no lower genus");
    std::uint32_t bound = 1;
    for (int i = 0; i < p.m - 1; ++i) bound *= q;
    SparseWE out;
    out.m = p.m - 1;
    for (const auto& [x, c] : p.terms) {
        bool keep = true;
        for (const auto& [idx, e] : x.exponents) keep = keep && idx < bound;
        if (!keep) continue;
        Monomial y = x;
        y.m = p.m - 1;
        out.terms[y] += c;
    }
    return out;
}

std::uint64_t a_X(const Code& c, const Monomial& x, std::uint64_t budget) {
    SparseWE w = cwe(c, x.m, budget);
    auto it = w.terms.find(x);
    return it == w.terms.end() ? 0 : it->second;
}

std::vector<std::size_t> filtration_dims(const ClassDatabase& db, int m_max, std::uint64_t budget) {
    if (m_max < 0) throw std::invalid_argument("filtration_dims: negative genus");
    const int q = db.type.q();
    // Genus m_max once per class; lower genera follow from Phi.
    std::vector<SparseWE> cur;
    for (const auto& cl : db.classes) cur.push_back(cwe(cl.representative, m_max, budget));
    std::vector<std::size_t> dims(m_max + 1);
    for (int m = m_max; m >= 0; --m) {
        std::map<Monomial, std::size_t> column;
        for (const auto& w : cur)
            for (const auto& [x, c] : w.terms) column.emplace(x, 0);
        std::size_t idx = 0;
        for (auto& [x, col] : column) col = idx++;
        RationalMatrix rows(cur.size(), RationalVector(column.size(), 0));
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (const auto& [x, c] : cur[i].terms) rows[i][column.at(x)] = Rational(BigInt(c));
        dims[m] = static_cast<std::size_t>(rank(std::move(rows)));
        if (m > 0)
            for (auto& w : cur) w = phi(w, q);
    }
    return dims;
}

RationalVector sigma_and_bX(const ClassDatabase& db, const Monomial& x, std::uint64_t budget) {
    RationalVector b;
    for (const auto& cl : db.classes)
        b.emplace_back(BigInt(a_X(cl.representative, x, budget)), cl.aut_order);
    return b;
}

bool admissible(const Monomial& x, const TypeSpec& t) {
    return t.monomial_set() == MonomialSet::m_one ? in_M_one(x, t.field()) : rank(x, t.field()) == x.m;
}

ConditionStarReport sample_condition_star(const ClassDatabase& db, int m, std::size_t samples, std::mt19937_64& rng) {
    if (db.classes.empty()) throw std::invalid_argument("sample_condition_star: empty database");
    if (m < 1 || m > db.dimension()) throw std::out_of_range("sample_condition_star: m outside 1..n");
    const Field& f = db.type.field();
    ConditionStarReport report;
    report.m = m;
    report.expected = alpha(m, db.type, db.dimension());
    std::uniform_int_distribution<std::size_t> pick_class(0, db.classes.size() - 1);
    std::uniform_int_distribution<int> pick_symbol(0, f.q() - 1);
    // Rejection sampling; give up after a generous number of misses.
    const std::size_t max_tries = samples * 200 + 1000;
    for (std::size_t tries = 0; tries < max_tries && report.samples.size() < samples; ++tries) {
        std::size_t ci = pick_class(rng);
        const Code& c = db.classes[ci].representative;
        Matrix tuple;
        for (int i = 0; i < m; ++i) {
            Vector coeff(c.dimension());
            for (auto& s : coeff) s = static_cast<Symbol>(pick_symbol(rng));
            tuple.push_back(c.combine(coeff));
        }
        if (!admissible(mon(f, tuple, c.length()), db.type)) continue;
        ConditionStarSample s{ci, tuple, condition_star_sum(c, db.type, tuple)};
        if (Rational(BigInt(s.sum)) != report.expected) report.failures.push_back(s);
        report.samples.push_back(std::move(s));
    }
    return report;
}

std::string to_string(const SparseWE& p) {
    std::string s;
    for (const auto& [x, c] : p.terms) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (const auto& [idx, e] : x.exponents) {
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(idx);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) mono = "1";
        s += c == 1 ? mono : std::to_string(c) + "*" + mono;
    }
    return s.empty() ? "0" : s;
}

std::string to_json(const SparseWE& p) {
    nlohmann::ordered_json j;
    j["genus"] = p.m;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [x, c] : p.terms) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::array();
        for (const auto& [idx, e] : x.exponents) exps.push_back({idx, e});
        terms.push_back({{"exponents", exps}, {"coefficient", c}});
    }
    j["terms"] = std::move(terms);
    return j.dump(1) + "\n";
}

}  // namespace kneser
