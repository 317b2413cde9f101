#include "kneser/hecke.hpp"

#include <stdexcept>

#include "json.hpp"

namespace kneser {

RationalMatrix HeckeMatrix::to_rational() const {
    RationalMatrix m(size(), RationalVector(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) m[i][j] = entries[i][j];
    return m;
}

HeckeMatrix hecke_matrix(const ClassDatabase& db, int k, std::size_t work_cap) {
    if (!db.complete) throw std::invalid_argument("hecke_matrix: class database is incomplete");
    const std::size_t b = db.classes.size();
    HeckeMatrix t{k, std::vector<std::vector<std::int64_t>>(b, std::vector<std::int64_t>(b, 0))};
    if (k == 1) {
        for (const auto& r : db.records) t.entries[r.target][r.source] += static_cast<std::int64_t>(r.count);
        return t;
    }
    for (std::size_t c = 0; c < b; ++c) {
        for (const auto& d : k_neighbors(db.classes[c].representative, db.type, k, work_cap)) {
            auto idx = db.find(d);
            if (!idx) throw std::runtime_error("hecke_matrix: a k-neighbor lies outside the classified family");
            ++t.entries[*idx][c];
        }
    }
    return t;
}

Rational inner_product(const RationalVector& v, const RationalVector& w, const ClassDatabase& db) {
    if (v.size() != db.classes.size() || w.size() != db.classes.size())
        throw std::invalid_argument("inner_product: vector size does not match the class count");
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * w[i] * Rational(db.classes[i].aut_order);
    return s;
}

RationalVector mass_vector(const ClassDatabase& db) {
    RationalVector s;
    for (const auto& cl : db.classes) s.emplace_back(BigInt(1), cl.aut_order);
    return s;
}

std::vector<AdjointViolation> check_self_adjoint(const HeckeMatrix& t, const ClassDatabase& db) {
    if (t.size() != db.classes.size()) throw std::invalid_argument("check_self_adjoint: size mismatch");
    std::vector<AdjointViolation> out;
    for (std::size_t d = 0; d < t.size(); ++d)
        for (std::size_t c = d; c < t.size(); ++c) {
            BigInt lhs = db.classes[d].aut_order * t.entries[d][c];
            BigInt rhs = db.classes[c].aut_order * t.entries[c][d];
            if (lhs != rhs) out.push_back({d, c, lhs, rhs});
        }
    return out;
}

std::vector<std::size_t> column_sum_violations(const HeckeMatrix& t, const BigInt& expected) {
    std::vector<std::size_t> bad;
    for (std::size_t c = 0; c < t.size(); ++c) {
        BigInt s = 0;
        for (std::size_t d = 0; d < t.size(); ++d) s += t.entries[d][c];
        if (s != expected) bad.push_back(c);
    }
    return bad;
}

std::vector<std::size_t> Spectrum::table_row() const {
    std::vector<std::size_t> row = dims;
    while (row.size() > 1 && row.back() == 0) row.pop_back();
    return row;
}

namespace {

RationalVector times(const RationalMatrix& m, const RationalVector& v) {
    RationalVector out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace

Spectrum spectrum(const HeckeMatrix& t, const ClassDatabase& db) {
    if (t.k != 1) throw std::invalid_argument("spectrum: needs the k = 1 operator");
    if (t.size() != db.classes.size()) throw std::invalid_argument("spectrum: size mismatch");
    const int n = db.dimension();
    const SpectralData sd = spectral_data(db.type, n);
    const RationalMatrix base = t.to_rational();
    const std::size_t b = t.size();

    Spectrum s;
    s.classes = b;
    s.collisions = sd.collisions;
    s.dims.assign(n + 1, 0);
    std::vector<char> done(n + 1, 0);
    for (int m = 0; m <= n; ++m) {
        if (done[m]) continue;
        Eigenspace es;
        es.eigenvalue = sd.nu[m];
        for (int m2 = m; m2 <= n; ++m2)
            if (sd.nu[m2] == sd.nu[m]) {
                es.ms.push_back(m2);
                done[m2] = 1;
            }
        RationalMatrix shifted = base;
        for (std::size_t i = 0; i < b; ++i) shifted[i][i] -= es.eigenvalue;
        es.basis = kernel(std::move(shifted), b);
        for (int m2 : es.ms) s.dims[m2] = es.basis.size();
        s.spaces.push_back(std::move(es));
    }

    std::size_t total = 0;
    for (const auto& es : s.spaces) total += es.basis.size();
    s.complete = total == b;

    RationalVector sigma = mass_vector(db);
    RationalVector image = times(base, sigma);
    s.mass_vector_ok = true;
    for (std::size_t i = 0; i < b; ++i)
        if (image[i] != sd.nu[0] * sigma[i]) s.mass_vector_ok = false;

    s.orthogonal = true;
    for (std::size_t a = 0; a < s.spaces.size() && s.orthogonal; ++a)
        for (std::size_t c = a + 1; c < s.spaces.size() && s.orthogonal; ++c)
            for (const auto& v : s.spaces[a].basis)
                for (const auto& w : s.spaces[c].basis)
                    if (inner_product(v, w, db) != 0) s.orthogonal = false;
    return s;
}

std::optional<RationalVector> polynomial_relation(const HeckeMatrix& tk, const HeckeMatrix& t) {
    if (tk.size() != t.size()) throw std::invalid_argument("polynomial_relation: basis mismatch");
    const std::size_t b = t.size();
    const RationalMatrix tm = t.to_rational();
    // Powers T^0, T^1, ... until they become linearly dependent; that degree is minimal.
    std::vector<RationalMatrix> powers{identity_matrix(b)};
    auto flatten_columns = [&](std::size_t count) {
        RationalMatrix sys(b * b, RationalVector(count));
        for (std::size_t p = 0; p < count; ++p)
            for (std::size_t i = 0; i < b; ++i)
                for (std::size_t j = 0; j < b; ++j) sys[i * b + j][p] = powers[p][i][j];
        return sys;
    };
    while (powers.size() <= b) {
        RationalMatrix next = multiply(tm, powers.back());
        powers.push_back(std::move(next));
        if (rank(flatten_columns(powers.size())) < static_cast<int>(powers.size())) {
            powers.pop_back();
            break;
        }
    }
    RationalVector rhs(b * b);
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < b; ++j) rhs[i * b + j] = tk.entries[i][j];
    auto sol = solve(flatten_columns(powers.size()), rhs);
    if (!sol) return std::nullopt;
    while (sol->size() > 1 && sol->back() == 0) sol->pop_back();
    return sol;
}

using nlohmann::ordered_json;

std::string to_json(const HeckeMatrix& t) {
    ordered_json j;
    j["k"] = t.k;
    j["size"] = t.size();
    j["entries"] = t.entries;
    return j.dump(1) + "\n";
}

HeckeMatrix hecke_matrix_from_json(const std::string& text) {
    try {
        auto j = ordered_json::parse(text);
        HeckeMatrix t{j.at("k").get<int>(), j.at("entries").get<std::vector<std::vector<std::int64_t>>>()};
        for (const auto& row : t.entries)
            if (row.size() != t.size()) throw std::invalid_argument("Hecke matrix is not square");
        if (t.k < 1) throw std::invalid_argument("Hecke matrix with k < 1");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed Hecke matrix: ") + e.what());
    }
}

std::string to_json(const Spectrum& s, const ClassDatabase& db) {
    ordered_json j;
    j["schema_version"] = database_schema_version;
    j["tool_version"] = KNESER_VERSION;
    j["type"] = {{"name", db.type.base_name()}, {"q", db.type.q()}, {"label", db.type.label()}};
    j["length"] = db.length;
    j["classes"] = s.classes;
    j["complete"] = s.complete;
    j["mass_vector_ok"] = s.mass_vector_ok;
    j["orthogonal"] = s.orthogonal;
    j["dims"] = s.dims;
    j["table_row"] = s.table_row();
    ordered_json spaces = ordered_json::array();
    for (const auto& es : s.spaces) {
        ordered_json basis = ordered_json::array();
        for (const auto& v : es.basis) {
            std::vector<std::string> entries;
            for (const auto& x : v) entries.push_back(to_string(x));
            basis.push_back(entries);
        }
        spaces.push_back({{"m", es.ms}, {"eigenvalue", to_string(es.eigenvalue)}, {"dimension", es.basis.size()},
                          {"basis", basis}});
    }
    j["eigenspaces"] = std::move(spaces);
    ordered_json coll = ordered_json::array();
    for (auto [a, b] : s.collisions) coll.push_back({a, b});
    j["collisions"] = std::move(coll);
    return j.dump(1) + "\n";
}

}  // namespace kneser
