#include "kneser/neighbor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "json.hpp"

namespace kneser {

namespace {

Symbol apply_functional(const Field& f, std::span<const Symbol> a, std::span<const Symbol> coords) {
    Symbol s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], coords[i]));
    return s;
}

void require_member(const Code& c, const TypeSpec& t) {
    if (!is_member(c, t)) throw std::invalid_argument("code is not a member of type " + t.label());
}

/// Two vectors of `outer` that are independent modulo `inner` (inner < outer, codim 2).
std::pair<Vector, Vector> complement_pair(const Code& inner, const Code& outer) {
    Code span = inner;
    std::vector<Vector> picked;
    for (const auto& r : outer.generators()) {
        if (span.contains(r)) continue;
        picked.push_back(r);
        span = extend(span, r);
        if (picked.size() == 2) break;
    }
    if (picked.size() != 2) throw std::logic_error("complement_pair: codimension is not 2");
    return {picked[0], picked[1]};
}

}  // namespace

std::vector<Code> neighbors(const Code& c, const TypeSpec& t) {
    require_member(c, t);
    const Field& f = c.field();
    const FormKind kind = t.form_kind();
    const int n = c.dimension();
    const int len = c.length();
    const auto& g = c.generators();
    const auto& piv = c.pivots();
    std::optional<Vector> mu;
    if (t.requires_allones()) mu = c.coordinates(all_ones(len));

    std::vector<Code> out;
    Matrix rows;
    rows.reserve(n);
    Vector x0(len), x(len);
    for (const auto& a : projective_points(f, n)) {
        if (mu && apply_functional(f, a, *mu) != 0) continue;
        int j = 0;
        while (a[j] == 0) ++j;  // a[j] == 1 by normalisation

        rows.clear();
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            Vector v = g[i];
            if (a[i] != 0) {
                Symbol s = f.neg(a[i]);
                for (int col = 0; col < len; ++col) v[col] = f.add(v[col], f.mul(s, g[j][col]));
            }
            rows.push_back(std::move(v));
        }
        // x0 is orthogonal to ker(a) with b(g_i, x0) = a_i, so x0 spans E^perp modulo C.
        std::fill(x0.begin(), x0.end(), 0);
        for (int i = 0; i < n; ++i) x0[piv[i]] = f.form_conj(a[i], kind);

        for (int lam = 0; lam < f.q(); ++lam) {
            for (int col = 0; col < len; ++col) x[col] = f.add(x0[col], f.mul(static_cast<Symbol>(lam), g[j][col]));
            if (f.form(x, x, kind) != 0) continue;
            if (t.requires_doubly_even() && weight(x) % 4 != 0) continue;
            Matrix d = rows;
            d.push_back(x);
            out.push_back(rref(f, len, std::move(d)));
        }
    }
    return out;
}

std::size_t neighbors_through(const Code& c, const TypeSpec& t, std::span<const Symbol> functional) {
    const Field& f = c.field();
    Code e = SubspaceIterator::hyperplane(c, functional);
    Code perp = dual(e, t.form_kind());
    auto [y1, y2] = complement_pair(e, perp);
    std::vector<Vector> lines{y2};
    for (int lam = 0; lam < f.q(); ++lam) {
        Vector u = y1;
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = f.add(u[i], f.mul(static_cast<Symbol>(lam), y2[i]));
        lines.push_back(std::move(u));
    }
    std::size_t count = 0;
    for (const auto& u : lines) {
        Code d = extend(e, u);
        if (d != c && is_member(d, t)) ++count;
    }
    return count;
}

std::size_t condition_star_sum(const Code& c, const TypeSpec& t, const Matrix& tuple) {
    const Field& f = c.field();
    std::vector<Vector> coords;
    for (const auto& w : tuple) {
        auto x = c.coordinates(w);
        if (!x) throw std::invalid_argument("condition_star_sum: tuple word not in the code");
        coords.push_back(*x);
    }
    std::size_t total = 0;
    for (const auto& a : projective_points(f, c.dimension())) {
        bool contains_all = std::all_of(coords.begin(), coords.end(),
                                        [&](const Vector& x) { return apply_functional(f, a, x) == 0; });
        if (contains_all) total += neighbors_through(c, t, a);
    }
    return total;
}

namespace {

/// Calls fn on every k x n matrix in reduced row echelon form of rank k.
template <typename Fn>
void for_each_rref(const Field& f, int k, int n, Fn&& fn) {
    std::vector<char> select(n, 0);
    std::fill(select.begin(), select.begin() + k, 1);
    Matrix m(k, Vector(n));
    do {
        std::vector<int> piv;
        for (int i = 0; i < n; ++i)
            if (select[i]) piv.push_back(i);
        // Free slots: (row r, column c) with c > piv[r] and c not a pivot.
        std::vector<std::pair<int, int>> slots;
        for (int r = 0; r < k; ++r)
            for (int col = piv[r] + 1; col < n; ++col)
                if (!select[col]) slots.emplace_back(r, col);
        for (auto& row : m) std::fill(row.begin(), row.end(), 0);
        for (int r = 0; r < k; ++r) m[r][piv[r]] = 1;
        std::vector<int> digit(slots.size(), 0);
        while (true) {
            fn(m, piv);
            std::size_t i = 0;
            for (; i < slots.size(); ++i) {
                digit[i] = (digit[i] + 1) % f.q();
                m[slots[i].first][slots[i].second] = static_cast<Symbol>(digit[i]);
                if (digit[i] != 0) break;
            }
            if (i == slots.size()) break;
        }
    } while (std::prev_permutation(select.begin(), select.end()));
}

/// Gaussian binomial coefficient [n choose k]_q.
BigInt gaussian_binomial(int n, int k, int q) {
    BigInt num = 1, den = 1;
    BigInt qn = 1, qk = 1;
    for (int i = 0; i < n - k; ++i) qn *= q;
    for (int i = 0; i < k; ++i) {
        qn *= q;
        qk *= q;
        num *= qn - 1;
        den *= qk - 1;
    }
    return num / den;
}

}  // namespace

std::vector<Code> k_neighbors(const Code& c, const TypeSpec& t, int k, std::size_t work_cap) {
    require_member(c, t);
    const int n = c.dimension();
    if (k < 1 || k > n) throw std::out_of_range("k_neighbors: k outside 1..n");
    const Field& f = c.field();
    const int q = f.q();
    const int len = c.length();
    BigInt work = gaussian_binomial(n, k, q);
    for (int i = 0; i < k * k; ++i) work *= q;
    if (work > work_cap)
        throw std::length_error("k_neighbors: " + work.str() + " candidates exceed the cap of " + std::to_string(work_cap));

    const auto& g = c.generators();
    std::set<std::string> seen;
    std::vector<Code> out;
    for_each_rref(f, k, n, [&](const Matrix& a, const std::vector<int>& piv) {
        // E = {sum x_i g_i : a x = 0}; kernel basis from the free columns of a.
        std::vector<char> is_piv(n, 0);
        for (int p : piv) is_piv[p] = 1;
        Matrix erows;
        for (int col = 0; col < n; ++col) {
            if (is_piv[col]) continue;
            Vector v = g[col];
            for (int r = 0; r < k; ++r) {
                Symbol s = f.neg(a[r][col]);
                if (s == 0) continue;
                for (int i = 0; i < len; ++i) v[i] = f.add(v[i], f.mul(s, g[piv[r]][i]));
            }
            erows.push_back(std::move(v));
        }
        Code e = rref(f, len, erows);
        // Complement of C inside E^perp.
        Code span = c;
        Matrix xs;
        const Code e_perp = dual(e, t.form_kind());
        for (const auto& r : e_perp.generators()) {
            if (static_cast<int>(xs.size()) == k) break;
            if (span.contains(r)) continue;
            xs.push_back(r);
            span = extend(span, r);
        }
        // D = E + <x_i + sum_j M_ij g_{piv[j]}> over all k x k matrices M.
        std::vector<int> digit(k * k, 0);
        while (true) {
            Matrix rows = erows;
            for (int i = 0; i < k; ++i) {
                Vector w = xs[i];
                for (int j = 0; j < k; ++j) {
                    Symbol s = static_cast<Symbol>(digit[i * k + j]);
                    if (s == 0) continue;
                    for (int col = 0; col < len; ++col) w[col] = f.add(w[col], f.mul(s, g[piv[j]][col]));
                }
                rows.push_back(std::move(w));
            }
            Code d = rref(f, len, std::move(rows));
            if (is_member(d, t) && seen.insert(d.key()).second) out.push_back(std::move(d));
            int i = 0;
            for (; i < k * k; ++i) {
                digit[i] = (digit[i] + 1) % q;
                if (digit[i] != 0) break;
            }
            if (i == k * k) break;
        }
    });
    return out;
}

std::optional<std::size_t> ClassDatabase::find(const Code& c, const CanonicalOptions& options) const {
    const Code canon = canonical_form(c, options).canon;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].representative == canon) return i;
    return std::nullopt;
}

BigInt ClassDatabase::mass() const {
    BigInt total = 0;
    const BigInt fact = factorial(length);
    for (const auto& cl : classes) total += fact / cl.aut_order;
    return total;
}

namespace {

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Orbits of the group generated by gens on the list of codes (closed under the group).
/// Returns, per code, the index of the first code of its orbit.
std::vector<std::size_t> code_orbits(const std::vector<Code>& codes, const std::vector<Permutation>& gens) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < codes.size(); ++i) index.emplace(codes[i].key(), i);
    std::vector<std::size_t> rep(codes.size(), codes.size());
    for (std::size_t start = 0; start < codes.size(); ++start) {
        if (rep[start] != codes.size()) continue;
        rep[start] = start;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                auto it = index.find(codes[cur].permuted(g).key());
                if (it == index.end()) throw std::logic_error("neighbor set is not closed under Aut(C)");
                if (rep[it->second] == codes.size()) {
                    rep[it->second] = start;
                    stack.push_back(it->second);
                }
            }
        }
    }
    return rep;
}

}  // namespace

ClassDatabase classify(const TypeSpec& t, int length, std::optional<Code> seed, const ClassifyOptions& options) {
    t.check_length(length);
    Code start = seed ? *seed : seed_code(t, length);
    if (start.length() != length) throw std::invalid_argument("seed has the wrong length");
    require_member(start, t);

    ClassDatabase db{t, length, {}, {}, false};
    std::unordered_map<std::string, std::size_t> by_key;
    auto add_class = [&](CanonicalCode&& cf) {
        by_key.emplace(cf.canon.key(), db.classes.size());
        db.classes.push_back({std::move(cf.canon), std::move(cf.aut_order), std::move(cf.fingerprint), {}});
        db.classes.back().automorphisms = std::move(cf.automorphisms);
    };
    {
        CanonicalCode cf = canonical_form(start, options.canonical);
        // Automorphisms must act on the stored representative, so recompute on it.
        add_class(canonical_form(cf.canon, options.canonical));
    }

    for (std::size_t src = 0; src < db.classes.size(); ++src) {
        const Code rep = db.classes[src].representative;
        std::vector<Code> nbrs = neighbors(rep, t);
        std::vector<std::size_t> chosen;
        std::vector<std::uint64_t> weight;
        if (options.use_automorphisms) {
            auto orbit = code_orbits(nbrs, db.classes[src].automorphisms);
            std::vector<std::uint64_t> size(nbrs.size(), 0);
            for (std::size_t r : orbit) ++size[r];
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                if (orbit[i] == i) {
                    chosen.push_back(i);
                    weight.push_back(size[i]);
                }
        } else {
            chosen.resize(nbrs.size());
            std::iota(chosen.begin(), chosen.end(), 0);
            weight.assign(nbrs.size(), 1);
        }

        std::vector<std::optional<CanonicalCode>> forms(chosen.size());
        parallel_for(chosen.size(), options.threads,
                     [&](std::size_t i) { forms[i] = canonical_form(nbrs[chosen[i]], options.canonical); });

        std::map<std::size_t, std::uint64_t> counts;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            auto it = by_key.find(forms[i]->canon.key());
            std::size_t target;
            if (it != by_key.end()) {
                target = it->second;
            } else {
                target = db.classes.size();
                Code canon = forms[i]->canon;
                add_class(canonical_form(canon, options.canonical));
            }
            counts[target] += weight[i];
        }
        for (const auto& [target, count] : counts) db.records.push_back({src, target, count});
        if (options.progress) options.progress(src + 1, db.classes.size());
    }
    std::sort(db.records.begin(), db.records.end(), [](const NeighborRecord& a, const NeighborRecord& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    db.complete = true;
    return db;
}

namespace {

struct MemberCounter {
    const TypeSpec& type;
    int length;
    int dim;
    std::vector<int> pivots;
    std::vector<char> is_pivot;
    Matrix rows;
    BigInt count = 0;

    void rows_from(int i) {
        const Field& f = type.field();
        const FormKind kind = type.form_kind();
        if (i == dim) {
            if (is_member(rref(f, length, rows), type)) ++count;
            return;
        }
        std::vector<int> free_cols;
        for (int col = pivots[i] + 1; col < length; ++col)
            if (!is_pivot[col]) free_cols.push_back(col);
        Vector row(length, 0);
        row[pivots[i]] = 1;
        std::vector<int> digit(free_cols.size(), 0);
        while (true) {
            bool ok = f.form(row, row, kind) == 0;
            for (int j = 0; j < i && ok; ++j) ok = f.form(row, rows[j], kind) == 0;
            if (ok) {
                rows[i] = row;
                rows_from(i + 1);
            }
            std::size_t t = 0;
            for (; t < free_cols.size(); ++t) {
                digit[t] = (digit[t] + 1) % f.q();
                row[free_cols[t]] = static_cast<Symbol>(digit[t]);
                if (digit[t] != 0) break;
            }
            if (t == free_cols.size()) break;
        }
    }
};

}  // namespace

BigInt count_members(const TypeSpec& t, int length) {
    t.check_length(length);
    const int dim = length / 2;
    MemberCounter mc{t, length, dim, {}, {}, Matrix(dim), 0};
    std::vector<char> select(length, 0);
    std::fill(select.begin(), select.begin() + dim, 1);
    do {
        mc.pivots.clear();
        mc.is_pivot.assign(length, 0);
        for (int i = 0; i < length; ++i)
            if (select[i]) {
                mc.pivots.push_back(i);
                mc.is_pivot[i] = 1;
            }
        mc.rows_from(0);
    } while (std::prev_permutation(select.begin(), select.end()));
    return mc.count;
}

using nlohmann::ordered_json;

std::string to_json(const ClassDatabase& db) {
    const Field& f = db.type.field();
    ordered_json j;
    j["schema_version"] = database_schema_version;
    j["tool_version"] = KNESER_VERSION;
    j["type"] = {{"name", db.type.base_name()}, {"q", db.type.q()}, {"label", db.type.label()}};
    std::vector<int> poly(f.polynomial().begin(), f.polynomial().end());
    j["field"] = {{"q", f.q()}, {"p", f.characteristic()}, {"e", f.degree()}, {"polynomial", poly}};
    j["length"] = db.length;
    j["complete"] = db.complete;
    ordered_json classes = ordered_json::array();
    for (const auto& cl : db.classes) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : cl.representative.generators()) rows.push_back(std::vector<int>(r.begin(), r.end()));
        classes.push_back({{"fingerprint", cl.fingerprint}, {"aut_order", cl.aut_order.str()}, {"generators", rows}});
    }
    j["classes"] = std::move(classes);
    ordered_json recs = ordered_json::array();
    for (const auto& r : db.records) recs.push_back({{"source", r.source}, {"target", r.target}, {"count", r.count}});
    j["neighbor_records"] = std::move(recs);
    return j.dump(1) + "\n";
}

ClassDatabase database_from_json(const std::string& text) {
    try {
        auto j = ordered_json::parse(text);
        if (j.at("schema_version").get<int>() != database_schema_version)
            throw std::invalid_argument("unsupported schema_version");
        TypeSpec t(TypeSpec::parse(j.at("type").at("name").get<std::string>() + ":q=" +
                                   std::to_string(j.at("type").at("q").get<int>())));
        ClassDatabase db{t, j.at("length").get<int>(), {}, {}, j.at("complete").get<bool>()};
        t.check_length(db.length);
        for (const auto& jc : j.at("classes")) {
            Matrix rows;
            for (const auto& jr : jc.at("generators")) {
                Vector r;
                for (int s : jr.get<std::vector<int>>()) {
                    if (s < 0 || s >= t.q()) throw std::invalid_argument("symbol out of range");
                    r.push_back(static_cast<Symbol>(s));
                }
                rows.push_back(std::move(r));
            }
            Code c = rref(t.field(), db.length, rows);
            if (c.generators() != rows) throw std::invalid_argument("generators are not in reduced echelon form");
            if (!is_member(c, t)) throw std::invalid_argument("stored code is not a member of the type");
            std::string fp = jc.at("fingerprint").get<std::string>();
            if (fp != sha256_hex(canonical_serialization(c))) throw std::invalid_argument("fingerprint mismatch");
            BigInt aut(jc.at("aut_order").get<std::string>());
            if (aut <= 0) throw std::invalid_argument("aut_order must be positive");
            db.classes.push_back({std::move(c), aut, fp, {}});
        }
        for (const auto& jr : j.at("neighbor_records")) {
            NeighborRecord r{jr.at("source").get<std::size_t>(), jr.at("target").get<std::size_t>(),
                             jr.at("count").get<std::uint64_t>()};
            if (r.source >= db.classes.size() || r.target >= db.classes.size())
                throw std::invalid_argument("neighbor record index out of range");
            db.records.push_back(r);
        }
        return db;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed class database: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(std::string("malformed class database: ") + e.what());
    }
}

}  // namespace kneser
