#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace kneser::oracle {

std::uint64_t brute_force_aut_order(const Code& c) {
    const int n = c.length();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    Vector image(n);
    do {
        bool ok = true;
        for (const auto& row : c.generators()) {
            for (int i = 0; i < n; ++i) image[perm[i]] = row[i];
            if (!c.contains(image)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

struct SelfDualEnumerator {
    const Field& field;
    int length;
    FormKind kind;
    int dim;
    std::vector<int> pivots;
    std::vector<char> is_pivot;
    Matrix rows;
    std::vector<Code> out;

    void rows_from(int i) {
        if (i == dim) {
            out.push_back(rref(field, length, rows));
            return;
        }
        std::vector<int> free_cols;
        for (int col = pivots[i] + 1; col < length; ++col)
            if (!is_pivot[col]) free_cols.push_back(col);
        std::size_t total = 1;
        for (std::size_t t = 0; t < free_cols.size(); ++t) total *= field.q();
        Vector row(length, 0);
        row[pivots[i]] = 1;
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t x = t;
            for (int col : free_cols) {
                row[col] = static_cast<Symbol>(x % field.q());
                x /= field.q();
            }
            if (field.form(row, row, kind) != 0) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = field.form(row, rows[j], kind) == 0;
            if (!ok) continue;
            rows[i] = row;
            rows_from(i + 1);
        }
    }
};

}  // namespace

std::vector<Code> all_self_dual_codes(const Field& field, int length, FormKind kind) {
    if (length % 2 != 0) return {};
    const int dim = length / 2;
    SelfDualEnumerator e{field, length, kind, dim, {}, {}, Matrix(dim), {}};
    // Run through all pivot sets of size dim in lexicographic order.
    std::vector<char> select(length, 0);
    std::fill(select.begin(), select.begin() + dim, 1);
    do {
        e.pivots.clear();
        e.is_pivot.assign(length, 0);
        for (int i = 0; i < length; ++i)
            if (select[i]) {
                e.pivots.push_back(i);
                e.is_pivot[i] = 1;
            }
        e.rows_from(0);
    } while (std::prev_permutation(select.begin(), select.end()));
    return e.out;
}

OrbitSummary symmetric_group_orbits(const std::vector<Code>& codes) {
    OrbitSummary s;
    s.codes = codes.size();
    if (codes.empty()) return s;
    const int n = codes.front().length();
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < codes.size(); ++i) index.emplace(codes[i].key(), i);

    std::vector<int> swap01(n), cycle(n);
    std::iota(swap01.begin(), swap01.end(), 0);
    if (n >= 2) std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;

    std::vector<char> seen(codes.size(), 0);
    for (std::size_t start = 0; start < codes.size(); ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> stack{start};
        seen[start] = 1;
        std::size_t size = 0;
        while (!stack.empty()) {
            std::size_t cur = stack.back();
            stack.pop_back();
            ++size;
            for (const auto* g : {&swap01, &cycle}) {
                auto it = index.find(codes[cur].permuted(*g).key());
                if (it == index.end()) throw std::logic_error("code set is not closed under S_N");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    stack.push_back(it->second);
                }
            }
        }
        s.orbit_sizes.push_back(size);
    }
    return s;
}

std::vector<std::uint64_t> weight_distribution(const Code& c) {
    std::vector<std::uint64_t> dist(c.length() + 1, 0);
    for (const auto& w : c.codewords()) ++dist[weight(w)];
    return dist;
}

Code extended_hamming8() {
    const Field& f = Field::of(2);
    Matrix rows = {
        {1, 1, 1, 1, 0, 0, 0, 0},
        {0, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 0, 0, 1, 1, 1, 1},
        {1, 0, 1, 0, 1, 0, 1, 0},
    };
    return rref(f, 8, rows);
}

Code repeated_pairs(const Field& field, int copies) {
    Matrix rows;
    for (int i = 0; i < copies; ++i) {
        Vector v(2 * copies, 0);
        v[2 * i] = 1;
        v[2 * i + 1] = 1;
        rows.push_back(v);
    }
    return rref(field, 2 * copies, rows);
}

}  // namespace kneser::oracle
