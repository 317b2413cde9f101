#include "doctest.h"

#include <random>
#include <stdexcept>
#include <set>

#include "kneser/code.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

Code random_code(std::mt19937& rng, const Field& f, int n, int k) {
    std::uniform_int_distribution<int> sym(0, f.q() - 1);
    Matrix rows(k, Vector(n));
    for (auto& r : rows)
        for (auto& s : r) s = static_cast<Symbol>(sym(rng));
    return rref(f, n, rows);
}

std::set<std::string> all_words(const Code& c) {
    std::set<std::string> s;
    for (const auto& w : c.codewords()) s.insert(std::string(w.begin(), w.end()));
    return s;
}

}  // namespace

TEST_CASE("rref examples") {
    const Field& f2 = Field::of(2);
    Code c = rref(f2, 2, {{1, 1}, {1, 1}});
    CHECK(c.dimension() == 1);
    CHECK(c.generators() == Matrix{{1, 1}});

    // Hand reduction: (1,1,0,0) + (0,1,1,0) = (1,0,1,0).
    Code d = rref(f2, 4, {{0, 1, 1, 0}, {1, 1, 0, 0}});
    CHECK(d.generators() == Matrix{{1, 0, 1, 0}, {0, 1, 1, 0}});
    CHECK(d.pivots() == std::vector<int>{0, 1});

    Code z = rref(f2, 5, {});
    CHECK(z.dimension() == 0);
    CHECK_THROWS_AS(rref(f2, 3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("dual examples") {
    const Field& f2 = Field::of(2);
    const Field& f4 = Field::of(4);
    CHECK(dual(Code(f2, 3), FormKind::euclidean).dimension() == 3);
    Code c = rref(f2, 2, {{1, 1}});
    CHECK(dual(c, FormKind::euclidean) == c);
    Code h = rref(f4, 2, {{1, 1}});
    CHECK(dual(h, FormKind::hermitian) == h);
    // <(1,w)> over GF(4) is Hermitian self-dual but not Euclidean self-dual.
    Code hw = rref(f4, 2, {{1, 2}});
    CHECK(dual(hw, FormKind::hermitian) == hw);
    CHECK_FALSE(dual(hw, FormKind::euclidean) == hw);
}

TEST_CASE("intersection and sum") {
    const Field& f2 = Field::of(2);
    Code c = rref(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    Code d = rref(f2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    CHECK(intersect(c, c) == c);
    CHECK(intersect(c, d) == rref(f2, 4, {{1, 1, 1, 1}}));
    CHECK(sum(rref(f2, 2, {{1, 0}}), rref(f2, 2, {{0, 1}})).dimension() == 2);
    CHECK_THROWS_AS(sum(c, Code(f2, 3)), std::invalid_argument);
}

TEST_CASE("dimension identity and inclusion reversal on random codes") {
    std::mt19937 rng(7);
    for (int q : {2, 3, 4, 5}) {
        const Field& f = Field::of(q);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 3 + trial % 5;
            Code c = random_code(rng, f, n, 1 + trial % n);
            Code d = random_code(rng, f, n, 1 + (trial * 7) % n);
            CHECK(intersect(c, d).dimension() + sum(c, d).dimension() == c.dimension() + d.dimension());
            // Cross-check the intersection against codeword lists.
            auto wc = all_words(c), wd = all_words(d), wi = all_words(intersect(c, d));
            std::set<std::string> common;
            for (const auto& w : wc)
                if (wd.count(w)) common.insert(w);
            CHECK(common == wi);
            for (FormKind kind : {FormKind::euclidean, FormKind::hermitian}) {
                if (kind == FormKind::hermitian && !f.is_square()) continue;
                CHECK(dual(dual(c, kind), kind) == c);
                CHECK(dual(c, kind).dimension() == n - c.dimension());
                Code big = sum(c, d);
                CHECK(is_subcode(dual(big, kind), dual(c, kind)));
            }
        }
    }
}

TEST_CASE("codimension-1 subspace enumeration") {
    const Field& f2 = Field::of(2);
    const Field& f3 = Field::of(3);
    Code c3 = rref(f2, 6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}});
    SubspaceIterator all(c3);
    std::set<std::string> seen;
    while (auto e = all.next()) {
        CHECK(e->dimension() == 2);
        CHECK(is_subcode(*e, c3));
        seen.insert(e->key());
    }
    CHECK(seen.size() == 7);
    CHECK(all.count() == 7);

    SubspaceIterator with_ones(c3, all_ones(6));
    int count = 0;
    while (auto e = with_ones.next()) {
        CHECK(contains_allones(*e));
        ++count;
    }
    CHECK(count == 3);

    Code t = rref(f3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(SubspaceIterator(t).count() == 4);
    CHECK_THROWS_AS(SubspaceIterator(c3, Vector{1, 0, 0, 0, 0, 0}), std::invalid_argument);

    // Exhaustive check over GF(3), k = 3: 13 distinct hyperplanes.
    Code t3 = rref(f3, 5, {{1, 0, 0, 1, 2}, {0, 1, 0, 2, 2}, {0, 0, 1, 1, 1}});
    SubspaceIterator it(t3);
    std::set<std::string> keys;
    while (auto e = it.next()) keys.insert(e->key());
    CHECK(keys.size() == 13);
}

TEST_CASE("self-duality predicates") {
    const Field& f2 = Field::of(2);
    Code h8 = oracle::extended_hamming8();
    CHECK(is_self_dual(h8, FormKind::euclidean));
    CHECK(is_doubly_even(h8));
    Code i2 = rref(f2, 2, {{1, 1}});
    CHECK(is_self_dual(i2, FormKind::euclidean));
    CHECK_FALSE(is_doubly_even(i2));
    Code i2_4 = oracle::repeated_pairs(f2, 4);
    CHECK(is_self_dual(i2_4, FormKind::euclidean));
    CHECK_FALSE(is_doubly_even(i2_4));
    CHECK_THROWS_AS(is_doubly_even(rref(Field::of(3), 2, {{1, 1}})), std::invalid_argument);

    // Doubly-even certificate agrees with listing every weight.
    for (const auto& c : oracle::all_self_dual_codes(f2, 8, FormKind::euclidean)) {
        bool listed = true;
        for (const auto& w : c.codewords()) listed = listed && weight(w) % 4 == 0;
        CHECK(is_doubly_even(c) == listed);
        CHECK(contains_allones(c));
    }
}

TEST_CASE("codeword listing and permutation") {
    const Field& f3 = Field::of(3);
    Code t = rref(f3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    auto words = t.codewords();
    CHECK(words.size() == 9);
    CHECK(all_words(t).size() == 9);
    for (const auto& w : words) CHECK(t.contains(w));
    std::vector<int> perm{2, 0, 3, 1};
    Code pt = t.permuted(perm);
    for (const auto& w : words) {
        Vector img(4);
        for (int i = 0; i < 4; ++i) img[perm[i]] = w[i];
        CHECK(pt.contains(img));
    }
}
