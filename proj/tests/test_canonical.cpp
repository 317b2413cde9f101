#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <map>
#include <random>
#include <set>

#include "kneser/canonical.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

Permutation random_permutation(std::mt19937& rng, int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("permutation group orders") {
    // S_5 from a transposition and a 5-cycle.
    PermutationGroup s5(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
    CHECK(s5.order() == 120);
    CHECK(s5.contains(Permutation{0, 2, 1, 3, 4}));
    // A_4 from two 3-cycles.
    PermutationGroup a4(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
    CHECK(a4.order() == 12);
    CHECK_FALSE(a4.contains(Permutation{1, 0, 2, 3}));
    // Trivial group.
    CHECK(PermutationGroup(6, {}).order() == 1);
    // Wreath product S_2 wr S_3 on 6 points: 2^3 * 3! = 48.
    PermutationGroup w(6, {{1, 0, 2, 3, 4, 5}, {2, 3, 0, 1, 4, 5}, {2, 3, 4, 5, 0, 1}});
    CHECK(w.order() == 48);
    auto reps = w.orbit_representatives();
    CHECK(std::all_of(reps.begin(), reps.end(), [](int r) { return r == 0; }));
}

TEST_CASE("canonical form examples") {
    const Field& f2 = Field::of(2);
    Code i2 = rref(f2, 2, {{1, 1}});
    auto c = canonical_form(i2);
    CHECK(c.canon == i2);
    CHECK(c.aut_order == 2);

    Code i2i2 = rref(f2, 4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(oracle::brute_force_aut_order(i2i2) == 8);
    CHECK(canonical_form(i2i2).aut_order == 8);

    Code h8 = oracle::extended_hamming8();
    CHECK(oracle::brute_force_aut_order(h8) == 1344);
    auto ch = canonical_form(h8);
    CHECK(ch.aut_order == 1344);
    CHECK(ch.fingerprint.size() == 64);
    CHECK(ch.canon == h8.permuted(ch.labeling));
    for (const auto& g : ch.automorphisms) CHECK(h8.permuted(g) == h8);

    CHECK(are_equivalent(i2i2, rref(f2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}})));
    CHECK_FALSE(are_equivalent(oracle::repeated_pairs(f2, 4), h8));

    // Zero code: Aut is all of S_N.
    CHECK(canonical_form(Code(f2, 4)).aut_order == 24);
}

TEST_CASE("canonical form is idempotent and permutation invariant") {
    std::mt19937 rng(2024);
    const Field& f2 = Field::of(2);
    std::vector<Code> samples = {oracle::extended_hamming8(), oracle::repeated_pairs(f2, 6),
                                 direct_sum(oracle::extended_hamming8(), oracle::repeated_pairs(f2, 4))};
    for (const auto& c : samples) {
        auto base = canonical_form(c);
        CHECK(canonical_form(base.canon).canon == base.canon);
        for (int t = 0; t < 100; ++t) {
            auto pc = canonical_form(c.permuted(random_permutation(rng, c.length())));
            CHECK(pc.canon == base.canon);
            CHECK(pc.aut_order == base.aut_order);
            CHECK(pc.fingerprint == base.fingerprint);
        }
    }
}

TEST_CASE("aut orders agree with exhaustive search on all small self-dual codes") {
    struct Case {
        int q;
        int n;
        FormKind kind;
    };
    for (auto [q, n, kind] : {Case{2, 2, FormKind::euclidean}, Case{2, 4, FormKind::euclidean},
                              Case{2, 6, FormKind::euclidean}, Case{2, 8, FormKind::euclidean},
                              Case{3, 4, FormKind::euclidean}, Case{4, 4, FormKind::hermitian}}) {
        CAPTURE(q);
        CAPTURE(n);
        auto codes = oracle::all_self_dual_codes(Field::of(q), n, kind);
        REQUIRE_FALSE(codes.empty());
        auto orbits = oracle::symmetric_group_orbits(codes);
        std::set<std::string> classes;
        BigInt fact = factorial(n);
        for (const auto& c : codes) {
            auto cf = canonical_form(c);
            classes.insert(cf.canon.key());
            CHECK(cf.aut_order == oracle::brute_force_aut_order(c));
            CHECK(fact % cf.aut_order == 0);
        }
        CHECK(classes.size() == orbits.orbit_sizes.size());
    }
}

TEST_CASE("orbit-stabilizer on classes of length-8 binary self-dual codes") {
    auto codes = oracle::all_self_dual_codes(Field::of(2), 8, FormKind::euclidean);
    CHECK(codes.size() == 135);
    std::map<std::string, std::pair<std::size_t, BigInt>> by_class;
    for (const auto& c : codes) {
        auto cf = canonical_form(c);
        auto& entry = by_class[cf.canon.key()];
        entry.first += 1;
        entry.second = cf.aut_order;
    }
    CHECK(by_class.size() == 2);
    for (const auto& [key, entry] : by_class) CHECK(BigInt(entry.first) * entry.second == factorial(8));
}
