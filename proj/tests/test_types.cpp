#include "doctest.h"

#include <stdexcept>

#include "kneser/types.hpp"
#include "oracles.hpp"

using namespace kneser;

TEST_CASE("type parsing and validation") {
    CHECK(TypeSpec::parse("2eI").name() == TypeName::qEI);
    CHECK(TypeSpec::parse("2EII").requires_doubly_even());
    TypeSpec t3 = TypeSpec::parse("qE:q=3");
    CHECK(t3.q() == 3);
    CHECK(t3.monomial_set() == MonomialSet::m_star);
    CHECK(TypeSpec::parse("qE1:q=3").monomial_set() == MonomialSet::m_one);
    TypeSpec h4 = TypeSpec::parse("qH:q=4");
    CHECK(h4.form_kind() == FormKind::hermitian);
    CHECK(TypeSpec::parse("qH1:q=4").requires_allones());
    CHECK(TypeSpec::parse("qEI:q=4").label() == "qEI:q=4");
    CHECK(TypeSpec::parse("2eII").label() == "2eII");

    CHECK_THROWS_AS(TypeSpec(TypeName::qE, 4), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec(TypeName::qEI, 3), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec(TypeName::qEII, 4), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec(TypeName::qH, 2), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec::parse("bogus"), std::invalid_argument);

    CHECK_THROWS_AS(TypeSpec::parse("2eII").check_length(12), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec::parse("2eI").check_length(7), std::invalid_argument);
    CHECK_THROWS_AS(TypeSpec::parse("qE1:q=3").check_length(8), std::invalid_argument);
    CHECK_NOTHROW(TypeSpec::parse("qE1:q=3").check_length(12));
}

TEST_CASE("membership") {
    const Field& f2 = Field::of(2);
    TypeSpec e1 = TypeSpec::parse("2eI");
    TypeSpec e2 = TypeSpec::parse("2eII");
    CHECK(is_member(rref(f2, 2, {{1, 1}}), e1));
    CHECK(is_member(oracle::extended_hamming8(), e2));
    CHECK_FALSE(is_member(oracle::repeated_pairs(f2, 4), e2));
    CHECK(is_member(oracle::repeated_pairs(f2, 4), e1));
    CHECK_THROWS_AS(is_member(oracle::repeated_pairs(Field::of(3), 2), e1), std::invalid_argument);
}

TEST_CASE("beta, alpha and nu") {
    CHECK(beta(0, 5) == 0);
    CHECK(beta(1, 5) == 1);
    CHECK(beta(2, 2) == 3);
    CHECK(beta(3, 3) == 13);

    TypeSpec e1 = TypeSpec::parse("2eI");
    const long expected[] = {254, 125, 59, 23, -1};
    for (int m = 0; m <= 4; ++m) CHECK(nu(m, e1, 8) == Rational(expected[m]));

    TypeSpec e2 = TypeSpec::parse("2eII");
    for (int m = 0; m <= 11; ++m) {
        BigInt want = (BigInt(1) << (11 - m)) - (BigInt(1) << m);
        CHECK(nu(m, e2, 12) == Rational(want));
    }
    CHECK(alpha(0, TypeSpec::parse("qH:q=4"), 2) == Rational(10));
    CHECK_THROWS_AS(alpha(5, e1, 4), std::out_of_range);
}

TEST_CASE("eigenvalues are distinct for n <= 16") {
    for (const char* name : {"2eI", "2eII", "qE:q=3", "qE1:q=3", "qEI:q=4", "qH:q=4", "qH1:q=4", "qE:q=5", "qH:q=9"}) {
        TypeSpec t = TypeSpec::parse(name);
        for (int n = 1; n <= 16; ++n) {
            SpectralData sd = spectral_data(t, n);
            CHECK(sd.nu.size() == static_cast<std::size_t>(n + 1));
            for (int m = 0; m < n; ++m) CHECK_MESSAGE(sd.nu[m] > sd.nu[m + 1], name << " n=" << n << " m=" << m);
            CHECK(sd.collisions.empty());
        }
    }
}

TEST_CASE("seed codes") {
    for (auto [name, length] : std::initializer_list<std::pair<const char*, int>>{
             {"2eI", 2}, {"2eI", 10}, {"2eII", 8}, {"2eII", 24}, {"qE:q=3", 4}, {"qE:q=3", 8}, {"qE:q=5", 2},
             {"qE1:q=3", 12}, {"qEI:q=4", 6}, {"qH:q=4", 2}, {"qH1:q=4", 6}, {"qE:q=7", 4}, {"qH:q=9", 4}}) {
        TypeSpec t = TypeSpec::parse(name);
        Code c = seed_code(t, length);
        CHECK_MESSAGE(is_member(c, t), name << " " << length);
        CHECK(c.length() == length);
        if (t.requires_allones() || t.name() == TypeName::qEI || t.name() == TypeName::qEII)
            CHECK(c.contains(all_ones(length)));
    }
    CHECK_THROWS_AS(seed_code(TypeSpec::parse("qE1:q=3"), 6), std::runtime_error);
}
