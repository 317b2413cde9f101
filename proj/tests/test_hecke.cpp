#include "doctest.h"

#include "kneser/hecke.hpp"
#include "oracles.hpp"

using namespace kneser;

namespace {

void check_data_set(const TypeSpec& t, int length) {
    INFO(t.label() << " N=" << length);
    auto db = classify(t, length);
    auto tm = hecke_matrix(db);
    const int n = length / 2;
    Rational a0 = alpha(0, t, n);
    REQUIRE(boost::multiprecision::denominator(a0) == 1);
    CHECK(column_sum_violations(tm, boost::multiprecision::numerator(a0)).empty());
    CHECK(check_self_adjoint(tm, db).empty());
    auto s = spectrum(tm, db);
    CHECK(s.complete);
    CHECK(s.mass_vector_ok);
    CHECK(s.orthogonal);
    CHECK(s.dims[0] == 1);
}

}  // namespace

TEST_CASE("small operators") {
    TypeSpec e1 = TypeSpec::parse("2eI");
    auto db2 = classify(e1, 2);
    auto t2 = hecke_matrix(db2);
    CHECK(t2.entries == std::vector<std::vector<std::int64_t>>{{0}});
    auto s2 = spectrum(t2, db2);
    CHECK(s2.table_row() == std::vector<std::size_t>{1});
    CHECK(s2.spaces[0].eigenvalue == 0);
    CHECK(check_self_adjoint(t2, db2).empty());

    auto db8 = classify(TypeSpec::parse("2eII"), 8);
    CHECK(hecke_matrix(db8).entries == std::vector<std::vector<std::int64_t>>{{7}});

    ClassDatabase partial = db2;
    partial.complete = false;
    CHECK_THROWS_AS(hecke_matrix(partial), std::invalid_argument);
}

TEST_CASE("the N = 16 operator") {
    TypeSpec e1 = TypeSpec::parse("2eI");
    auto db = classify(e1, 16);
    auto t = hecke_matrix(db);
    REQUIRE(t.size() == 7);
    CHECK(column_sum_violations(t, 254).empty());
    CHECK(column_sum_violations(t, 253).size() == 7);
    CHECK(check_self_adjoint(t, db).empty());
    auto s = spectrum(t, db);
    CHECK(s.table_row() == std::vector<std::size_t>{1, 2, 1, 2, 1});
    const long ev[] = {254, 125, 59, 23, -1};
    for (int m = 0; m < 5; ++m) CHECK(s.spaces[m].eigenvalue == ev[m]);
    CHECK(s.complete);
    CHECK(s.orthogonal);
    CHECK(s.mass_vector_ok);

    // Negative control: one perturbed entry is reported as exactly that pair.
    auto bad = t;
    bad.entries[2][5] += 1;
    auto v = check_self_adjoint(bad, db);
    REQUIRE(v.size() == 1);
    CHECK(v[0].row == 2);
    CHECK(v[0].column == 5);
    CHECK(column_sum_violations(bad, 254) == std::vector<std::size_t>{5});
}

TEST_CASE("inner product") {
    auto db = classify(TypeSpec::parse("2eI"), 12);
    const std::size_t b = db.classes.size();
    REQUIRE(b == 3);
    auto sigma = mass_vector(db);
    for (std::size_t i = 0; i < b; ++i) {
        RationalVector e(b, 0);
        e[i] = 1;
        CHECK(inner_product(e, e, db) == Rational(db.classes[i].aut_order));
        CHECK(inner_product(sigma, e, db) == 1);
        RationalVector other(b, 0);
        other[(i + 1) % b] = 1;
        CHECK(inner_product(e, other, db) == 0);
    }
    CHECK_THROWS_AS(inner_product(RationalVector(2), sigma, db), std::invalid_argument);
}

TEST_CASE("spectral completeness on every small data set") {
    for (int length = 2; length <= 16; length += 2) check_data_set(TypeSpec::parse("2eI"), length);
    check_data_set(TypeSpec::parse("2eII"), 8);
    check_data_set(TypeSpec::parse("2eII"), 16);
    for (int length : {4, 8, 12}) check_data_set(TypeSpec::parse("qE:q=3"), length);
    check_data_set(TypeSpec::parse("qE1:q=3"), 12);
    for (int length : {2, 4, 6, 8}) check_data_set(TypeSpec::parse("qH:q=4"), length);
    for (int length : {2, 4, 6}) check_data_set(TypeSpec::parse("qH1:q=4"), length);
    for (int length : {2, 4, 6}) check_data_set(TypeSpec::parse("qEI:q=4"), length);
    for (int length : {2, 4, 6}) check_data_set(TypeSpec::parse("qE:q=5"), length);
}

TEST_CASE("polynomial relations") {
    TypeSpec e1 = TypeSpec::parse("2eI");
    auto db = classify(e1, 12);
    auto t = hecke_matrix(db);
    auto id = polynomial_relation(t, t);
    REQUIRE(id);
    CHECK(*id == RationalVector{0, 1});

    auto t2 = hecke_matrix(db, 2);
    CHECK(t2.k == 2);
    CHECK(check_self_adjoint(t2, db).empty());
    auto rel = polynomial_relation(t2, t);
    REQUIRE(rel);
    // Check the relation by evaluating it.
    RationalMatrix acc(t.size(), RationalVector(t.size(), 0));
    RationalMatrix power = identity_matrix(t.size());
    for (const auto& c : *rel) {
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j) acc[i][j] += c * power[i][j];
        power = multiply(t.to_rational(), power);
    }
    CHECK(acc == t2.to_rational());

    auto db4 = classify(e1, 4);
    auto rel4 = polynomial_relation(hecke_matrix(db4, 2), hecke_matrix(db4));
    REQUIRE(rel4);
    CHECK(rel4->size() == 1);

    CHECK_THROWS_AS(polynomial_relation(hecke_matrix(db4), t), std::invalid_argument);
}

TEST_CASE("json output is deterministic") {
    auto db = classify(TypeSpec::parse("qE:q=3"), 12);
    auto t = hecke_matrix(db);
    auto s = spectrum(t, db);
    CHECK(to_json(s, db) == to_json(spectrum(hecke_matrix(db), db), db));
    CHECK(to_json(t).find("\"entries\"") != std::string::npos);
    CHECK(to_json(s, db).find("\"table_row\"") != std::string::npos);
}
