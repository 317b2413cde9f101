#include "doctest.h"

#include <set>
#include <stdexcept>

#include "kneser/field.hpp"

using namespace kneser;

TEST_CASE("small field examples") {
    const Field& f2 = Field::of(2);
    const Field& f3 = Field::of(3);
    const Field& f4 = Field::of(4);
    const Field& f5 = Field::of(5);

    CHECK(f2.add(1, 1) == 0);
    CHECK(f3.add(2, 2) == 1);

    // GF(4) = GF(2)[x]/(x^2+x+1): w = x (index 2), w^2 = x+1 (index 3).
    const Symbol w = 2, w2 = 3;
    CHECK(f4.mul(w, w) == w2);
    CHECK(f4.add(w, w2) == 1);
    CHECK(f4.mul(w, w2) == 1);

    CHECK(f5.inv(2) == 3);
    CHECK(f2.inv(1) == 1);
    CHECK_THROWS_AS(f5.inv(0), std::domain_error);

    CHECK(f4.conj(w) == w2);
    CHECK(f4.conj(1) == 1);
    CHECK_THROWS_AS(f3.conj(1), std::logic_error);
}

TEST_CASE("field element wrapper rejects mixed fields") {
    FieldElement a(Field::of(3), 2);
    FieldElement b(Field::of(3), 2);
    CHECK((a + b).value() == 1);
    FieldElement c(Field::of(5), 2);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(FieldElement(Field::of(2), 2), std::out_of_range);
    CHECK(FieldElement(Field::of(5), 2).inv().value() == 3);
}

TEST_CASE("field axioms hold on the full tables") {
    for (int q : Field::supported_orders()) {
        CAPTURE(q);
        const Field& f = Field::of(q);
        CHECK(f.q() == q);
        int pe = 1;
        for (int i = 0; i < f.degree(); ++i) pe *= f.characteristic();
        CHECK(pe == q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // The primitive element generates all nonzero elements.
        std::set<int> powers;
        Symbol x = 1;
        for (int k = 0; k < q - 1; ++k) {
            powers.insert(x);
            x = f.mul(x, f.primitive_element());
        }
        CHECK(powers.size() == static_cast<std::size_t>(q - 1));
    }
}

TEST_CASE("conjugation is an involutive automorphism fixing the subfield") {
    for (int q : {4, 9, 16}) {
        CAPTURE(q);
        const Field& f = Field::of(q);
        REQUIRE(f.conj_exponent());
        const int r = *f.conj_exponent();
        int fixed = 0;
        for (int a = 0; a < q; ++a) {
            CHECK(f.conj(f.conj(a)) == a);
            if (f.conj(a) == a) ++fixed;
            if (a) CHECK(f.conj(f.mul(f.conj(a), a)) == f.mul(f.conj(a), a));  // norm in GF(r)
            for (int b = 0; b < q; ++b) {
                CHECK(f.conj(f.add(a, b)) == f.add(f.conj(a), f.conj(b)));
                CHECK(f.conj(f.mul(a, b)) == f.mul(f.conj(a), f.conj(b)));
            }
        }
        CHECK(fixed == r);
    }
    CHECK_FALSE(Field::of(2).conj_exponent());
    CHECK_FALSE(Field::of(8).conj_exponent());
}

TEST_CASE("bilinear and hermitian forms") {
    const Field& f2 = Field::of(2);
    const Field& f4 = Field::of(4);
    CHECK(f2.form(Vector{1, 1}, Vector{1, 1}, FormKind::euclidean) == 0);
    CHECK(f4.form(Vector{1, 2}, Vector{1, 2}, FormKind::hermitian) == 0);
    CHECK(f4.form(Vector{0, 0}, Vector{3, 2}, FormKind::hermitian) == 0);
    CHECK_THROWS_AS(f2.form(Vector{1}, Vector{1, 1}, FormKind::euclidean), std::invalid_argument);

    // Hermitian symmetry, sesquilinearity and biadditivity over GF(4) and GF(9).
    for (int q : {4, 9}) {
        const Field& f = Field::of(q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c)
                    for (int lam = 0; lam < q; ++lam) {
                        Vector x{Symbol(a), Symbol(b)}, y{Symbol(c), Symbol(lam)};
                        CHECK(f.form(x, y, FormKind::hermitian) == f.conj(f.form(y, x, FormKind::hermitian)));
                        Vector lx{f.mul(lam, a), f.mul(lam, b)};
                        CHECK(f.form(lx, y, FormKind::hermitian) == f.mul(lam, f.form(x, y, FormKind::hermitian)));
                        Vector xy{f.add(a, c), f.add(b, lam)};
                        CHECK(f.form(xy, y, FormKind::euclidean) ==
                              f.add(f.form(x, y, FormKind::euclidean), f.form(y, y, FormKind::euclidean)));
                    }
    }
}
