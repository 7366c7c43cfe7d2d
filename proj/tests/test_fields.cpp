#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confhom/fields.hpp"

using namespace confhom;

namespace {

FieldElement q(long num, long den = 1) {
    return FieldElement::rational(FieldTag::rationals(), mpq_class(num, den));
}

} // namespace

TEST_CASE("field tag serialization round trip") {
    CHECK(FieldTag::rationals().to_string() == "Q");
    CHECK(FieldTag::gaussian_rationals().to_string() == "Qi");
    CHECK(FieldTag::prime_field(7).to_string() == "Fp:7");
    CHECK(FieldTag::parse("Fp:11") == FieldTag::prime_field(11));
    CHECK_THROWS_AS(FieldTag::parse("Fp:4"), DomainError);
    CHECK_THROWS_AS(FieldTag::parse("R"), ParseError);
}

TEST_CASE("element encoding is canonical") {
    CHECK(q(-12, 5).encode() == "-12/5");
    CHECK(q(4, 2).encode() == "2");
    CHECK(FieldElement::gaussian(mpq_class(1, 2), mpq_class(-3, 4)).encode() == "1/2-3/4i");
    FieldTag f5 = FieldTag::prime_field(5);
    CHECK(FieldElement::residue(f5, -1).encode() == "4");

    for (const char* s : {"-12/5", "2", "0", "7/3"})
        CHECK(parse_field_element(FieldTag::rationals(), s).encode() == s);
    for (const char* s : {"1/2-3/4i", "0+1i", "-2+1i", "5"})
        CHECK(parse_field_element(FieldTag::gaussian_rationals(), s).encode() == s);
    CHECK(parse_field_element(FieldTag::gaussian_rationals(), "i").encode() == "0+1i");
    CHECK(parse_field_element(FieldTag::gaussian_rationals(), "-i").encode() == "0-1i");
    CHECK_THROWS_AS(parse_field_element(FieldTag::rationals(), "1/0"), ParseError);
    CHECK_THROWS_AS(parse_field_element(FieldTag::rationals(), "x"), ParseError);
}

TEST_CASE("arithmetic over the three backends") {
    FieldTag f7 = FieldTag::prime_field(7);
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(-2) * q(3, 4)).encode() == "-3/2");
    CHECK(q(3, 7).inverse() == q(7, 3));

    FieldElement i = FieldElement::gaussian(0, 1);
    CHECK(i * i == FieldElement::from_int(FieldTag::gaussian_rationals(), -1));
    CHECK((FieldElement::gaussian(1, 1) * FieldElement::gaussian(1, -1)).encode() == "2");
    CHECK(FieldElement::gaussian(1, 1).inverse().encode() == "1/2-1/2i");

    FieldElement a = FieldElement::residue(f7, 3);
    CHECK((a * a).fp() == 2);
    CHECK((a.inverse() * a).is_one());
    CHECK((-a).fp() == 4);
    CHECK_THROWS_AS(FieldElement::zero(f7).inverse(), DomainError);
    CHECK_THROWS_AS(q(1) + a, MixError);
}

TEST_CASE("mult_decompose worked examples") {
    // -12/5 = (-1) * 2^2 * 3 * 5^-1
    MultDecomposition d = mult_decompose(q(-12, 5));
    CHECK(d.unit_exp == 1);
    CHECK(d.prime_exps.size() == 3);
    CHECK(d.prime_exps.at(Generator::prime(2)) == 2);
    CHECK(d.prime_exps.at(Generator::prime(3)) == 1);
    CHECK(d.prime_exps.at(Generator::prime(5)) == -1);

    MultDecomposition one = mult_decompose(q(1));
    CHECK(one.unit_exp == 0);
    CHECK(one.prime_exps.empty());

    // F5 has primitive root 2 and 2^2 = 4
    FieldTag f5 = FieldTag::prime_field(5);
    CHECK(primitive_root(5) == 2);
    CHECK(mult_decompose(FieldElement::residue(f5, 4)).unit_exp == 2);

    CHECK_THROWS_AS(mult_decompose(q(0)), DomainError);
}

TEST_CASE("round trip and homomorphism per backend") {
    std::vector<FieldTag> tags = {FieldTag::rationals(), FieldTag::gaussian_rationals(),
                                  FieldTag::prime_field(101)};
    for (const auto& tag : tags) {
        Rng rng(2024);
        for (int k = 0; k < 1000; ++k) {
            FieldElement x = sample_nonzero(tag, 30, rng);
            CHECK(recombine(mult_decompose(x), tag) == x);
        }
        // decompose(xy) = decompose(x) + decompose(y), unit exponents mod order
        long ord = Generator::torsion_unit().order(tag);
        for (int k = 0; k < 200; ++k) {
            FieldElement x = sample_nonzero(tag, 20, rng);
            FieldElement y = sample_nonzero(tag, 20, rng);
            MultDecomposition dx = mult_decompose(x), dy = mult_decompose(y);
            MultDecomposition dxy = mult_decompose(x * y);
            CHECK((dx.unit_exp + dy.unit_exp) % ord == dxy.unit_exp % ord);
            std::map<Generator, long long> sum = dx.prime_exps;
            for (const auto& [g, e] : dy.prime_exps) {
                sum[g] += e;
                if (sum[g] == 0) sum.erase(g);
            }
            CHECK(sum == dxy.prime_exps);
        }
    }
}

TEST_CASE("gaussian canonical associate") {
    auto [u1, a1] = canonical_gaussian_associate({-3, 0});
    CHECK(u1 == 2);
    CHECK(a1 == GaussianInt{3, 0});

    // i^3 (1+i) = 1-i, checked by expansion
    auto [u2, a2] = canonical_gaussian_associate({1, -1});
    CHECK(u2 == 3);
    CHECK(a2 == GaussianInt{1, 1});
    CHECK(a2.times_unit(u2) == GaussianInt{1, -1});

    // 2i = i^3 (1+i)^2 is composite
    CHECK_THROWS_AS(canonical_gaussian_associate({0, 2}), DomainError);
    CHECK_THROWS_AS(canonical_gaussian_associate({0, 0}), DomainError);

    // idempotent on canonical primes, multiplicative up to unit bookkeeping
    Rng rng(7);
    int tested = 0;
    while (tested < 50) {
        GaussianInt z{static_cast<long>(rng.between(-20, 20)),
                      static_cast<long>(rng.between(-20, 20))};
        if (z.is_zero() || !gaussian_is_prime(z)) continue;
        ++tested;
        auto [u, a] = canonical_gaussian_associate(z);
        CHECK(a.times_unit(u) == z);
        auto [u_again, a_again] = canonical_gaussian_associate(a);
        CHECK(u_again == 0);
        CHECK(a_again == a);
    }
}

TEST_CASE("qi decomposition recombines through gaussian primes") {
    FieldTag qi = FieldTag::gaussian_rationals();
    // 5 = i^3 (2+i)(1+2i)
    MultDecomposition d5 = mult_decompose(FieldElement::from_int(qi, 5));
    CHECK(d5.unit_exp == 3);
    CHECK(d5.prime_exps.at(Generator::gaussian_prime({2, 1})) == 1);
    CHECK(d5.prime_exps.at(Generator::gaussian_prime({1, 2})) == 1);

    // 2 = i^3 (1+i)^2
    MultDecomposition d2 = mult_decompose(FieldElement::from_int(qi, 2));
    CHECK(d2.unit_exp == 3);
    CHECK(d2.prime_exps.at(Generator::gaussian_prime({1, 1})) == 2);
}

TEST_CASE("sampling contract") {
    FieldTag f5 = FieldTag::prime_field(5);
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        FieldElement x = sample_nonzero(FieldTag::rationals(), 10, seed);
        CHECK(!x.is_zero());
        CHECK(abs(x.re().get_num()) <= 10);
        CHECK(x.re().get_den() <= 10);
        CHECK(sample_nonzero(FieldTag::rationals(), 10, seed) == x); // determinism

        FieldElement r = sample_nonzero(f5, 10, seed);
        CHECK(r.fp() >= 1);
        CHECK(r.fp() <= 4);
    }
    CHECK_THROWS_AS(sample_nonzero(FieldTag::rationals(), 0, 1), DomainError);
}

TEST_CASE("discrete log table limits") {
    CHECK(discrete_log(7, 3) == 1); // 3 is the least primitive root of 7
    CHECK(discrete_log(7, 2) == 2);
    CHECK_THROWS_AS(discrete_log(65537, 3), UnsupportedError);
    FieldTag big = FieldTag::prime_field(65537);
    CHECK_THROWS_AS(mult_decompose(FieldElement::residue(big, 3)), UnsupportedError);
}
