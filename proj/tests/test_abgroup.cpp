#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "confhom/abgroup.hpp"
#include "confhom/linalg.hpp"
#include "confhom/rng.hpp"

using namespace confhom;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.between(-bound, bound);
    return m;
}

// gcd of all k x k minors, brute force; the independent oracle for the
// product d_1 ... d_k of the invariant factors.
mpz_class minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    mpz_class g = 0;
    auto det = [&](const std::vector<std::size_t>& ri,
                   const std::vector<std::size_t>& ci) -> mpz_class {
        // Laplace expansion, k <= 3 here
        if (k == 1) return m.at(ri[0], ci[0]);
        if (k == 2)
            return mpz_class(m.at(ri[0], ci[0]) * m.at(ri[1], ci[1]) -
                             m.at(ri[0], ci[1]) * m.at(ri[1], ci[0]));
        mpz_class d = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
            mpz_class sub = m.at(ri[1], ci[a]) * m.at(ri[2], ci[b]) -
                            m.at(ri[1], ci[b]) * m.at(ri[2], ci[a]);
            d += ((j % 2 == 0) ? 1 : -1) * m.at(ri[0], ci[j]) * sub;
        }
        return d;
    };
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            g = gcd(g, det(rows, cols));
        } while (next_subset(cols, m.cols()));
    } while (next_subset(rows, m.rows()));
    return abs(g);
}

} // namespace

TEST_CASE("smith normal form worked examples") {
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    auto sa = smith_normal_form(a);
    CHECK(sa.factors == std::vector<mpz_class>{2, 4});

    auto si = smith_normal_form(IntMatrix::identity(3));
    CHECK(si.factors == std::vector<mpz_class>{1, 1, 1});

    auto sz = smith_normal_form(IntMatrix(3, 4));
    CHECK(sz.factors.empty());
}

TEST_CASE("smith normal form properties on random matrices") {
    Rng rng(11);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t rows = 1 + rng.below(20), cols = 1 + rng.below(20);
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        auto s = smith_normal_form(m, true);
        for (std::size_t i = 0; i + 1 < s.factors.size(); ++i) {
            CHECK(s.factors[i] > 0);
            CHECK(s.factors[i + 1] % s.factors[i] == 0);
        }
        // U M V = diag(factors)
        IntMatrix d = (*s.left) * m * (*s.right);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j) {
                mpz_class want = (i == j && i < s.factors.size()) ? s.factors[i] : mpz_class(0);
                CHECK(d.at(i, j) == want);
            }
    }
}

TEST_CASE("invariant factor products match minor gcds") {
    Rng rng(12);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
        IntMatrix m = random_matrix(rng, rows, cols, 6);
        auto s = smith_normal_form(m);
        mpz_class prod = 1;
        for (std::size_t k = 1; k <= std::min({rows, cols, std::size_t(3)}); ++k) {
            mpz_class g = minor_gcd(m, k);
            if (k <= s.factors.size()) {
                prod *= s.factors[k - 1];
                CHECK(prod == g);
            } else {
                CHECK(g == 0);
            }
        }
    }
}

TEST_CASE("kernel lattice really is the kernel") {
    Rng rng(13);
    for (int iter = 0; iter < 100; ++iter) {
        std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        IntMatrix m = random_matrix(rng, rows, cols, 5);
        IntMatrix k = kernel_lattice(m);
        CHECK(k.cols() == cols - rank(m));
        if (k.cols() > 0) CHECK((m * k).is_zero());
    }
}

TEST_CASE("homology of a pair") {
    // A = 0 into Z^3, B = 0
    HomologyResult h = homology_of_pair(IntMatrix(3, 0), IntMatrix(0, 3));
    CHECK(h.free_rank == 3);
    CHECK(h.torsion.empty());

    // A = (x2): Z -> Z, B = 0: Z -> Z^0
    IntMatrix a = IntMatrix::from_rows({{2}});
    h = homology_of_pair(a, IntMatrix(0, 1));
    CHECK(h.free_rank == 0);
    CHECK(h.torsion == std::vector<mpz_class>{2});

    // Menelaus boundary over F3: explicit 2 x 4 matrix (see the finite
    // field lab for its construction); H = Z/2
    IntMatrix men = IntMatrix::from_rows({{1, 1, -1, 1}, {0, 0, 2, 0}});
    h = homology_of_pair(men, IntMatrix(0, 2));
    CHECK(h.free_rank == 0);
    CHECK(h.torsion == std::vector<mpz_class>{2});
    CHECK(h.to_string() == "Z^0 + Z/2");

    // composition check
    IntMatrix b = IntMatrix::from_rows({{1, 0}, {0, 1}});
    IntMatrix bad = IntMatrix::from_rows({{1}, {1}});
    CHECK_THROWS_AS(homology_of_pair(bad, b), CompositionError);
}

TEST_CASE("tensor pair worked examples over Q") {
    FieldTag tag = FieldTag::rationals();
    auto fe = [&](long v) { return FieldElement::from_int(tag, v); };

    // tensor(2, -1): pair (-1, 2) with coefficient 1 mod 2
    TensorSym t = tensor_pair(fe(2), fe(-1));
    CHECK(!t.is_zero());
    auto key = std::make_pair(Generator::torsion_unit(), Generator::prime(2));
    REQUIRE(t.coefficients().count(key) == 1);
    CHECK(t.coefficients().at(key) == 1);
    CHECK(t.pair_modulus(key.first, key.second) == 2);

    CHECK(tensor_pair(fe(1), fe(7)).is_zero());
    CHECK(tensor_pair(fe(5), fe(1)).is_zero());

    // defining relation of the coinvariants
    Rng rng(14);
    for (int k = 0; k < 100; ++k) {
        FieldElement x = sample_nonzero(tag, 20, rng);
        FieldElement y = sample_nonzero(tag, 20, rng);
        TensorSym s = tensor_pair(x, y);
        s += tensor_pair(y, x);
        CHECK(s.is_zero());
    }

    // diagonal rule: (g, g) with infinite order has modulus 2
    TensorSym d = tensor_pair(fe(2), fe(2));
    d += tensor_pair(fe(2), fe(2));
    CHECK(d.is_zero());

    CHECK_THROWS_AS(tensor_pair(fe(0), fe(2)), DomainError);
}

TEST_CASE("tensor bilinearity") {
    std::vector<FieldTag> tags = {FieldTag::rationals(), FieldTag::gaussian_rationals(),
                                  FieldTag::prime_field(13)};
    for (const auto& tag : tags) {
        Rng rng(15);
        for (int k = 0; k < 100; ++k) {
            FieldElement x1 = sample_nonzero(tag, 10, rng);
            FieldElement x2 = sample_nonzero(tag, 10, rng);
            FieldElement y = sample_nonzero(tag, 10, rng);
            TensorSym lhs = tensor_pair(x1 * x2, y);
            TensorSym rhs = tensor_pair(x1, y);
            rhs += tensor_pair(x2, y);
            CHECK(lhs == rhs);
        }
    }
}

// Brute-force model of (F_p^* ⊗ F_p^*)_sigma: discrete logs identify the
// tensor square with Z/(p-1); the coinvariance relations 2ab and the group
// order are assembled into one relation matrix whose SNF gives the quotient.
TEST_CASE("fp tensor oracle") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        FieldTag tag = FieldTag::prime_field(p);
        const long long m = static_cast<long long>(p) - 1;

        IntMatrix rel(1, 1 + static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
        rel.at(0, 0) = static_cast<long>(m);
        std::size_t col = 1;
        for (long long a = 0; a < m; ++a)
            for (long long b = 0; b < m; ++b) rel.at(0, col++) = static_cast<long>(2 * a * b % m);
        auto s = smith_normal_form(rel);
        REQUIRE(s.factors.size() == 1);
        const long long quotient = s.factors[0].get_si(); // structure of the coinvariants

        auto oracle = [&](std::int64_t x, std::int64_t y) {
            return discrete_log(p, x) * discrete_log(p, y) % quotient;
        };
        auto symbolic_coeff = [&](const TensorSym& t) -> long long {
            if (t.is_zero()) return 0;
            auto key = std::make_pair(Generator::torsion_unit(), Generator::torsion_unit());
            REQUIRE(t.coefficients().size() == 1);
            REQUIRE(t.coefficients().count(key) == 1);
            REQUIRE(t.pair_modulus(key.first, key.second) == quotient);
            return t.coefficients().at(key);
        };

        // exact agreement on all pairs
        for (std::int64_t x = 1; x < p; ++x)
            for (std::int64_t y = 1; y < p; ++y) {
                TensorSym t = tensor_pair(FieldElement::residue(tag, x),
                                          FieldElement::residue(tag, y));
                CHECK(symbolic_coeff(t) == oracle(x, y));
            }

        // and on random linear combinations
        Rng rng(16 + p);
        for (int iter = 0; iter < 100; ++iter) {
            TensorSym sum(tag);
            long long expect = 0;
            for (int t = 0; t < 5; ++t) {
                std::int64_t x = 1 + static_cast<std::int64_t>(rng.below(p - 1));
                std::int64_t y = 1 + static_cast<std::int64_t>(rng.below(p - 1));
                long long c = rng.between(-3, 3);
                TensorSym term =
                    tensor_pair(FieldElement::residue(tag, x), FieldElement::residue(tag, y));
                term *= c;
                sum += term;
                expect = (expect + c * oracle(x, y)) % quotient;
            }
            expect = ((expect % quotient) + quotient) % quotient;
            CHECK(symbolic_coeff(sum) == expect);
        }
    }
}

TEST_CASE("sparse triplets accumulate and densify") {
    SparseIntMatrix s(3, 2);
    s.add(0, 0, 1);
    s.add(0, 0, 1);
    s.add(2, 1, -1);
    s.add(2, 1, 1); // cancels
    IntMatrix d = s.to_dense();
    CHECK(d.at(0, 0) == 2);
    CHECK(d.at(2, 1) == 0);
    CHECK(s.nonzeros() == 1);
}
