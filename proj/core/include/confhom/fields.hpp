// Exact field backends: the rationals Q, the Gaussian rationals Q(i) and
// prime fields F_p, behind one value type, plus the decomposition of k^*
// into a torsion unit and prime generators.
//
// Canonical encodings ("a/b" in lowest terms with b > 0, componentwise
// "a/b+c/di" for Q(i), the residue for F_p) are the serialization format
// and the tie-break order for all generator/term maps.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "confhom/errors.hpp"
#include "confhom/rng.hpp"

namespace confhom {

enum class FieldKind { Q, Qi, Fp };

struct FieldTag {
    FieldKind kind = FieldKind::Q;
    std::uint32_t p = 0; // Fp modulus, prime, 2 < p < 2^31

    static FieldTag rationals() { return {FieldKind::Q, 0}; }
    static FieldTag gaussian_rationals() { return {FieldKind::Qi, 0}; }
    static FieldTag prime_field(std::uint32_t p);

    /// "Q", "Qi" or "Fp:<p>".
    std::string to_string() const;
    static FieldTag parse(const std::string& s);

    friend bool operator==(const FieldTag& a, const FieldTag& b) {
        return a.kind == b.kind && a.p == b.p;
    }
    friend bool operator!=(const FieldTag& a, const FieldTag& b) { return !(a == b); }
};

bool is_prime_u32(std::uint32_t n);

/// Immutable exact field element.  Payload depends on the tag:
/// Q uses re; Qi uses re + im*i; Fp uses fp in [0, p).
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero(const FieldTag& tag);
    static FieldElement one(const FieldTag& tag);
    static FieldElement from_int(const FieldTag& tag, long v);
    static FieldElement rational(const FieldTag& tag, const mpq_class& re);
    static FieldElement gaussian(const mpq_class& re, const mpq_class& im);
    static FieldElement residue(const FieldTag& tag, std::int64_t v);

    const FieldTag& tag() const { return tag_; }
    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    std::int64_t fp() const { return fp_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const; // DomainError on zero

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
    FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    /// Total order: exact value order for Q, (re, im) lexicographic for Qi,
    /// residue order for Fp.  Used as the map key order everywhere.
    friend bool operator<(const FieldElement& a, const FieldElement& b);

    /// Canonical encoding, parseable by parse_field_element.
    std::string encode() const;

private:
    FieldTag tag_;
    mpq_class re_, im_;
    std::int64_t fp_ = 0;
};

FieldElement parse_field_element(const FieldTag& tag, const std::string& s);

/// Deterministic nonzero sample with numerator/denominator (or residue)
/// bounded by height.
FieldElement sample_nonzero(const FieldTag& tag, long height, std::uint64_t seed);
FieldElement sample_nonzero(const FieldTag& tag, long height, Rng& rng);
/// Like sample_nonzero but zero is allowed (matrix entry sampling).
FieldElement sample_entry(const FieldTag& tag, long height, Rng& rng);

// ---------------------------------------------------------------------------
// Gaussian integers
// ---------------------------------------------------------------------------

struct GaussianInt {
    mpz_class re, im;

    GaussianInt() = default;
    GaussianInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    mpz_class norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    /// Multiply by i^k, k in {0,1,2,3}.
    GaussianInt times_unit(int k) const;

    std::string encode() const;
};

/// True iff z is a Gaussian prime (norm a rational prime, or a unit multiple
/// of a rational prime q = 3 mod 4).
bool gaussian_is_prime(const GaussianInt& z);

/// Exact quotient z/w if w divides z, otherwise nullopt-like flag via return.
bool gaussian_divide_exact(const GaussianInt& z, const GaussianInt& w, GaussianInt& out);

/// Canonical associate of a Gaussian prime: the associate with Re > 0 and
/// Im >= 0.  Returns (u, a) with i^u * a = z.  DomainError on zero or
/// composite input.
std::pair<int, GaussianInt> canonical_gaussian_associate(const GaussianInt& z);

// ---------------------------------------------------------------------------
// Multiplicative decomposition of k^*
// ---------------------------------------------------------------------------

/// One generator of k^*: the distinguished torsion unit (-1 for Q, i for Qi,
/// the least primitive root for Fp) or a canonical prime (positive rational
/// prime for Q, Gaussian prime with Re > 0, Im >= 0 for Qi).
struct Generator {
    bool unit = false;
    mpz_class re, im; // prime payload, unused for the unit

    static Generator torsion_unit() { return {true, 0, 0}; }
    static Generator prime(mpz_class q) { return {false, std::move(q), 0}; }
    static Generator gaussian_prime(GaussianInt z) {
        return {false, std::move(z.re), std::move(z.im)};
    }

    /// Order in k^*: unit order 2 / 4 / p-1 per backend, 0 (infinite) for primes.
    long order(const FieldTag& tag) const;

    std::string encode(const FieldTag& tag) const;

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.unit == b.unit && a.re == b.re && a.im == b.im;
    }
    /// Unit first, then primes by (norm, re, im).
    friend bool operator<(const Generator& a, const Generator& b);
};

/// x = unit^unit_exp * prod(g^prime_exps[g]), unit_exp reduced mod the unit
/// order.  For Fp the prime map is empty and unit_exp is the discrete log.
struct MultDecomposition {
    long long unit_exp = 0;
    std::map<Generator, long long> prime_exps;

    bool operator==(const MultDecomposition& o) const {
        return unit_exp == o.unit_exp && prime_exps == o.prime_exps;
    }
};

/// DomainError on x = 0; UnsupportedError for Fp with p >= 2^16.
MultDecomposition mult_decompose(const FieldElement& x);

/// Inverse of mult_decompose: evaluates the generator product exactly.
FieldElement recombine(const MultDecomposition& dec, const FieldTag& tag);

// ---------------------------------------------------------------------------
// F_p structure
// ---------------------------------------------------------------------------

/// Smallest positive primitive root mod p.
std::uint32_t primitive_root(std::uint32_t p);

/// Discrete log base primitive_root(p); table built once per p and cached.
/// Requires p < 2^16.
std::int64_t discrete_log(std::uint32_t p, std::int64_t x);

} // namespace confhom
