#include "confhom/fields.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace confhom {

// ---------------------------------------------------------------------------
// FieldTag
// ---------------------------------------------------------------------------

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    mpz_class m(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
}

FieldTag FieldTag::prime_field(std::uint32_t p) {
    if (p <= 2 || !is_prime_u32(p))
        throw DomainError("Fp modulus must be an odd prime, got " + std::to_string(p));
    return {FieldKind::Fp, p};
}

std::string FieldTag::to_string() const {
    switch (kind) {
    case FieldKind::Q: return "Q";
    case FieldKind::Qi: return "Qi";
    case FieldKind::Fp: return "Fp:" + std::to_string(p);
    }
    return "?";
}

FieldTag FieldTag::parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s == "Qi") return gaussian_rationals();
    if (s.rfind("Fp:", 0) == 0) {
        const std::string num = s.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field tag: " + s);
        unsigned long p = std::stoul(num);
        if (p >= (1ul << 31)) throw ParseError("Fp modulus out of range: " + s);
        return prime_field(static_cast<std::uint32_t>(p));
    }
    throw ParseError("unknown field tag: " + s);
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

namespace {

void require_same_tag(const FieldElement& a, const FieldElement& b) {
    if (a.tag() != b.tag())
        throw MixError("field mismatch: " + a.tag().to_string() + " vs " + b.tag().to_string());
}

std::int64_t fp_normalize(std::int64_t v, std::uint32_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += p;
    return m;
}

// Extended Euclid; no overflow for p < 2^31.
std::int64_t fp_inverse(std::int64_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    // r == gcd(a, p) == 1 since p prime and a != 0 mod p
    return fp_normalize(t, p);
}

} // namespace

FieldElement FieldElement::zero(const FieldTag& tag) { return from_int(tag, 0); }
FieldElement FieldElement::one(const FieldTag& tag) { return from_int(tag, 1); }

FieldElement FieldElement::from_int(const FieldTag& tag, long v) {
    FieldElement e;
    e.tag_ = tag;
    if (tag.kind == FieldKind::Fp)
        e.fp_ = fp_normalize(v, tag.p);
    else
        e.re_ = mpq_class(v);
    return e;
}

FieldElement FieldElement::rational(const FieldTag& tag, const mpq_class& re) {
    if (tag.kind == FieldKind::Fp)
        throw MixError("rational payload on an Fp tag");
    FieldElement e;
    e.tag_ = tag;
    e.re_ = re;
    e.re_.canonicalize();
    return e;
}

FieldElement FieldElement::gaussian(const mpq_class& re, const mpq_class& im) {
    FieldElement e;
    e.tag_ = FieldTag::gaussian_rationals();
    e.re_ = re;
    e.im_ = im;
    e.re_.canonicalize();
    e.im_.canonicalize();
    return e;
}

FieldElement FieldElement::residue(const FieldTag& tag, std::int64_t v) {
    if (tag.kind != FieldKind::Fp)
        throw MixError("residue payload on a characteristic-zero tag");
    FieldElement e;
    e.tag_ = tag;
    e.fp_ = fp_normalize(v, tag.p);
    return e;
}

bool FieldElement::is_zero() const {
    if (tag_.kind == FieldKind::Fp) return fp_ == 0;
    return re_ == 0 && im_ == 0;
}

bool FieldElement::is_one() const {
    if (tag_.kind == FieldKind::Fp) return fp_ == 1;
    return re_ == 1 && im_ == 0;
}

FieldElement FieldElement::operator-() const {
    FieldElement e = *this;
    if (tag_.kind == FieldKind::Fp) {
        e.fp_ = fp_ == 0 ? 0 : static_cast<std::int64_t>(tag_.p) - fp_;
    } else {
        e.re_ = -re_;
        e.im_ = -im_;
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    FieldElement e;
    e.tag_ = tag_;
    switch (tag_.kind) {
    case FieldKind::Q:
        e.re_ = 1 / re_;
        break;
    case FieldKind::Qi: {
        // (a + bi)^-1 = (a - bi) / (a^2 + b^2)
        mpq_class n = re_ * re_ + im_ * im_;
        e.re_ = re_ / n;
        e.im_ = -im_ / n;
        break;
    }
    case FieldKind::Fp:
        e.fp_ = fp_inverse(fp_, tag_.p);
        break;
    }
    return e;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_tag(a, b);
    FieldElement e;
    e.tag_ = a.tag_;
    if (a.tag_.kind == FieldKind::Fp) {
        e.fp_ = fp_normalize(a.fp_ + b.fp_, a.tag_.p);
    } else {
        e.re_ = a.re_ + b.re_;
        e.im_ = a.im_ + b.im_;
    }
    return e;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_tag(a, b);
    FieldElement e;
    e.tag_ = a.tag_;
    switch (a.tag_.kind) {
    case FieldKind::Q:
        e.re_ = a.re_ * b.re_;
        break;
    case FieldKind::Qi:
        e.re_ = a.re_ * b.re_ - a.im_ * b.im_;
        e.im_ = a.re_ * b.im_ + a.im_ * b.re_;
        break;
    case FieldKind::Fp:
        e.fp_ = fp_normalize(a.fp_ * b.fp_, a.tag_.p); // fits: p < 2^31
        break;
    }
    return e;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_.kind == FieldKind::Fp) return a.fp_ == b.fp_;
    return a.re_ == b.re_ && a.im_ == b.im_;
}

bool operator<(const FieldElement& a, const FieldElement& b) {
    if (a.tag_.kind != b.tag_.kind) return a.tag_.kind < b.tag_.kind;
    if (a.tag_.p != b.tag_.p) return a.tag_.p < b.tag_.p;
    if (a.tag_.kind == FieldKind::Fp) return a.fp_ < b.fp_;
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
}

std::string FieldElement::encode() const {
    switch (tag_.kind) {
    case FieldKind::Q:
        return re_.get_str();
    case FieldKind::Qi: {
        if (im_ == 0) return re_.get_str();
        mpq_class a = abs(im_);
        return re_.get_str() + (im_ < 0 ? "-" : "+") + a.get_str() + "i";
    }
    case FieldKind::Fp:
        return std::to_string(fp_);
    }
    return "?";
}

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    bool digits = false, slash = false, den_digits = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || !digits) return false;
            slash = true;
        } else if (c >= '0' && c <= '9') {
            (slash ? den_digits : digits) = true;
        } else {
            return false;
        }
    }
    return digits && (!slash || den_digits);
}

mpq_class parse_rational(const std::string& s) {
    if (!looks_like_rational(s)) throw ParseError("bad rational: '" + s + "'");
    mpq_class q;
    const std::string body = (s[0] == '+') ? s.substr(1) : s; // set_str rejects a leading +
    if (q.set_str(body, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

FieldElement parse_field_element(const FieldTag& tag, const std::string& s) {
    if (s.empty()) throw ParseError("empty field element");
    switch (tag.kind) {
    case FieldKind::Q:
        return FieldElement::rational(tag, parse_rational(s));
    case FieldKind::Qi: {
        std::string body = s;
        if (body.back() != 'i')
            return FieldElement::gaussian(parse_rational(body), 0);
        body.pop_back();
        // split real and imaginary parts at the last sign following a digit
        std::size_t split = std::string::npos;
        for (std::size_t i = 1; i < body.size(); ++i) {
            if ((body[i] == '+' || body[i] == '-') && std::isdigit(static_cast<unsigned char>(body[i - 1])))
                split = i;
        }
        std::string re_s = "0", im_s;
        if (split == std::string::npos) {
            im_s = body;
        } else {
            re_s = body.substr(0, split);
            im_s = body.substr(split);
        }
        if (im_s.empty() || im_s == "+") im_s = "1";
        else if (im_s == "-") im_s = "-1";
        return FieldElement::gaussian(parse_rational(re_s), parse_rational(im_s));
    }
    case FieldKind::Fp: {
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
            throw ParseError("bad residue: '" + s + "'");
        mpz_class v(s);
        mpz_class m = v % tag.p;
        if (m < 0) m += tag.p;
        return FieldElement::residue(tag, m.get_si());
    }
    }
    throw ParseError("bad field element: '" + s + "'");
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

FieldElement sample_nonzero(const FieldTag& tag, long height, std::uint64_t seed) {
    Rng rng(seed);
    return sample_nonzero(tag, height, rng);
}

FieldElement sample_nonzero(const FieldTag& tag, long height, Rng& rng) {
    if (height < 1) throw DomainError("height must be >= 1");
    switch (tag.kind) {
    case FieldKind::Q: {
        long num = rng.between(1, height);
        if (rng.coin()) num = -num;
        long den = rng.between(1, height);
        return FieldElement::rational(tag, mpq_class(num, den));
    }
    case FieldKind::Qi: {
        for (;;) {
            long a = rng.between(-height, height);
            long c = rng.between(-height, height);
            if (a == 0 && c == 0) continue;
            long b = rng.between(1, height);
            long d = rng.between(1, height);
            return FieldElement::gaussian(mpq_class(a, b), mpq_class(c, d));
        }
    }
    case FieldKind::Fp:
        return FieldElement::residue(tag, 1 + static_cast<std::int64_t>(rng.below(tag.p - 1)));
    }
    throw DomainError("bad tag");
}

FieldElement sample_entry(const FieldTag& tag, long height, Rng& rng) {
    if (tag.kind == FieldKind::Fp)
        return FieldElement::residue(tag, static_cast<std::int64_t>(rng.below(tag.p)));
    long a = rng.between(-height, height);
    if (tag.kind == FieldKind::Q) return FieldElement::rational(tag, mpq_class(a));
    long c = rng.between(-height, height);
    return FieldElement::gaussian(mpq_class(a), mpq_class(c));
}

// ---------------------------------------------------------------------------
// Gaussian integers
// ---------------------------------------------------------------------------

GaussianInt GaussianInt::times_unit(int k) const {
    switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
    }
}

std::string GaussianInt::encode() const {
    if (im == 0) return re.get_str();
    mpz_class a = abs(im);
    return re.get_str() + (im < 0 ? "-" : "+") + a.get_str() + "i";
}

bool gaussian_is_prime(const GaussianInt& z) {
    if (z.is_zero()) return false;
    mpz_class n = z.norm();
    if (n == 1) return false;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) return true;
    // unit multiple of an inert rational prime q = 3 mod 4
    mpz_class q;
    if (z.im == 0) q = abs(z.re);
    else if (z.re == 0) q = abs(z.im);
    else return false;
    return mpz_probab_prime_p(q.get_mpz_t(), 30) && q % 4 == 3;
}

bool gaussian_divide_exact(const GaussianInt& z, const GaussianInt& w, GaussianInt& out) {
    mpz_class n = w.norm();
    if (n == 0) throw DomainError("division by zero Gaussian integer");
    // z / w = z * conj(w) / N(w)
    mpz_class re = z.re * w.re + z.im * w.im;
    mpz_class im = z.im * w.re - z.re * w.im;
    if (re % n != 0 || im % n != 0) return false;
    out = {re / n, im / n};
    return true;
}

std::pair<int, GaussianInt> canonical_gaussian_associate(const GaussianInt& z) {
    if (z.is_zero()) throw DomainError("canonical associate of zero");
    if (!gaussian_is_prime(z))
        throw DomainError("canonical associate requires a Gaussian prime, got " + z.encode());
    GaussianInt a = z;
    int rotations = 0;
    while (!(a.re > 0 && a.im >= 0)) {
        a = a.times_unit(1);
        ++rotations;
        if (rotations > 3) throw DomainError("no canonical associate"); // unreachable
    }
    return {(4 - rotations) % 4, a};
}

// ---------------------------------------------------------------------------
// Factorization helpers
// ---------------------------------------------------------------------------

namespace {

// Trial division with a probable-prime early exit; fine at desk scale.
std::map<mpz_class, long long> factor_mpz(mpz_class n) {
    std::map<mpz_class, long long> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    auto strip = [&](const mpz_class& d) {
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    };
    strip(2);
    mpz_class d = 3;
    while (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            ++out[n];
            break;
        }
        if (d * d > n) {
            ++out[n]; // n is prime (covered above, kept as a guard)
            break;
        }
        strip(d);
        d += 2;
    }
    return out;
}

// a^2 + b^2 = q for a prime q = 1 mod 4 (brute force; q is desk scale).
std::pair<mpz_class, mpz_class> two_squares(const mpz_class& q) {
    mpz_class a = 1;
    for (;; ++a) {
        mpz_class b2 = q - a * a;
        if (b2 < 1) break;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            mpz_class b = sqrt(b2);
            return {a, b};
        }
    }
    throw DomainError("no two-squares decomposition for " + q.get_str());
}

struct GaussianFactorization {
    int unit_power = 0; // exponent of i
    std::map<Generator, long long> exps;
};

GaussianFactorization factor_gaussian(GaussianInt z) {
    if (z.is_zero()) throw DomainError("factoring zero");
    GaussianFactorization f;
    auto strip = [&](const GaussianInt& pi) {
        GaussianInt q;
        long long k = 0;
        while (gaussian_divide_exact(z, pi, q)) {
            z = q;
            ++k;
        }
        if (k > 0) f.exps[Generator::gaussian_prime(pi)] += k;
    };
    for (const auto& [q, e] : factor_mpz(z.norm())) {
        (void)e;
        if (q == 2) {
            strip({1, 1});
        } else if (q % 4 == 3) {
            strip({q, 0});
        } else {
            auto [a, b] = two_squares(q);
            strip({a, b});
            strip({b, a});
        }
    }
    // remaining cofactor is a unit
    if (z == GaussianInt{1, 0}) f.unit_power = 0;
    else if (z == GaussianInt{0, 1}) f.unit_power = 1;
    else if (z == GaussianInt{-1, 0}) f.unit_power = 2;
    else if (z == GaussianInt{0, -1}) f.unit_power = 3;
    else throw DomainError("incomplete Gaussian factorization, cofactor " + z.encode());
    return f;
}

} // namespace

// ---------------------------------------------------------------------------
// Generators and decomposition
// ---------------------------------------------------------------------------

long Generator::order(const FieldTag& tag) const {
    if (!unit) return 0;
    switch (tag.kind) {
    case FieldKind::Q: return 2;
    case FieldKind::Qi: return 4;
    case FieldKind::Fp: return static_cast<long>(tag.p) - 1;
    }
    return 0;
}

std::string Generator::encode(const FieldTag& tag) const {
    if (unit) {
        switch (tag.kind) {
        case FieldKind::Q: return "-1";
        case FieldKind::Qi: return "i";
        case FieldKind::Fp: return "g" + std::to_string(primitive_root(tag.p));
        }
    }
    return GaussianInt{re, im}.encode();
}

bool operator<(const Generator& a, const Generator& b) {
    if (a.unit != b.unit) return a.unit; // unit first
    mpz_class na = a.re * a.re + a.im * a.im;
    mpz_class nb = b.re * b.re + b.im * b.im;
    int c = cmp(na, nb);
    if (c != 0) return c < 0;
    c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

MultDecomposition mult_decompose(const FieldElement& x) {
    if (x.is_zero()) throw DomainError("mult_decompose of zero");
    MultDecomposition dec;
    const FieldTag& tag = x.tag();
    switch (tag.kind) {
    case FieldKind::Q: {
        const mpq_class& v = x.re();
        dec.unit_exp = (v < 0) ? 1 : 0;
        for (const auto& [q, e] : factor_mpz(v.get_num()))
            dec.prime_exps[Generator::prime(q)] += e;
        for (const auto& [q, e] : factor_mpz(v.get_den()))
            dec.prime_exps[Generator::prime(q)] -= e;
        break;
    }
    case FieldKind::Qi: {
        // write x = z / m with z a Gaussian integer and m a positive integer
        mpz_class b = x.re().get_den(), d = x.im().get_den();
        mpz_class m = lcm(b, d);
        GaussianInt z{x.re().get_num() * (m / b), x.im().get_num() * (m / d)};
        GaussianFactorization fz = factor_gaussian(z);
        GaussianFactorization fm = factor_gaussian({m, 0});
        dec.unit_exp = ((fz.unit_power - fm.unit_power) % 4 + 4) % 4;
        dec.prime_exps = std::move(fz.exps);
        for (const auto& [g, e] : fm.exps) {
            dec.prime_exps[g] -= e;
            if (dec.prime_exps[g] == 0) dec.prime_exps.erase(g);
        }
        break;
    }
    case FieldKind::Fp:
        dec.unit_exp = discrete_log(tag.p, x.fp());
        break;
    }
    // drop zero exponents
    for (auto it = dec.prime_exps.begin(); it != dec.prime_exps.end();)
        it = (it->second == 0) ? dec.prime_exps.erase(it) : std::next(it);
    return dec;
}

FieldElement recombine(const MultDecomposition& dec, const FieldTag& tag) {
    auto power = [&](FieldElement base, long long e) {
        FieldElement acc = FieldElement::one(tag);
        if (e < 0) {
            base = base.inverse();
            e = -e;
        }
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    };
    FieldElement unit = FieldElement::one(tag);
    switch (tag.kind) {
    case FieldKind::Q: unit = FieldElement::from_int(tag, -1); break;
    case FieldKind::Qi: unit = FieldElement::gaussian(0, 1); break;
    case FieldKind::Fp: unit = FieldElement::residue(tag, primitive_root(tag.p)); break;
    }
    long ord = Generator::torsion_unit().order(tag);
    FieldElement out = power(unit, ((dec.unit_exp % ord) + ord) % ord);
    for (const auto& [g, e] : dec.prime_exps) {
        FieldElement base = (tag.kind == FieldKind::Qi)
            ? FieldElement::gaussian(mpq_class(g.re), mpq_class(g.im))
            : FieldElement::rational(tag, mpq_class(g.re));
        out *= power(base, e);
    }
    return out;
}

// ---------------------------------------------------------------------------
// F_p structure
// ---------------------------------------------------------------------------

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m; // m < 2^31 so products fit
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

std::uint32_t primitive_root(std::uint32_t p) {
    std::vector<std::uint32_t> qs;
    {
        std::uint32_t m = p - 1;
        for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d)
            if (m % d == 0) {
                qs.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) qs.push_back(m);
    }
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t q : qs)
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw DomainError("no primitive root mod " + std::to_string(p));
}

std::int64_t discrete_log(std::uint32_t p, std::int64_t x) {
    if (x % p == 0) throw DomainError("discrete log of zero");
    if (p >= (1u << 16))
        throw UnsupportedError("discrete logs limited to p < 2^16, got p = " + std::to_string(p));

    static std::mutex mu;
    static std::unordered_map<std::uint32_t, std::vector<std::int64_t>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(p);
    if (it == tables.end()) {
        std::vector<std::int64_t> table(p, -1);
        std::uint64_t g = primitive_root(p), v = 1;
        for (std::uint32_t k = 0; k + 1 < p; ++k) {
            table[v] = k;
            v = v * g % p;
        }
        it = tables.emplace(p, std::move(table)).first;
    }
    std::int64_t r = fp_normalize(x, p);
    return it->second[static_cast<std::size_t>(r)];
}

} // namespace confhom
