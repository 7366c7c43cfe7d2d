#include "confhom/dilog.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace confhom {

namespace {

using cplx = std::complex<double>;

// Coefficients B_{2k} / (2k (2k+1) (2k)!) of the log-form expansion of
// Li2(e^u); computed exactly once with rational arithmetic.
const std::vector<double>& log_series_coeffs() {
    static const std::vector<double> coeffs = [] {
        constexpr std::size_t kmax = 40;
        // Bernoulli numbers via sum_{j<m} C(m+1, j) B_j = -(m+1) B_m ... 0
        std::vector<mpq_class> bern(2 * kmax + 1);
        bern[0] = 1;
        for (std::size_t m = 1; m < bern.size(); ++m) {
            mpq_class acc = 0;
            mpz_class binom = 1; // C(m+1, 0)
            for (std::size_t j = 0; j < m; ++j) {
                acc += mpq_class(binom) * bern[j];
                binom = binom * (m + 1 - j) / (j + 1);
            }
            // binom now holds C(m+1, m) = m+1
            bern[m] = -acc / mpq_class(binom);
        }
        std::vector<double> out(kmax + 1, 0.0);
        mpz_class fact = 1; // (2k)!
        for (std::size_t k = 1; k <= kmax; ++k) {
            fact *= mpz_class(2 * k - 1) * mpz_class(2 * k);
            mpq_class c = bern[2 * k] / (mpq_class(2 * k) * mpq_class(2 * k + 1) * mpq_class(fact));
            out[k] = c.get_d();
        }
        return out;
    }();
    return coeffs;
}

// Li2 by direct series, |z| <= 1/2: terms decay at least like 2^-k.
cplx li2_series(cplx z) {
    cplx term = z, sum = z;
    for (int k = 2; k < 64; ++k) {
        term *= z;
        cplx inc = term / static_cast<double>(k * k);
        sum += inc;
        if (std::abs(inc) < 1e-18) break;
    }
    return sum;
}

// Li2(e^u) by the Bernoulli log-form series; valid for |u| < 2 pi with u off
// the positive real axis.  Used for 1/2 < |z| <= 1 with |1-z| > 1/2.
cplx li2_log_form(cplx u) {
    const cplx lnmu = std::log(-u);
    cplx sum = std::numbers::pi_v<double> * std::numbers::pi_v<double> / 6.0 + u - u * lnmu -
               u * u / 4.0;
    const auto& c = log_series_coeffs();
    cplx upow = u * u * u; // u^(2k+1), k = 1
    const cplx u2 = u * u;
    for (std::size_t k = 1; k < c.size(); ++k) {
        cplx inc = c[k] * upow;
        sum -= inc;
        if (std::abs(inc) < 1e-18) break;
        upow *= u2;
    }
    return sum;
}

double bloch_wigner_reduced(cplx z) {
    // |z| <= 1, z non-real
    const double az = std::abs(z);
    cplx li2;
    if (az <= 0.5) {
        li2 = li2_series(z);
    } else if (std::abs(1.0 - z) <= 0.5) {
        return -bloch_wigner_reduced(1.0 - z); // reflection
    } else {
        li2 = li2_log_form(std::log(z));
    }
    return li2.imag() + std::arg(1.0 - z) * std::log(az);
}

} // namespace

double bloch_wigner_D(cplx z) {
    if (z == cplx(0.0, 0.0) || z == cplx(1.0, 0.0))
        throw DomainError("D undefined at 0 and 1");
    if (z.imag() == 0.0) return 0.0; // D vanishes on the real line
    if (std::abs(z) > 1.0) return -bloch_wigner_D(1.0 / z); // inversion
    return bloch_wigner_reduced(z);
}

double check_five_term_numeric(cplx x, cplx y) {
    auto bad = [](cplx v) { return v == cplx(0.0, 0.0) || v == cplx(1.0, 0.0); };
    if (bad(x) || bad(y) || x == y) throw DomainError("degenerate five-term pair");
    const cplx one(1.0, 0.0);
    const cplx a2 = y / x;
    const cplx a3 = (one - one / x) / (one - one / y);
    const cplx a4 = (one - x) / (one - y);
    if (bad(a2) || bad(a3) || bad(a4)) throw DomainError("degenerate five-term argument");
    return bloch_wigner_D(x) - bloch_wigner_D(y) + bloch_wigner_D(a2) - bloch_wigner_D(a3) +
           bloch_wigner_D(a4);
}

std::complex<double> embed(const FieldElement& a, bool conjugate_embedding) {
    switch (a.tag().kind) {
    case FieldKind::Q:
        return {a.re().get_d(), 0.0};
    case FieldKind::Qi: {
        double im = a.im().get_d();
        return {a.re().get_d(), conjugate_embedding ? -im : im};
    }
    case FieldKind::Fp:
        break;
    }
    throw UnsupportedError("no complex embedding of " + a.tag().to_string());
}

double evaluate_on_formal_sum(const FormalSum& s, bool conjugate_embedding) {
    double total = 0.0;
    for (const auto& [a, c] : s.terms())
        total += static_cast<double>(c) * bloch_wigner_D(embed(a, conjugate_embedding));
    return total;
}

} // namespace confhom
