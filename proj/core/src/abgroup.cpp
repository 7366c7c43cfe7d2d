#include "confhom/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace confhom {

// ---------------------------------------------------------------------------
// IntMatrix
// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    IntMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::encode() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, long v) {
    if (i >= rows_ || j >= cols_) throw DomainError("triplet out of range");
    auto key = std::make_pair(i, j);
    entries_[key] += v;
    if (entries_[key] == 0) entries_.erase(key);
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (const auto& [ij, v] : entries_) m.at(ij.first, ij.second) = v;
    return m;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

struct SnfWorker {
    IntMatrix m;
    bool track;
    IntMatrix u, v; // u * input * v = m throughout

    SnfWorker(const IntMatrix& input, bool want_transforms)
        : m(input), track(want_transforms),
          u(IntMatrix::identity(input.rows())), v(IntMatrix::identity(input.cols())) {}

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        if (track)
            for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(std::size_t dst, std::size_t src, const mpz_class& f) { // row dst += f * row src
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(dst, j) += f * u.at(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const mpz_class& f) { // col dst += f * col src
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
        if (track)
            for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, dst) += f * v.at(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
        if (track)
            for (std::size_t j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }

    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        mpz_class best;
        for (std::size_t i = t; i < m.rows(); ++i)
            for (std::size_t j = t; j < m.cols(); ++j) {
                if (m.at(i, j) == 0) continue;
                mpz_class a = abs(m.at(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run(std::vector<mpz_class>& factors) {
        const std::size_t bound = std::min(m.rows(), m.cols());
        for (std::size_t t = 0; t < bound; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m.rows(); ++i) {
                    if (m.at(i, t) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
                    add_row(i, t, -q);
                    if (m.at(i, t) != 0) { // remainder becomes the smaller pivot
                        swap_rows(t, i);
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < m.cols(); ++j) {
                    if (m.at(t, j) == 0) continue;
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
                    add_col(j, t, -q);
                    if (m.at(t, j) != 0) {
                        swap_cols(t, j);
                        dirty = true;
                    }
                }
                if (dirty) continue;

                // pivot now divides its row and column remainders (all zero);
                // enforce divisibility of the trailing block
                bool fixed = false;
                for (std::size_t i = t + 1; i < m.rows() && !fixed; ++i)
                    for (std::size_t j = t + 1; j < m.cols() && !fixed; ++j)
                        if (m.at(i, j) % m.at(t, t) != 0) {
                            add_row(t, i, 1);
                            fixed = true;
                        }
                if (!fixed) break;
            }
            if (m.at(t, t) < 0) negate_row(t);
            factors.push_back(m.at(t, t));
        }
    }
};

} // namespace

SmithResult smith_normal_form(const IntMatrix& m, bool want_transforms) {
    SmithResult res;
    SnfWorker w(m, want_transforms);
    w.run(res.factors);
    if (want_transforms) {
        res.left = std::move(w.u);
        res.right = std::move(w.v);
    }
    return res;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).factors.size(); }

IntMatrix kernel_lattice(const IntMatrix& m) {
    if (m.cols() == 0) return IntMatrix(0, 0);
    SmithResult s = smith_normal_form(m, true);
    const IntMatrix& v = *s.right;
    const std::size_t r = s.factors.size();
    // columns of V beyond the rank form a basis of the kernel lattice
    IntMatrix k(m.cols(), m.cols() - r);
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = r; j < m.cols(); ++j) k.at(i, j - r) = v.at(i, j);
    return k;
}

IntMatrix column_lattice_basis(const IntMatrix& generators) {
    IntMatrix w = generators;
    const std::size_t rows = w.rows(), cols = w.cols();
    std::size_t lead = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t row = 0; row < rows && lead < cols; ++row) {
        // gcd-reduce the row across columns lead..cols-1 by column operations
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = lead; j < cols; ++j) {
                if (w.at(row, j) == 0) continue;
                if (best == cols || abs(w.at(row, j)) < abs(w.at(row, best))) best = j;
            }
            if (best == cols) break; // row zero on active columns
            // swap best to lead
            if (best != lead)
                for (std::size_t i = 0; i < rows; ++i) std::swap(w.at(i, best), w.at(i, lead));
            bool reduced = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (w.at(row, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(row, j).get_mpz_t(), w.at(row, lead).get_mpz_t());
                for (std::size_t i = 0; i < rows; ++i) w.at(i, j) -= q * w.at(i, lead);
                if (w.at(row, j) != 0) reduced = false;
            }
            if (reduced) {
                if (w.at(row, lead) < 0)
                    for (std::size_t i = 0; i < rows; ++i) w.at(i, lead) = -w.at(i, lead);
                pivot_cols.push_back(lead);
                ++lead;
                break;
            }
        }
    }
    IntMatrix basis(rows, lead);
    for (std::size_t j = 0; j < lead; ++j)
        for (std::size_t i = 0; i < rows; ++i) basis.at(i, j) = w.at(i, j);
    return basis;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<mpz_class>& v) {
    if (v.size() != basis.rows()) throw DomainError("vector length mismatch");
    // basis comes from column_lattice_basis: each column has a pivot row where
    // earlier columns are... not guaranteed triangular, so solve generically:
    // reduce [basis | v]: v is in the lattice iff appending it does not change
    // the lattice, tested via equal Hermite bases.
    IntMatrix ext(basis.rows(), basis.cols() + 1);
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        for (std::size_t j = 0; j < basis.cols(); ++j) ext.at(i, j) = basis.at(i, j);
        ext.at(i, basis.cols()) = v[i];
    }
    IntMatrix h1 = column_lattice_basis(basis);
    IntMatrix h2 = column_lattice_basis(ext);
    return h1 == h2;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    os << "Z^" << free_rank;
    for (const auto& d : torsion) os << " + Z/" << d.get_str();
    return os.str();
}

HomologyResult homology_of_pair(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.cols())
        throw CompositionError("middle dimensions disagree: A lands in Z^" +
                               std::to_string(a.rows()) + ", B starts from Z^" +
                               std::to_string(b.cols()));
    if (a.cols() > 0 && b.rows() > 0 && !(b * a).is_zero())
        throw CompositionError("B*A != 0, not a chain complex pair");

    // ker(B) is saturated in Z^n, so the torsion of ker(B)/im(A) equals the
    // torsion of Z^n/im(A): the invariant factors of A that exceed 1.
    SmithResult sa = smith_normal_form(a);
    const std::size_t rank_a = sa.factors.size();
    const std::size_t rank_b = rank(b);

    HomologyResult res;
    res.free_rank = a.rows() - rank_b - rank_a;
    for (const auto& d : sa.factors)
        if (d > 1) res.torsion.push_back(d);
    return res;
}

// ---------------------------------------------------------------------------
// TensorSym
// ---------------------------------------------------------------------------

namespace {

long long gcd_with_infinite(long long a, long long b) {
    // 0 encodes infinite order; gcd(0, x) = x
    if (a == 0) return b;
    if (b == 0) return a;
    return std::gcd(a, b);
}

} // namespace

long long TensorSym::pair_modulus(const Generator& g, const Generator& h) const {
    long long m = gcd_with_infinite(g.order(tag_), h.order(tag_));
    if (g == h) m = gcd_with_infinite(m, 2);
    return m;
}

void TensorSym::add_pair(const Generator& g, const Generator& h, long long c) {
    if (c == 0) return;
    const Generator* lo = &g;
    const Generator* hi = &h;
    if (h < g) {
        std::swap(lo, hi);
        c = -c; // sigma-coinvariance: (h, g) = -(g, h)
    }
    auto key = std::make_pair(*lo, *hi);
    long long m = pair_modulus(*lo, *hi);
    long long& slot = coeffs_[key];
    slot += c;
    if (m > 0) slot = ((slot % m) + m) % m;
    if (slot == 0) coeffs_.erase(key);
}

TensorSym& TensorSym::operator+=(const TensorSym& o) {
    if (tag_ != o.tag_) throw MixError("tensor field mismatch");
    for (const auto& [pair, c] : o.coeffs_) add_pair(pair.first, pair.second, c);
    return *this;
}

TensorSym& TensorSym::operator-=(const TensorSym& o) {
    if (tag_ != o.tag_) throw MixError("tensor field mismatch");
    for (const auto& [pair, c] : o.coeffs_) add_pair(pair.first, pair.second, -c);
    return *this;
}

TensorSym& TensorSym::operator*=(long long c) {
    std::map<std::pair<Generator, Generator>, long long> old;
    old.swap(coeffs_);
    for (const auto& [pair, v] : old) add_pair(pair.first, pair.second, v * c);
    return *this;
}

bool operator==(const TensorSym& a, const TensorSym& b) {
    return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
}

std::string TensorSym::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [pair, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*(" << pair.first.encode(tag_) << ")x(" << pair.second.encode(tag_) << ")";
        long long m = pair_modulus(pair.first, pair.second);
        if (m > 0) os << " mod " << m;
    }
    return os.str();
}

TensorSym tensor_pair(const FieldElement& x, const FieldElement& y) {
    if (x.is_zero() || y.is_zero()) throw DomainError("tensor_pair of zero");
    if (x.tag() != y.tag()) throw MixError("tensor_pair field mismatch");
    MultDecomposition dx = mult_decompose(x);
    MultDecomposition dy = mult_decompose(y);

    auto entries = [](const MultDecomposition& d) {
        std::vector<std::pair<Generator, long long>> v;
        if (d.unit_exp != 0) v.emplace_back(Generator::torsion_unit(), d.unit_exp);
        for (const auto& [g, e] : d.prime_exps) v.emplace_back(g, e);
        return v;
    };

    TensorSym t(x.tag());
    for (const auto& [g, eg] : entries(dx))
        for (const auto& [h, eh] : entries(dy)) t.add_pair(g, h, eg * eh);
    return t;
}

bool tensor_is_zero(const TensorSym& t) { return t.is_zero(); }

} // namespace confhom
