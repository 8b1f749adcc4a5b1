/**
 * @file field_linalg.hpp
 * @brief Finite-field arithmetic and dense matrix algebra over GF(q).
 *
 * Elements of GF(q) are canonical integer codes 0..q-1. For a prime field the
 * code is the residue itself; for an extension field GF(p^m) the code's base-p
 * digits are the coordinates in the power basis of a fixed Conway polynomial,
 * so tables are reproducible bit-exactly across builds. All arithmetic after
 * construction is table lookup.
 *
 * Matrices are dense and row-major. Throughout this library a linear map acts
 * on row vectors, x -> x*M, and row (i) of M is the image of the i-th basis
 * vector.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pwpi/bigint.hpp"
#include "pwpi/errors.hpp"

namespace pwpi {

using Elem = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;
inline constexpr std::uint64_t kDefaultMatrixBudget = std::uint64_t{1} << 26;
inline constexpr std::uint64_t kDefaultVectorBudget = std::uint64_t{1} << 20;

namespace detail {

/// Conway polynomials for every prime power p^m <= 256 with m >= 2,
/// coefficients low degree first, monic (last coefficient 1).
struct ConwayEntry {
    int p;
    int m;
    std::array<int, 9> coeffs;  // degree m, entries beyond m+1 unused
};

inline constexpr ConwayEntry kConwayTable[] = {
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 1, 1, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {7, 2, {3, 6, 1}},
    {11, 2, {2, 7, 1}},
    {13, 2, {2, 12, 1}},
};

}  // namespace detail

/**
 * The field GF(q) with exhaustive axiom validation at construction.
 * Immutable once built; safe to share across threads read-only.
 */
class FieldSpec {
  public:
    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    /// Multiplicative inverse of a nonzero element.
    Elem inv(Elem a) const {
        if (a == 0) fail(ErrorKind::NotInvertible, "zero has no multiplicative inverse");
        return inv_[a];
    }

    bool operator==(const FieldSpec& other) const {
        return q_ == other.q_;  // tables are a function of q by construction
    }

    friend FieldSpec make_field(int q);

  private:
    FieldSpec() = default;

    void validate_axioms() const;

    int q_ = 0;
    int p_ = 0;
    int m_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<Elem> inv_;
};

namespace detail {

inline bool factor_prime_power(int q, int& p, int& m) {
    if (q < 2) return false;
    int base = q;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            base = d;
            break;
        }
    }
    int value = q, exp = 0;
    while (value % base == 0) {
        value /= base;
        ++exp;
    }
    if (value != 1) return false;
    p = base;
    m = exp;
    return true;
}

inline const ConwayEntry* find_conway(int p, int m) {
    for (const auto& entry : kConwayTable)
        if (entry.p == p && entry.m == m) return &entry;
    return nullptr;
}

}  // namespace detail

inline void FieldSpec::validate_axioms() const {
    const int q = q_;
    auto bad = [&](const std::string& what) { fail(ErrorKind::AxiomViolation, "field axiom failed: " + what); };
    if (add(0, 0) != 0 || mul(1, 1) != 1) bad("identity tables");
    for (int a = 0; a < q; ++a) {
        if (add(static_cast<Elem>(a), 0) != a) bad("additive identity");
        if (mul(static_cast<Elem>(a), 1) != a) bad("multiplicative identity");
        if (add(static_cast<Elem>(a), neg(static_cast<Elem>(a))) != 0) bad("additive inverse");
        if (a != 0 && mul(static_cast<Elem>(a), inv_[a]) != 1) bad("multiplicative inverse");
        if (mul(static_cast<Elem>(a), 0) != 0) bad("zero annihilates");
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (add(static_cast<Elem>(a), static_cast<Elem>(b)) != add(static_cast<Elem>(b), static_cast<Elem>(a)))
                bad("additive commutativity");
            if (mul(static_cast<Elem>(a), static_cast<Elem>(b)) != mul(static_cast<Elem>(b), static_cast<Elem>(a)))
                bad("multiplicative commutativity");
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            const Elem ab_add = add(static_cast<Elem>(a), static_cast<Elem>(b));
            const Elem ab_mul = mul(static_cast<Elem>(a), static_cast<Elem>(b));
            for (int c = 0; c < q; ++c) {
                const Elem ec = static_cast<Elem>(c);
                if (add(ab_add, ec) != add(static_cast<Elem>(a), add(static_cast<Elem>(b), ec)))
                    bad("additive associativity");
                if (mul(ab_mul, ec) != mul(static_cast<Elem>(a), mul(static_cast<Elem>(b), ec)))
                    bad("multiplicative associativity");
                if (mul(static_cast<Elem>(a), add(static_cast<Elem>(b), ec)) !=
                    add(ab_mul, mul(static_cast<Elem>(a), ec)))
                    bad("distributivity");
            }
        }
    }
}

/**
 * Builds GF(q) for a prime power q <= 256.
 *
 * Extension fields use the fixed Conway-polynomial table, so element codes
 * mean the same thing everywhere. The full field-axiom check runs before the
 * field is returned.
 */
inline FieldSpec make_field(int q) {
    int p = 0, m = 0;
    if (!detail::factor_prime_power(q, p, m)) fail(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder) fail(ErrorKind::Unsupported, "field order " + std::to_string(q) + " exceeds 256");

    FieldSpec field;
    field.q_ = q;
    field.p_ = p;
    field.m_ = m;
    field.add_.resize(static_cast<std::size_t>(q) * q);
    field.mul_.resize(static_cast<std::size_t>(q) * q);
    field.neg_.resize(q);
    field.inv_.resize(q);

    if (m == 1) {
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                field.add_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>((a + b) % p);
                field.mul_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>((a * b) % p);
            }
        }
    } else {
        const detail::ConwayEntry* conway = detail::find_conway(p, m);
        if (conway == nullptr) fail(ErrorKind::Unsupported, "no modulus polynomial for this field");

        auto digits_of = [p, m](int code) {
            std::vector<int> d(m, 0);
            for (int i = 0; i < m; ++i) {
                d[i] = code % p;
                code /= p;
            }
            return d;
        };
        auto code_of = [p, m](const std::vector<int>& d) {
            int code = 0;
            for (int i = m; i-- > 0;) code = code * p + d[i];
            return code;
        };

        for (int a = 0; a < q; ++a) {
            const auto da = digits_of(a);
            for (int b = 0; b < q; ++b) {
                const auto db = digits_of(b);
                std::vector<int> sum(m, 0);
                for (int i = 0; i < m; ++i) sum[i] = (da[i] + db[i]) % p;
                field.add_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(code_of(sum));

                // polynomial product reduced mod the Conway polynomial
                std::vector<int> prod(2 * m - 1, 0);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int deg = 2 * m - 2; deg >= m; --deg) {
                    const int lead = prod[deg];
                    if (lead == 0) continue;
                    prod[deg] = 0;
                    for (int i = 0; i < m; ++i)
                        prod[deg - m + i] = ((prod[deg - m + i] - lead * conway->coeffs[i]) % p + p * p) % p;
                }
                prod.resize(m);
                field.mul_[static_cast<std::size_t>(a) * q + b] = static_cast<Elem>(code_of(prod));
            }
        }
    }

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (field.add_[static_cast<std::size_t>(a) * q + b] == 0) field.neg_[a] = static_cast<Elem>(b);
            if (a != 0 && field.mul_[static_cast<std::size_t>(a) * q + b] == 1) field.inv_[a] = static_cast<Elem>(b);
        }
    }

    field.validate_axioms();
    return field;
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> entries;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

    Elem at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    Elem& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_square() const { return rows == cols; }
    bool operator==(const Matrix&) const = default;
};

/// Lexicographic order on (rows, cols, entries); used for canonical set form.
inline bool lex_less(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    if (a.cols != b.cols) return a.cols < b.cols;
    return a.entries < b.entries;
}

inline Matrix mat_mul(const FieldSpec& field, const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const Elem aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = field.add(out.at(i, j), field.mul(aik, b.at(k, j)));
        }
    }
    return out;
}

/// Row-vector action x -> x*M.
inline std::vector<Elem> apply_map(const FieldSpec& field, std::span<const Elem> x, const Matrix& m) {
    if (static_cast<int>(x.size()) != m.rows) fail(ErrorKind::DimensionMismatch, "vector/matrix shape mismatch");
    std::vector<Elem> out(m.cols, 0);
    for (int i = 0; i < m.rows; ++i) {
        const Elem xi = x[i];
        if (xi == 0) continue;
        for (int j = 0; j < m.cols; ++j) out[j] = field.add(out[j], field.mul(xi, m.at(i, j)));
    }
    return out;
}

namespace detail {

/// Gauss-Jordan over GF(q); returns rank, optionally accumulating the inverse.
inline int eliminate(const FieldSpec& field, Matrix& m, Matrix* inverse) {
    const int rows = m.rows, cols = m.cols;
    if (inverse != nullptr) *inverse = Matrix::identity(rows);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        if (inverse != nullptr)
            for (int c = 0; c < rows; ++c) std::swap(inverse->at(pivot, c), inverse->at(rank, c));

        const Elem scale = field.inv(m.at(rank, col));
        for (int c = 0; c < cols; ++c) m.at(rank, c) = field.mul(m.at(rank, c), scale);
        if (inverse != nullptr)
            for (int c = 0; c < rows; ++c) inverse->at(rank, c) = field.mul(inverse->at(rank, c), scale);

        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Elem factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < cols; ++c)
                m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(rank, c)));
            if (inverse != nullptr)
                for (int c = 0; c < rows; ++c)
                    inverse->at(r, c) = field.sub(inverse->at(r, c), field.mul(factor, inverse->at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline int mat_rank(const FieldSpec& field, Matrix m) { return detail::eliminate(field, m, nullptr); }

/// Reduced row echelon form; canonical for row-space comparison.
inline Matrix rref(const FieldSpec& field, Matrix m) {
    detail::eliminate(field, m, nullptr);
    return m;
}

/// Inverse by Gauss-Jordan elimination, or nullopt when singular.
inline std::optional<Matrix> mat_inverse(const FieldSpec& field, const Matrix& m) {
    if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "only square matrices can be inverted");
    Matrix work = m;
    Matrix inverse;
    if (detail::eliminate(field, work, &inverse) < m.rows) return std::nullopt;
    return inverse;
}

inline bool is_invertible(const FieldSpec& field, const Matrix& m) {
    return m.is_square() && mat_rank(field, m) == m.rows;
}

/**
 * Streams all N x N matrices over GF(q) in lexicographic order of the
 * row-major entry tuple, optionally filtered to invertible ones. The stream
 * refuses to start when q^(N^2) exceeds the budget.
 */
class MatrixEnumerator {
  public:
    MatrixEnumerator(int n, const FieldSpec& field, bool invertible_only,
                     std::uint64_t budget = kDefaultMatrixBudget)
        : field_(&field), n_(n), invertible_only_(invertible_only), current_(n, n) {
        const auto total = checked_pow_u64(static_cast<std::uint64_t>(field.order()),
                                           static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
        if (!total.has_value() || *total > budget)
            fail(ErrorKind::BudgetExceeded,
                 "matrix enumeration q^(N^2) exceeds budget of " + std::to_string(budget));
    }

    std::optional<Matrix> next() {
        while (!done_) {
            Matrix candidate = current_;
            advance();
            if (!invertible_only_ || is_invertible(*field_, candidate)) return candidate;
        }
        return std::nullopt;
    }

  private:
    void advance() {
        const Elem top = static_cast<Elem>(field_->order() - 1);
        for (std::size_t i = current_.entries.size(); i-- > 0;) {
            if (current_.entries[i] < top) {
                ++current_.entries[i];
                return;
            }
            current_.entries[i] = 0;
        }
        done_ = true;
    }

    const FieldSpec* field_;
    int n_;
    bool invertible_only_;
    Matrix current_;
    bool done_ = false;
};

}  // namespace pwpi
