#include "tribokit/tribomatrix.hpp"

#include <stdexcept>

#include "tribokit/seqcore.hpp"

namespace tribokit {

Matrix3::Matrix3(std::initializer_list<std::initializer_list<long>> rows) {
    if (rows.size() != 3) throw std::invalid_argument("Matrix3 needs 3 rows");
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != 3) throw std::invalid_argument("Matrix3 needs 3 columns");
        std::size_t c = 0;
        for (long v : row) (*this)(r, c++) = v;
        ++r;
    }
}

Matrix3 Matrix3::identity() { return Matrix3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}; }

Integer Matrix3::trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

Integer Matrix3::determinant() const {
    const Matrix3& a = *this;
    return Integer(a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                   a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                   a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0)));
}

Integer Matrix3::principal_minor(std::size_t i, std::size_t j) const {
    const Matrix3& a = *this;
    return Integer(a(i, i) * a(j, j) - a(i, j) * a(j, i));
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Integer& acc = out(i, j);
            mpz_mul(acc.get_mpz_t(), a(i, 0).get_mpz_t(), b(0, j).get_mpz_t());
            mpz_addmul(acc.get_mpz_t(), a(i, 1).get_mpz_t(), b(1, j).get_mpz_t());
            mpz_addmul(acc.get_mpz_t(), a(i, 2).get_mpz_t(), b(2, j).get_mpz_t());
        }
    }
    return out;
}

bool operator==(const Matrix3& a, const Matrix3& b) { return a.m_ == b.m_; }

std::ostream& operator<<(std::ostream& os, const Matrix3& m) {
    os << '[';
    for (std::size_t i = 0; i < 3; ++i) {
        os << (i ? ", [" : "[") << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2) << ']';
    }
    return os << ']';
}

Matrix3 tribomatrix() { return Matrix3{{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}; }

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b) { return a * b; }

Matrix3 mat_pow(Index n) {
    if (n < 0) throw std::domain_error("mat_pow: negative powers are not supported");
    Matrix3 result = Matrix3::identity();
    Matrix3 base = tribomatrix();
    auto e = static_cast<std::uint64_t>(n);
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

Matrix3 mat_pow_naive(Index n) {
    if (n < 0) throw std::domain_error("mat_pow_naive: negative powers are not supported");
    const Matrix3 a = tribomatrix();
    Matrix3 result = Matrix3::identity();
    for (Index i = 0; i < n; ++i) result = result * a;
    return result;
}

Matrix3 entries_from_tribonacci(Index n) {
    if (n < 0) throw std::domain_error("entries_from_tribonacci: n must be non-negative");
    const auto t = sequence_range(SequenceKind::Tribonacci, n - 3, n + 1);
    auto T = [&](Index k) -> const Integer& { return t[static_cast<std::size_t>(k - (n - 3))].value; };
    Matrix3 m;
    m(0, 0) = T(n + 1);
    m(0, 1) = T(n);
    m(0, 2) = T(n - 1);
    m(1, 0) = T(n) + T(n - 1);
    m(1, 1) = T(n - 1) + T(n - 2);
    m(1, 2) = T(n - 2) + T(n - 3);
    m(2, 0) = T(n);
    m(2, 1) = T(n - 1);
    m(2, 2) = T(n - 2);
    return m;
}

Integer trace_pow(Index n) {
    if (n < 0) throw std::domain_error("trace_pow: n must be non-negative");
    return mat_pow(n).trace();
}

MinorSumReport minor_sum_of(const Matrix3& m) {
    MinorSumReport r{m.principal_minor(0, 1), m.principal_minor(0, 2), m.principal_minor(1, 2), {}};
    r.total = r.minor_12 + r.minor_13 + r.minor_23;
    return r;
}

MinorSumReport minor_sum(Index n) {
    if (n < 0) throw std::domain_error("minor_sum: n must be non-negative");
    return minor_sum_of(mat_pow(n));
}

}  // namespace tribokit
