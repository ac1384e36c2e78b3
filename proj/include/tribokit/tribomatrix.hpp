#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <ostream>

#include "tribokit/types.hpp"

namespace tribokit {

/// Exact 3x3 integer matrix, row-major.
class Matrix3 {
  public:
    Matrix3() = default;
    Matrix3(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix3 identity();

    Integer& operator()(std::size_t row, std::size_t col) { return m_[row * 3 + col]; }
    const Integer& operator()(std::size_t row, std::size_t col) const { return m_[row * 3 + col]; }

    Integer trace() const;
    Integer determinant() const;
    /// Determinant of the 2x2 principal minor on rows/columns {i, j} (0-based).
    Integer principal_minor(std::size_t i, std::size_t j) const;

    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
    friend bool operator==(const Matrix3& a, const Matrix3& b);
    friend std::ostream& operator<<(std::ostream& os, const Matrix3& m);

  private:
    std::array<Integer, 9> m_{};
};

/// The three order-2 principal minors of A^n and their total, which is C_n.
struct MinorSumReport {
    Integer minor_12;  // rows/cols {1,2}
    Integer minor_13;  // rows/cols {1,3}
    Integer minor_23;  // rows/cols {2,3}
    Integer total;
};

/// A = [[1,1,0],[1,0,1],[1,0,0]]; its characteristic polynomial is x^3 - x^2 - x - 1.
Matrix3 tribomatrix();

Matrix3 mat_mul(const Matrix3& a, const Matrix3& b);

/// A^n by square-and-multiply. Throws std::domain_error for n < 0.
Matrix3 mat_pow(Index n);

/// A^n by n - 1 successive multiplications; the benchmark baseline.
Matrix3 mat_pow_naive(Index n);

/// A^n assembled from Tribonacci numbers:
///   [ T_{n+1}          T_n                T_{n-1}         ]
///   [ T_n + T_{n-1}    T_{n-1} + T_{n-2}  T_{n-2} + T_{n-3} ]
///   [ T_n              T_{n-1}            T_{n-2}         ]
Matrix3 entries_from_tribonacci(Index n);

/// tr(A^n) = S_n.
Integer trace_pow(Index n);

MinorSumReport minor_sum(Index n);
MinorSumReport minor_sum_of(const Matrix3& m);

}  // namespace tribokit
