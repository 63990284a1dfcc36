#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cwdc/bits.hpp"

namespace cwdc::gf {

// GF(2^8) under x^8 + x^4 + x^3 + x + 1 (0x11B), generator 0x03.
inline constexpr std::uint16_t kReductionPoly = 0x11B;
inline constexpr const char* kFieldId = "GF(256)/0x11B";

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
std::uint8_t mul(std::uint8_t a, std::uint8_t b);
std::uint8_t inv(std::uint8_t a);  // throws DivideByZero on 0
std::uint8_t div(std::uint8_t a, std::uint8_t b);

struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> cells;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), cells(std::size_t(r) * std::size_t(c)) {}

  std::uint8_t& at(int r, int c) { return cells[std::size_t(r) * std::size_t(cols) + std::size_t(c)]; }
  std::uint8_t at(int r, int c) const { return cells[std::size_t(r) * std::size_t(cols) + std::size_t(c)]; }

  Matrix without_column(int c) const;
};

bool invertible(const Matrix& square);

// Every square submatrix obtained by deleting one column is invertible;
// this is exactly what a decoder that cancels one unknown column needs.
bool all_column_drops_invertible(const Matrix& m);  // requires cols == rows + 1

// Deterministic MDS-style generator matrix: Cauchy on points x_i = i,
// y_j = rows + j while rows + cols <= 256, else the systematic form
// [I | Cauchy] (still invertible on every column-drop). Throws
// SizeExceedsField when cols > 255.
Matrix mds_matrix(int rows, int cols);

struct RandomMatrixResult {
  Matrix matrix;
  int retries = 0;  // resamples after the first attempt
};

// Samples uniform matrices until all_column_drops_invertible holds,
// at most `retry_limit` resamples; throws RetryLimitExceeded after that.
RandomMatrixResult random_matrix_with_retry(int rows, int cols, std::mt19937_64& rng,
                                            int retry_limit);

// Solves A * x = b for payload vectors over the byte field; all b[i] share
// one byte length and each solution has that same length. Throws
// SingularMatrix when A has no unique solution.
std::vector<std::vector<std::uint8_t>> solve(const Matrix& a,
                                             std::vector<std::vector<std::uint8_t>> b);

// acc ^= coeff * src over bytes; acc must be at least as long as src.
void mul_acc(std::vector<std::uint8_t>& acc, std::uint8_t coeff,
             const std::uint8_t* src, std::size_t len);

}  // namespace cwdc::gf
