#include "cwdc/gf256.hpp"

#include "cwdc/errors.hpp"
#include "cwdc/hash.hpp"

namespace cwdc::gf {

namespace {

struct Tables {
  std::uint8_t exp[512];
  std::uint8_t log[256];

  Tables() {
    unsigned x = 1;
    for (int i = 0; i < 255; ++i) {
      exp[i] = std::uint8_t(x);
      log[x] = std::uint8_t(i);
      // multiply by the generator 0x03: x*3 = x*2 + x
      unsigned x2 = x << 1;
      if (x2 & 0x100) x2 ^= kReductionPoly;
      x = x2 ^ x;
    }
    for (int i = 255; i < 512; ++i) exp[i] = exp[i - 255];
    log[0] = 0;
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
  if (a == 0 || b == 0) return 0;
  const Tables& t = tables();
  return t.exp[int(t.log[a]) + int(t.log[b])];
}

std::uint8_t inv(std::uint8_t a) {
  if (a == 0) throw SimError(ErrorCode::DivideByZero, "inverse of 0 in GF(256)");
  const Tables& t = tables();
  return t.exp[255 - int(t.log[a])];
}

std::uint8_t div(std::uint8_t a, std::uint8_t b) { return mul(a, inv(b)); }

Matrix Matrix::without_column(int c) const {
  Matrix out(rows, cols - 1);
  for (int r = 0; r < rows; ++r)
    for (int j = 0, o = 0; j < cols; ++j)
      if (j != c) out.at(r, o++) = at(r, j);
  return out;
}

bool invertible(const Matrix& square) {
  if (square.rows != square.cols) return false;
  Matrix m = square;
  int n = m.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
    std::uint8_t pinv = inv(m.at(col, col));
    for (int r = col + 1; r < n; ++r) {
      std::uint8_t f = mul(m.at(r, col), pinv);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) m.at(r, j) ^= mul(f, m.at(col, j));
    }
  }
  return true;
}

bool all_column_drops_invertible(const Matrix& m) {
  if (m.cols != m.rows + 1)
    throw SimError(ErrorCode::BadInput, "checker expects cols == rows + 1");
  for (int c = 0; c < m.cols; ++c)
    if (!invertible(m.without_column(c))) return false;
  return true;
}

Matrix mds_matrix(int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw SimError(ErrorCode::ZeroSize, "matrix dimensions");
  if (cols > 255) throw SimError(ErrorCode::SizeExceedsField, "mds matrix wider than 255");
  Matrix m(rows, cols);
  if (rows + cols <= 256) {
    // Cauchy: 1/(x_i ^ y_j), x_i = i, y_j = rows + j; all points distinct,
    // so every square submatrix is Cauchy again and invertible.
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c)
        m.at(r, c) = inv(std::uint8_t(r) ^ std::uint8_t(rows + c));
    return m;
  }
  if (cols <= rows)
    throw SimError(ErrorCode::SizeExceedsField, "no room for distinct Cauchy points");
  // Systematic fallback [I | Cauchy(rows, cols - rows)]: any column-drop
  // leaves either the identity block intact or an invertible bordered
  // Cauchy system, so the decoder property still holds.
  for (int r = 0; r < rows; ++r) m.at(r, r) = 1;
  int extra = cols - rows;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < extra; ++c)
      m.at(r, rows + c) = inv(std::uint8_t(r) ^ std::uint8_t(rows + c));
  return m;
}

RandomMatrixResult random_matrix_with_retry(int rows, int cols, std::mt19937_64& rng,
                                            int retry_limit) {
  RandomMatrixResult out;
  for (int attempt = 0; attempt <= retry_limit; ++attempt) {
    Matrix m(rows, cols);
    for (auto& cell : m.cells) cell = std::uint8_t(uniform_below(rng, 256));
    if (all_column_drops_invertible(m)) {
      out.matrix = std::move(m);
      out.retries = attempt;
      return out;
    }
  }
  throw SimError(ErrorCode::RetryLimitExceeded,
                 "no decodable random matrix after " + std::to_string(retry_limit) + " retries");
}

std::vector<std::vector<std::uint8_t>> solve(const Matrix& a,
                                             std::vector<std::vector<std::uint8_t>> b) {
  if (a.rows != a.cols) throw SimError(ErrorCode::SingularMatrix, "system is not square");
  int n = a.rows;
  if (int(b.size()) != n) throw SimError(ErrorCode::InconsistentLengths, "rhs count mismatch");
  std::size_t len = b.empty() ? 0 : b[0].size();
  for (const auto& v : b)
    if (v.size() != len) throw SimError(ErrorCode::InconsistentLengths, "rhs length mismatch");

  Matrix m = a;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SimError(ErrorCode::SingularMatrix, "zero pivot column");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      std::swap(b[std::size_t(pivot)], b[std::size_t(col)]);
    }
    std::uint8_t pinv = inv(m.at(col, col));
    for (int j = 0; j < n; ++j) m.at(col, j) = mul(m.at(col, j), pinv);
    for (std::size_t i = 0; i < len; ++i) b[std::size_t(col)][i] = mul(b[std::size_t(col)][i], pinv);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      std::uint8_t f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) m.at(r, j) ^= mul(f, m.at(col, j));
      mul_acc(b[std::size_t(r)], f, b[std::size_t(col)].data(), len);
    }
  }
  return b;
}

void mul_acc(std::vector<std::uint8_t>& acc, std::uint8_t coeff,
             const std::uint8_t* src, std::size_t len) {
  if (acc.size() < len)
    throw SimError(ErrorCode::InconsistentLengths, "accumulator shorter than source");
  if (coeff == 0) return;
  if (coeff == 1) {
    for (std::size_t i = 0; i < len; ++i) acc[i] ^= src[i];
    return;
  }
  const Tables& t = tables();
  int lc = t.log[coeff];
  for (std::size_t i = 0; i < len; ++i) {
    std::uint8_t s = src[i];
    if (s) acc[i] ^= t.exp[lc + int(t.log[s])];
  }
}

}  // namespace cwdc::gf
