#pragma once

#include <string>
#include <vector>

#include "gk1/cyclo.hpp"

namespace gk1 {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, const Cyclo& fill = Cyclo());

  static ExactMatrix identity(int n, const CtxPtr& ctx = nullptr);
  static ExactMatrix from_rows(const std::vector<std::vector<Cyclo>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclo& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Cyclo& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;

  // One line per row, cells are canonical scalar strings.
  std::string to_csv() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cyclo> data_;
};

class MatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fraction-free elimination; exact over the cyclotomic field.
Cyclo det(const ExactMatrix& m);
int rank(const ExactMatrix& m);
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

// Rank, and the determinant when square, computed block by block along the
// connected components of the nonzero pattern. Exact for any matrix; fast
// when the matrix is a permuted block-diagonal one.
struct RankDet {
  int rank = 0;
  Cyclo det;
  int components = 0;
};
RankDet rank_and_det(const ExactMatrix& m);

// 2r x 2r matrix with rows (e,s), columns (e',s') in lex order and entries
// base^((-1)^e (shift_num + shift_den (2s'+e'))) * (a + 2s' + e')^s.
ExactMatrix build_shifted_matrix(int r, const Cyclo& base, const Rational& a, long shift_num,
                                 long shift_den);

// C = (a_{ii'} b_{i',jj'}) over (i,j),(i',j') in lex order.
ExactMatrix assemble_block_matrix(const ExactMatrix& a, const std::vector<ExactMatrix>& b_list);

struct BlockCriterionResult {
  bool invertible = false;       // det(C) != 0
  bool all_blocks_invertible = false;
  bool consistent = false;       // the two agree
};

// Checks invertibility of the assembled matrix against the per-block claim.
// Throws MatrixError on a dimension mismatch or singular A.
BlockCriterionResult verify_block_criterion(const ExactMatrix& a,
                                            const std::vector<ExactMatrix>& b_list);

}  // namespace gk1
