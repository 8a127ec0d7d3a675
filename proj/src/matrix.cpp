#include "gk1/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gk1 {

ExactMatrix::ExactMatrix(int rows, int cols, const Cyclo& fill)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw MatrixError("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n, const CtxPtr& ctx) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ctx ? Cyclo(ctx, Rational(1)) : Cyclo(1L);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Cyclo>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw MatrixError("ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw MatrixError("dimension mismatch in product");
  ExactMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyclo& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

std::string ExactMatrix::to_csv() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ",";
      os << '"' << at(i, j).to_string() << '"';
    }
    os << "\n";
  }
  return os.str();
}

Cyclo det(const ExactMatrix& input) {
  if (input.rows() != input.cols()) throw MatrixError("determinant of a non-square matrix");
  int n = input.rows();
  if (n == 0) return Cyclo(1L);
  ExactMatrix m = input;
  Cyclo sign(1L), prev(1L);
  // Bareiss: after step k every entry below is divisible by the old pivot.
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!m.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Cyclo(0L);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    const Cyclo pk = m.at(k, k);
    Cyclo inv_prev = prev.inverse();
    for (int i = k + 1; i < n; ++i) {
      const Cyclo mik = m.at(i, k);
      for (int j = k + 1; j < n; ++j) {
        Cyclo v = pk * m.at(i, j);
        if (!mik.is_zero()) v -= mik * m.at(k, j);
        m.at(i, j) = v * inv_prev;
      }
      m.at(i, k) = Cyclo(0L);
    }
    prev = pk;
  }
  return sign * m.at(n - 1, n - 1);
}

int rank(const ExactMatrix& input) {
  ExactMatrix m = input;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
    Cyclo inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      Cyclo f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int ip = 0; ip < a.cols(); ++ip) {
      if (a.at(i, ip).is_zero()) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int jp = 0; jp < b.cols(); ++jp)
          k.at(i * b.rows() + j, ip * b.cols() + jp) = a.at(i, ip) * b.at(j, jp);
    }
  return k;
}

ExactMatrix build_shifted_matrix(int r, const Cyclo& base, const Rational& a, long shift_num,
                                 long shift_den) {
  if (base.is_zero()) throw MatrixError("shifted matrix needs a nonzero base");
  if (r < 1 || shift_den < 1) throw MatrixError("shifted matrix needs r >= 1 and shift_den >= 1");
  ExactMatrix m(2 * r, 2 * r);
  for (int e = 0; e < 2; ++e)
    for (int s = 0; s < r; ++s)
      for (int ep = 0; ep < 2; ++ep)
        for (int sp = 0; sp < r; ++sp) {
          long expo = shift_num + shift_den * (2L * sp + ep);
          if (e) expo = -expo;
          Rational t = a + 2 * sp + ep;
          Rational p = 1;  // 0^0 = 1
          for (int k = 0; k < s; ++k) p *= t;
          m.at(e * r + s, ep * r + sp) = pow_int(base, expo) * Cyclo(p);
        }
  return m;
}

ExactMatrix assemble_block_matrix(const ExactMatrix& a, const std::vector<ExactMatrix>& b_list) {
  int n1 = a.rows();
  if (a.cols() != n1) throw MatrixError("A must be square");
  if (static_cast<int>(b_list.size()) != n1) throw MatrixError("need one block per index of A");
  int n2 = b_list.empty() ? 0 : b_list[0].rows();
  for (const auto& b : b_list)
    if (b.rows() != n2 || b.cols() != n2) throw MatrixError("blocks must share a square size");
  ExactMatrix c(n1 * n2, n1 * n2);
  for (int i = 0; i < n1; ++i)
    for (int ip = 0; ip < n1; ++ip) {
      if (a.at(i, ip).is_zero()) continue;
      for (int j = 0; j < n2; ++j)
        for (int jp = 0; jp < n2; ++jp)
          c.at(i * n2 + j, ip * n2 + jp) = a.at(i, ip) * b_list[ip].at(j, jp);
    }
  return c;
}

BlockCriterionResult verify_block_criterion(const ExactMatrix& a,
                                            const std::vector<ExactMatrix>& b_list) {
  ExactMatrix c = assemble_block_matrix(a, b_list);
  if (det(a).is_zero()) throw MatrixError("A is singular");
  BlockCriterionResult res;
  res.invertible = !det(c).is_zero();
  res.all_blocks_invertible = true;
  for (const auto& b : b_list)
    if (det(b).is_zero()) res.all_blocks_invertible = false;
  res.consistent = res.invertible == res.all_blocks_invertible;
  return res;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Parity of the permutation taking 0..n-1 to order.
int parity(const std::vector<int>& order) {
  std::vector<bool> seen(order.size(), false);
  int p = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = order[j]) {
      seen[j] = true;
      ++len;
    }
    p ^= static_cast<int>((len + 1) % 2);
  }
  return p;
}

}  // namespace

RankDet rank_and_det(const ExactMatrix& m) {
  const int R = m.rows(), C = m.cols();
  // Union-find over rows 0..R-1 and columns R..R+C-1.
  std::vector<int> parent(R + C);
  std::iota(parent.begin(), parent.end(), 0);
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c)
      if (!m.at(r, c).is_zero()) parent[find_root(parent, r)] = find_root(parent, R + c);

  std::vector<int> root_ids;
  std::vector<std::vector<int>> comp_rows, comp_cols;
  auto comp_of = [&](int x) {
    int root = find_root(parent, x);
    auto it = std::find(root_ids.begin(), root_ids.end(), root);
    if (it != root_ids.end()) return static_cast<int>(it - root_ids.begin());
    root_ids.push_back(root);
    comp_rows.emplace_back();
    comp_cols.emplace_back();
    return static_cast<int>(root_ids.size()) - 1;
  };
  for (int r = 0; r < R; ++r) comp_rows[comp_of(r)].push_back(r);
  for (int c = 0; c < C; ++c) comp_cols[comp_of(R + c)].push_back(c);

  RankDet out;
  out.components = static_cast<int>(root_ids.size());
  Cyclo prod(1L);
  bool square_blocks = true;
  std::vector<int> row_order, col_order;
  for (size_t k = 0; k < root_ids.size(); ++k) {
    const auto& rs = comp_rows[k];
    const auto& cs = comp_cols[k];
    row_order.insert(row_order.end(), rs.begin(), rs.end());
    col_order.insert(col_order.end(), cs.begin(), cs.end());
    if (rs.empty() || cs.empty()) {
      square_blocks = false;
      continue;
    }
    ExactMatrix b(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) b.at(static_cast<int>(i), static_cast<int>(j)) = m.at(rs[i], cs[j]);
    if (rs.size() == cs.size()) {
      Cyclo d = det(b);
      out.rank += d.is_zero() ? rank(b) : static_cast<int>(rs.size());
      prod *= d;
    } else {
      square_blocks = false;
      out.rank += rank(b);
    }
  }
  if (R == C) {
    if (!square_blocks || prod.is_zero()) {
      out.det = Cyclo(0L);
    } else {
      out.det = (parity(row_order) ^ parity(col_order)) ? -prod : prod;
    }
  }
  return out;
}

}  // namespace gk1
