#include "repring/matrix.hpp"

namespace repring {

RatSolveResult rat_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  RatSolveResult res;
  size_t m = a.size();
  size_t n = m ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    Rat inv = 1 / a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t i = row; i < m; ++i)
    if (b[i] != 0) return res;  // inconsistent
  res.consistent = true;
  res.unique = (pivot_col.size() == n);
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) res.x[pivot_col[i]] = b[i];
  return res;
}

}  // namespace repring
