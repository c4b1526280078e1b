#include "simplext/linalg.hpp"

namespace simplext {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

int affine_rank(const RatMat& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  RatMat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return static_cast<int>(rank(std::move(diffs)));
}

std::optional<RatVec> solve_unique(RatMat m, RatVec rhs) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  const auto pivots = rref(m);
  // consistency: no pivot in the augmented column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  RatVec x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][cols];
  return x;
}

RatMat nullspace(RatMat m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace simplext
