#include "beit/linalg.hpp"

#include <algorithm>
#include <set>

namespace beit {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : entries) total += r.size();
  return total;
}

void SparseMatrix::finalize(const PrimeField& field) {
  for (auto& row : entries) {
    std::sort(row.begin(), row.end());
    std::vector<std::pair<std::uint32_t, Coeff>> merged;
    for (auto [c, v] : row) {
      v %= field.characteristic();
      if (!merged.empty() && merged.back().first == c) {
        merged.back().second = field.add(merged.back().second, v);
      } else {
        merged.emplace_back(c, v);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    row = std::move(merged);
  }
}

std::vector<DenseRow> SparseMatrix::to_dense() const {
  std::vector<DenseRow> out(rows, DenseRow(cols, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (auto [c, v] : entries[r]) out[r][c] = v;
  }
  return out;
}

std::size_t dense_rank(std::vector<DenseRow> rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  const std::uint64_t p = field.characteristic();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    DenseRow& prow = rows[rank];
    const Coeff inv = field.inv(prow[col]);
    for (std::size_t j = col; j < width; ++j) prow[j] = field.mul(prow[j], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Coeff f = rows[r][col];
      if (f == 0) continue;
      DenseRow& row = rows[r];
      const std::uint64_t neg = p - f;
      for (std::size_t j = col; j < width; ++j) {
        if (prow[j]) row[j] = static_cast<Coeff>((row[j] + neg * prow[j]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t markowitz_rank(const SparseMatrix& m, const PrimeField& field) {
  using Row = std::vector<std::pair<std::uint32_t, Coeff>>;
  std::vector<Row> rows = m.entries;
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  std::vector<std::size_t> col_count(m.cols, 0);
  std::set<std::pair<std::size_t, std::uint32_t>> queue;  // (nnz, row)
  for (std::uint32_t r = 0; r < rows.size(); ++r) {
    for (auto [c, v] : rows[r]) {
      col_rows[c].push_back(r);
      ++col_count[c];
    }
    if (!rows[r].empty()) queue.emplace(rows[r].size(), r);
  }

  auto lookup = [](const Row& row, std::uint32_t c) -> const Coeff* {
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, Coeff{0}));
    return (it != row.end() && it->first == c) ? &it->second : nullptr;
  };

  constexpr int kCandidateRows = 4;
  std::size_t rank = 0;
  Row scratch;
  while (!queue.empty()) {
    // Cheapest (r-1)(c-1) among the few sparsest rows.
    std::uint32_t prow = 0, pcol = 0;
    std::size_t best = ~std::size_t{0};
    int seen = 0;
    for (auto it = queue.begin(); it != queue.end() && seen < kCandidateRows; ++it, ++seen) {
      const std::size_t r_cost = it->first - 1;
      for (auto [c, v] : rows[it->second]) {
        std::size_t cost = r_cost * (col_count[c] - 1);
        if (cost < best) {
          best = cost;
          prow = it->second;
          pcol = c;
        }
      }
      if (best == 0) break;
    }

    queue.erase({rows[prow].size(), prow});
    for (auto [c, v] : rows[prow]) --col_count[c];
    ++rank;
    const Row& pivot = rows[prow];
    const Coeff inv = field.inv(*lookup(pivot, pcol));

    std::vector<std::uint32_t> targets;
    targets.swap(col_rows[pcol]);
    for (std::uint32_t r : targets) {
      if (r == prow) continue;
      const Coeff* a = lookup(rows[r], pcol);
      if (!a) continue;
      const Coeff f = field.mul(*a, inv);
      Row& row = rows[r];
      queue.erase({row.size(), r});
      for (auto [c, v] : row) --col_count[c];

      scratch.clear();
      auto i = row.begin();
      auto j = pivot.begin();
      while (i != row.end() || j != pivot.end()) {
        if (j == pivot.end() || (i != row.end() && i->first < j->first)) {
          scratch.push_back(*i++);
        } else if (i == row.end() || j->first < i->first) {
          scratch.emplace_back(j->first, field.neg(field.mul(f, j->second)));
          col_rows[j->first].push_back(r);
          ++j;
        } else {
          Coeff v = field.sub(i->second, field.mul(f, j->second));
          if (v) scratch.emplace_back(i->first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
      for (auto [c, v] : row) ++col_count[c];
      if (!row.empty()) queue.emplace(row.size(), r);
    }
    rows[prow].clear();
  }
  return rank;
}

std::size_t matrix_rank(const SparseMatrix& m, const PrimeField& field, RankMethod method) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (method == RankMethod::Auto) {
    const double cells = static_cast<double>(m.rows) * static_cast<double>(m.cols);
    const double density = static_cast<double>(m.nonzeros()) / cells;
    method = (std::max(m.rows, m.cols) <= 64 || (density > 0.2 && std::max(m.rows, m.cols) <= 4000))
                 ? RankMethod::Dense
                 : RankMethod::Markowitz;
  }
  if (method == RankMethod::Dense) {
    // Eliminate along the shorter dimension.
    auto dense = m.to_dense();
    if (m.rows > m.cols) {
      std::vector<DenseRow> t(m.cols, DenseRow(m.rows, 0));
      for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t[c][r] = dense[r][c];
      dense.swap(t);
    }
    return dense_rank(std::move(dense), field);
  }
  return markowitz_rank(m, field);
}

DenseRow EchelonBasis::reduce(DenseRow v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Coeff f = v[pivots_[k]];
    if (f == 0) continue;
    const DenseRow& row = rows_[k];
    for (std::size_t j = 0; j < width_; ++j) {
      if (row[j]) v[j] = field_.sub(v[j], field_.mul(f, row[j]));
    }
  }
  return v;
}

bool EchelonBasis::insert(const DenseRow& v) {
  DenseRow r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](Coeff c) { return c != 0; });
  if (it == r.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - r.begin());
  const Coeff inv = field_.inv(*it);
  for (Coeff& c : r) c = field_.mul(c, inv);
  for (DenseRow& row : rows_) {
    const Coeff f = row[pivot];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) {
      if (r[j]) row[j] = field_.sub(row[j], field_.mul(f, r[j]));
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool EchelonBasis::contains(const DenseRow& v) const {
  DenseRow r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

std::vector<DenseRow> left_kernel(const std::vector<DenseRow>& images, std::size_t width,
                                  const PrimeField& field) {
  const std::size_t n = images.size();
  std::vector<DenseRow> pivot_rows;  // image part followed by combination part
  std::vector<std::size_t> pivots;
  std::vector<DenseRow> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    DenseRow v(width + n, 0);
    std::copy(images[i].begin(), images[i].end(), v.begin());
    v[width + i] = 1;
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      const Coeff f = v[pivots[k]];
      if (f == 0) continue;
      const DenseRow& row = pivot_rows[k];
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (row[j]) v[j] = field.sub(v[j], field.mul(f, row[j]));
      }
    }
    auto it = std::find_if(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(width),
                           [](Coeff c) { return c != 0; });
    if (it == v.begin() + static_cast<std::ptrdiff_t>(width)) {
      kernel.emplace_back(v.begin() + static_cast<std::ptrdiff_t>(width), v.end());
      continue;
    }
    const Coeff inv = field.inv(*it);
    for (Coeff& c : v) c = field.mul(c, inv);
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    pivot_rows.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace beit
