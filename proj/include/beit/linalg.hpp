#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "beit/field.hpp"

namespace beit {

using DenseRow = std::vector<Coeff>;

/// Row-major sparse matrix; each row holds (column, nonzero value) sorted by
/// column.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Coeff>>> entries;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}

  std::size_t nonzeros() const;
  /// Accumulates v into (r, c); coalesces duplicates on finalize().
  void push(std::size_t r, std::size_t c, Coeff v) {
    entries[r].emplace_back(static_cast<std::uint32_t>(c), v);
  }
  void finalize(const PrimeField& field);
  std::vector<DenseRow> to_dense() const;
};

enum class RankMethod { Auto, Dense, Markowitz };

std::size_t dense_rank(std::vector<DenseRow> rows, const PrimeField& field);

/// Sparse elimination choosing pivots by minimal Markowitz cost
/// (r-1)(c-1) among the sparsest rows.
std::size_t markowitz_rank(const SparseMatrix& m, const PrimeField& field);

/// Auto picks dense elimination for small or dense matrices.
std::size_t matrix_rank(const SparseMatrix& m, const PrimeField& field,
                        RankMethod method = RankMethod::Auto);

/// Incrementally maintained reduced row echelon basis of a subspace of K^w.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t width, const PrimeField& field) : width_(width), field_(field) {}

  /// Adds v if it is independent of the current rows; returns whether it was.
  bool insert(const DenseRow& v);
  bool contains(const DenseRow& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<DenseRow>& rows() const { return rows_; }

 private:
  DenseRow reduce(DenseRow v) const;

  std::size_t width_;
  PrimeField field_;
  std::vector<DenseRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {c : sum_i c_i * images[i] = 0}, each vector of length
/// images.size().
std::vector<DenseRow> left_kernel(const std::vector<DenseRow>& images, std::size_t width,
                                  const PrimeField& field);

}  // namespace beit
