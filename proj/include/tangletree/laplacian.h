// Copyright 2026 The tangletree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer Laplacian (unreduced Goeritz) matrices and their minors.

#ifndef TANGLETREE_LAPLACIAN_H_
#define TANGLETREE_LAPLACIAN_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tangletree/bigint.h"
#include "tangletree/graph.h"

namespace tangletree {

// Dense row-major matrix of arbitrary-precision integers. Row and column
// labels are optional; when present there is one per row / column.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<VertexId>& row_labels() const { return row_labels_; }
  const std::vector<VertexId>& col_labels() const { return col_labels_; }
  // Throws InvalidArgument if the label counts do not match the shape.
  void SetLabels(std::vector<VertexId> rows, std::vector<VertexId> cols);

  // Compares entries only.
  bool SameEntries(const IntegerMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
  std::vector<VertexId> row_labels_;
  std::vector<VertexId> col_labels_;
};

// Laplacian of a weighted multigraph, rows and columns indexed by the vertex
// labels in ascending order. Diagonal (i,i) is the weight sum of the non-loop
// edges at i; off-diagonal (i,j) is minus the weight sum of the edges joining
// i and j. Symmetric, with zero row sums.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const WeightedMultigraph& g);

  const IntegerMatrix& matrix() const { return matrix_; }
  const std::vector<VertexId>& labels() const { return matrix_.row_labels(); }
  std::size_t size() const { return matrix_.rows(); }

 private:
  IntegerMatrix matrix_;
};

// Exact determinant by fraction-free (Bareiss) elimination. The 0x0
// determinant is 1. Throws InvalidArgument for a non-square matrix.
BigInt Determinant(const IntegerMatrix& m);

// Determinant of the submatrix left after deleting the labelled rows and
// columns. Throws InvalidArgument on a size mismatch, an unknown label or a
// repeated label.
BigInt Minor(const IntegerMatrix& m, std::span<const VertexId> delete_rows,
             std::span<const VertexId> delete_cols);
inline BigInt Minor(const LaplacianMatrix& m,
                    std::span<const VertexId> delete_rows,
                    std::span<const VertexId> delete_cols) {
  return Minor(m.matrix(), delete_rows, delete_cols);
}

// Principal minor deleting the lowest-label vertex. Equals the tree weight.
// Throws InvalidArgument for the empty graph.
BigInt TreeWeightMtt(const WeightedMultigraph& g);

// Principal minor deleting the gamma rows and columns. Equals the forest
// weight rooted at gamma.
BigInt RootedForestWeightMtt(const WeightedMultigraph& g,
                             std::span<const VertexId> gamma);

// Header line of column labels (when labelled), then one line per row of
// space-separated decimal entries.
std::string FormatMatrix(const IntegerMatrix& m);

}  // namespace tangletree

#endif  // TANGLETREE_LAPLACIAN_H_
