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

#include "tangletree/laplacian.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "tangletree/error.h"

namespace tangletree {

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (long long value : row) entries_.emplace_back(value);
  }
}

void IntegerMatrix::SetLabels(std::vector<VertexId> rows,
                              std::vector<VertexId> cols) {
  if (rows.size() != rows_ || cols.size() != cols_) {
    throw InvalidArgument("label count does not match matrix shape");
  }
  row_labels_ = std::move(rows);
  col_labels_ = std::move(cols);
}

LaplacianMatrix::LaplacianMatrix(const WeightedMultigraph& g)
    : matrix_(g.num_vertices(), g.num_vertices()) {
  for (const WeightedEdge& e : g.edges()) {
    if (e.is_loop()) continue;
    const std::size_t i = g.IndexOf(e.u);
    const std::size_t j = g.IndexOf(e.v);
    matrix_(i, i) += e.weight;
    matrix_(j, j) += e.weight;
    matrix_(i, j) -= e.weight;
    matrix_(j, i) -= e.weight;
  }
  matrix_.SetLabels(g.vertices(), g.vertices());
}

BigInt Determinant(const IntegerMatrix& m) {
  if (!m.is_square()) {
    throw InvalidArgument("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
  }

  // Bareiss: after step k every entry of the trailing block is a (k+1)x(k+1)
  // minor of the input, so the division by the previous pivot is exact.
  bool negate = false;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous_pivot;
      }
    }
    previous_pivot = a[k][k];
  }
  BigInt det = a[n - 1][n - 1];
  return negate ? BigInt(-det) : det;
}

namespace {

std::vector<std::size_t> KeptIndices(const std::vector<VertexId>& labels,
                                     std::span<const VertexId> deleted) {
  std::set<VertexId> drop;
  for (VertexId v : deleted) {
    if (std::find(labels.begin(), labels.end(), v) == labels.end()) {
      throw InvalidArgument("unknown label " + ToString(v));
    }
    if (!drop.insert(v).second) {
      throw InvalidArgument("label " + ToString(v) + " deleted twice");
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!drop.contains(labels[i])) kept.push_back(i);
  }
  return kept;
}

}  // namespace

BigInt Minor(const IntegerMatrix& full, std::span<const VertexId> delete_rows,
             std::span<const VertexId> delete_cols) {
  if (delete_rows.size() != delete_cols.size()) {
    throw InvalidArgument("minor needs as many deleted rows as columns");
  }
  if (full.row_labels().size() != full.rows() ||
      full.col_labels().size() != full.cols()) {
    throw InvalidArgument("minor by label needs a labelled matrix");
  }
  const auto rows = KeptIndices(full.row_labels(), delete_rows);
  const auto cols = KeptIndices(full.col_labels(), delete_cols);
  IntegerMatrix sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      sub(r, c) = full(rows[r], cols[c]);
    }
  }
  return Determinant(sub);
}

BigInt TreeWeightMtt(const WeightedMultigraph& g) {
  if (g.empty()) throw InvalidArgument("tree weight of the empty graph");
  const VertexId lowest = g.vertices().front();
  return Minor(LaplacianMatrix(g), std::span(&lowest, 1),
               std::span(&lowest, 1));
}

BigInt RootedForestWeightMtt(const WeightedMultigraph& g,
                             std::span<const VertexId> gamma) {
  if (gamma.empty()) throw InvalidArgument("root set must be nonempty");
  return Minor(LaplacianMatrix(g), gamma, gamma);
}

std::string FormatMatrix(const IntegerMatrix& m) {
  std::ostringstream out;
  if (!m.col_labels().empty()) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << Label(m.col_labels()[c]);
    }
    out << '\n';
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out << (c ? " " : "") << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tangletree
