#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "voa/rat.hpp"

namespace voa::linalg {

// Sparse row vector: (column, coefficient) pairs sorted by column, no
// stored zeros. Column indices are opaque to this layer; the caller owns
// the interning of domain keys into columns.
class SparseVec {
  public:
    SparseVec() = default;

    // entries need not be sorted; zeros are dropped, duplicates summed.
    explicit SparseVec(std::vector<std::pair<int32_t, Rat>> entries);

    bool empty() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    int32_t leading_col() const { return entries_.front().first; }
    const Rat& leading_coeff() const { return entries_.front().second; }
    const std::vector<std::pair<int32_t, Rat>>& entries() const { return entries_; }

    const Rat* coeff(int32_t col) const;

    void scale(const Rat& c);
    // *this += c * other
    void axpy(const Rat& c, const SparseVec& other);

    bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }

  private:
    std::vector<std::pair<int32_t, Rat>> entries_;
};

// Row-reduced spanning set (fully reduced form): each row's leading entry
// is 1 at its pivot column, pivots strictly increasing, and pivot columns
// are zero in every other row.
class SubspaceBasis {
  public:
    size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int32_t>& pivots() const { return pivots_; }
    bool is_pivot(int32_t col) const;

    // Adds v to the span; returns true iff the rank grew.
    bool insert_and_reduce(SparseVec v);

    // Canonical representative of v modulo the span (v minus its
    // projection onto the stored rows).
    SparseVec reduce(SparseVec v) const;

    // Coefficients expressing v in the stored rows, if v lies in the
    // span. A returned certificate reproduces v exactly when expanded.
    std::optional<std::vector<Rat>> membership_certificate(const SparseVec& v) const;

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  private:
    std::vector<SparseVec> rows_;
    std::vector<int32_t> pivots_;
};

// Basis of the solution space of the homogeneous system rows * x = 0 with
// unknowns x_0..x_{num_unknowns-1}.
SubspaceBasis nullspace(const std::vector<SparseVec>& rows, int32_t num_unknowns);

}  // namespace voa::linalg
