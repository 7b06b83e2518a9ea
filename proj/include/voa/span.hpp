#pragma once

#include <optional>
#include <unordered_map>

#include "voa/linalg.hpp"
#include "voa/products.hpp"

namespace voa {

enum class GeneratorFamily { CircOnly, CircPlusReductions };

struct SpanConfig {
    int cutoff = 0;
    GeneratorFamily family = GeneratorFamily::CircOnly;
    // add (L(-1)+L(0))u generators; only meaningful when the carrying
    // space is V itself (O_n(V) versus the bimodule span O_n(M)).
    bool include_l_terms = false;
};

// Interning of all basis keys of degree <= cutoff into columns, ordered
// by degree descending. Row reduction then pivots on high-degree keys,
// so canonical coset representatives concentrate at low degree.
class KeyColumns {
  public:
    KeyColumns(const Space& space, int cutoff);

    const Space& space() const { return *space_; }
    int cutoff() const { return cutoff_; }
    int32_t size() const { return static_cast<int32_t>(keys_.size()); }
    const PBWKey& key(int32_t col) const { return keys_[static_cast<size_t>(col)]; }
    std::optional<int32_t> column(const PBWKey& key) const;

    linalg::SparseVec to_sparse(const GradedVector& v) const;
    GradedVector to_vector(const linalg::SparseVec& sv) const;

  private:
    const Space* space_;
    int cutoff_;
    std::vector<PBWKey> keys_;
    std::unordered_map<PBWKey, int32_t, PBWKeyHash> index_;
};

struct QuotientRow {
    int W;
    long dim_space;
    long dim_span;
    long dim_quotient;
};

struct QuotientReport {
    std::vector<QuotientRow> table;
    std::optional<long> stabilized_dim;
    int window = 3;
};

// Truncated span of the O_n(M)-style generator family over degrees <= W:
// circ(u,w,n) for basis pairs whose entire support fits under the cutoff,
// optionally enriched with reduction elements and (L(-1)+L(0))u terms.
class SpanBasis {
  public:
    SpanBasis(const Space& V, const Space& M, int n, SpanConfig cfg);

    // O_{t,s}(V) span: circle products with the (a,b)-shifted family and
    // (L(-1) + L(0) + s - t)u generators.
    SpanBasis(const Space& V, int t, int s, int cutoff);

    const KeyColumns& columns() const { return columns_; }
    const linalg::SubspaceBasis& rows() const { return rows_; }
    long rank() const { return static_cast<long>(rows_.rank()); }
    long space_dim() const;
    long quotient_dim() const { return space_dim() - rank(); }

    bool contains(const GradedVector& v) const;
    std::optional<std::vector<Rat>> certificate(const GradedVector& v) const;
    // canonical residue modulo the span (supported on non-pivot keys)
    GradedVector reduce(const GradedVector& v) const;
    // non-pivot keys, ascending degree: the coset basis at this cutoff
    std::vector<PBWKey> coset_keys() const;

    // ranks recorded while inserting generators in ascending support
    // order; rank_at(W) equals the rank of the span built at cutoff W.
    long rank_at(int W) const;

  private:
    void insert_generator(const GradedVector& g);
    void finish(std::vector<std::pair<int, GradedVector>> generators);

    KeyColumns columns_;
    linalg::SubspaceBasis rows_;
    std::vector<long> rank_by_cutoff_;  // index W in 0..cutoff
};

QuotientReport quotient_scan(const Space& V, const Space& M, int n, int W_min, int W_max,
                             SpanConfig cfg, int window = 3);

QuotientReport ats_scan(const Space& V, int t, int s, int W_min, int W_max, int window = 3);

}  // namespace voa
