#include "voa/span.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace voa {

KeyColumns::KeyColumns(const Space& space, int cutoff)
    : space_(&space), cutoff_(cutoff) {
    for (int d = cutoff; d >= 0; --d)
        for (const auto& k : space.basis(d)) {
            index_.emplace(k, static_cast<int32_t>(keys_.size()));
            keys_.push_back(k);
        }
}

std::optional<int32_t> KeyColumns::column(const PBWKey& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

linalg::SparseVec KeyColumns::to_sparse(const GradedVector& v) const {
    std::vector<std::pair<int32_t, Rat>> entries;
    entries.reserve(v.term_count());
    for (const auto& [key, c] : v.terms()) {
        auto col = column(key);
        if (!col)
            throw std::out_of_range("key of degree " + std::to_string(key.degree()) +
                                    " outside column cutoff " + std::to_string(cutoff_));
        entries.emplace_back(*col, c);
    }
    return linalg::SparseVec(std::move(entries));
}

GradedVector KeyColumns::to_vector(const linalg::SparseVec& sv) const {
    GradedVector v(space_);
    for (const auto& [col, c] : sv.entries()) v.add(key(col), c);
    return v;
}

SpanBasis::SpanBasis(const Space& V, const Space& M, int n, SpanConfig cfg)
    : columns_(M, cfg.cutoff) {
    const int W = cfg.cutoff;
    std::vector<std::pair<int, GradedVector>> gens;

    for (int du = 0; du <= W; ++du) {
        for (const auto& ukey : V.basis(du)) {
            GradedVector u = GradedVector::single(V, ukey);
            for (int dw = 0; du + dw + 2 * n + 1 <= W; ++dw) {
                for (const auto& wkey : M.basis(dw)) {
                    GradedVector w = GradedVector::single(M, wkey);
                    gens.emplace_back(0, circ(u, w, n));
                    if (cfg.family == GeneratorFamily::CircPlusReductions) {
                        int slack = W - (du + dw + 2 * n + 1);
                        for (int b = 1; b <= slack; ++b)
                            for (int a = 0; a <= b; ++a)
                                gens.emplace_back(0, reduction_element(u, w, n, a, b));
                    }
                }
            }
        }
    }
    if (cfg.include_l_terms) {
        for (int du = 0; du + 1 <= W; ++du)
            for (const auto& ukey : V.basis(du))
                gens.emplace_back(0, l_shift_generator(GradedVector::single(V, ukey)));
    }
    finish(std::move(gens));
}

SpanBasis::SpanBasis(const Space& V, int t, int s, int cutoff) : columns_(V, cutoff) {
    const int W = cutoff;
    std::vector<std::pair<int, GradedVector>> gens;
    for (int du = 0; du <= W; ++du) {
        for (const auto& ukey : V.basis(du)) {
            GradedVector u = GradedVector::single(V, ukey);
            for (int dv = 0; du + dv + t + s + 1 <= W; ++dv) {
                for (const auto& vkey : V.basis(dv)) {
                    GradedVector v = GradedVector::single(V, vkey);
                    int slack = W - (du + dv + t + s + 1);
                    for (int b = 0; b <= slack; ++b)
                        for (int a = 0; a <= b; ++a)
                            gens.emplace_back(0, ats_element(u, v, t, s, a, b));
                }
            }
        }
    }
    for (int du = 0; du + 1 <= W; ++du)
        for (const auto& ukey : V.basis(du))
            gens.emplace_back(
                0, l_shift_generator(GradedVector::single(V, ukey), Rat(s - t)));
    finish(std::move(gens));
}

void SpanBasis::finish(std::vector<std::pair<int, GradedVector>> generators) {
    for (auto& [deg, g] : generators) deg = g.zero() ? 0 : g.max_degree();
    std::stable_sort(generators.begin(), generators.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    rank_by_cutoff_.assign(static_cast<size_t>(columns_.cutoff()) + 1, 0);
    size_t i = 0;
    for (int W = 0; W <= columns_.cutoff(); ++W) {
        for (; i < generators.size() && generators[i].first <= W; ++i) {
            const GradedVector& g = generators[i].second;
            if (g.zero()) continue;
            rows_.insert_and_reduce(columns_.to_sparse(g));
        }
        rank_by_cutoff_[static_cast<size_t>(W)] = static_cast<long>(rows_.rank());
    }
}

long SpanBasis::space_dim() const { return columns_.size(); }

bool SpanBasis::contains(const GradedVector& v) const {
    return rows_.contains(columns_.to_sparse(v));
}

std::optional<std::vector<Rat>> SpanBasis::certificate(const GradedVector& v) const {
    return rows_.membership_certificate(columns_.to_sparse(v));
}

GradedVector SpanBasis::reduce(const GradedVector& v) const {
    return columns_.to_vector(rows_.reduce(columns_.to_sparse(v)));
}

std::vector<PBWKey> SpanBasis::coset_keys() const {
    std::vector<PBWKey> keys;
    for (int32_t col = columns_.size() - 1; col >= 0; --col)
        if (!rows_.is_pivot(col)) keys.push_back(columns_.key(col));
    return keys;
}

long SpanBasis::rank_at(int W) const {
    if (W < 0) return 0;
    W = std::min(W, columns_.cutoff());
    return rank_by_cutoff_[static_cast<size_t>(W)];
}

namespace {

QuotientReport report_from(const Space& M, const SpanBasis& span, int W_min, int W_max,
                           int window) {
    QuotientReport report;
    report.window = window;
    for (int W = W_min; W <= W_max; ++W) {
        long dspace = M.dim_upto(W);
        long dspan = span.rank_at(W);
        report.table.push_back({W, dspace, dspan, dspace - dspan});
    }
    if (static_cast<int>(report.table.size()) >= window && window >= 1) {
        long last = report.table.back().dim_quotient;
        bool stable = true;
        for (int i = 0; i < window; ++i)
            if (report.table[report.table.size() - 1 - static_cast<size_t>(i)]
                    .dim_quotient != last)
                stable = false;
        if (stable) report.stabilized_dim = last;
    }
    return report;
}

}  // namespace

QuotientReport quotient_scan(const Space& V, const Space& M, int n, int W_min, int W_max,
                             SpanConfig cfg, int window) {
    if (n < 0) throw std::invalid_argument("quotient_scan needs n >= 0");
    if (W_min > W_max) throw std::invalid_argument("quotient_scan needs W_min <= W_max");
    cfg.cutoff = W_max;
    SpanBasis span(V, M, n, cfg);
    return report_from(M, span, W_min, W_max, window);
}

QuotientReport ats_scan(const Space& V, int t, int s, int W_min, int W_max, int window) {
    if (t < 0 || s < 0) throw std::invalid_argument("ats_scan needs t, s >= 0");
    if (W_min > W_max) throw std::invalid_argument("ats_scan needs W_min <= W_max");
    SpanBasis span(V, t, s, W_max);
    return report_from(V, span, W_min, W_max, window);
}

}  // namespace voa
