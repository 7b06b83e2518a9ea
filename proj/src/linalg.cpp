#include "voa/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace voa::linalg {

SparseVec::SparseVec(std::vector<std::pair<int32_t, Rat>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [col, c] : entries) {
        if (c == 0) continue;
        if (!entries_.empty() && entries_.back().first == col)
            entries_.back().second += c;
        else
            entries_.emplace_back(col, std::move(c));
        if (entries_.back().second == 0) entries_.pop_back();
    }
}

const Rat* SparseVec::coeff(int32_t col) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), col,
        [](const auto& e, int32_t c) { return e.first < c; });
    if (it == entries_.end() || it->first != col) return nullptr;
    return &it->second;
}

void SparseVec::scale(const Rat& c) {
    assert(c != 0);
    for (auto& [col, x] : entries_) x *= c;
}

void SparseVec::axpy(const Rat& c, const SparseVec& other) {
    if (c == 0 || other.entries_.empty()) return;
    std::vector<std::pair<int32_t, Rat>> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() ||
            (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rat sum = a->second + c * b->second;
            if (sum != 0) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

bool SubspaceBasis::is_pivot(int32_t col) const {
    return std::binary_search(pivots_.begin(), pivots_.end(), col);
}

bool SubspaceBasis::insert_and_reduce(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;

    Rat inv = 1 / v.leading_coeff();
    v.scale(inv);
    int32_t pivot = v.leading_col();

    // Back-substitution keeps the fully reduced form.
    for (auto& row : rows_) {
        if (const Rat* c = row.coeff(pivot)) {
            Rat coef = -*c;
            row.axpy(coef, v);
        }
    }

    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<ptrdiff_t>(idx), std::move(v));
    return true;
}

SparseVec SubspaceBasis::reduce(SparseVec v) const {
    for (size_t i = 0; i < rows_.size() && !v.empty(); ++i) {
        if (v.leading_col() > pivots_[i]) continue;
        if (const Rat* c = v.coeff(pivots_[i])) {
            Rat coef = -*c;
            v.axpy(coef, rows_[i]);
        }
    }
    return v;
}

std::optional<std::vector<Rat>> SubspaceBasis::membership_certificate(
    const SparseVec& v) const {
    // Fully reduced form: the coefficient on row i is just v at pivot i.
    std::vector<Rat> coeffs(rows_.size(), Rat(0));
    SparseVec rem = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (const Rat* c = rem.coeff(pivots_[i])) {
            coeffs[i] = *c;
            Rat neg = -*c;
            rem.axpy(neg, rows_[i]);
        }
    }
    if (!rem.empty()) return std::nullopt;
    return coeffs;
}

SubspaceBasis nullspace(const std::vector<SparseVec>& rows, int32_t num_unknowns) {
    SubspaceBasis reduced;
    for (const auto& r : rows) reduced.insert_and_reduce(r);

    SubspaceBasis solutions;
    for (int32_t col = 0; col < num_unknowns; ++col) {
        if (reduced.is_pivot(col)) continue;
        std::vector<std::pair<int32_t, Rat>> entries;
        entries.emplace_back(col, Rat(1));
        for (size_t i = 0; i < reduced.rank(); ++i) {
            if (const Rat* c = reduced.rows()[i].coeff(col))
                entries.emplace_back(reduced.pivots()[i], -*c);
        }
        solutions.insert_and_reduce(SparseVec(std::move(entries)));
    }
    return solutions;
}

}  // namespace voa::linalg
