#include "voa/action.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace voa {

RatMatrix identity_matrix(size_t n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMatrix zero_matrix(size_t rows, size_t cols) {
    return RatMatrix(rows, std::vector<Rat>(cols, Rat(0)));
}

bool matrix_is_zero(const RatMatrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b) {
    size_t rows = a.size(), inner = b.size(), cols = inner ? b[0].size() : 0;
    RatMatrix out = zero_matrix(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Rat matrix_trace(const RatMatrix& m) {
    Rat t(0);
    for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

RatMatrix o_matrix(const GradedVector& v, const Space& M, int s) {
    const std::vector<PBWKey>& keys = M.basis(s);
    RatMatrix mat = zero_matrix(keys.size(), keys.size());
    for (size_t col = 0; col < keys.size(); ++col) {
        GradedVector w = GradedVector::single(M, keys[col]);
        GradedVector img = zero_mode(v, w);
        for (const auto& [key, c] : img.terms()) {
            auto pos = std::find(keys.begin(), keys.end(), key);
            if (pos == keys.end())
                throw std::logic_error("o(v) image left the graded piece");
            mat[static_cast<size_t>(pos - keys.begin())][col] = c;
        }
    }
    return mat;
}

std::vector<GradedVector> vacuum_basis_upto(const Space& V, int W) {
    std::vector<GradedVector> out;
    for (int d = 0; d <= W; ++d)
        for (const auto& k : V.basis(d)) out.push_back(GradedVector::single(V, k));
    return out;
}

namespace {

std::vector<PieceRef> nonzero_pieces(const Model& model, int n) {
    std::vector<PieceRef> pieces;
    for (size_t i = 0; i < model.module_count(); ++i)
        for (int s = 0; s <= n; ++s)
            if (model.module(i).dim(s) > 0) pieces.push_back({i, s});
    return pieces;
}

}  // namespace

JointRankResult semisimplicity_rank(const Model& model, int n, int W) {
    JointRankResult result;
    result.pieces = nonzero_pieces(model, n);
    result.expected = 0;
    std::vector<int32_t> offsets;
    int32_t offset = 0;
    for (const auto& p : result.pieces) {
        int d = model.module(p.module).dim(p.s);
        offsets.push_back(offset);
        offset += static_cast<int32_t>(d) * d;
        result.expected += static_cast<long>(d) * d;
    }

    linalg::SubspaceBasis image;
    for (const auto& v : vacuum_basis_upto(model.vacuum(), W)) {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (size_t pi = 0; pi < result.pieces.size(); ++pi) {
            const auto& p = result.pieces[pi];
            RatMatrix mat = o_matrix(v, model.module(p.module), p.s);
            int32_t d = static_cast<int32_t>(mat.size());
            for (int32_t r = 0; r < d; ++r)
                for (int32_t c = 0; c < d; ++c)
                    if (mat[r][c] != 0)
                        entries.emplace_back(offsets[pi] + r * d + c, mat[r][c]);
        }
        image.insert_and_reduce(linalg::SparseVec(std::move(entries)));
    }
    result.rank = static_cast<long>(image.rank());
    return result;
}

std::optional<std::string> omega_filter_violation(const Space& V, const Space& M,
                                                  int s, int n, int budget) {
    for (int du = 0; du <= budget; ++du) {
        for (const auto& ukey : V.basis(du)) {
            GradedVector u = GradedVector::single(V, ukey);
            // violating modes reachable at this grading, plus two beyond
            long lo = du + n;           // first m with m > wt u - 1 + n
            long hi = du + s - 1 + 2;   // grading kills m > wt u + s - 1
            for (long m = lo; m <= hi; ++m) {
                for (const auto& wkey : M.basis(s)) {
                    GradedVector img = mode_apply(u, m, GradedVector::single(M, wkey));
                    if (!img.zero())
                        return "u_m w != 0 for u=" + pbw_string(ukey, "0") +
                               " m=" + std::to_string(m) +
                               " w=" + pbw_string(wkey, M.hw_tag()) + ": " + img.str();
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> representation_incompatibility(const Model& model, size_t i,
                                                          int s, int n, int budget) {
    const Space& V = model.vacuum();
    const Space& M = model.module(i);
    if (M.dim(s) == 0) return std::nullopt;
    auto basis = vacuum_basis_upto(V, budget);
    for (const auto& u : basis) {
        RatMatrix ou = o_matrix(u, M, s);
        for (const auto& v : basis) {
            RatMatrix ov = o_matrix(v, M, s);
            RatMatrix lhs = o_matrix(star_left(u, v, n), M, s);
            if (lhs != matrix_product(ou, ov))
                return "o(u*v) != o(u)o(v) for u=" + u.str() + " v=" + v.str();
        }
    }
    return std::nullopt;
}

long piece_image_rank(const Model& model, const PieceRef& piece, int W) {
    const Space& M = model.module(piece.module);
    linalg::SubspaceBasis image;
    for (const auto& v : vacuum_basis_upto(model.vacuum(), W)) {
        RatMatrix mat = o_matrix(v, M, piece.s);
        int32_t d = static_cast<int32_t>(mat.size());
        std::vector<std::pair<int32_t, Rat>> entries;
        for (int32_t r = 0; r < d; ++r)
            for (int32_t c = 0; c < d; ++c)
                if (mat[r][c] != 0) entries.emplace_back(r * d + c, mat[r][c]);
        image.insert_and_reduce(linalg::SparseVec(std::move(entries)));
    }
    return static_cast<long>(image.rank());
}

}  // namespace voa
