#include "voa/fusion.hpp"

#include <algorithm>
#include <random>

#include "voa/parallel.hpp"
#include <stdexcept>

namespace voa {

int CosetBasis::working_cutoff() const { return span_->columns().cutoff(); }

std::vector<Rat> CosetBasis::coords(const GradedVector& v) const {
    GradedVector residue = span_->reduce(v);
    std::vector<Rat> out(keys_.size(), Rat(0));
    for (const auto& [key, c] : residue.terms()) {
        auto pos = std::find(keys_.begin(), keys_.end(), key);
        if (pos == keys_.end())
            throw std::logic_error("residue not supported on the coset basis");
        out[static_cast<size_t>(pos - keys_.begin())] = c;
    }
    return out;
}

std::optional<CosetBasis> build_coset_basis(const Space& V, const Space& M, int n,
                                            CosetParams params) {
    SpanConfig cfg{.cutoff = params.scan_w_max, .family = params.family};
    auto span = std::make_shared<SpanBasis>(V, M, n, cfg);

    // stabilization over the scan range
    long last = M.dim_upto(params.scan_w_max) - span->rank_at(params.scan_w_max);
    for (int i = 0; i < params.window; ++i) {
        int W = params.scan_w_max - i;
        if (W < params.scan_w_min) return std::nullopt;
        if (M.dim_upto(W) - span->rank_at(W) != last) return std::nullopt;
    }

    std::vector<PBWKey> keys = span->coset_keys();
    if (static_cast<long>(keys.size()) != last) return std::nullopt;

    int max_key_deg = 0;
    for (const auto& k : keys) max_key_deg = std::max(max_key_deg, k.degree());
    int w_work = max_key_deg + params.star_budget + 2 * n;
    if (w_work > params.scan_w_max) {
        cfg.cutoff = w_work;
        span = std::make_shared<SpanBasis>(V, M, n, cfg);
        long quot = M.dim_upto(w_work) - span->rank_at(w_work);
        if (quot != last || span->coset_keys() != keys) return std::nullopt;
    }

    CosetBasis basis;
    basis.V_ = &V;
    basis.M_ = &M;
    basis.n_ = n;
    basis.stabilized_dim_ = last;
    basis.keys_ = std::move(keys);
    basis.span_ = std::move(span);
    return basis;
}

BalancedHomResult balanced_hom(const Model& model, const CosetBasis& Ai, size_t j,
                               int s, size_t k, int t, int budget) {
    const Space& V = model.vacuum();
    const Space& Mj = model.module(j);
    const Space& Mk = model.module(k);
    const int n = Ai.n();

    BalancedHomResult result;
    result.dim_a = Ai.size();
    result.dim_j = static_cast<size_t>(Mj.dim(s));
    result.dim_k = static_cast<size_t>(Mk.dim(t));
    if (result.dim_j == 0 || result.dim_k == 0)
        throw std::invalid_argument("balanced_hom requires nonzero graded pieces");

    const size_t dimA = result.dim_a, dimJ = result.dim_j, dimK = result.dim_k;
    auto idx = [&](size_t x, size_t u, size_t r) {
        return static_cast<int32_t>((x * dimJ + u) * dimK + r);
    };
    const int32_t unknowns = static_cast<int32_t>(dimA * dimJ * dimK);

    std::vector<GradedVector> coset_vecs;
    for (const auto& key : Ai.keys())
        coset_vecs.push_back(GradedVector::single(Ai.M(), key));

    std::vector<linalg::SparseVec> rows;
    for (const auto& b : vacuum_basis_upto(V, budget)) {
        RatMatrix Ob = o_matrix(b, Mj, s);
        RatMatrix Ab = o_matrix(b, Mk, t);
        for (size_t x = 0; x < dimA; ++x) {
            // balance: f(x *_n b (x) u) = f(x (x) o(b)u)
            std::vector<Rat> right_coords = Ai.coords(star_right(coset_vecs[x], b, n));
            for (size_t u = 0; u < dimJ; ++u)
                for (size_t r = 0; r < dimK; ++r) {
                    std::vector<std::pair<int32_t, Rat>> entries;
                    for (size_t z = 0; z < dimA; ++z)
                        if (right_coords[z] != 0)
                            entries.emplace_back(idx(z, u, r), right_coords[z]);
                    for (size_t u2 = 0; u2 < dimJ; ++u2)
                        if (Ob[u2][u] != 0) entries.emplace_back(idx(x, u2, r), -Ob[u2][u]);
                    rows.emplace_back(std::move(entries));
                }
            // module map: f(b *_n x (x) u) = o(b) f(x (x) u)
            std::vector<Rat> left_coords = Ai.coords(star_left(b, coset_vecs[x], n));
            for (size_t u = 0; u < dimJ; ++u)
                for (size_t r = 0; r < dimK; ++r) {
                    std::vector<std::pair<int32_t, Rat>> entries;
                    for (size_t z = 0; z < dimA; ++z)
                        if (left_coords[z] != 0)
                            entries.emplace_back(idx(z, u, r), left_coords[z]);
                    for (size_t r2 = 0; r2 < dimK; ++r2)
                        if (Ab[r][r2] != 0) entries.emplace_back(idx(x, u, r2), -Ab[r][r2]);
                    rows.emplace_back(std::move(entries));
                }
        }
    }

    linalg::SubspaceBasis solutions = linalg::nullspace(rows, unknowns);
    result.dim = static_cast<int>(solutions.rank());
    for (const auto& row : solutions.rows()) {
        std::vector<Rat> dense(static_cast<size_t>(unknowns), Rat(0));
        for (const auto& [col, c] : row.entries()) dense[static_cast<size_t>(col)] = c;
        result.solutions.push_back(std::move(dense));
    }
    return result;
}

FusionTable fusion_table(const Model& model, int n, const FusionParams& params) {
    const Space& V = model.vacuum();
    const size_t p = model.module_count();

    std::vector<CosetBasis> cosets;
    for (size_t i = 0; i < p; ++i) {
        auto basis = build_coset_basis(V, model.module(i), n, params.coset);
        if (!basis)
            throw std::runtime_error("coset scan for module " + model.module(i).label() +
                                     " did not stabilize");
        cosets.push_back(std::move(*basis));
    }

    FusionTable table;
    table.n = n;
    table.count = p;
    table.N.assign(p, std::vector<std::vector<int>>(p, std::vector<int>(p, -1)));
    struct CellResult {
        int value = -1;
        bool consistent = true;
    };
    std::vector<CellResult> results(p * p * p);
    parallel_for_index(p * p * p, params.workers, [&](size_t flat) {
        size_t i = flat / (p * p), j = (flat / p) % p, k = flat % p;
        CellResult cell;
        for (int s = 0; s <= n; ++s)
            for (int t = 0; t <= n; ++t) {
                if (model.module(j).dim(s) == 0 || model.module(k).dim(t) == 0) continue;
                int d = balanced_hom(model, cosets[i], j, s, k, t, params.budget).dim;
                if (cell.value == -1) cell.value = d;
                else if (cell.value != d) cell.consistent = false;
            }
        results[flat] = cell;
    });
    for (size_t flat = 0; flat < results.size(); ++flat) {
        size_t i = flat / (p * p), j = (flat / p) % p, k = flat % p;
        table.N[i][j][k] = results[flat].value;
        if (!results[flat].consistent) table.consistent = false;
    }
    return table;
}

long tensor_over_algebra_dim(const Model& model, const PieceRef& S, const PieceRef& T,
                             int budget) {
    const Space& Ms = model.module(S.module);
    const Space& Mt = model.module(T.module);
    const size_t dimS = static_cast<size_t>(Ms.dim(S.s));
    const size_t dimT = static_cast<size_t>(Mt.dim(T.s));
    auto idx = [&](size_t g, size_t d) { return static_cast<int32_t>(g * dimT + d); };

    // relations (f.a)(x)t - f(x)(a.t) over basis f = s_alpha^*, t = t_beta
    std::vector<linalg::SparseVec> rows;
    for (const auto& a : vacuum_basis_upto(model.vacuum(), budget)) {
        RatMatrix AS = o_matrix(a, Ms, S.s);
        RatMatrix AT = o_matrix(a, Mt, T.s);
        for (size_t alpha = 0; alpha < dimS; ++alpha)
            for (size_t beta = 0; beta < dimT; ++beta) {
                std::vector<std::pair<int32_t, Rat>> entries;
                for (size_t g = 0; g < dimS; ++g)
                    if (AS[alpha][g] != 0) entries.emplace_back(idx(g, beta), AS[alpha][g]);
                for (size_t d = 0; d < dimT; ++d)
                    if (AT[d][beta] != 0) entries.emplace_back(idx(alpha, d), -AT[d][beta]);
                rows.emplace_back(std::move(entries));
            }
    }
    linalg::SubspaceBasis relations;
    for (auto& r : rows) relations.insert_and_reduce(std::move(r));
    return static_cast<long>(dimS * dimT - relations.rank());
}

long solution_family_rank(const BalancedHomResult& result, const std::vector<Rat>& solution) {
    linalg::SubspaceBasis family;
    const size_t dimJ = result.dim_j, dimK = result.dim_k;
    for (size_t x = 0; x < result.dim_a; ++x) {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (size_t u = 0; u < dimJ; ++u)
            for (size_t r = 0; r < dimK; ++r) {
                const Rat& c = solution[(x * dimJ + u) * dimK + r];
                if (c != 0) entries.emplace_back(static_cast<int32_t>(u * dimK + r), c);
            }
        family.insert_and_reduce(linalg::SparseVec(std::move(entries)));
    }
    return static_cast<long>(family.rank());
}

bool pairing_identity_check(const Model& model, const PieceRef& S, const PieceRef& T,
                            int budget, unsigned long seed, std::string* witness) {
    const Space& Ms = model.module(S.module);
    const Space& Mt = model.module(T.module);
    const size_t dimS = static_cast<size_t>(Ms.dim(S.s));
    const size_t dimT = static_cast<size_t>(Mt.dim(T.s));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    auto random_matrix = [&](size_t rows, size_t cols) {
        RatMatrix m = zero_matrix(rows, cols);
        for (auto& row : m)
            for (auto& x : row) x = rat(num(rng), 1 + static_cast<int>(rng() % 2));
        return m;
    };

    auto basis = vacuum_basis_upto(model.vacuum(), budget);
    for (int trial = 0; trial < 8; ++trial) {
        const GradedVector& av = basis[rng() % basis.size()];
        const GradedVector& bv = basis[rng() % basis.size()];
        RatMatrix A = o_matrix(av, Ms, S.s);   // a acting on M
        RatMatrix B = o_matrix(bv, Mt, T.s);   // b acting on N
        RatMatrix X = random_matrix(dimS, dimT);  // x in M (x) N^* = Hom(N, M)
        RatMatrix Y = random_matrix(dimT, dimS);  // y in N (x) M^* = Hom(M, N)
        // (a x b, y) = tr(A X B Y) must equal (x, b y a) = tr(X B Y A)
        Rat lhs = matrix_trace(matrix_product(matrix_product(A, X), matrix_product(B, Y)));
        Rat rhs = matrix_trace(matrix_product(X, matrix_product(B, matrix_product(Y, A))));
        if (lhs != rhs) {
            if (witness)
                *witness = "pairing mismatch: " + to_string(lhs) + " vs " + to_string(rhs);
            return false;
        }
    }
    return true;
}

}  // namespace voa
