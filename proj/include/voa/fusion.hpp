#pragma once

#include <memory>

#include "voa/action.hpp"

namespace voa {

// Coset basis of the bimodule quotient A_n(M) = M / O_n(M), extracted
// from a stabilized quotient scan. The span is kept at a working cutoff
// large enough to reduce every star product formed against V_{<=budget}.
class CosetBasis {
  public:
    const Space& V() const { return *V_; }
    const Space& M() const { return *M_; }
    int n() const { return n_; }
    long stabilized_dim() const { return stabilized_dim_; }
    const std::vector<PBWKey>& keys() const { return keys_; }
    size_t size() const { return keys_.size(); }
    int working_cutoff() const;
    const SpanBasis& span() const { return *span_; }

    // coordinates of the canonical residue of v in the coset keys
    std::vector<Rat> coords(const GradedVector& v) const;

    friend std::optional<CosetBasis> build_coset_basis(const Space& V, const Space& M,
                                                       int n, struct CosetParams params);

  private:
    const Space* V_ = nullptr;
    const Space* M_ = nullptr;
    int n_ = 0;
    long stabilized_dim_ = 0;
    std::vector<PBWKey> keys_;
    std::shared_ptr<SpanBasis> span_;
};

struct CosetParams {
    int scan_w_min = 2;
    int scan_w_max = 12;
    int window = 3;
    GeneratorFamily family = GeneratorFamily::CircOnly;
    // downstream star products pair coset keys against V_{<=star_budget}
    int star_budget = 6;
};

// nullopt when the quotient scan does not stabilize: no coset basis is
// produced rather than an unsound one.
std::optional<CosetBasis> build_coset_basis(const Space& V, const Space& M, int n,
                                            CosetParams params);

// Linear system for balanced maps f : A_n(M^i) (x) M^j(s) -> M^k(t) with
//   f(x *_n b (x) u) = f(x (x) o(b)u),   f(a *_n x (x) u) = o(a) f(x (x) u)
// for a, b over V_{<=budget}. Its solution dimension is the fusion rule
// N_{ij}^k.
struct BalancedHomResult {
    size_t dim_a = 0, dim_j = 0, dim_k = 0;
    int dim = 0;                              // nullspace dimension
    std::vector<std::vector<Rat>> solutions;  // flat f[(x*dimJ+u)*dimK+r]
};

BalancedHomResult balanced_hom(const Model& model, const CosetBasis& Ai, size_t j,
                               int s, size_t k, int t, int budget);

struct FusionTable {
    int n = 0;
    size_t count = 0;
    // N[i][j][k]; -1 marks a cell with no valid (s,t) pair (never happens
    // for modules with nonzero bottom piece)
    std::vector<std::vector<std::vector<int>>> N;
    // false when some (s,t) choice disagreed for a cell
    bool consistent = true;

    int entry(size_t i, size_t j, size_t k) const { return N[i][j][k]; }
};

struct FusionParams {
    CosetParams coset;
    int budget = 6;
    int workers = 1;
};

// All N_{ij}^k over every valid (s,t) pair with nonzero pieces, s,t <= n;
// cross-(s,t) consistency is recorded. Throws if some coset scan fails to
// stabilize.
FusionTable fusion_table(const Model& model, int n, const FusionParams& params);

// dim(S^* (x)_A T) for simple pieces S, T of the computed A_n(V) action:
// dim S * dim T minus the rank of the balancing relations
// (f.a)(x)t - f(x)(a.t) over a in V_{<=budget}.
long tensor_over_algebra_dim(const Model& model, const PieceRef& S, const PieceRef& T,
                             int budget);

// For one balanced solution f, the rank of the family
// {f(x (x) .) : x over the coset basis} inside Hom(M^j(s), M^k(t)).
long solution_family_rank(const BalancedHomResult& result, const std::vector<Rat>& solution);

// Bimodule pairing identity (a x b, y) = (x, b y a) on the realization
// M (x) N^* = Hom(N, M) with the pairing (X, Y) = tr(XY); a, b act via
// o(v) matrices on the two pieces. Returns false with a witness when an
// instance fails.
bool pairing_identity_check(const Model& model, const PieceRef& S, const PieceRef& T,
                            int budget, unsigned long seed, std::string* witness);

}  // namespace voa
