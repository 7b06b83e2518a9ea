#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "voa/linalg.hpp"
#include "voa/pbw.hpp"
#include "voa/rat.hpp"

namespace voa {

class Space;

// Finite exact-rational linear combination of PBW keys of one carrying
// space, graded by degree (weight = h + degree).
class GradedVector {
  public:
    GradedVector() = default;
    explicit GradedVector(const Space* space) : space_(space) {}

    static GradedVector highest_weight(const Space& space);
    static GradedVector single(const Space& space, PBWKey key, Rat coeff = Rat(1));

    const Space* space() const { return space_; }
    bool zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<PBWKey, Rat, PBWKeyLess>& terms() const { return terms_; }

    void add(const PBWKey& key, const Rat& c);
    void add_scaled(const GradedVector& other, const Rat& c);
    GradedVector& operator+=(const GradedVector& other);
    GradedVector& operator-=(const GradedVector& other);
    GradedVector& operator*=(const Rat& c);

    bool operator==(const GradedVector& other) const { return terms_ == other.terms_; }

    // -1 for the zero vector.
    int max_degree() const;
    bool homogeneous() const;
    GradedVector component(int degree) const;
    std::vector<int> support_degrees() const;

    std::string str() const;

  private:
    const Space* space_ = nullptr;
    std::map<PBWKey, Rat, PBWKeyLess> terms_;
};

GradedVector operator*(const Rat& c, GradedVector v);
GradedVector operator+(GradedVector a, const GradedVector& b);
GradedVector operator-(GradedVector a, const GradedVector& b);

// Shapovalov/Gram form of one level, on the free (Verma-type) key basis.
struct GramForm {
    int level = 0;
    std::vector<PBWKey> keys;
    std::vector<std::vector<Rat>> matrix;
    int rank = 0;
};

// A concrete Virasoro-family graded space: the vacuum space of the VOA
// (parts >= 2) or a highest-weight module (parts >= 1), either free
// (universal / Verma) or the simple quotient by the Gram-form radical.
//
// Identity semantics: spaces are owned by a Model (or a test) and passed
// by reference; all caches are internal and thread-safe.
class Space {
  public:
    enum class Kind { FreeVacuum, Verma, SimpleVacuum, SimpleModule };

    Space(Kind kind, Rat c, Rat h, std::string label);
    Space(const Space&) = delete;
    Space& operator=(const Space&) = delete;

    Kind kind() const { return kind_; }
    bool is_vacuum() const {
        return kind_ == Kind::FreeVacuum || kind_ == Kind::SimpleVacuum;
    }
    bool is_simple() const {
        return kind_ == Kind::SimpleVacuum || kind_ == Kind::SimpleModule;
    }
    int min_part() const { return is_vacuum() ? 2 : 1; }

    const Rat& central_charge() const { return c_; }
    const Rat& highest_weight() const { return h_; }
    const std::string& label() const { return label_; }
    const std::string& hw_tag() const { return hw_tag_; }

    // Free PBW keys of one level, before any quotient.
    const std::vector<PBWKey>& verma_basis(int level) const;
    // Basis of the level component; for simple spaces, the pivot subset
    // surviving the Gram-kernel quotient.
    const std::vector<PBWKey>& basis(int level) const;
    int dim(int level) const { return static_cast<int>(basis(level).size()); }
    long dim_upto(int W) const;

    const GramForm& gram(int level) const;
    // Radical of the Gram form at a level, row-reduced over the
    // verma_basis columns (empty for free spaces).
    const linalg::SubspaceBasis& gram_kernel(int level) const;

    // Canonical representative modulo the stored kernel reducers
    // (identity on free spaces).
    GradedVector reduce(GradedVector v) const;

    // L(m) w, normal-ordered via [L(m),L(n)] = (m-n)L(m+n) +
    // delta_{m+n,0} c (m^3-m)/12; results are canonical.
    GradedVector apply_virasoro(long m, const GradedVector& w) const;
    GradedVector apply_virasoro(long m, const PBWKey& key) const;

    // u_k w for u given by a PBW key of the vacuum space of the same
    // central charge, acting on w in this space. Evaluated by the iterate
    // recursion on the PBW length of u; all mode sums are finite by the
    // grading law deg(u_k w) = deg u + deg w - k - 1.
    GradedVector apply_mode(const PBWKey& u_parts, long k, const GradedVector& w) const;

  private:
    // Internal helpers assume mu_ is held by the caller.
    GradedVector apply_virasoro_locked(long m, const GradedVector& w) const;
    GradedVector apply_virasoro_key(long m, const PBWKey& key) const;
    // Free-module (never reduced) evaluation; the Gram form lives on the
    // free module, so its construction must not touch quotient state.
    GradedVector apply_virasoro_raw(long m, const GradedVector& w) const;
    GradedVector apply_virasoro_raw_key(long m, const PBWKey& key) const;
    GradedVector apply_mode_key(const PBWKey& u_parts, long k, const PBWKey& w_key) const;
    GradedVector reduce_locked(GradedVector v) const;
    void ensure_quotient(int level) const;
    Rat form_value(const PBWKey& a, const PBWKey& b) const;

    Kind kind_;
    Rat c_;
    Rat h_;
    std::string label_;
    std::string hw_tag_;

    struct LevelData {
        std::vector<PBWKey> verma_keys;
        bool quotient_built = false;
        std::optional<GramForm> gram;
        linalg::SubspaceBasis kernel;
        std::vector<PBWKey> survivors;
    };
    LevelData& level_data(int level) const;

    struct VirKey {
        long m;
        PBWKey key;
        bool operator==(const VirKey&) const = default;
    };
    struct VirKeyHash {
        size_t operator()(const VirKey& k) const {
            return PBWKeyHash{}(k.key) * 31 + std::hash<long>{}(k.m);
        }
    };
    struct ModeKey {
        PBWKey u;
        long k;
        PBWKey w;
        bool operator==(const ModeKey&) const = default;
    };
    struct ModeKeyHash {
        size_t operator()(const ModeKey& k) const {
            return (PBWKeyHash{}(k.u) * 37 + PBWKeyHash{}(k.w)) * 31 +
                   std::hash<long>{}(k.k);
        }
    };
    struct FormKey {
        PBWKey a;
        PBWKey b;
        bool operator==(const FormKey&) const = default;
    };
    struct FormKeyHash {
        size_t operator()(const FormKey& k) const {
            return PBWKeyHash{}(k.a) * 41 + PBWKeyHash{}(k.b);
        }
    };

    mutable std::mutex mu_;
    mutable std::map<int, LevelData> levels_;
    mutable std::unordered_map<VirKey, GradedVector, VirKeyHash> vir_cache_;
    mutable std::unordered_map<VirKey, GradedVector, VirKeyHash> raw_vir_cache_;
    mutable std::unordered_map<ModeKey, GradedVector, ModeKeyHash> mode_cache_;
    mutable std::unordered_map<FormKey, Rat, FormKeyHash> form_cache_;
};

struct ModuleDecl {
    std::string label;
    Rat h;
    bool simple = true;  // SIMPLE-QUOTIENT vs VERMA
};

// A VOA instance plus its module instances.
struct ModelSpec {
    std::string name = "custom";
    Rat c;
    bool simple_vacuum = false;
    std::vector<ModuleDecl> modules;              // excludes the vacuum itself
    std::optional<std::pair<int, int>> minimal_pq;  // coprime (p,q), p,q >= 2

    static ModelSpec ising();
    static ModelSpec lee_yang();
    static ModelSpec universal(Rat c, std::vector<ModuleDecl> modules);
    static std::optional<ModelSpec> preset(const std::string& name);
};

Rat minimal_model_c(int p, int q);
Rat minimal_model_h(int p, int q, int r, int s);

class Model {
  public:
    explicit Model(ModelSpec spec);

    const ModelSpec& spec() const { return spec_; }
    const Space& vacuum() const { return *vacuum_; }

    // Module 0 is the vacuum space acting on itself.
    size_t module_count() const { return 1 + modules_.size(); }
    const Space& module(size_t i) const {
        return i == 0 ? *vacuum_ : *modules_[i - 1];
    }
    std::optional<size_t> module_index(const std::string& label) const;
    // Contragredient assignment (identity for minimal-model presets).
    size_t dual(size_t i) const { return i; }

  private:
    ModelSpec spec_;
    std::unique_ptr<Space> vacuum_;
    std::vector<std::unique_ptr<Space>> modules_;
};

// Graded dimensions of the simple quotient L(c,h) at levels 0..W,
// computed as Gram-form ranks (the module-side oracle).
std::vector<int> simple_quotient_dims(const Rat& c, const Rat& h, int W);

// Gram matrix of Verma(c,h) at one level.
GramForm gram_matrix(const Rat& c, const Rat& h, int level);

}  // namespace voa
