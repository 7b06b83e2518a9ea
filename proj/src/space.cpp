#include "voa/space.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace voa {

// ---------------------------------------------------------------------------
// GradedVector

GradedVector GradedVector::highest_weight(const Space& space) {
    GradedVector v(&space);
    v.add(PBWKey{}, Rat(1));
    return v;
}

GradedVector GradedVector::single(const Space& space, PBWKey key, Rat coeff) {
    GradedVector v(&space);
    v.add(key, coeff);
    return v;
}

void GradedVector::add(const PBWKey& key, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedVector::add_scaled(const GradedVector& other, const Rat& c) {
    if (c == 0) return;
    if (!space_) space_ = other.space_;
    for (const auto& [key, x] : other.terms_) add(key, c * x);
}

GradedVector& GradedVector::operator+=(const GradedVector& other) {
    add_scaled(other, Rat(1));
    return *this;
}

GradedVector& GradedVector::operator-=(const GradedVector& other) {
    add_scaled(other, Rat(-1));
    return *this;
}

GradedVector& GradedVector::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, x] : terms_) x *= c;
    return *this;
}

int GradedVector::max_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
    return d;
}

bool GradedVector::homogeneous() const {
    int d = -2;
    for (const auto& [key, c] : terms_) {
        if (d == -2) d = key.degree();
        else if (key.degree() != d) return false;
    }
    return true;
}

GradedVector GradedVector::component(int degree) const {
    GradedVector out(space_);
    for (const auto& [key, c] : terms_)
        if (key.degree() == degree) out.add(key, c);
    return out;
}

std::vector<int> GradedVector::support_degrees() const {
    std::vector<int> ds;
    for (const auto& [key, c] : terms_) {
        int d = key.degree();
        if (ds.empty() || ds.back() != d) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

std::string GradedVector::str() const {
    if (terms_.empty()) return "0";
    std::string tag = space_ ? space_->hw_tag() : "?";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*" + pbw_string(key, tag);
    }
    return s;
}

GradedVector operator*(const Rat& c, GradedVector v) {
    v *= c;
    return v;
}

GradedVector operator+(GradedVector a, const GradedVector& b) {
    a += b;
    return a;
}

GradedVector operator-(GradedVector a, const GradedVector& b) {
    a -= b;
    return a;
}

// ---------------------------------------------------------------------------
// Space

Space::Space(Kind kind, Rat c, Rat h, std::string label)
    : kind_(kind), c_(std::move(c)), h_(std::move(h)), label_(std::move(label)) {
    if (is_vacuum() && h_ != 0)
        throw std::invalid_argument("vacuum space must have h = 0");
    hw_tag_ = to_string(h_);
}

Space::LevelData& Space::level_data(int level) const {
    auto it = levels_.find(level);
    if (it == levels_.end()) {
        LevelData data;
        data.verma_keys = partitions(level, min_part());
        it = levels_.emplace(level, std::move(data)).first;
    }
    return it->second;
}

const std::vector<PBWKey>& Space::verma_basis(int level) const {
    std::lock_guard<std::mutex> lock(mu_);
    return level_data(level).verma_keys;
}

const std::vector<PBWKey>& Space::basis(int level) const {
    if (!is_simple()) return verma_basis(level);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_quotient(level);
    return level_data(level).survivors;
}

long Space::dim_upto(int W) const {
    long total = 0;
    for (int d = 0; d <= W; ++d) total += dim(d);
    return total;
}

const GramForm& Space::gram(int level) const {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_quotient(level);
    return *level_data(level).gram;
}

const linalg::SubspaceBasis& Space::gram_kernel(int level) const {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_quotient(level);
    return level_data(level).kernel;
}

// Gram entries are evaluated by the recursion
//   <L(-p)x, y> = <x, L(p)y>,
// memoized on (x, y) key pairs; values at one level only touch cached
// values at strictly lower levels.
void Space::ensure_quotient(int level) const {
    LevelData& data = level_data(level);
    if (data.quotient_built) return;
    for (int l = 0; l < level; ++l) ensure_quotient(l);

    const std::vector<PBWKey>& keys = data.verma_keys;
    size_t k = keys.size();

    GramForm g;
    g.level = level;
    g.keys = keys;
    g.matrix.assign(k, std::vector<Rat>(k, Rat(0)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            Rat v = form_value(keys[i], keys[j]);
            g.matrix[i][j] = v;
            g.matrix[j][i] = v;
        }

    std::vector<linalg::SparseVec> rows;
    rows.reserve(k);
    for (size_t i = 0; i < k; ++i) {
        std::vector<std::pair<int32_t, Rat>> entries;
        for (size_t j = 0; j < k; ++j)
            if (g.matrix[i][j] != 0)
                entries.emplace_back(static_cast<int32_t>(j), g.matrix[i][j]);
        rows.emplace_back(std::move(entries));
    }
    data.kernel = linalg::nullspace(rows, static_cast<int32_t>(k));
    g.rank = static_cast<int>(k - data.kernel.rank());

    data.survivors.clear();
    for (size_t j = 0; j < k; ++j)
        if (!data.kernel.is_pivot(static_cast<int32_t>(j)))
            data.survivors.push_back(keys[j]);

    data.gram = std::move(g);
    data.quotient_built = true;
}

Rat Space::form_value(const PBWKey& a, const PBWKey& b) const {
    if (a.empty()) {
        assert(b.empty());
        return Rat(1);
    }
    FormKey fk{a, b};
    auto it = form_cache_.find(fk);
    if (it != form_cache_.end()) return it->second;

    GradedVector lowered = apply_virasoro_raw(a.parts[0], GradedVector::single(*this, b));
    PBWKey rest = a.tail();
    Rat value(0);
    for (const auto& [key, c] : lowered.terms()) value += c * form_value(rest, key);
    form_cache_.emplace(std::move(fk), value);
    return value;
}

GradedVector Space::reduce(GradedVector v) const {
    if (!is_simple() || v.zero()) return v;
    std::lock_guard<std::mutex> lock(mu_);
    return reduce_locked(std::move(v));
}

GradedVector Space::reduce_locked(GradedVector v) const {
    if (!is_simple() || v.zero()) return v;
    GradedVector out(v.space());
    for (int d : v.support_degrees()) {
        ensure_quotient(d);
        LevelData& data = level_data(d);
        if (data.kernel.rank() == 0) {
            out += v.component(d);
            continue;
        }
        const std::vector<PBWKey>& keys = data.verma_keys;
        std::vector<std::pair<int32_t, Rat>> entries;
        GradedVector comp = v.component(d);
        for (const auto& [key, c] : comp.terms()) {
            auto pos = std::find(keys.begin(), keys.end(), key);
            assert(pos != keys.end());
            entries.emplace_back(static_cast<int32_t>(pos - keys.begin()), c);
        }
        linalg::SparseVec reduced = data.kernel.reduce(linalg::SparseVec(std::move(entries)));
        for (const auto& [col, c] : reduced.entries()) out.add(keys[static_cast<size_t>(col)], c);
    }
    return out;
}

GradedVector Space::apply_virasoro(long m, const GradedVector& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    return apply_virasoro_locked(m, w);
}

GradedVector Space::apply_virasoro(long m, const PBWKey& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    return apply_virasoro_key(m, key);
}

GradedVector Space::apply_virasoro_locked(long m, const GradedVector& w) const {
    GradedVector out(this);
    for (const auto& [key, c] : w.terms()) out.add_scaled(apply_virasoro_key(m, key), c);
    return out;
}

GradedVector Space::apply_virasoro_raw(long m, const GradedVector& w) const {
    GradedVector out(this);
    for (const auto& [key, c] : w.terms()) out.add_scaled(apply_virasoro_raw_key(m, key), c);
    return out;
}

GradedVector Space::apply_virasoro_raw_key(long m, const PBWKey& key) const {
    VirKey vk{m, key};
    {
        auto it = raw_vir_cache_.find(vk);
        if (it != raw_vir_cache_.end()) return it->second;
    }

    GradedVector result(this);
    if (key.empty()) {
        if (is_vacuum()) {
            if (m <= -2) result.add(PBWKey{{static_cast<int32_t>(-m)}}, Rat(1));
        } else {
            if (m == 0) result.add(key, h_);
            else if (m <= -1) result.add(PBWKey{{static_cast<int32_t>(-m)}}, Rat(1));
        }
    } else {
        int32_t n1 = key.parts[0];
        if (m < 0 && -m >= n1) {
            result.add(key.prepended(static_cast<int32_t>(-m)), Rat(1));
        } else {
            // L(m)L(-n1) = L(-n1)L(m) + (m+n1)L(m-n1) + d_{m,n1} c(m^3-m)/12
            PBWKey rest = key.tail();
            GradedVector inner = apply_virasoro_raw_key(m, rest);
            result += apply_virasoro_raw(-n1, inner);
            if (m + n1 != 0)
                result.add_scaled(apply_virasoro_raw_key(m - n1, rest), Rat(m + n1));
            if (m == n1) {
                Rat central = c_ * rat(m * m * m - m, 12);
                result.add(rest, central);
            }
        }
    }
    raw_vir_cache_.emplace(std::move(vk), result);
    return result;
}

GradedVector Space::apply_virasoro_key(long m, const PBWKey& key) const {
    if (!is_simple()) return apply_virasoro_raw_key(m, key);
    VirKey vk{m, key};
    {
        auto it = vir_cache_.find(vk);
        if (it != vir_cache_.end()) return it->second;
    }
    GradedVector result = reduce_locked(apply_virasoro_raw_key(m, key));
    vir_cache_.emplace(std::move(vk), result);
    return result;
}

GradedVector Space::apply_mode(const PBWKey& u_parts, long k, const GradedVector& w) const {
    std::lock_guard<std::mutex> lock(mu_);
    GradedVector out(this);
    for (const auto& [wkey, c] : w.terms()) out.add_scaled(apply_mode_key(u_parts, k, wkey), c);
    return out;
}

// u_k w for u = L(-j) b: with a = omega and n = -j+1,
//   (a_n b)_k = sum_i (-1)^i C(n,i) (a_{n-i} b_{k+i} - (-1)^n b_{n+k-i} a_i),
// where omega_t = L(t-1). Both i-sums truncate by the grading law.
GradedVector Space::apply_mode_key(const PBWKey& u_parts, long k, const PBWKey& w_key) const {
    if (u_parts.empty())
        return k == -1 ? GradedVector::single(*this, w_key) : GradedVector(this);
    if (u_parts.parts.size() == 1 && u_parts.parts[0] == 2)
        return apply_virasoro_key(k - 1, w_key);

    ModeKey mk{u_parts, k, w_key};
    {
        auto it = mode_cache_.find(mk);
        if (it != mode_cache_.end()) return it->second;
    }

    int32_t j = u_parts.parts[0];
    PBWKey b = u_parts.tail();
    long n = -static_cast<long>(j) + 1;
    bool n_odd = (j % 2) == 0;  // parity of n = 1 - j
    int deg_b = b.degree();
    int deg_w = w_key.degree();

    GradedVector result(this);

    // omega_{n-i} (b_{k+i} w)
    long ilim1 = deg_b + deg_w - k - 1;
    for (long i = 0; i <= ilim1; ++i) {
        GradedVector inner = apply_mode_key(b, k + i, w_key);
        if (inner.zero()) continue;
        GradedVector term = apply_virasoro_locked(n - i - 1, inner);
        Rat coeff = binom(n, i);
        if (i % 2 != 0) coeff = -coeff;
        result.add_scaled(term, coeff);
    }

    // -(-1)^n b_{n+k-i} (omega_i w), omega_i = L(i-1)
    long ilim2 = deg_w + 1;
    for (long i = 0; i <= ilim2; ++i) {
        GradedVector lw = apply_virasoro_key(i - 1, w_key);
        if (lw.zero()) continue;
        GradedVector term(this);
        for (const auto& [key, c] : lw.terms())
            term.add_scaled(apply_mode_key(b, n + k - i, key), c);
        if (term.zero()) continue;
        Rat coeff = binom(n, i);
        if (i % 2 != 0) coeff = -coeff;
        if (!n_odd) coeff = -coeff;
        result.add_scaled(term, coeff);
    }

    mode_cache_.emplace(std::move(mk), result);
    return result;
}

// ---------------------------------------------------------------------------
// Models

Rat minimal_model_c(int p, int q) {
    return Rat(1) - rat(6 * (p - q) * (p - q), p * q);
}

Rat minimal_model_h(int p, int q, int r, int s) {
    long a = static_cast<long>(r) * q - static_cast<long>(s) * p;
    long b = p - q;
    return rat(a * a - b * b, 4L * p * q);
}

ModelSpec ModelSpec::ising() {
    ModelSpec spec;
    spec.name = "ising";
    spec.minimal_pq = {3, 4};
    spec.c = minimal_model_c(3, 4);
    spec.simple_vacuum = true;
    spec.modules = {{"eps", rat(1, 2), true}, {"sigma", rat(1, 16), true}};
    return spec;
}

ModelSpec ModelSpec::lee_yang() {
    ModelSpec spec;
    spec.name = "lee-yang";
    spec.minimal_pq = {2, 5};
    spec.c = minimal_model_c(2, 5);
    spec.simple_vacuum = true;
    spec.modules = {{"phi", rat(-1, 5), true}};
    return spec;
}

ModelSpec ModelSpec::universal(Rat c, std::vector<ModuleDecl> modules) {
    ModelSpec spec;
    spec.name = "virasoro";
    spec.c = std::move(c);
    spec.simple_vacuum = false;
    spec.modules = std::move(modules);
    return spec;
}

std::optional<ModelSpec> ModelSpec::preset(const std::string& name) {
    if (name == "ising") return ising();
    if (name == "lee-yang") return lee_yang();
    return std::nullopt;
}

Model::Model(ModelSpec spec) : spec_(std::move(spec)) {
    if (spec_.minimal_pq) {
        auto [p, q] = *spec_.minimal_pq;
        if (p < 2 || q < 2 || std::gcd(p, q) != 1)
            throw std::invalid_argument("minimal-model preset needs coprime p,q >= 2");
        if (spec_.c != minimal_model_c(p, q))
            throw std::invalid_argument("central charge does not match minimal-model preset");
        for (const auto& m : spec_.modules) {
            bool found = false;
            for (int r = 1; r < p && !found; ++r)
                for (int s = 1; s < q && !found; ++s)
                    if (m.h == minimal_model_h(p, q, r, s)) found = true;
            if (!found)
                throw std::invalid_argument("module weight " + to_string(m.h) +
                                            " is not an h_{r,s} of the preset");
        }
    }
    vacuum_ = std::make_unique<Space>(
        spec_.simple_vacuum ? Space::Kind::SimpleVacuum : Space::Kind::FreeVacuum,
        spec_.c, Rat(0), "0");
    for (const auto& m : spec_.modules)
        modules_.push_back(std::make_unique<Space>(
            m.simple ? Space::Kind::SimpleModule : Space::Kind::Verma, spec_.c, m.h,
            m.label));
}

std::optional<size_t> Model::module_index(const std::string& label) const {
    if (label == "0") return 0;
    for (size_t i = 0; i < modules_.size(); ++i)
        if (modules_[i]->label() == label) return i + 1;
    return std::nullopt;
}

std::vector<int> simple_quotient_dims(const Rat& c, const Rat& h, int W) {
    Space space(Space::Kind::SimpleModule, c, h, "tmp");
    std::vector<int> dims;
    dims.reserve(static_cast<size_t>(W) + 1);
    for (int l = 0; l <= W; ++l) dims.push_back(space.dim(l));
    return dims;
}

GramForm gram_matrix(const Rat& c, const Rat& h, int level) {
    Space space(Space::Kind::Verma, c, h, "tmp");
    return space.gram(level);
}

}  // namespace voa
