#include <doctest.h>

#include "voa/action.hpp"

using namespace voa;

namespace {
PBWKey key(std::vector<int32_t> parts) { return PBWKey{std::move(parts)}; }
}  // namespace

TEST_CASE("o(1) is the identity and o(omega) is the L(0) eigenvalue") {
    Model ising(ModelSpec::ising());
    const Space& V = ising.vacuum();
    GradedVector one = GradedVector::highest_weight(V);
    GradedVector omega = GradedVector::single(V, key({2}));

    for (size_t i = 0; i < ising.module_count(); ++i) {
        const Space& M = ising.module(i);
        for (int s = 0; s <= 1; ++s) {
            if (M.dim(s) == 0) continue;
            size_t d = static_cast<size_t>(M.dim(s));
            CHECK(o_matrix(one, M, s) == identity_matrix(d));
            RatMatrix want = identity_matrix(d);
            for (auto& row : want)
                for (auto& x : row) x *= M.highest_weight() + s;
            CHECK(o_matrix(omega, M, s) == want);
        }
    }
}

TEST_CASE("O_n(V) generators act as zero on low pieces") {
    Model ising(ModelSpec::ising());
    const Space& V = ising.vacuum();
    for (int n = 0; n <= 1; ++n) {
        for (int du = 0; du <= 4; ++du)
            for (const auto& ukey : V.basis(du))
                for (int dv = 0; dv <= 4 - du; ++dv)
                    for (const auto& vkey : V.basis(dv)) {
                        GradedVector x = circ(GradedVector::single(V, ukey),
                                              GradedVector::single(V, vkey), n);
                        GradedVector xl =
                            l_shift_generator(GradedVector::single(V, ukey));
                        for (size_t i = 0; i < ising.module_count(); ++i)
                            for (int s = 0; s <= n; ++s) {
                                if (ising.module(i).dim(s) == 0) continue;
                                CHECK(matrix_is_zero(o_matrix(x, ising.module(i), s)));
                                CHECK(matrix_is_zero(o_matrix(xl, ising.module(i), s)));
                            }
                    }
    }
}

TEST_CASE("semisimplicity ranks match the End-sum") {
    Model ising(ModelSpec::ising());
    auto r0 = semisimplicity_rank(ising, 0, 6);
    CHECK(r0.rank == 3);
    CHECK(r0.expected == 3);
    auto r1 = semisimplicity_rank(ising, 1, 8);
    CHECK(r1.rank == 5);
    CHECK(r1.expected == 5);

    Model ly(ModelSpec::lee_yang());
    CHECK(semisimplicity_rank(ly, 0, 6).rank == 2);
    auto lr1 = semisimplicity_rank(ly, 1, 8);
    CHECK(lr1.rank == 3);
    CHECK(lr1.expected == 3);
}

TEST_CASE("pieces are irreducible: full matrix algebra image") {
    Model ising(ModelSpec::ising());
    for (size_t i = 0; i < ising.module_count(); ++i)
        for (int s = 0; s <= 1; ++s) {
            long d = ising.module(i).dim(s);
            if (d == 0) continue;
            CHECK(piece_image_rank(ising, {i, s}, 8) == d * d);
        }
}

TEST_CASE("omega filter holds on pieces and trips on mis-grading") {
    Model ising(ModelSpec::ising());
    const Space& V = ising.vacuum();
    const Space& eps = ising.module(1);
    CHECK_FALSE(omega_filter_violation(V, eps, 0, 0, 5).has_value());
    CHECK_FALSE(omega_filter_violation(V, eps, 1, 1, 5).has_value());
    // failure injection: the level-1 piece is not inside Omega_0
    CHECK(omega_filter_violation(V, eps, 1, 0, 5).has_value());
}

TEST_CASE("representation compatibility o(u*v) = o(u)o(v)") {
    Model ly(ModelSpec::lee_yang());
    for (size_t i = 0; i < ly.module_count(); ++i)
        for (int n = 0; n <= 1; ++n)
            for (int s = 0; s <= n; ++s)
                CHECK_FALSE(representation_incompatibility(ly, i, s, n, 4).has_value());
}
