#include <doctest.h>

#include <algorithm>
#include <random>

#include "voa/linalg.hpp"

using namespace voa;
using namespace voa::linalg;

namespace {

SparseVec sv(std::vector<std::pair<int32_t, Rat>> e) { return SparseVec(std::move(e)); }

SparseVec random_vec(std::mt19937_64& rng, int ncols) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<std::pair<int32_t, Rat>> entries;
    for (int c = 0; c < ncols; ++c) {
        int x = num(rng);
        if (x != 0) entries.emplace_back(c, rat(x, den(rng)));
    }
    return SparseVec(std::move(entries));
}

}  // namespace

TEST_CASE("insert and reduce basics") {
    SubspaceBasis basis;
    CHECK(basis.insert_and_reduce(sv({{3, Rat(1)}})));
    CHECK(basis.rank() == 1);
    CHECK(basis.pivots() == std::vector<int32_t>{3});

    // idempotence
    CHECK_FALSE(basis.insert_and_reduce(sv({{3, Rat(1)}})));
    CHECK(basis.rank() == 1);
}

TEST_CASE("2x2 hand-reduced rows") {
    // {e1+e2, e1-e2} row-reduces to {e1, e2}
    SubspaceBasis basis;
    CHECK(basis.insert_and_reduce(sv({{0, Rat(1)}, {1, Rat(1)}})));
    CHECK(basis.insert_and_reduce(sv({{0, Rat(1)}, {1, Rat(-1)}})));
    CHECK(basis.rank() == 2);
    CHECK(basis.rows()[0] == sv({{0, Rat(1)}}));
    CHECK(basis.rows()[1] == sv({{1, Rat(1)}}));
}

TEST_CASE("membership certificates") {
    SubspaceBasis basis;
    basis.insert_and_reduce(sv({{0, Rat(1)}}));
    basis.insert_and_reduce(sv({{1, Rat(1)}}));

    auto zero = basis.membership_certificate(sv({}));
    REQUIRE(zero);
    CHECK(std::all_of(zero->begin(), zero->end(), [](const Rat& c) { return c == 0; }));

    auto cert = basis.membership_certificate(sv({{0, Rat(3)}, {1, rat(-1, 2)}}));
    REQUIRE(cert);
    CHECK((*cert)[0] == 3);
    CHECK((*cert)[1] == rat(-1, 2));

    SubspaceBasis one;
    one.insert_and_reduce(sv({{0, Rat(1)}}));
    CHECK_FALSE(one.membership_certificate(sv({{1, Rat(1)}})));
}

TEST_CASE("certificate expansion reproduces the vector") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        SubspaceBasis basis;
        std::vector<SparseVec> gens;
        for (int g = 0; g < 6; ++g) {
            gens.push_back(random_vec(rng, 8));
            basis.insert_and_reduce(gens.back());
        }
        // combine stored rows randomly: must certify and expand exactly
        std::uniform_int_distribution<int> num(-3, 3);
        SparseVec v;
        std::vector<Rat> mix;
        for (size_t i = 0; i < basis.rank(); ++i) {
            Rat c = rat(num(rng), 2);
            mix.push_back(c);
            v.axpy(c, basis.rows()[i]);
        }
        auto cert = basis.membership_certificate(v);
        REQUIRE(cert);
        SparseVec rebuilt;
        for (size_t i = 0; i < cert->size(); ++i) rebuilt.axpy((*cert)[i], basis.rows()[i]);
        CHECK(rebuilt == v);
    }
}

TEST_CASE("rank independent of insertion order") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SparseVec> gens;
        for (int g = 0; g < 7; ++g) gens.push_back(random_vec(rng, 6));
        SubspaceBasis a;
        for (const auto& g : gens) a.insert_and_reduce(g);
        for (int perm = 0; perm < 4; ++perm) {
            std::shuffle(gens.begin(), gens.end(), rng);
            SubspaceBasis b;
            for (const auto& g : gens) b.insert_and_reduce(g);
            CHECK(b.rank() == a.rank());
        }
    }
}

TEST_CASE("fully reduced form invariants") {
    std::mt19937_64 rng(13);
    SubspaceBasis basis;
    for (int g = 0; g < 10; ++g) basis.insert_and_reduce(random_vec(rng, 9));
    for (size_t i = 0; i < basis.rank(); ++i) {
        CHECK(basis.rows()[i].leading_col() == basis.pivots()[i]);
        CHECK(basis.rows()[i].leading_coeff() == 1);
        if (i > 0) CHECK(basis.pivots()[i - 1] < basis.pivots()[i]);
        for (size_t j = 0; j < basis.rank(); ++j)
            if (j != i) CHECK(basis.rows()[j].coeff(basis.pivots()[i]) == nullptr);
    }
}

TEST_CASE("nullspace examples") {
    // no constraints
    CHECK(nullspace({}, 3).rank() == 3);

    // x0 - x1 = 0 -> dimension 1, solution (1,1)
    auto ns = nullspace({sv({{0, Rat(1)}, {1, Rat(-1)}})}, 2);
    REQUIRE(ns.rank() == 1);
    CHECK(ns.rows()[0] == sv({{0, Rat(1)}, {1, Rat(1)}}));

    // x0 + x1 = 0 and x0 - x1 = 0 -> only the zero solution
    CHECK(nullspace({sv({{0, Rat(1)}, {1, Rat(1)}}), sv({{0, Rat(1)}, {1, Rat(-1)}})}, 2)
              .rank() == 0);
}

TEST_CASE("rank-nullity on random systems") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int ncols = 5 + static_cast<int>(rng() % 4);
        std::vector<SparseVec> rows;
        for (int r = 0; r < 6; ++r) rows.push_back(random_vec(rng, ncols));
        SubspaceBasis span;
        for (const auto& r : rows) span.insert_and_reduce(r);
        auto ns = nullspace(rows, ncols);
        CHECK(static_cast<int>(span.rank() + ns.rank()) == ncols);
        // every solution annihilates every row
        for (const auto& s : ns.rows()) {
            for (const auto& r : rows) {
                Rat dot(0);
                for (const auto& [col, c] : r.entries()) {
                    if (const Rat* x = s.coeff(col)) dot += c * *x;
                }
                CHECK(dot == 0);
            }
        }
    }
}
