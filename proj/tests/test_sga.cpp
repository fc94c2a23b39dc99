#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sgp/constructions.hpp"
#include "sgp/designs.hpp"
#include "sgp/diffmat.hpp"
#include "sgp/sga.hpp"

using namespace sgp;

TEST_SUITE_BEGIN("sga");

TEST_CASE("superior and inferior problems") {
    SgaParams p{22, 3, 4, 2, 4};
    auto [sup, inf] = superior_inferior(p);
    CHECK(sup == std::pair<int, int>{24, 4});
    CHECK(inf == std::pair<int, int>{18, 3});

    // 41 = 5*7 + 6*1: superior (48,6), inferior (40,5).
    auto [sup2, inf2] = superior_inferior(SgaParams{41, 5, 6, 7, 1});
    CHECK(sup2 == std::pair<int, int>{48, 6});
    CHECK(inf2 == std::pair<int, int>{40, 5});

    SgaParams zero{40, 5, 6, 8, 0};
    CHECK(superior_inferior(zero).second == std::pair<int, int>{40, 5});

    CHECK_THROWS_AS(superior_inferior(SgaParams{22, 3, 5, 2, 4}), std::invalid_argument);
}

namespace {

Allocation rtd_alloc(int k, int n) {
    MolsSet m = build_mols(n);
    m.squares.resize(k - 1);
    return allocation_from_design(rtd_from_td(td_from_mols(m)));
}

}  // namespace

TEST_CASE("remove_points from an RTD group") {
    Allocation a = rtd_alloc(4, 7);  // (28,4), 7 rounds, groups of 7 as cliques
    REQUIRE(a.cliques.size() == 4);
    Block pts(a.cliques[0].begin(), a.cliques[0].begin() + 3);
    Allocation b = remove_points(a, pts);
    AllocationCert cert = verify_allocation(b);
    CHECK(cert.valid);
    CHECK(b.v == 25);
    CHECK(cert.rounds == 7);
    CHECK(b.sizes == std::vector<int>{3, 4});
    CHECK(b.counts == std::vector<int>{3, 4});
    // Per round: exactly 3 blocks of size 3.
    for (const auto& round : b.rounds) {
        int small = 0;
        for (const auto& blk : round) small += blk.size() == 3;
        CHECK(small == 3);
    }
}

TEST_CASE("remove_points rejects co-blocked points") {
    Allocation a = rtd_alloc(4, 7);
    Block bad = {a.rounds[0][0][0], a.rounds[0][0][1]};
    CHECK_THROWS_AS(remove_points(a, bad), std::invalid_argument);
    CHECK_THROWS_AS(remove_points(a, {999}), std::invalid_argument);
}

TEST_CASE("remove then renumber stays valid and isomorphic") {
    Allocation a = rtd_alloc(5, 7);  // (35,5)
    Block pts(a.cliques[0].begin(), a.cliques[0].begin() + 6);
    Allocation b = remove_points(a, pts);
    CHECK(verify_allocation(b).valid);
    CHECK(b.v == 29);
    Allocation c = renumber(b);
    AllocationCert cert = verify_allocation(c);
    CHECK(cert.valid);
    CHECK(cert.rounds == 7);
    std::vector<int> labels = c.labels();
    CHECK(labels.front() == 0);
    CHECK(labels.back() == 28);
    // Isomorphism: co-block relation transported by the order-preserving map.
    std::vector<int> old_labels = b.labels();
    auto pair_set = [](const Allocation& x) {
        std::set<std::pair<int, int>> s;
        for (const auto& round : x.rounds)
            for (const auto& blk : round)
                for (size_t i = 0; i < blk.size(); ++i)
                    for (size_t j = i + 1; j < blk.size(); ++j)
                        s.insert({std::min(blk[i], blk[j]), std::max(blk[i], blk[j])});
        return s;
    };
    std::map<int, int> to;
    for (size_t i = 0; i < old_labels.size(); ++i) to[old_labels[i]] = (int)i;
    std::set<std::pair<int, int>> mapped;
    for (auto [x, y] : pair_set(b))
        mapped.insert({std::min(to[x], to[y]), std::max(to[x], to[y])});
    CHECK(mapped == pair_set(c));
}

TEST_CASE("remove_points of nothing is the identity") {
    Allocation a = rtd_alloc(4, 5);
    Allocation b = remove_points(a, {});
    CHECK(b.v == a.v);
    CHECK(b.rounds == a.rounds);
}

TEST_CASE("remove policy variants") {
    Allocation a = rtd_alloc(4, 5);  // (20,4) 5 rounds
    Allocation one = remove_single_point(a);
    CHECK(verify_allocation(one).valid);
    CHECK(one.v == 19);
    CHECK(one.rounds.size() == 5);

    Allocation tb = remove_final_block_points(a, 2);
    CHECK(verify_allocation(tb).valid);
    CHECK(tb.v == 18);
    CHECK(tb.rounds.size() == 4);

    CHECK_THROWS_AS(remove_final_block_points(a, 9), std::invalid_argument);
}

TEST_CASE("composition law on random clique subsets") {
    Allocation a = rtd_alloc(5, 8);  // (40,5), groups of 8
    for (int take = 1; take <= 5; ++take) {
        Block pts(a.cliques[1].begin(), a.cliques[1].begin() + take);
        Allocation b = renumber(remove_points(a, pts));
        CHECK(verify_allocation(b).valid);
    }
}


TEST_CASE("add_points meets every original point exactly once") {
    DiffMatrix d = dm_from_prime_field(field_new(7, 1), 5);
    Allocation a = grid_to_allocation(dm_grid(d));  // (28,4), 7 rounds, 7 columns
    REQUIRE(a.columns.size() == 7);
    for (int m2 : {1, 3, 7}) {
        Allocation b = add_points(a, m2);
        AllocationCert cert = verify_allocation(b);
        CHECK(cert.valid);
        CHECK(b.v == 28 + m2);
        CHECK(b.rounds.size() == 7);
        // New points pair with all originals exactly once and never with
        // each other.
        for (int p = 28; p < 28 + m2; ++p) {
            std::map<int, int> met;
            for (const auto& round : b.rounds)
                for (const auto& blk : round)
                    if (std::find(blk.begin(), blk.end(), p) != blk.end())
                        for (int x : blk)
                            if (x != p) met[x]++;
            CHECK((int)met.size() == 28);
            for (auto [x, c] : met) {
                CHECK(x < 28);
                CHECK(c == 1);
            }
        }
    }
    CHECK(add_points(a, 0).v == a.v);
    CHECK_THROWS_AS(add_points(a, 8), std::invalid_argument);
}


TEST_CASE("remove_policy dispatches on the removal size") {
    Allocation a = rtd_alloc(4, 5);  // (20,4), 5 rounds, k = 4
    Allocation same = remove_policy(a, 0);
    CHECK(same.v == 20);

    Allocation one = remove_policy(a, 1);
    CHECK(one.v == 19);
    CHECK(one.rounds.size() == 5);

    Allocation mid = remove_policy(a, 3);  // 1 < 3 <= k: drop the last round
    CHECK(mid.v == 17);
    CHECK(mid.rounds.size() == 4);
    CHECK(verify_allocation(mid).valid);

    Allocation big = remove_policy(a, 5);  // 5 > k: clique removal keeps r
    CHECK(big.v == 15);
    CHECK(big.rounds.size() == 5);
    CHECK(verify_allocation(big).valid);
}

TEST_SUITE_END();
