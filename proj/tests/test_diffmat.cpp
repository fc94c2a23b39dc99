#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sgp/diffmat.hpp"
#include "sgp/sga.hpp"

#include "qdm_search.hpp"

using namespace sgp;

TEST_SUITE_BEGIN("diffmat");

TEST_CASE("prime-field multiplication table is a difference matrix") {
    DiffMatrix d = dm_from_prime_field(field_new(5, 1), 5);
    CHECK(d.t == 5);
    CHECK(d.k == 5);
    // Brute-force difference lists, independent of verify_dm.
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            std::multiset<int> diffs;
            for (int c = 0; c < 5; ++c) diffs.insert(((d.cells[i][c] - d.cells[j][c]) % 5 + 5) % 5);
            CHECK(diffs == std::multiset<int>{0, 1, 2, 3, 4});
        }
    CHECK(verify_dm(d).ok);
}

TEST_CASE("identical rows break the difference property") {
    DiffMatrix d;
    d.t = 3;
    d.k = 2;
    d.cells = {{0, 1, 2}, {0, 1, 2}};
    CHECK(!verify_dm(d).ok);
}

TEST_CASE("the 7x35 matrix") {
    DiffMatrix d = build_dm_35_7();
    CHECK(d.k == 7);
    CHECK(d.t == 35);
    CHECK(d.cells[0].size() == 35);
    // First column is the fixed one.
    Block col0;
    for (int i = 0; i < 7; ++i) col0.push_back(d.cells[i][0]);
    CHECK(col0 == Block{0, 22, 22, 11, 11, 4, 4});
    CHECK(verify_dm(d).ok);

    // Middle and final segments agree up to the stated row swaps.
    const int swap_to[7] = {0, 2, 1, 4, 3, 6, 5};
    for (int i = 0; i < 7; ++i)
        for (int c = 0; c < 17; ++c) CHECK(d.cells[i][18 + c] == d.cells[swap_to[i]][1 + c]);

    // The row permutation maps the column multiset to itself.
    std::multiset<std::vector<int>> cols, permuted;
    for (int c = 0; c < 35; ++c) {
        std::vector<int> col(7), pcol(7);
        for (int i = 0; i < 7; ++i) {
            col[i] = d.cells[i][c];
            pcol[i] = d.cells[swap_to[i]][c];
        }
        cols.insert(col);
        permuted.insert(pcol);
    }
    CHECK(cols == permuted);
}

TEST_CASE("dm_to_oa") {
    DiffMatrix d5 = dm_from_prime_field(field_new(5, 1), 5);
    OrthArray oa = dm_to_oa(d5);
    CHECK(oa.k == 5);
    CHECK(oa.s == 5);
    CHECK(verify_oa(oa));

    OrthArray oa35 = dm_to_oa(build_dm_35_7());
    CHECK(oa35.k == 7);
    CHECK(oa35.s == 35);
    CHECK(verify_oa(oa35));

    DiffMatrix degenerate;
    degenerate.t = 4;
    degenerate.k = 1;
    degenerate.cells = {{0, 0, 0, 0}};
    CHECK(verify_oa(dm_to_oa(degenerate)));

    DiffMatrix lam2;
    lam2.t = 2;
    lam2.k = 2;
    lam2.lambda = 2;
    lam2.cells = {{0, 0, 0, 0}, {0, 0, 1, 1}};
    CHECK_THROWS_AS(dm_to_oa(lam2), std::invalid_argument);
}

TEST_CASE("dm_grid rows and columns partition") {
    for (int q : {5, 7}) {
        for (int k = 3; k <= 5 && k < q; ++k) {
            DiffMatrix d = dm_from_prime_field(field_new(q, 1), k + 1);
            BlockGrid g = dm_grid(d);
            CHECK(g.rows == q);
            CHECK(g.cols == q);
            CHECK(g.block_size == k);
            CHECK(g.v == k * q);
            CHECK((int)g.parallel_cols.size() == q);
            CHECK(verify_grid(g));
            // Independent column partition check.
            for (int c = 0; c < q; ++c) {
                std::set<int> pts;
                for (int r = 0; r < q; ++r) pts.insert(g.cells[r][c].begin(), g.cells[r][c].end());
                CHECK((int)pts.size() == g.v);
            }
        }
    }
}

TEST_CASE("dm_grid of GF(7) rows matches the RTD(4,7) parameters") {
    DiffMatrix d = dm_from_prime_field(field_new(7, 1), 5);
    Allocation a = grid_to_allocation(dm_grid(d));
    AllocationCert cert = verify_allocation(a);
    CHECK(cert.valid);
    CHECK(a.v == 28);
    CHECK(cert.rounds == 7);
    CHECK(a.rounds[0].size() == 7);
    CHECK((int)a.columns.size() == 7);
}

TEST_CASE("degenerate single-column grid") {
    DiffMatrix d;
    d.t = 1;
    d.k = 3;
    d.cells = {{0}, {0}, {0}};
    BlockGrid g = dm_grid(d);
    CHECK(g.rows == 1);
    CHECK(g.cols == 1);
    CHECK(verify_grid(g));
}


TEST_CASE("searched small QDM passes verify_qdm and feeds the grid") {
    QuasiDiffMatrix q = sgp_test::search_qdm(4, 0, 1, 3, 12);
    REQUIRE(q.n > 0);
    CHECK(verify_qdm(q).ok);

    // A column with two empties is rejected.
    QuasiDiffMatrix bad = q;
    bool planted = false;
    for (size_t c = 0; c < bad.cells[0].size() && !planted; ++c) {
        int empties = 0;
        for (int i = 0; i < bad.k; ++i) empties += bad.cells[i][c] == kEmptyCell;
        if (empties == 1) {
            for (int i = 0; i < bad.k; ++i)
                if (bad.cells[i][c] != kEmptyCell) {
                    bad.cells[i][c] = kEmptyCell;
                    planted = true;
                    break;
                }
        }
    }
    REQUIRE(planted);
    CHECK(!verify_qdm(bad).ok);

    BlockGrid g = qdm_grid(q);
    CHECK(g.rows == q.n);
    CHECK(g.cols == q.n + q.u);
    CHECK(g.block_size == q.k - 1);
    CHECK((int)g.parallel_cols.size() == q.n - (q.k - 2) * q.u);
    CHECK(verify_grid(g));
    Allocation a = grid_to_allocation(g);
    CHECK(verify_allocation(a).valid);

    BlockGrid ge = qdm_grid_extended(q);
    CHECK(ge.rows == q.n + 1);
    CHECK((int)ge.parallel_cols.size() == q.u);
    CHECK(verify_grid(ge));
    Allocation ae = grid_to_allocation(ge);
    CHECK(verify_allocation(ae).valid);
    CHECK((int)ae.rounds.size() == q.n + 1);

    // Adding a point on the surviving column keeps everything valid.
    Allocation plus = add_points(ae, 1);
    AllocationCert cert = verify_allocation(plus);
    CHECK(cert.valid);
    CHECK(plus.v == a.v + 1);
}

TEST_CASE("a difference matrix is the u=0 special case") {
    DiffMatrix d = dm_from_prime_field(field_new(5, 1), 4);
    QuasiDiffMatrix q;
    q.n = 5;
    q.k = 4;
    q.lambda = 1;
    q.mu = 1;
    q.u = 0;
    q.cells = d.cells;
    CHECK(verify_qdm(q).ok);
    BlockGrid from_dm = dm_grid(d);
    BlockGrid from_qdm = qdm_grid(q);
    CHECK(from_qdm.rows == from_dm.rows);
    CHECK(from_qdm.parallel_cols.size() == from_dm.parallel_cols.size());
    CHECK(verify_grid(from_qdm));
    // u=0: the extended grid is the plain grid.
    BlockGrid ext = qdm_grid_extended(q);
    CHECK(ext.rows == from_qdm.rows);
}

TEST_CASE("itd_from_qdm") {
    // DM case: empty hole, so the ITD is a plain TD.
    DiffMatrix d = dm_from_prime_field(field_new(5, 1), 4);
    QuasiDiffMatrix q0;
    q0.n = 5;
    q0.k = 4;
    q0.lambda = 1;
    q0.mu = 1;
    q0.u = 0;
    q0.cells = d.cells;
    GroupedDesign td = itd_from_qdm(q0);
    CHECK(td.hole.empty());
    CHECK(verify_itd(td).valid);
    CHECK(verify_td(td).valid);

    QuasiDiffMatrix q = sgp_test::search_qdm(4, 0, 1, 3, 12);
    REQUIRE(q.n > 0);
    GroupedDesign itd = itd_from_qdm(q);
    CHECK(itd.v == q.k * (q.n + q.u));
    CHECK((int)itd.hole.size() == q.k * q.u);
    CHECK(verify_itd(itd).valid);
}

TEST_SUITE_END();
