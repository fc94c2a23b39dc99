#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <vector>

#include "sgp/diffmat.hpp"
#include "sgp/planner.hpp"

#include "qdm_search.hpp"

using namespace sgp;

namespace {

Planner& planner() {
    static Planner p{DataRepo(DataRepo::default_dir())};
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("planner");

TEST_CASE("method strings parse and reprint") {
    for (const char* s : {"KTS(21)", "NKTS(18)", "RBIBD(16,4)", "RTD(5,7)", "RGDD(24,4,3)",
                          "URD(92,4,2)", "RITD(10,2;5)", "MOLRs(6,6)", "ownSG(98,7)"}) {
        CHECK(parse_method(s).str() == s);
    }
    CHECK(parse_method("URD({30,5,2})").str() == "URD(30,5,2)");
    CHECK(parse_method("NKTS(18,3)").str() == "NKTS(18)");
    CHECK(parse_method("RTD(5,7)-6").str() == "RTD(5,7)-6");
    CHECK(parse_method("RBIBD(16,4)-3,B").str() == "RBIBD(16,4)-3,B");
    CHECK(parse_method("ownSG(98,7)+G(1)").str() == "ownSG(98,7)+G(1)");
    CHECK(parse_method("RTD(6,12)+G(1)-1").str() == "RTD(6,12)+G(1)-1");
    CHECK(parse_method("RTD(5,14)_D+3").str() == "RTD(5,14)_D+3");
    CHECK(parse_method("RTD(5,15)_Q(14,1)+1").str() == "RTD(5,15)_Q(14,1)+1");
    CHECK(parse_method("RTD(5,30)+G(6)-5,B").str() == "RTD(5,30)+G(6)-5,B");
    CHECK(parse_method("NKTS(18)+1").str() == "NKTS(18)+1");
    CHECK_THROWS_AS(parse_method("FOO(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_method("RTD(5,7)x"), std::invalid_argument);
}

TEST_CASE("catalog loads and basic lookups work") {
    const Catalog& cat = planner().catalog();
    CHECK(cat.rows().size() > 1000);
    auto r30 = cat.lookup(30);
    CHECK(r30.size() == 3);  // k=3, k=5 and the {4,5} row
    auto r30k5 = cat.lookup(30, 5);
    REQUIRE(r30k5.size() == 1);
    CHECK(r30k5[0].method == "URD({30,5,2})");
    CHECK(r30k5[0].max == 7);
    CHECK(r30k5[0].r == 6);
    auto r120 = cat.find(120, 8, 0, 15, 0);
    REQUIRE(r120.has_value());
    CHECK(r120->method == "RBIBD(120,8)");
    CHECK(r120->r == 17);
    auto r152 = cat.lookup(152, 4);
    REQUIRE(r152.size() == 1);
    CHECK(r152[0].method == "RGDD(152,4,2)");
    CHECK(r152[0].r == 50);
}

TEST_CASE("algorithm worked examples") {
    PlanNode kts = planner().optimal(21, 3);
    CHECK(kts.method == "KTS(21)");
    CHECK(kts.r == 10);
    CHECK(kts.status == PlanStatus::DataRequired);

    PlanNode rgdd = planner().optimal(24, 4);
    CHECK(rgdd.method == "RGDD(24,4,3)");
    CHECK(rgdd.r == 7);
    CHECK(rgdd.status == PlanStatus::Constructed);

    PlanNode urd92 = planner().optimal(92, 4);
    CHECK(urd92.method == "URD(92,4,2)");
    CHECK(urd92.r == 29);
    CHECK(urd92.max == 30);
    CHECK(urd92.status == PlanStatus::DataRequired);

    PlanNode v20 = planner().optimal(20, 4);
    CHECK(v20.method == "RTD(4,5)");
    CHECK(v20.r == 5);
    CHECK(v20.status == PlanStatus::Constructed);

    PlanNode rtd35 = planner().optimal(35, 5);
    CHECK(rtd35.method == "RTD(5,7)");
    CHECK(rtd35.r == 7);
    CHECK(rtd35.max == 8);
    CHECK(rtd35.status == PlanStatus::Constructed);
}

TEST_CASE("special-case selection") {
    PlanNode m36 = planner().optimal(36, 6);
    CHECK(m36.method == "MOLRs(6,6)+G(1)");
    CHECK(m36.r == 3);
    CHECK(m36.status == PlanStatus::Constructed);

    PlanNode own60 = planner().optimal(60, 6);
    CHECK(own60.method == "ownSG(60,6)");
    CHECK(own60.r == 7);
    CHECK(own60.status == PlanStatus::Constructed);

    PlanNode ritd50 = planner().optimal(50, 5);
    CHECK(ritd50.method == "RITD(10,2;5)+G(1)");
    CHECK(ritd50.r == 9);
    CHECK(ritd50.status == PlanStatus::Constructed);

    PlanNode urd30 = planner().optimal(30, 5);
    CHECK(urd30.method == "URD(30,5,2)");
    CHECK(urd30.r == 6);
    CHECK(urd30.status == PlanStatus::Constructed);

    PlanNode ritd110 = planner().optimal(110, 5);
    CHECK(ritd110.method == "RITD(22,3;5)");
    CHECK(ritd110.r == 19);
    CHECK(ritd110.status == PlanStatus::DataRequired);
}

TEST_CASE("opt_rounds") {
    CHECK(planner().opt_rounds(12, 6) == 1);
    CHECK(planner().opt_rounds(30, 5) == 6);
    CHECK(planner().opt_rounds(4, 4) == 1);
    CHECK(planner().opt_rounds(14, 7) == 1);
    CHECK(planner().opt_rounds(28, 4) == 9);
}

TEST_CASE("no second round exists for (12,6) - exhaustive oracle") {
    // Brute force over all candidate 6-subsets containing 0 after the round
    // {0..5},{6..11}: every completion repeats a pair.
    std::vector<int> rest;
    auto repeats = [](const std::vector<int>& b) {
        int lo = 0, hi = 0;
        for (int x : b) (x < 6 ? lo : hi)++;
        return lo >= 2 || hi >= 2;
    };
    std::vector<int> pick;
    std::function<bool(int, int)> rec = [&](int pos, int start) {
        if (pos == 5) return !repeats(pick);
        for (int x = start; x < 12; ++x) {
            pick.push_back(x);
            if (rec(pos + 1, x + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    pick = {0};
    bool second_round_exists = rec(0, 1);
    CHECK(!second_round_exists);
}

TEST_CASE("plan_sga reconstructions") {
    PlanNode p29 = planner().plan_sga(SgaParams{29, 4, 5, 6, 1});
    CHECK(p29.method == "RTD(5,7)-6");
    CHECK(p29.r == 7);
    CHECK(p29.status == PlanStatus::Constructed);
    REQUIRE(p29.alloc.has_value());
    AllocationCert cert = verify_allocation(*p29.alloc);
    CHECK(cert.valid);
    CHECK(cert.rounds == 7);

    PlanNode p22 = planner().plan_sga(SgaParams{22, 3, 4, 2, 4});
    CHECK(p22.status == PlanStatus::Constructed);
    CHECK(p22.r == 7);

    PlanNode p71 = planner().plan_sga(SgaParams{71, 5, 6, 13, 1});
    CHECK(p71.method == "RTD(5,14)_D+1");
    CHECK(p71.r == 14);
    CHECK(p71.status == PlanStatus::DataRequired);

    CHECK_THROWS_AS(planner().plan_sga(SgaParams{29, 4, 6, 6, 1}), std::invalid_argument);
}

TEST_CASE("branch coverage: every divisor pair reaches a plan") {
    for (int v = 12; v <= 150; ++v)
        for (int k = 3; k <= v; ++k) {
            if (v % k != 0) continue;
            PlanNode node = planner().optimal(v, k);
            CHECK(node.r >= 1);
            CHECK(node.r <= node.max);
            CHECK(!node.method.empty());
            if (node.alloc) {
                CHECK((int)node.alloc->rounds.size() == node.r);
            }
        }
}


TEST_CASE("quasi-difference-matrix rows reconstruct from a data file") {
    namespace fs = std::filesystem;
    // Stage a minimal data directory holding a catalog and a searched QDM,
    // then drive the file-based grid reconstruction through the planner.
    fs::path dir = fs::temp_directory_path() / "sgp_qdm_test";
    fs::create_directories(dir / "qdm");
    {
        std::ofstream cat(dir / "catalog.tsv");
        cat << "12\t3\t-\t4\t0\t4\tRTD(3,4)\t4\n";
    }
    QuasiDiffMatrix q = sgp_test::search_qdm(4, 0, 1, 3, 12);
    REQUIRE(q.n > 0);
    REQUIRE(verify_qdm(q).ok);
    {
        std::ofstream f(dir / "qdm" / ("q_" + std::to_string(q.n) + "_4_1.txt"));
        f << "qdm n=" << q.n << " k=4 lambda=1 mu=0 u=1 group=Z" << q.n << "\n";
        for (const auto& row : q.cells) {
            for (size_t c = 0; c < row.size(); ++c)
                f << (c ? " " : "") << (row[c] == kEmptyCell ? std::string("-")
                                                             : std::to_string(row[c]));
            f << "\n";
        }
    }
    Planner local{DataRepo(dir.string())};
    // RTD(3, n+1) built from the staged matrix, one point added on the
    // extended grid.
    std::string method = "RTD(3," + std::to_string(q.n + 1) + ")_Q(" + std::to_string(q.n) +
                         ",1)+1";
    auto alloc = local.reconstruct(parse_method(method));
    REQUIRE(alloc.has_value());
    AllocationCert cert = verify_allocation(*alloc);
    CHECK(cert.valid);
    CHECK(cert.rounds == q.n + 1);          // extended: one extra round
    CHECK(alloc->v == 3 * (q.n + 1) + 1);   // one added point
    CHECK(alloc->sizes == std::vector<int>{3, 4});

    // t > u uses the plain grid (one fewer round); needs a matrix with at
    // least two plain columns, so search from n = 4 upward.
    QuasiDiffMatrix q2 = sgp_test::search_qdm(4, 0, 1, 4, 12);
    REQUIRE(q2.n >= 4);
    {
        std::ofstream f(dir / "qdm" / ("q_" + std::to_string(q2.n) + "_4_1.txt"));
        f << "qdm n=" << q2.n << " k=4 lambda=1 mu=0 u=1 group=Z" << q2.n << "\n";
        for (const auto& row : q2.cells) {
            for (size_t c = 0; c < row.size(); ++c)
                f << (c ? " " : "") << (row[c] == kEmptyCell ? std::string("-")
                                                             : std::to_string(row[c]));
            f << "\n";
        }
    }
    std::string method2 = "RTD(3," + std::to_string(q2.n + 1) + ")_Q(" + std::to_string(q2.n) +
                          ",1)+2";
    auto alloc2 = local.reconstruct(parse_method(method2));
    REQUIRE(alloc2.has_value());
    CHECK(verify_allocation(*alloc2).valid);
    CHECK((int)alloc2->rounds.size() == q2.n);
    fs::remove_all(dir);
}

TEST_SUITE_END();
