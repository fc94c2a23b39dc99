#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sgp {

// One published solution row: v, block sizes (k2 = 0 for a single size),
// blocks per round of each size, the round-count bound, the solution
// descriptor and the rounds it achieves.
struct CatalogRow {
    int v = 0;
    int k1 = 0;
    int k2 = 0;
    int m1 = 0;
    int m2 = 0;
    int max = 0;
    std::string method;
    int r = 0;
};

class Catalog {
public:
    static Catalog load(const std::string& path);

    const std::vector<CatalogRow>& rows() const { return rows_; }

    // All rows for v, optionally restricted to a size set {k} / {k1,k2}.
    std::vector<CatalogRow> lookup(int v) const;
    std::vector<CatalogRow> lookup(int v, int k1, int k2 = 0) const;
    std::optional<CatalogRow> find(int v, int k1, int k2, int m1, int m2) const;

private:
    std::vector<CatalogRow> rows_;
};

// Parsed solution descriptor. Base kinds mirror the published notation;
// modifiers cover point removal and addition variants.
struct MethodExpr {
    enum class Base {
        KTS,     // KTS(v)
        NKTS,    // NKTS(v)
        RBIBD,   // RBIBD(v,k)
        RTD,     // RTD(k,n)
        RGDD,    // RGDD(v,k,g)
        URD,     // URD(v,k,k1)
        RITD,    // RITD(n1,n2;k)
        MOLRS,   // MOLRs(k,n)
        OWNSG,   // ownSG(v,k)
        SINGLE,  // single round
    } base = Base::SINGLE;
    std::vector<int> args;

    int g_rounds = 0;  // +G(t)

    enum class Mod {
        None,
        MinusOne,     // -1: one point removed
        MinusT,       // -t, t>1: t points removed from an unused clique
        MinusTB,      // -t,B: final round dropped, t points of its final block removed
        PlusT,        // +t: t points added (no grid structure)
        DmPlusT,      // _D+t: t points added on difference-matrix columns
        QdmPlusT,     // _Q(g,u)+t: t points added on quasi-difference-matrix columns
    } mod = Mod::None;
    int t = 0;
    int q_g = 0;  // _Q(g,u) parameters
    int q_u = 0;

    std::string str() const;  // canonical rendering
};

// Parses the catalog notation, e.g. "RTD(5,7)-6", "ownSG(98,7)+G(1)",
// "RTD(5,15)_Q(14,1)+1", "URD({30,5,2})", "RBIBD(16,4)-3,B".
// Throws std::invalid_argument on garbage.
MethodExpr parse_method(const std::string& s);

}  // namespace sgp
