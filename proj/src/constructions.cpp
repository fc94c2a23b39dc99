#include "sgp/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sgp {

Certificate ownsg_verify(const StarterSet& s) {
    Certificate cert;
    if (s.k < 2 || s.v % s.k != 0) {
        cert.violations.push_back("k must divide v");
        return cert;
    }
    auto modv = [&](long long x) { return (int)((x % s.v + s.v) % s.v); };
    for (size_t bi = 0; bi < s.blocks.size(); ++bi) {
        const Block& b = s.blocks[bi];
        if ((int)b.size() != s.k) cert.violations.push_back("block of wrong size");
        if (std::find(b.begin(), b.end(), 0) == b.end())
            cert.violations.push_back("block " + std::to_string(bi) + " does not contain 0");
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (modv(b[i] - b[j]) % s.k == 0)
                    cert.violations.push_back("block " + std::to_string(bi) +
                                              " has a within-block difference divisible by k");
    }
    for (size_t a = 0; a < s.blocks.size(); ++a)
        for (size_t b = a + 1; b < s.blocks.size(); ++b) {
            std::set<int> ia(s.blocks[a].begin(), s.blocks[a].end());
            for (int x : s.blocks[b])
                if (x != 0 && ia.count(x))
                    cert.violations.push_back("blocks " + std::to_string(a) + " and " +
                                              std::to_string(b) + " share the point " +
                                              std::to_string(x));
            std::map<int, int> diff_count;
            for (int x : s.blocks[a])
                for (int y : s.blocks[b]) diff_count[modv(x - y)]++;
            for (auto [d, c] : diff_count)
                if (c >= 2 && d % s.k == 0)
                    cert.violations.push_back("blocks " + std::to_string(a) + " and " +
                                              std::to_string(b) + " repeat the difference " +
                                              std::to_string(d));
        }
    cert.valid = cert.violations.empty();
    return cert;
}

namespace {

Round split_cliques_round(const std::vector<Block>& cliques, const Round& sub_round) {
    Round out;
    for (const auto& clique : cliques)
        for (const auto& sb : sub_round) {
            Block b;
            for (int pos : sb) b.push_back(clique[pos]);
            out.push_back(b);
        }
    return out;
}

}  // namespace

Allocation ownsg_expand(const StarterSet& s, const Allocation* extra_rounds) {
    Certificate cert = ownsg_verify(s);
    if (!cert.valid)
        throw std::invalid_argument("ownsg_expand: starter set fails verification: " +
                                    cert.violations.front());
    int g = s.v / s.k;
    Allocation a;
    a.v = s.v;
    for (const Block& base : s.blocks) {
        Round round;
        for (int m = 0; m < g; ++m) {
            Block b;
            for (int x : base) b.push_back((x + s.k * m) % s.v);
            round.push_back(b);
        }
        a.rounds.push_back(round);
    }
    for (int i = 0; i < s.k; ++i) {
        Block clique;
        for (int j = 0; j < g; ++j) clique.push_back(i + j * s.k);
        a.cliques.push_back(clique);
    }
    refresh_shape(a);
    a.canonicalize();
    if (extra_rounds) {
        if (s.k > g || g % s.k != 0)
            throw std::invalid_argument("ownsg_expand: extra rounds need k | v/k");
        a = augment_group_rounds(a, *extra_rounds);
    }
    return a;
}

Allocation molrs(int k, int n, const MolsSet& squares, const Allocation* extra_rounds) {
    if (k < 1 || k > n) throw std::invalid_argument("molrs: need 1 <= k <= n");
    for (const auto& sq : squares.squares)
        if (sq.n != n) throw std::invalid_argument("molrs: square of wrong order");

    Allocation a;
    a.v = k * n;
    Round columns;
    for (int j = 0; j < n; ++j) {
        Block b;
        for (int i = 0; i < k; ++i) b.push_back(i * n + j);
        columns.push_back(b);
    }
    a.rounds.push_back(columns);
    for (const auto& sq : squares.squares) {
        // Superimpose the first k rows on the ground array: block j collects
        // every cell carrying symbol j.
        Round round(n);
        for (int i = 0; i < k; ++i)
            for (int c = 0; c < n; ++c) round[sq.cells[i][c]].push_back(i * n + c);
        a.rounds.push_back(round);
    }
    for (int i = 0; i < k; ++i) {
        Block clique;
        for (int j = 0; j < n; ++j) clique.push_back(i * n + j);
        a.cliques.push_back(clique);
    }
    refresh_shape(a);
    a.canonicalize();
    if (extra_rounds) {
        if (n % k != 0) throw std::invalid_argument("molrs: extra rounds need k | n");
        a = augment_group_rounds(a, *extra_rounds);
    }
    return a;
}

Block find_unused_clique(const Allocation& a, int want) {
    std::vector<int> labels = a.labels();
    int nl = (int)labels.size();
    std::map<int, int> idx;
    for (int i = 0; i < nl; ++i) idx[labels[i]] = i;
    std::vector<char> adj((size_t)nl * nl, 0);
    for (const auto& round : a.rounds)
        for (const auto& b : round)
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j) {
                    int u = idx[b[i]], w = idx[b[j]];
                    adj[(size_t)u * nl + w] = adj[(size_t)w * nl + u] = 1;
                }
    Block best, cur;
    // Lexicographic depth-first search over label indices.
    auto dfs = [&](auto&& self, int start) -> bool {
        if ((int)cur.size() == want) return true;
        if ((int)cur.size() > (int)best.size()) best = cur;
        for (int x = start; x < nl; ++x) {
            bool ok = true;
            for (int y : cur)
                if (adj[(size_t)y * nl + x]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(x);
            if (self(self, x + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (dfs(dfs, 0)) best = cur;
    Block out;
    for (int i : best) out.push_back(labels[i]);
    return out;
}

Allocation augment_group_rounds(const Allocation& a, const Allocation& sub) {
    if (a.cliques.empty())
        throw std::invalid_argument("augment_group_rounds: no clique metadata");
    size_t g = a.cliques[0].size();
    for (const auto& c : a.cliques)
        if (c.size() != g)
            throw std::invalid_argument("augment_group_rounds: cliques of unequal size");
    if ((size_t)sub.v != g)
        throw std::invalid_argument("augment_group_rounds: sub-allocation has the wrong order");

    Allocation out = a;
    std::vector<Block> cliques = a.cliques;
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    for (const auto& sub_round : sub.rounds)
        out.rounds.push_back(split_cliques_round(cliques, sub_round));
    // The cliques are consumed; look for a replacement removable set.
    out.cliques.clear();
    out.canonicalize();
    int k1 = out.sizes.empty() ? 2 : out.sizes[0];
    Block leftover = find_unused_clique(out, k1 - 1);
    if (leftover.size() >= 2) out.cliques.push_back(leftover);
    return out;
}

}  // namespace sgp
