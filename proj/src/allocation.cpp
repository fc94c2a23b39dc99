#include "sgp/allocation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sgp {

void Allocation::canonicalize() {
    for (size_t r = 0; r < rounds.size(); ++r) {
        Round& round = rounds[r];
        std::vector<int> order(round.size());
        std::iota(order.begin(), order.end(), 0);
        for (auto& b : round) std::sort(b.begin(), b.end());
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return round[x] < round[y];
        });
        Round sorted;
        std::vector<int> pos(round.size());
        for (size_t i = 0; i < order.size(); ++i) {
            sorted.push_back(std::move(round[order[i]]));
            pos[order[i]] = (int)i;
        }
        round = std::move(sorted);
        for (auto& col : columns)
            for (auto& [cr, cb] : col)
                if (cr == (int)r) cb = pos[cb];
    }
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    for (auto& col : columns) std::sort(col.begin(), col.end());
}

std::vector<int> Allocation::labels() const {
    std::set<int> s;
    for (const auto& round : rounds)
        for (const auto& b : round) s.insert(b.begin(), b.end());
    return std::vector<int>(s.begin(), s.end());
}

int max_rounds(int v, int k) {
    if (k < 2) throw std::invalid_argument("max_rounds: block size must be >= 2");
    return (v - 1) / (k - 1);
}

void refresh_shape(Allocation& a) {
    a.sizes.clear();
    a.counts.clear();
    if (a.rounds.empty()) return;
    std::map<int, int> hist;
    for (const auto& b : a.rounds[0]) hist[(int)b.size()]++;
    for (auto [k, m] : hist) {
        a.sizes.push_back(k);
        a.counts.push_back(m);
    }
}

AllocationCert verify_allocation(const Allocation& a) {
    AllocationCert cert;
    cert.rounds = (int)a.rounds.size();

    std::vector<int> labels = a.labels();
    if (!a.rounds.empty() && (int)labels.size() != a.v) {
        cert.violations.push_back("point count mismatch: header v=" + std::to_string(a.v) +
                                  " but " + std::to_string(labels.size()) + " labels appear");
    }
    if (a.sizes.empty() || a.sizes.size() > 2 || a.sizes.size() != a.counts.size()) {
        cert.violations.push_back("malformed sizes/counts");
        return cert;
    }
    int k1 = a.sizes[0];
    cert.max_bound = a.v > 0 && k1 >= 2 ? max_rounds(a.v, k1) : 0;

    long declared = 0;
    for (size_t i = 0; i < a.sizes.size(); ++i) declared += (long)a.sizes[i] * a.counts[i];
    if (declared != a.v && !a.rounds.empty())
        cert.violations.push_back("sizes/counts do not sum to v");

    // Pair tracking over a dense relabeling of whatever labels occur.
    std::map<int, int> idx;
    for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = (int)i;
    size_t nlab = labels.size();
    std::vector<char> pair_seen(nlab * nlab, 0);

    for (size_t r = 0; r < a.rounds.size(); ++r) {
        const Round& round = a.rounds[r];
        std::map<int, int> hist;
        std::set<int> covered;
        size_t npts = 0;
        for (const auto& b : round) {
            hist[(int)b.size()]++;
            npts += b.size();
            covered.insert(b.begin(), b.end());
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j) {
                    auto pi = idx.find(b[i]), pj = idx.find(b[j]);
                    if (b[i] == b[j]) {
                        cert.violations.push_back("duplicate point " + std::to_string(b[i]) +
                                                  " inside a block of round " + std::to_string(r));
                        continue;
                    }
                    size_t u = std::min(pi->second, pj->second);
                    size_t w = std::max(pi->second, pj->second);
                    if (pair_seen[u * nlab + w]) {
                        cert.violations.push_back("pair {" + std::to_string(b[i]) + "," +
                                                  std::to_string(b[j]) + "} repeated (round " +
                                                  std::to_string(r) + ")");
                    }
                    pair_seen[u * nlab + w] = 1;
                }
        }
        if (covered.size() != npts || npts != labels.size())
            cert.violations.push_back("round " + std::to_string(r) +
                                      " does not partition the point set");
        std::map<int, int> expect;
        for (size_t i = 0; i < a.sizes.size(); ++i)
            if (a.counts[i] > 0) expect[a.sizes[i]] = a.counts[i];
        if (hist != expect)
            cert.violations.push_back("round " + std::to_string(r) +
                                      " has the wrong block-size multiset");
    }

    cert.pairs_total = (long)nlab * ((long)nlab - 1) / 2;
    for (size_t u = 0; u < nlab; ++u)
        for (size_t w = u + 1; w < nlab; ++w) {
            if (pair_seen[u * nlab + w])
                ++cert.pairs_covered;
            else
                cert.missing_pairs.push_back({labels[u], labels[w]});
        }

    cert.valid = cert.violations.empty();
    cert.maximal = cert.valid && cert.rounds == cert.max_bound;
    return cert;
}

Allocation truncate_rounds(const Allocation& a, int r) {
    if (r < 0 || r > (int)a.rounds.size())
        throw std::invalid_argument("truncate: round count out of range");
    Allocation out = a;
    out.rounds.resize(r);
    for (auto& col : out.columns) {
        ColumnRef kept;
        for (auto& rb : col)
            if (rb.first < r) kept.push_back(rb);
        col = std::move(kept);
    }
    return out;
}

}  // namespace sgp
