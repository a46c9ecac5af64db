#include "listpart/meta.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>

namespace listpart {

bool verify_certificate(const PartitionMatrix& m, const ListFamily& fam,
                        const DerectCertificate& cert) {
    const auto& seq = cert.sequence;
    if (seq.size() < 2) return false;
    for (const auto& s : seq) {
        if (s.count() < 2) return false;
        if (!fam.contains(s)) return false;
    }
    std::vector<PartSubset> distinct;
    for (const auto& s : seq)
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end())
            distinct.push_back(s);
    if (!is_purifying(m, distinct)) return false;
    Relation r = star_relation(m, seq[0], seq[1]);
    for (std::size_t i = 2; i < seq.size(); ++i)
        r = compose(r, star_relation(m, seq[i - 1], seq[i]));
    return !is_rectangular(r);
}

namespace {

// Candidate subsets have at most 3 elements, so a relation between two of
// them fits into 9 bits (row-major over the candidates' sorted elements).
using RelMask = std::uint16_t;

struct Candidate {
    PartSubset set;
    std::vector<int> elems;  // sorted
};

RelMask relation_mask(const PartitionMatrix& m, const Candidate& a, const Candidate& b) {
    RelMask mask = 0;
    for (std::size_t i = 0; i < a.elems.size(); ++i)
        for (std::size_t j = 0; j < b.elems.size(); ++j)
            if (m.at(a.elems[i], b.elems[j]) == Pattern::Star)
                mask |= static_cast<RelMask>(1u << (i * b.elems.size() + j));
    return mask;
}

RelMask compose_masks(RelMask r1, std::size_t rows, std::size_t mid, RelMask r2,
                      std::size_t cols) {
    RelMask out = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            for (std::size_t j = 0; j < mid; ++j)
                if ((r1 >> (i * mid + j) & 1u) && (r2 >> (j * cols + k) & 1u)) {
                    out |= static_cast<RelMask>(1u << (i * cols + k));
                    break;
                }
        }
    return out;
}

bool mask_rectangular(RelMask r, std::size_t rows, std::size_t cols) {
    for (std::size_t i = 0; i < rows; ++i) {
        RelMask ri = (r >> (i * cols)) & ((1u << cols) - 1u);
        if (!ri) continue;
        for (std::size_t j = i + 1; j < rows; ++j) {
            RelMask rj = (r >> (j * cols)) & ((1u << cols) - 1u);
            if (rj && rj != ri && (ri & rj)) return false;
        }
    }
    return true;
}

// Maximal cliques of the purity graph via Bron-Kerbosch with pivoting.
void bron_kerbosch(const std::vector<Bitset>& adj, Bitset r, Bitset p, Bitset x,
                   std::vector<Bitset>& out, std::size_t cap, bool& truncated) {
    if (out.size() >= cap) {
        truncated = true;
        return;
    }
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    Bitset px = p | x;
    std::size_t best = 0;
    std::size_t pivot = px.find_first();
    for (auto v = px.find_first(); v != Bitset::npos; v = px.find_next(v)) {
        std::size_t deg = (adj[v] & p).count();
        if (deg >= best) {
            best = deg;
            pivot = v;
        }
    }
    Bitset ext = p & ~adj[pivot];
    for (auto v = ext.find_first(); v != Bitset::npos; v = ext.find_next(v)) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(adj, r2, p & adj[v], x & adj[v], out, cap, truncated);
        if (truncated) return;
        p.reset(v);
        x.set(v);
    }
}

struct State {
    int start, cur;
    RelMask rel;
    bool operator<(const State& o) const {
        return std::tie(start, cur, rel) < std::tie(o.start, o.cur, o.rel);
    }
};

}  // namespace

DerectSearch find_derect_sequence(const PartitionMatrix& m, const ListFamily& fam,
                                  const SearchLimits& limits) {
    const int d = m.dim();
    const auto t0 = std::chrono::steady_clock::now();
    auto timed_out = [&] {
        if (limits.max_millis <= 0) return false;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        return ms > limits.max_millis;
    };

    // Candidates: self-pure subsets of size 2 or 3 inside the closure.
    std::vector<Candidate> cands;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    auto consider = [&](std::vector<int> elems) {
        PartSubset s(static_cast<std::size_t>(d));
        for (int e : elems) s.set(e);
        if (!fam.contains(s)) return;
        if (!is_pure(m, s, s)) return;
        cands.push_back(Candidate{std::move(s), std::move(elems)});
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            consider({i, j});
            for (int k = j + 1; k < d; ++k) consider({i, j, k});
        }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.set < b.set; });

    const std::size_t nc = cands.size();
    if (nc == 0) return {std::nullopt, true};

    // Purity graph: X ~ Y iff M restricted to X x Y is pure.
    std::vector<Bitset> adj(nc, Bitset(nc));
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = a + 1; b < nc; ++b)
            if (is_pure(m, cands[a].set, cands[b].set)) {
                adj[a].set(b);
                adj[b].set(a);
            }

    std::vector<Bitset> cliques;
    bool clique_cap_hit = false;
    {
        Bitset r(nc), p(nc), x(nc);
        p.set();
        bron_kerbosch(adj, r, p, x, cliques, limits.max_cliques, clique_cap_hit);
    }
    std::sort(cliques.begin(), cliques.end());

    std::optional<DerectCertificate> best;
    bool truncated = clique_cap_hit;
    std::size_t states_used = 0;

    for (const auto& clique : cliques) {
        if (timed_out()) {
            truncated = true;
            break;
        }
        std::vector<int> members;
        for (auto v = clique.find_first(); v != Bitset::npos; v = clique.find_next(v))
            members.push_back(static_cast<int>(v));

        std::map<State, std::pair<State, int>> parent;  // state -> (prev, appended cand)
        std::deque<State> queue;
        std::optional<State> found;

        auto visit = [&](State st, std::optional<std::pair<State, int>> from) {
            if (parent.count(st)) return;
            parent.emplace(st, from ? *from : std::make_pair(st, -1));
            if (!mask_rectangular(st.rel, cands[st.start].elems.size(),
                                  cands[st.cur].elems.size())) {
                if (!found) found = st;
                return;
            }
            queue.push_back(st);
        };

        for (int a : members) {
            for (int b : members) {
                RelMask h = relation_mask(m, cands[a], cands[b]);
                if (!h) continue;  // empty stays empty: never derectangularising
                visit(State{a, b, h}, std::nullopt);
                if (found) break;
            }
            if (found) break;
        }
        while (!found && !queue.empty()) {
            if (++states_used > limits.max_states || timed_out()) {
                truncated = true;
                break;
            }
            State st = queue.front();
            queue.pop_front();
            for (int nxt : members) {
                RelMask h = relation_mask(m, cands[st.cur], cands[nxt]);
                RelMask comp = compose_masks(st.rel, cands[st.start].elems.size(),
                                             cands[st.cur].elems.size(), h,
                                             cands[nxt].elems.size());
                if (!comp) continue;
                visit(State{st.start, nxt, comp}, std::make_pair(st, nxt));
                if (found) break;
            }
        }

        if (found) {
            std::vector<int> chain{found->cur};
            State at = *found;
            while (true) {
                auto [prev, appended] = parent.at(at);
                if (appended < 0) {
                    chain.push_back(at.start);
                    break;
                }
                at = prev;
                chain.push_back(at.cur);
            }
            std::reverse(chain.begin(), chain.end());
            DerectCertificate cert;
            for (int c : chain) cert.sequence.push_back(cands[c].set);
            LISTPART_REQUIRE(verify_certificate(m, fam, cert),
                             "search produced an invalid certificate");
            // Shortest first, then lexicographic on the subset sequence.
            auto lex_less = [](const DerectCertificate& a, const DerectCertificate& b) {
                if (a.sequence.size() != b.sequence.size())
                    return a.sequence.size() < b.sequence.size();
                return a.sequence < b.sequence;
            };
            if (!best || lex_less(cert, *best)) best = std::move(cert);
        }
    }

    if (best) return {best, true};
    return {std::nullopt, !truncated};
}

Classification classify(const PartitionMatrix& m, const ListFamily& fam,
                        const SearchLimits& limits) {
    DerectSearch res = find_derect_sequence(m, fam, limits);
    if (res.certificate)
        return {Classification::Verdict::Hard, res.certificate};
    if (res.complete) return {Classification::Verdict::Tractable, std::nullopt};
    return {Classification::Verdict::Inconclusive, std::nullopt};
}

namespace {

// The five 3x3 building blocks, rows/cols indexed by c in [3].
constexpr char kStart[] = "**0**000*";
constexpr char kEnd[] = "*000**0**";
constexpr char kBij[] = "*000*000*";
constexpr char kZero[] = "000000000";
constexpr char kId[] = "100010001";
// Overlay of the start and end blocks (star wherever either has a star);
// used for the j = 1 = k diagonal where the construction pins both.  The
// single block is pure and its star relation is already non-rectangular.
constexpr char kStartEnd[] = "**0***0**";

Pattern pattern_of(char c) {
    return c == '0' ? Pattern::Zero : c == '1' ? Pattern::One : Pattern::Star;
}

}  // namespace

GadgetOutput reduce_independent_set(const Graph& g, int k) {
    const int n = g.n;
    if (k < 1 || k > n) throw invalid_k();
    const int d = n * k * 3;
    auto part_index = [&](int v, int j, int c) { return (v * k + j) * 3 + c; };

    std::vector<std::string> names(d);
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            for (int c = 0; c < 3; ++c)
                names[part_index(v, j, c)] =
                    "v" + std::to_string(v + 1) + "j" + std::to_string(j + 1) + "c" +
                    std::to_string(c + 1);

    std::vector<Pattern> entries(static_cast<std::size_t>(d) * d, Pattern::Zero);
    auto put_block = [&](int v, int j, int v2, int j2, const char* block) {
        for (int c = 0; c < 3; ++c)
            for (int c2 = 0; c2 < 3; ++c2)
                entries[static_cast<std::size_t>(part_index(v, j, c)) * d +
                        part_index(v2, j2, c2)] = pattern_of(block[c * 3 + c2]);
    };

    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            for (int v2 = 0; v2 < n; ++v2)
                for (int j2 = 0; j2 < k; ++j2) {
                    const char* block = kId;
                    if (v == v2 && j == j2) {
                        if (k == 1) block = kStartEnd;
                        else if (j == 0) block = kStart;
                        else if (j == k - 1) block = kEnd;
                        else block = kBij;
                    } else if (v != v2 && !g.has_edge(v, v2)) {
                        if (j2 == j + 1 || j == j2 + 1) block = kBij;
                        else if (j2 > j + 1 || j > j2 + 1) block = kZero;
                        // j == j2 falls through to Id
                    }
                    put_block(v, j, v2, j2, block);
                }

    PartSet parts(std::move(names));
    std::vector<PartSubset> family;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) {
            PartSubset s(static_cast<std::size_t>(d));
            for (int c = 0; c < 3; ++c) s.set(part_index(v, j, c));
            family.push_back(std::move(s));
        }
    PartitionMatrix matrix(parts, std::move(entries));
    return GadgetOutput{std::move(matrix), ListFamily(parts, std::move(family))};
}

}  // namespace listpart
