#include "listpart/core.hpp"

#include <algorithm>

namespace listpart {

PartSet::PartSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw input_error("part set must contain at least one part");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw input_error("empty part name");
        auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
        (void)it;
        if (!inserted) throw input_error("duplicate part name: " + names_[i]);
    }
}

std::optional<int> PartSet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PartSubset PartSet::singleton(int i) const {
    PartSubset s(names_.size());
    s.set(i);
    return s;
}

PartitionMatrix::PartitionMatrix(PartSet parts, std::vector<Pattern> entries)
    : parts_(std::move(parts)), entries_(std::move(entries)) {
    const int d = parts_.size();
    if (static_cast<int>(entries_.size()) != d * d)
        throw input_error("matrix entry count does not match part set size");
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (entries_[i * d + j] != entries_[j * d + i])
                throw input_error("matrix is not symmetric at (" + parts_.name(i) + "," +
                                  parts_.name(j) + ")");
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n(vertex_count) {
    if (n < 0) throw input_error("negative vertex count");
    adj.assign(n, Bitset(n));
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (adj[u].test(v)) throw input_error("duplicate edge");
        adj[u].set(v);
        adj[v].set(u);
    }
    edges = std::move(edge_list);
    std::sort(edges.begin(), edges.end());
}

Relation::Relation(PartSubset domain_x, PartSubset domain_y)
    : dom_x_(std::move(domain_x)), dom_y_(std::move(domain_y)) {
    LISTPART_REQUIRE(dom_x_.size() == dom_y_.size(), "relation domains over different universes");
    rows_.assign(dom_x_.size(), Bitset(dom_x_.size()));
}

void Relation::add(int i, int j) {
    LISTPART_REQUIRE(dom_x_.test(i) && dom_y_.test(j), "relation pair outside its domains");
    rows_[i].set(j);
}

bool Relation::is_empty() const {
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i))
        if (rows_[i].any()) return false;
    return true;
}

std::size_t Relation::pair_count() const {
    std::size_t total = 0;
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i))
        total += rows_[i].count();
    return total;
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i))
        for (auto j = rows_[i].find_first(); j != Bitset::npos; j = rows_[i].find_next(j))
            out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

PartSubset Relation::project1() const {
    PartSubset p(dom_x_.size());
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i))
        if (rows_[i].any()) p.set(i);
    return p;
}

PartSubset Relation::project2() const {
    PartSubset p(dom_x_.size());
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i)) p |= rows_[i];
    return p;
}

Relation Relation::inverse() const {
    Relation inv(dom_y_, dom_x_);
    for (auto i = dom_x_.find_first(); i != Bitset::npos; i = dom_x_.find_next(i))
        for (auto j = rows_[i].find_first(); j != Bitset::npos; j = rows_[i].find_next(j))
            inv.rows_[j].set(i);
    return inv;
}

Relation Relation::restricted(const PartSubset& x, const PartSubset& y) const {
    Relation r(dom_x_ & x, dom_y_ & y);
    for (auto i = r.dom_x_.find_first(); i != Bitset::npos; i = r.dom_x_.find_next(i))
        r.rows_[i] = rows_[i] & r.dom_y_;
    return r;
}

Relation operator&(const Relation& a, const Relation& b) {
    LISTPART_REQUIRE(a.universe() == b.universe(), "relation intersection across universes");
    Relation r(a.dom_x_ & b.dom_x_, a.dom_y_ & b.dom_y_);
    for (auto i = r.dom_x_.find_first(); i != Bitset::npos; i = r.dom_x_.find_next(i))
        r.rows_[i] = a.rows_[i] & b.rows_[i] & r.dom_y_;
    return r;
}

Relation star_relation(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y) {
    Relation r(x, y);
    for (auto i = x.find_first(); i != Bitset::npos; i = x.find_next(i))
        for (auto j = y.find_first(); j != Bitset::npos; j = y.find_next(j))
            if (m.at(static_cast<int>(i), static_cast<int>(j)) == Pattern::Star)
                r.add(static_cast<int>(i), static_cast<int>(j));
    return r;
}

Relation compose(const Relation& r1, const Relation& r2) {
    LISTPART_REQUIRE(r1.domain_y() == r2.domain_x(),
                     "compose: inner domains do not match");
    Relation r(r1.domain_x(), r2.domain_y());
    for (auto i = r1.domain_x().find_first(); i != Bitset::npos;
         i = r1.domain_x().find_next(i)) {
        Bitset acc(r1.universe());
        const Bitset& mid = r1.row(i);
        for (auto j = mid.find_first(); j != Bitset::npos; j = mid.find_next(j)) acc |= r2.row(j);
        for (auto k = acc.find_first(); k != Bitset::npos; k = acc.find_next(k))
            r.add(static_cast<int>(i), static_cast<int>(k));
    }
    return r;
}

// R is rectangular iff any two non-empty rows are equal or disjoint.
bool is_rectangular(const Relation& r) {
    std::vector<const Bitset*> live;
    for (auto i = r.domain_x().find_first(); i != Bitset::npos; i = r.domain_x().find_next(i))
        if (r.row(i).any()) live.push_back(&r.row(i));
    for (std::size_t a = 0; a < live.size(); ++a)
        for (std::size_t b = a + 1; b < live.size(); ++b) {
            if (*live[a] == *live[b]) continue;
            if ((*live[a] & *live[b]).any()) return false;
        }
    return true;
}

std::vector<std::pair<PartSubset, PartSubset>> blocks(const Relation& r) {
    if (r.is_empty()) throw empty_relation();
    if (!is_rectangular(r)) throw not_rectangular();
    std::vector<std::pair<PartSubset, PartSubset>> out;
    for (auto i = r.domain_x().find_first(); i != Bitset::npos; i = r.domain_x().find_next(i)) {
        if (!r.row(i).any()) continue;
        bool merged = false;
        for (auto& [a, b] : out)
            if (b == r.row(i)) {
                a.set(i);
                merged = true;
                break;
            }
        if (!merged) {
            PartSubset a(r.domain_x().size());
            a.set(i);
            out.emplace_back(a, r.row(i));
        }
    }
    // Rows are scanned by increasing index, so blocks already sit in
    // least-element-of-A order.
    return out;
}

bool submatrix_has(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y,
                   Pattern p) {
    for (auto i = x.find_first(); i != Bitset::npos; i = x.find_next(i))
        for (auto j = y.find_first(); j != Bitset::npos; j = y.find_next(j))
            if (m.at(static_cast<int>(i), static_cast<int>(j)) == p) return true;
    return false;
}

bool is_pure(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y) {
    return !submatrix_has(m, x, y, Pattern::Zero) || !submatrix_has(m, x, y, Pattern::One);
}

bool is_purifying(const PartitionMatrix& m, const std::vector<PartSubset>& family) {
    for (const auto& x : family)
        for (const auto& y : family)
            if (!is_pure(m, x, y)) return false;
    return true;
}

bool is_star_rectangular(const PartitionMatrix& m, const PartSubset& x, const PartSubset& y) {
    return is_rectangular(star_relation(m, x, y));
}

ListFamily::ListFamily(PartSet parts, std::vector<PartSubset> members)
    : parts_(std::move(parts)) {
    for (const auto& s : members)
        LISTPART_REQUIRE(static_cast<int>(s.size()) == parts_.size(),
                         "family member over wrong universe");
    // keep inclusion-maximal members only
    for (const auto& s : members) {
        bool dominated = false;
        for (const auto& t : members)
            if (s != t && s.is_subset_of(t)) {
                dominated = true;
                break;
            }
        if (!dominated && std::find(maximal_.begin(), maximal_.end(), s) == maximal_.end())
            maximal_.push_back(s);
    }
    std::sort(maximal_.begin(), maximal_.end());
}

bool ListFamily::contains(const PartSubset& x) const {
    for (const auto& y : maximal_)
        if (x.is_subset_of(y)) return true;
    return false;
}

bool ListFamily::is_purifying_for(const PartitionMatrix& m) const {
    // Purity of all maximal pairs covers the whole closure: submatrices of
    // pure matrices are pure.
    return is_purifying(m, maximal_);
}

bool is_m_partition(const Graph& g, const ListFunction& lists, const PartitionMatrix& m,
                    const Assignment& sigma) {
    for (int v = 0; v < g.n; ++v)
        if (!lists[v].test(sigma[v])) return false;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            Pattern p = m.at(sigma[u], sigma[v]);
            if (g.has_edge(u, v) ? p == Pattern::Zero : p == Pattern::One) return false;
        }
    return true;
}

}  // namespace listpart
