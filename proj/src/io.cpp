#include "listpart/io.hpp"

#include <fstream>
#include <sstream>

namespace listpart {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
    throw input_error(source + ":" + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& tok, const std::string& source, std::size_t line) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(source, line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

PartitionMatrix parse_matrix(const std::string& text, const std::string& source) {
    auto lines = split_lines(text);
    std::size_t ln = 0;
    while (ln < lines.size() && tokens(lines[ln]).empty()) ++ln;
    if (ln >= lines.size()) fail(source, 1, "missing part-name line");
    PartSet parts(tokens(lines[ln]));
    const int d = parts.size();
    std::vector<Pattern> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    int row = 0;
    for (++ln; ln < lines.size() && row < d; ++ln) {
        std::string symbols;
        for (char c : lines[ln])
            if (!isspace(static_cast<unsigned char>(c))) symbols += c;
        if (symbols.empty()) continue;
        if (static_cast<int>(symbols.size()) != d)
            fail(source, ln + 1,
                 "expected " + std::to_string(d) + " symbols, got " +
                     std::to_string(symbols.size()));
        for (char c : symbols) {
            switch (c) {
                case '0': entries.push_back(Pattern::Zero); break;
                case '1': entries.push_back(Pattern::One); break;
                case '*': entries.push_back(Pattern::Star); break;
                default: fail(source, ln + 1, std::string("invalid symbol '") + c + "'");
            }
        }
        ++row;
    }
    if (row != d) fail(source, lines.size(), "matrix has fewer rows than parts");
    return PartitionMatrix(std::move(parts), std::move(entries));
}

Graph parse_graph(const std::string& text, const std::string& source) {
    auto lines = split_lines(text);
    std::size_t ln = 0;
    while (ln < lines.size() && tokens(lines[ln]).empty()) ++ln;
    if (ln >= lines.size()) fail(source, 1, "missing header line 'n m'");
    auto head = tokens(lines[ln]);
    if (head.size() != 2) fail(source, ln + 1, "expected header 'n m'");
    long n = parse_long(head[0], source, ln + 1);
    long m = parse_long(head[1], source, ln + 1);
    if (n < 0 || m < 0) fail(source, ln + 1, "negative counts in header");
    std::vector<std::pair<int, int>> edges;
    long seen = 0;
    for (++ln; ln < lines.size(); ++ln) {
        auto toks = tokens(lines[ln]);
        if (toks.empty()) continue;
        if (seen >= m) fail(source, ln + 1, "more edges than declared");
        if (toks.size() != 2) fail(source, ln + 1, "expected 'u v'");
        long u = parse_long(toks[0], source, ln + 1);
        long v = parse_long(toks[1], source, ln + 1);
        if (u < 0 || v < 0 || u >= n || v >= n) fail(source, ln + 1, "vertex index out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ++seen;
    }
    if (seen != m) fail(source, lines.size(), "fewer edges than declared");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const input_error& e) {
        fail(source, 1, e.what());
    }
}

namespace {

PartSubset parse_subset(const std::vector<std::string>& names, const PartSet& parts,
                        const std::string& source, std::size_t line) {
    if (names.size() == 1 && names[0] == "*") return parts.full_subset();
    PartSubset s = parts.empty_subset();
    for (const auto& name : names) {
        auto idx = parts.index_of(name);
        if (!idx) fail(source, line, "unknown part name '" + name + "'");
        s.set(*idx);
    }
    return s;
}

}  // namespace

ListFunction parse_lists(const std::string& text, const PartSet& parts, int n,
                         const std::string& source) {
    ListFunction lists(n, parts.full_subset());
    std::vector<bool> seen(n, false);
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        auto toks = tokens(lines[ln]);
        if (toks.empty()) continue;
        long v = parse_long(toks[0], source, ln + 1);
        if (v < 0 || v >= n) fail(source, ln + 1, "vertex index out of range");
        if (seen[v]) fail(source, ln + 1, "duplicate list for vertex " + std::to_string(v));
        seen[v] = true;
        lists[v] = parse_subset({toks.begin() + 1, toks.end()}, parts, source, ln + 1);
    }
    return lists;
}

ListFamily parse_family(const std::string& text, const PartSet& parts,
                        const std::string& source) {
    std::vector<PartSubset> members;
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        auto toks = tokens(lines[ln]);
        if (toks.empty()) continue;
        members.push_back(parse_subset(toks, parts, source, ln + 1));
    }
    if (members.empty()) fail(source, 1, "family file contains no subsets");
    return ListFamily(parts, std::move(members));
}

std::vector<long> parse_cardinality(const std::string& text, const PartSet& parts,
                                    const std::string& source) {
    std::vector<long> minima(parts.size(), 0);
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        auto toks = tokens(lines[ln]);
        if (toks.empty()) continue;
        if (toks.size() != 2) fail(source, ln + 1, "expected 'part min'");
        auto idx = parts.index_of(toks[0]);
        if (!idx) fail(source, ln + 1, "unknown part name '" + toks[0] + "'");
        long v = parse_long(toks[1], source, ln + 1);
        if (v < 0) fail(source, ln + 1, "negative minimum");
        minima[*idx] = v;
    }
    return minima;
}

BipartiteInput parse_bipartite(const std::string& text, const std::string& source) {
    auto lines = split_lines(text);
    std::size_t ln = 0;
    while (ln < lines.size() && tokens(lines[ln]).empty()) ++ln;
    if (ln >= lines.size()) fail(source, 1, "missing header line '|U| |U'| m'");
    auto head = tokens(lines[ln]);
    if (head.size() != 3) fail(source, ln + 1, "expected header '|U| |U'| m'");
    BipartiteInput out;
    out.nu = static_cast<int>(parse_long(head[0], source, ln + 1));
    out.nv = static_cast<int>(parse_long(head[1], source, ln + 1));
    long m = parse_long(head[2], source, ln + 1);
    if (out.nu < 0 || out.nv < 0 || m < 0) fail(source, ln + 1, "negative counts in header");
    for (++ln; ln < lines.size(); ++ln) {
        auto toks = tokens(lines[ln]);
        if (toks.empty()) continue;
        if (toks.size() != 2) fail(source, ln + 1, "expected 'u v'");
        long u = parse_long(toks[0], source, ln + 1);
        long v = parse_long(toks[1], source, ln + 1);
        if (u < 0 || u >= out.nu || v < 0 || v >= out.nv)
            fail(source, ln + 1, "vertex index out of range");
        out.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long>(out.edges.size()) != m)
        fail(source, lines.size(), "edge count does not match header");
    return out;
}

std::string serialize_matrix(const PartitionMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.dim(); ++i) {
        if (i) out << ' ';
        out << m.parts().name(i);
    }
    out << '\n';
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            switch (m.at(i, j)) {
                case Pattern::Zero: out << '0'; break;
                case Pattern::One: out << '1'; break;
                case Pattern::Star: out << '*'; break;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

std::string subset_to_names(const PartSet& parts, const PartSubset& s) {
    std::string out;
    for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
        if (!out.empty()) out += ' ';
        out += parts.name(static_cast<int>(i));
    }
    return out;
}

std::string serialize_family(const ListFamily& fam) {
    std::string out;
    for (const auto& s : fam.maximal()) {
        out += subset_to_names(fam.parts(), s);
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

}  // namespace listpart
