#include "listpart/cardinality.hpp"
#include "listpart/counter.hpp"
#include "listpart/csp.hpp"
#include "listpart/decomp.hpp"
#include "listpart/io.hpp"
#include "listpart/oracle.hpp"
#include "listpart/purify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

namespace {

using namespace listpart;
using nlohmann::json;

// Exit statuses: 0 ok, 1 input error, 2 refused as #P-complete, 3 budget.
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kRefusedHard = 2;
constexpr int kBudget = 3;

struct Output {
    bool as_json = false;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - started)
            .count();
    }

    void emit(const std::string& plain, json record) const {
        if (as_json) {
            record["elapsed_ms"] = elapsed_ms();
            std::cout << record.dump() << '\n';
        } else {
            std::cout << plain;
        }
    }
};

json certificate_json(const PartSet& parts, const DerectCertificate& cert) {
    json arr = json::array();
    for (const auto& s : cert.sequence) {
        json names = json::array();
        for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
            names.push_back(parts.name(static_cast<int>(i)));
        arr.push_back(names);
    }
    return arr;
}

std::string certificate_lines(const PartSet& parts, const DerectCertificate& cert) {
    std::string out;
    for (const auto& s : cert.sequence) {
        out += subset_to_names(parts, s);
        out += '\n';
    }
    return out;
}

std::string verdict_name(Classification::Verdict v) {
    switch (v) {
        case Classification::Verdict::Tractable: return "TRACTABLE";
        case Classification::Verdict::Hard: return "HARD";
        default: return "INCONCLUSIVE";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact counting of list M-partitions of graphs"};
    app.require_subcommand(1);
    Output out;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string matrix_file, graph_file, lists_file, family_file, cardinality_file;
    std::string out_matrix, out_lists;
    bool unsafe_count = false;
    SearchLimits limits;
    int k = 0;
    int max_len = 6;
    unsigned long long budget_assignments = OracleBudget{}.max_assignments;

    auto* c_classify = app.add_subcommand("classify", "decide the counting dichotomy");
    c_classify->add_option("--matrix", matrix_file, "matrix file")->required();
    c_classify->add_option("--lists", family_file, "list family file (default {D})");
    c_classify->add_option("--max-cliques", limits.max_cliques, "clique budget");
    c_classify->add_option("--max-states", limits.max_states, "search state budget");

    auto* c_count = app.add_subcommand("count", "count (list) M-partitions");
    c_count->add_option("--matrix", matrix_file, "matrix file")->required();
    c_count->add_option("--graph", graph_file, "graph file")->required();
    c_count->add_option("--lists", lists_file, "per-vertex lists file");
    c_count->add_option("--cardinality", cardinality_file, "per-part minimum counts");
    c_count->add_flag("--unsafe-count", unsafe_count, "skip the tractability gate");
    c_count->add_option("--max-cliques", limits.max_cliques, "clique budget");
    c_count->add_option("--max-states", limits.max_states, "search state budget");

    auto* c_purify = app.add_subcommand("purify", "emit the purified list functions");
    c_purify->add_option("--matrix", matrix_file, "matrix file")->required();
    c_purify->add_option("--graph", graph_file, "graph file")->required();
    c_purify->add_option("--lists", lists_file, "per-vertex lists file");

    auto* c_hompairs = app.add_subcommand("hompairs", "count homogeneous pairs");
    c_hompairs->add_option("--graph", graph_file, "graph file")->required();

    auto* c_reduce = app.add_subcommand("reduce-is", "independent-set hardness gadget");
    c_reduce->add_option("--graph", graph_file, "graph file")->required();
    c_reduce->add_option("-k", k, "independent set size")->required();
    c_reduce->add_option("--out-matrix", out_matrix, "output matrix file")->required();
    c_reduce->add_option("--out-lists", out_lists, "output family file")->required();

    auto* c_dump = app.add_subcommand("csp-dump", "emit the constructed CSP instance");
    c_dump->add_option("--matrix", matrix_file, "matrix file")->required();
    c_dump->add_option("--graph", graph_file, "graph file")->required();
    c_dump->add_option("--lists", lists_file, "per-vertex lists file");

    auto* c_bicobip = app.add_subcommand("decompose-bicobip",
                                         "all bipartite-cobipartite partitions");
    c_bicobip->add_option("--graph", graph_file, "graph file")->required();

    auto* c_subcubes = app.add_subcommand("decompose-subcubes",
                                          "subcube decomposition of a bipartite graph");
    c_subcubes->add_option("--graph", graph_file, "bipartite graph file")->required();

    auto* c_oracle = app.add_subcommand("oracle", "brute-force reference computations");
    c_oracle->require_subcommand(1);
    auto* o_count = c_oracle->add_subcommand("count", "brute-force count");
    o_count->add_option("--matrix", matrix_file, "matrix file")->required();
    o_count->add_option("--graph", graph_file, "graph file")->required();
    o_count->add_option("--lists", lists_file, "per-vertex lists file");
    o_count->add_option("--budget", budget_assignments, "assignment budget");
    auto* o_hompairs = c_oracle->add_subcommand("hompairs", "brute-force homogeneous pairs");
    o_hompairs->add_option("--graph", graph_file, "graph file")->required();
    o_hompairs->add_option("--budget", budget_assignments, "assignment budget");
    auto* o_derect = c_oracle->add_subcommand("derect", "exhaustive sequence search");
    o_derect->add_option("--matrix", matrix_file, "matrix file")->required();
    o_derect->add_option("--lists", family_file, "list family file (default {D})");
    o_derect->add_option("--max-len", max_len, "maximum sequence length");

    CLI11_PARSE(app, argc, argv);
    out.as_json = format == "json";

    auto load_family = [&](const PartitionMatrix& m) {
        if (family_file.empty())
            return ListFamily(m.parts(), {m.parts().full_subset()});
        return parse_family(read_file(family_file), m.parts(), family_file);
    };
    auto load_lists = [&](const PartitionMatrix& m, const Graph& g) {
        if (lists_file.empty()) return ListFunction(g.n, m.parts().full_subset());
        return parse_lists(read_file(lists_file), m.parts(), g.n, lists_file);
    };

    if (c_classify->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        Classification cls = classify(m, load_family(m), limits);
        std::string plain = verdict_name(cls.verdict) + "\n";
        json rec{{"verdict", verdict_name(cls.verdict)}, {"count", nullptr},
                 {"certificate", nullptr}};
        if (cls.certificate) {
            plain += certificate_lines(m.parts(), *cls.certificate);
            rec["certificate"] = certificate_json(m.parts(), *cls.certificate);
        }
        out.emit(plain, rec);
        return kOk;
    }

    if (c_count->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        Graph g = parse_graph(read_file(graph_file), graph_file);
        CountOptions opts;
        opts.limits = limits;
        if (unsafe_count) opts.gate = CountOptions::Gate::skip_unsafe;
        try {
            Count result;
            if (!cardinality_file.empty()) {
                if (!lists_file.empty())
                    throw input_error("--cardinality cannot be combined with --lists");
                CardinalityConstraint c{
                    parse_cardinality(read_file(cardinality_file), m.parts(), cardinality_file)};
                result = count_with_cardinality(g, m, c, opts);
            } else {
                ListFamily fam(m.parts(), {m.parts().full_subset()});
                result = count_list_partitions(g, load_lists(m, g), fam, m, opts);
            }
            out.emit(result.get_str() + "\n",
                     json{{"verdict", "counted"},
                          {"count", result.get_str()},
                          {"certificate", nullptr}});
            return kOk;
        } catch (const refused_hard& e) {
            std::cerr << e.what() << "\n"
                      << certificate_lines(m.parts(), e.certificate);
            out.emit("", json{{"verdict", "HARD"},
                              {"count", nullptr},
                              {"certificate", certificate_json(m.parts(), e.certificate)}});
            return kRefusedHard;
        }
    }

    if (c_purify->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        Graph g = parse_graph(read_file(graph_file), graph_file);
        ListFamily fam(m.parts(), {m.parts().full_subset()});
        Classification cls = classify(m, fam, limits);
        if (cls.verdict == Classification::Verdict::Hard) {
            std::cerr << "refused: a derectangularising sequence exists\n"
                      << certificate_lines(m.parts(), *cls.certificate);
            return kRefusedHard;
        }
        if (cls.verdict == Classification::Verdict::Inconclusive)
            throw budget_exceeded("classifier budget exhausted");
        std::string plain;
        json arr = json::array();
        for (const auto& branch : purify(g, load_lists(m, g), fam, m)) {
            json fn = json::array();
            for (int v = 0; v < g.n; ++v) {
                plain += std::to_string(v) + ": " + subset_to_names(m.parts(), branch[v]) + "\n";
                fn.push_back(subset_to_names(m.parts(), branch[v]));
            }
            plain += "\n";
            arr.push_back(fn);
        }
        out.emit(plain, json{{"verdict", "purified"}, {"count", nullptr},
                             {"certificate", nullptr}, {"functions", arr}});
        return kOk;
    }

    if (c_hompairs->parsed()) {
        Graph g = parse_graph(read_file(graph_file), graph_file);
        Count result = count_homogeneous_pairs(g);
        out.emit(result.get_str() + "\n",
                 json{{"verdict", "counted"}, {"count", result.get_str()},
                      {"certificate", nullptr}});
        return kOk;
    }

    if (c_reduce->parsed()) {
        Graph g = parse_graph(read_file(graph_file), graph_file);
        GadgetOutput gadget = reduce_independent_set(g, k);
        write_file(out_matrix, serialize_matrix(gadget.matrix));
        write_file(out_lists, serialize_family(gadget.family));
        out.emit("", json{{"verdict", "written"}, {"count", nullptr}, {"certificate", nullptr}});
        return kOk;
    }

    if (c_dump->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        Graph g = parse_graph(read_file(graph_file), graph_file);
        SimpleInstance inst = partition_to_csp(g, load_lists(m, g), m);
        std::string plain;
        for (int v = 0; v < inst.num_vars; ++v)
            plain += "unary " + std::to_string(v) + ": " +
                     subset_to_names(m.parts(), inst.unary[v]) + "\n";
        for (const auto& c : inst.binary) {
            plain += "binary " + std::to_string(c.u) + " " + std::to_string(c.v) + ":";
            for (auto [i, j] : c.rel.pairs())
                plain += " (" + m.parts().name(i) + "," + m.parts().name(j) + ")";
            plain += "\n";
        }
        out.emit(plain, json{{"verdict", "dumped"}, {"count", nullptr},
                             {"certificate", nullptr}});
        return kOk;
    }

    if (c_bicobip->parsed()) {
        Graph g = parse_graph(read_file(graph_file), graph_file);
        std::string plain;
        for (const auto& p : bicobipartite_partitions(g)) {
            for (int v = 0; v < g.n; ++v) plain += p.b.test(v) ? 'B' : 'C';
            plain += '\n';
        }
        out.emit(plain, json{{"verdict", "decomposed"}, {"count", nullptr},
                             {"certificate", nullptr}});
        return kOk;
    }

    if (c_subcubes->parsed()) {
        BipartiteInput bip = parse_bipartite(read_file(graph_file), graph_file);
        std::string plain;
        for (const auto& pair : subcube_decomposition(bip.nu, bip.nv, bip.edges))
            plain += subcube_to_string(pair.u) + " " + subcube_to_string(pair.v) + "\n";
        out.emit(plain, json{{"verdict", "decomposed"}, {"count", nullptr},
                             {"certificate", nullptr}});
        return kOk;
    }

    if (o_count->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        Graph g = parse_graph(read_file(graph_file), graph_file);
        OracleBudget budget;
        budget.max_assignments = budget_assignments;
        Count result = brute_count(g, load_lists(m, g), m, budget);
        out.emit(result.get_str() + "\n",
                 json{{"verdict", "counted"}, {"count", result.get_str()},
                      {"certificate", nullptr}});
        return kOk;
    }

    if (o_hompairs->parsed()) {
        Graph g = parse_graph(read_file(graph_file), graph_file);
        OracleBudget budget;
        budget.max_assignments = budget_assignments;
        Count result = brute_homogeneous_pairs(g, budget);
        out.emit(result.get_str() + "\n",
                 json{{"verdict", "counted"}, {"count", result.get_str()},
                      {"certificate", nullptr}});
        return kOk;
    }

    if (o_derect->parsed()) {
        PartitionMatrix m = parse_matrix(read_file(matrix_file), matrix_file);
        auto cert = brute_find_derect(m, load_family(m), max_len);
        std::string plain = cert ? "HARD\n" : "TRACTABLE\n";
        json rec{{"verdict", cert ? "HARD" : "TRACTABLE"}, {"count", nullptr},
                 {"certificate", nullptr}};
        if (cert) {
            plain += certificate_lines(m.parts(), *cert);
            rec["certificate"] = certificate_json(m.parts(), *cert);
        }
        out.emit(plain, rec);
        return kOk;
    }

    return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const listpart::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const listpart::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInputError;
    }
}
