#include "rainbowk/cli.hpp"

#include "rainbowk/construction.hpp"
#include "rainbowk/io.hpp"
#include "rainbowk/oracle.hpp"
#include "rainbowk/verifier.hpp"

#include <algorithm>

#include "CLI11.hpp"
#include "json.hpp"

namespace rainbowk::cli {

namespace {

using json = nlohmann::ordered_json;

struct Failure {
    int code;
    std::string message;
};

int cmd_construct(int k, int r, const std::string& out_path, const std::string& dot_path, std::ostream& out) {
    const PartitionScheme scheme = make_scheme(k, r);
    const ColoringFile file = coloring_file_for(scheme);
    try {
        write_text_file(out_path, write_coloring(file));
        if (!dot_path.empty()) write_text_file(dot_path, write_dot(file));
    } catch (const std::runtime_error& e) {
        throw Failure{kIoFailure, e.what()};
    }
    const auto h = file.coloring.histogram();
    out << "wrote " << out_path << ": r=" << r << " colors=3 scheme k=" << k << " k1=" << scheme.k1
        << " r1=" << scheme.r1 << " classes 1:" << h[1] << " 2:" << h[2] << " 3:" << h[3] << "\n";
    return kOk;
}

ColoringFile load_coloring(const std::string& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw Failure{kIoFailure, e.what()};
    }
    try {
        return read_coloring(text);
    } catch (const FormatError& e) {
        throw Failure{kMalformedInput, path + ": " + e.what()};
    }
}

int cmd_verify(const std::string& path, int k, bool witnesses, bool per_pair, const std::string& report_path, int jobs,
               std::ostream& out) {
    const ColoringFile file = load_coloring(path);
    if (k < 1 || k > file.coloring.r())
        throw Failure{kBadParameter, "k = " + std::to_string(k) + " exceeds the connectivity r = " +
                                         std::to_string(file.coloring.r())};
    const auto labels = file.labels();
    const auto report = verify_k_connectivity(file.coloring, k, witnesses, labels, std::max(1, jobs));
    if (!report_path.empty()) {
        try {
            write_text_file(report_path, write_report(report, labels, per_pair));
        } catch (const std::runtime_error& e) {
            throw Failure{kIoFailure, e.what()};
        }
    }
    out << (report.ok ? "ok" : "not ok") << ": k=" << k << " min_packing=" << report.min_packing
        << " pairs=" << report.per_pair.size() << " worst_pairs=" << report.worst_pairs().size() << "\n";
    return report.ok ? kOk : kNotConnected;
}

std::pair<PartitionScheme, std::pair<VertexRef, VertexRef>> scheme_and_pair(int k, int r, const std::string& u_text,
                                                                           const std::string& v_text) {
    const PartitionScheme scheme = make_scheme(k, r);
    try {
        const VertexRef u = parse_vertex(u_text, scheme.params());
        const VertexRef v = parse_vertex(v_text, scheme.params());
        if (std::holds_alternative<Plain>(u.label) || std::holds_alternative<Plain>(v.label))
            throw LabelError("constructed colorings use grouped or extra labels");
        if (u == v) throw Failure{kBadParameter, "u and v are the same vertex " + u_text};
        return {scheme, {u, v}};
    } catch (const LabelError& e) {
        throw Failure{kMalformedInput, e.what()};
    }
}

int cmd_witness(int k, int r, const std::string& u_text, const std::string& v_text, bool as_json, std::ostream& out) {
    const auto [scheme, pair] = scheme_and_pair(k, r, u_text, v_text);
    const auto label = classify_pair(scheme, pair.first, pair.second);
    std::vector<RainbowPath> paths;
    try {
        paths = witness_paths(scheme, pair.first, pair.second);
    } catch (const ProofGapError& e) {
        throw Failure{kNotConnected, e.what()};
    }
    if (as_json) {
        json doc{{"case", to_string(label.tag)},
                 {"adjacent_block", label.adjacent_block},
                 {"transform", label.transform.describe()},
                 {"paths", json::array()}};
        for (const auto& p : paths) {
            json vs = json::array();
            for (const auto& v : p.vertices) vs.push_back(to_string(v));
            doc["paths"].push_back(json{{"vertices", vs}, {"colors", p.colors}});
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "case " << to_string(label.tag) << (label.adjacent_block ? " (adjacent block)" : "") << "\n";
        out << "transform " << label.transform.describe() << "\n";
        out << paths.size() << " paths\n";
        for (const auto& p : paths) out << "  " << path_text(p) << "\n";
    }
    return kOk;
}

int cmd_classify(int k, int r, const std::string& u_text, const std::string& v_text, std::ostream& out) {
    const auto [scheme, pair] = scheme_and_pair(k, r, u_text, v_text);
    const auto label = classify_pair(scheme, pair.first, pair.second);
    out << "case " << to_string(label.tag) << (label.adjacent_block ? " (adjacent block)" : "") << "\n";
    out << "transform " << label.transform.describe() << "\n";
    return kOk;
}

int cmd_oracle(int r, int k, int max_colors, bool count, int jobs, bool force, std::ostream& out) {
    try {
        if (count) {
            out << count_valid_colorings(r, k, max_colors, force, std::max(1, jobs)) << "\n";
        } else {
            out << rc_k_bruteforce(r, k, {max_colors, force, std::max(1, jobs)}) << "\n";
        }
    } catch (const CapExceededError& e) {
        throw Failure{kCapExceeded, e.what()};
    } catch (const CostGuardError& e) {
        throw Failure{kGuardRefused, std::string(e.what()) + "; pass --force to run anyway"};
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rainbow k-connectivity of K_{r,r}: 3-colorings, witnesses, verification, exhaustive rc_k"};
    app.name("rainbowk");
    app.require_subcommand(1);

    int k = 0, r = 0, max_colors = 6, jobs = 1;
    std::string out_path, dot_path, coloring_path, report_path, u_text, v_text;
    bool witnesses = false, per_pair = false, as_json = false, count = false, force = false;

    auto* construct = app.add_subcommand("construct", "Write the 3-coloring of K_{r,r} for r >= 2k*ceil(k/2)");
    construct->add_option("--k", k, "Connectivity target, k >= 2")->required();
    construct->add_option("--r", r, "Side size")->required();
    construct->add_option("--out", out_path, "ColoringFile to write")->required();
    construct->add_option("--dot", dot_path, "Also write a Graphviz rendering");

    auto* verify = app.add_subcommand("verify", "Check that every vertex pair has k disjoint rainbow paths");
    verify->add_option("--coloring", coloring_path, "ColoringFile to check")->required();
    verify->add_option("--k", k, "Required number of paths")->required();
    verify->add_flag("--witnesses", witnesses, "Include a witness path set per pair in the report");
    verify->add_flag("--per-pair", per_pair, "Include the full per-pair table in the report");
    verify->add_option("--report", report_path, "ReportFile to write");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* witness = app.add_subcommand("witness", "Print the case and the disjoint rainbow paths for a pair");
    witness->add_option("--k", k)->required();
    witness->add_option("--r", r)->required();
    witness->add_option("--u", u_text, "Vertex label, e.g. U:1:1 or W:e:2")->required();
    witness->add_option("--v", v_text, "Vertex label")->required();
    witness->add_flag("--json", as_json);

    const std::string guard_note = "Refuses r > " + std::to_string(kMaxOracleR) + " or more than " +
                                   std::to_string(kMaxCanonicalColorings) + " canonical colorings unless --force";
    auto* oracle = app.add_subcommand("oracle", "Exhaustive rc_k(K_{r,r}) over canonical colorings. " + guard_note);
    oracle->add_option("--r", r)->required();
    oracle->add_option("--k", k)->required();
    oracle->add_option("--max-colors", max_colors, "Largest color count tried; with --count, the count's j")
        ->check(CLI::Range(1, 255));
    oracle->add_flag("--count", count, "Print the number of valid canonical colorings with <= max-colors colors");
    oracle->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    oracle->add_flag("--force", force, "Skip the cost guard");

    auto* classify = app.add_subcommand("classify", "Print the proof case and symmetry transform for a pair");
    classify->add_option("--k", k)->required();
    classify->add_option("--r", r)->required();
    classify->add_option("--u", u_text)->required();
    classify->add_option("--v", v_text)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadParameter;
    }

    try {
        if (*construct) return cmd_construct(k, r, out_path, dot_path, out);
        if (*verify) return cmd_verify(coloring_path, k, witnesses, per_pair, report_path, jobs, out);
        if (*witness) return cmd_witness(k, r, u_text, v_text, as_json, out);
        if (*oracle) return cmd_oracle(r, k, max_colors, count, jobs, force, out);
        if (*classify) return cmd_classify(k, r, u_text, v_text, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << "\n";
        return f.code;
    } catch (const ThresholdError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParameter;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return kBadParameter;
    }
    return kBadParameter;
}

}  // namespace rainbowk::cli
