#include <pvoc/cli.hpp>

#include <pvoc/error.hpp>
#include <pvoc/io.hpp>
#include <pvoc/louvain.hpp>
#include <pvoc/metrics.hpp>
#include <pvoc/permanence.hpp>
#include <pvoc/replication.hpp>
#include <pvoc/study.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace pvoc {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t default_threads() {
    if (const char* env = std::getenv("PVOC_THREADS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Plain key=value run record, enough to replay the command.
class Manifest {
public:
    explicit Manifest(std::string command) {
        add("tool", "pvoc");
        add("tool_version", tool_version);
        add("command", std::move(command));
    }

    void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

    void write(const std::string& path) {
        std::ofstream out(path);
        for (const auto& [key, value] : entries_)
            out << key << '=' << value << '\n';
        if (!out)
            throw Error(ErrorKind::WriteError, "cannot write manifest '" + path + "'");
    }

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::WriteError, "cannot open '" + path + "' for writing");
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    auto out = open_output(path);
    out << text;
    out.flush();
    if (!out)
        throw Error(ErrorKind::WriteError, "failed writing '" + path + "'");
}

/// Writes `text` to `path`, or to `out` when no path is given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_text(path, text);
}

Graph load_graph(const std::string& path, std::ostream& err) {
    return read_edge_list(std::filesystem::path(path), [&](const std::string& msg) { err << "warning: " << msg << '\n'; });
}

Partition load_disjoint(const Graph& g, const std::string& spec, const LouvainConfig& cfg) {
    if (spec == "louvain")
        return louvain(g, cfg);
    if (spec.rfind("file:", 0) == 0) {
        auto in = open_input(spec.substr(5));
        return import_partition(in, g.labels());
    }
    throw UsageError("--disjoint must be 'louvain' or 'file:<path>', got '" + spec + "'");
}

Cover load_truth(const std::string& path, const std::string& format, const VertexLabels& labels, std::ostream& err) {
    auto in = open_input(path);
    if (format == "lfr")
        return read_lfr_communities(in, labels);
    auto snap = read_snap_communities(in, labels);
    if (!snap.uncovered.empty())
        err << "warning: " << snap.uncovered.size() << " vertices are in no ground-truth community and are excluded\n";
    return std::move(snap.cover);
}

/// Registers every vertex label that appears in a community file.
void collect_labels(const std::string& path, const std::string& format, VertexLabels& labels) {
    auto in = open_input(path);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::string token;
        bool first = true;
        while (tokens >> token) {
            if (first && token.front() == '#')
                break;
            if (format != "lfr" || first)
                labels.intern(token);
            first = false;
        }
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty())
            out += ' ';
        out += a;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct DetectArgs {
    std::string graph;
    std::string disjoint = "louvain";
    double theta = 0.05;
    std::string out;
    std::string decisions;
    std::string manifest;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
};

int cmd_detect(const DetectArgs& a, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Manifest manifest("detect");
    const Graph g = load_graph(a.graph, err);
    LouvainConfig lcfg;
    lcfg.seed = a.seed;
    const Partition p = load_disjoint(g, a.disjoint, lcfg);
    ReplicationConfig cfg;
    cfg.theta = a.theta;
    cfg.threads = a.threads;
    validate(cfg);

    std::ofstream decisions;
    if (!a.decisions.empty()) {
        decisions = open_output(a.decisions);
        decisions << "vertex\tsource\ttarget\tsum_before\tsum_after\taccepted\n";
    }
    std::size_t replicas = 0;
    const Cover c = vertex_replication(g, p, cfg, [&](const ReplicationDecision& d) {
        replicas += d.accepted ? 1 : 0;
        if (decisions.is_open())
            write_decision(decisions, d, g.labels());
    });
    if (decisions.is_open()) {
        decisions.flush();
        if (!decisions)
            throw Error(ErrorKind::WriteError, "failed writing '" + a.decisions + "'");
    }
    write_cover(c, g.labels(), std::filesystem::path(a.out));

    out << "vertices\tedges\tcommunities\treplicas\n"
        << g.num_vertices() << '\t' << g.num_edges() << '\t' << c.num_communities() << '\t' << replicas << '\n';

    manifest.add("args", join_args(argv));
    manifest.add("graph", a.graph);
    manifest.add("disjoint", a.disjoint);
    manifest.add("theta", format_real(a.theta));
    manifest.add("seed", std::to_string(a.seed));
    manifest.add("threads", std::to_string(a.threads));
    manifest.add("out", a.out);
    manifest.add("decisions", a.decisions);
    manifest.write(a.manifest.empty() ? a.out + ".manifest" : a.manifest);
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string detected;
    std::string detected_format = "snap";
    std::string truth;
    std::string truth_format = "snap";
    std::string metrics = "onmi,omega,f1";
    std::string graph;
    std::string out;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    const MetricSelection which = parse_metric_selection(a.metrics);
    VertexLabels labels;
    if (!a.graph.empty()) {
        labels = load_graph(a.graph, err).labels();
    } else {
        collect_labels(a.truth, a.truth_format, labels);
        collect_labels(a.detected, a.detected_format, labels);
    }
    const Cover truth = load_truth(a.truth, a.truth_format, labels, err);
    const Cover detected = load_truth(a.detected, a.detected_format, labels, err);
    const MetricReport report = evaluate(detected, truth, which);
    if (report.excluded_vertices > 0)
        err << "warning: scored on " << report.vertices << " vertices covered by both sides; "
            << report.excluded_vertices << " excluded\n";

    out << to_key_value(report);
    if (!a.out.empty())
        write_text(a.out, table_header() + '\n' + table_row(report) + '\n');
    if (report.nmi_error) {
        err << "error: " << *report.nmi_error << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct BenchArgs {
    std::string graph;
    std::string truth;
    std::string truth_format = "snap";
    std::size_t samples = 10;
    std::uint64_t seed = 1;
    double theta = 0.05;
    std::string compare;
    std::string out;
    std::string manifest;
    std::size_t threads = 0;
};

struct ScoreSums {
    std::size_t samples = 0;
    std::array<double, 3> sum{0.0, 0.0, 0.0};
    std::array<std::size_t, 3> count{0, 0, 0};

    void add(const MetricReport& r) {
        ++samples;
        const std::array<std::optional<double>, 3> v{r.onmi, r.omega, r.avg_f1};
        for (std::size_t k = 0; k < 3; ++k)
            if (v[k]) {
                sum[k] += *v[k];
                ++count[k];
            }
    }

    MethodScores mean() const {
        MethodScores m{0.0, 0.0, 0.0};
        for (std::size_t k = 0; k < 3; ++k)
            m[k] = count[k] > 0 ? sum[k] / static_cast<double>(count[k]) : 0.0;
        return m;
    }
};

int cmd_bench(const BenchArgs& a, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Manifest manifest("bench");
    if (a.samples == 0)
        throw UsageError("--samples must be positive");
    const Graph g = load_graph(a.graph, err);
    const Cover truth = load_truth(a.truth, a.truth_format, g.labels(), err);
    std::vector<std::pair<std::string, Cover>> others;
    for (const auto& path : split_list(a.compare)) {
        auto in = open_input(path);
        others.emplace_back(path, read_snap_communities(in, g.labels()).cover);
    }
    ReplicationConfig cfg;
    cfg.theta = a.theta;
    cfg.threads = a.threads;
    validate(cfg);

    std::ostringstream table;
    table << "sample\tseed_vertex\tvertices\tedges\tmethod\t" << table_header() << '\n';
    std::vector<std::string> method_order{"pvoc+louvain", "louvain"};
    for (const auto& [name, cover] : others)
        method_order.push_back(name);
    std::map<std::string, ScoreSums> sums;
    const MetricSelection which;

    for (std::size_t i = 0; i < a.samples; ++i) {
        const Subnetwork sub = sample_subnetwork(g, truth, a.seed + i);
        const Partition p = louvain(sub.graph);
        std::vector<std::pair<std::string, MetricReport>> rows;
        rows.emplace_back("pvoc+louvain", evaluate(vertex_replication(sub.graph, p, cfg, nullptr), sub.truth, which));
        rows.emplace_back("louvain", evaluate(Cover::from_partition(p), sub.truth, which));
        for (const auto& [name, cover] : others) {
            const Cover local = cover.restrict_to(sub.vertices);
            if (local.num_communities() == 0) {
                err << "warning: sample " << i << ": '" << name << "' covers no vertex of the subnetwork\n";
                continue;
            }
            rows.emplace_back(name, evaluate(local, sub.truth, which));
        }
        for (const auto& [name, report] : rows) {
            sums[name].add(report);
            table << i << '\t' << g.label(sub.seed_vertex) << '\t' << sub.graph.num_vertices() << '\t'
                  << sub.graph.num_edges() << '\t' << name << '\t' << table_row(report) << '\n';
        }
    }

    std::map<std::string, MethodScores> means;
    for (const auto& [name, s] : sums)
        means[name] = s.mean();
    const bool composite = !others.empty();
    const auto composites = composite ? composite_scores(means) : std::map<std::string, double>{};

    table << "\nmethod\tsamples\tonmi\tomega\tf1" << (composite ? "\tcomposite" : "") << '\n';
    for (const auto& name : method_order) {
        auto it = sums.find(name);
        if (it == sums.end())
            continue;
        const auto m = it->second.mean();
        table << name << '\t' << it->second.samples << '\t' << format_real(m[0]) << '\t' << format_real(m[1]) << '\t'
              << format_real(m[2]);
        if (composite)
            table << '\t' << format_real(composites.at(name));
        table << '\n';
    }
    emit(a.out, table.str(), out);

    if (!a.out.empty() || !a.manifest.empty()) {
        manifest.add("args", join_args(argv));
        manifest.add("graph", a.graph);
        manifest.add("truth", a.truth);
        manifest.add("truth_format", a.truth_format);
        manifest.add("samples", std::to_string(a.samples));
        manifest.add("seed", std::to_string(a.seed));
        manifest.add("theta", format_real(a.theta));
        manifest.add("compare", a.compare);
        manifest.add("out", a.out);
        manifest.write(a.manifest.empty() ? a.out + ".manifest" : a.manifest);
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct StudyArgs {
    std::string graph;
    std::string truth;
    std::string truth_format = "snap";
    std::string disjoint = "louvain";
    bool strip = false;
    bool profile = false;
    std::string out;
};

int cmd_study(const StudyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.strip == a.profile)
        throw UsageError("exactly one of --strip and --profile is required");
    const Graph g = load_graph(a.graph, err);
    const Cover truth = load_truth(a.truth, a.truth_format, g.labels(), err);
    const Partition p = load_disjoint(g, a.disjoint, {});
    std::ostringstream text;
    if (a.strip)
        write_strip_result(text, strip_overlap_study(g, truth, p));
    else
        write_profile(text, external_degree_membership_profile(g, truth, p));
    emit(a.out, text.str(), out);
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct PermArgs {
    std::string graph;
    std::string disjoint = "louvain";
    std::string out;
};

int cmd_perm(const PermArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(a.graph, err);
    const Partition p = load_disjoint(g, a.disjoint, {});
    const AssignmentView view(p);
    std::ostringstream text;
    text << "vertex\tI\tD\tEmax\tc_in\tperm\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto pv = permanence_view(g, view, v);
        text << g.label(v) << '\t' << pv.internal << '\t' << pv.degree << '\t'
             << (pv.e_max ? std::to_string(*pv.e_max) : std::string("NA")) << '\t' << format_real(pv.c_in) << '\t'
             << format_real(pv.perm) << '\n';
    }
    emit(a.out, text.str(), out);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Overlapping community detection by permanence-based vertex replication", "pvoc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    DetectArgs detect;
    detect.threads = default_threads();
    auto* detect_cmd = app.add_subcommand("detect", "Louvain (or imported) partition followed by vertex replication");
    detect_cmd->add_option("--graph", detect.graph, "Edge list")->required();
    detect_cmd->add_option("--disjoint", detect.disjoint, "louvain | file:<partition>")->capture_default_str();
    detect_cmd->add_option("--theta", detect.theta, "Replication tolerance")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    detect_cmd->add_option("--out", detect.out, "Cover output (SNAP format)")->required();
    detect_cmd->add_option("--decisions", detect.decisions, "Trial log output");
    detect_cmd->add_option("--manifest", detect.manifest, "Run manifest (default <out>.manifest)");
    detect_cmd->add_option("--seed", detect.seed, "Louvain vertex-order seed, 0 = ascending")->capture_default_str();
    detect_cmd->add_option("--threads", detect.threads, "Worker threads (env PVOC_THREADS)")->check(
        CLI::PositiveNumber);

    EvalArgs eval;
    auto* eval_cmd = app.add_subcommand("eval", "Score a cover against ground truth");
    eval_cmd->add_option("--detected", eval.detected, "Detected cover")->required();
    eval_cmd->add_option("--detected-format", eval.detected_format)->check(CLI::IsMember({"lfr", "snap"}))
        ->capture_default_str();
    eval_cmd->add_option("--truth", eval.truth, "Ground-truth communities")->required();
    eval_cmd->add_option("--truth-format", eval.truth_format)->check(CLI::IsMember({"lfr", "snap"}))
        ->capture_default_str();
    eval_cmd->add_option("--metrics", eval.metrics, "Comma list of onmi,omega,f1,nmi")->capture_default_str();
    eval_cmd->add_option("--graph", eval.graph, "Edge list fixing the vertex set");
    eval_cmd->add_option("--out", eval.out, "Tab-separated report");

    BenchArgs bench;
    bench.threads = default_threads();
    auto* bench_cmd = app.add_subcommand("bench", "Sampled-subnetwork benchmark");
    bench_cmd->add_option("--graph", bench.graph)->required();
    bench_cmd->add_option("--truth", bench.truth)->required();
    bench_cmd->add_option("--truth-format", bench.truth_format)->check(CLI::IsMember({"lfr", "snap"}))
        ->capture_default_str();
    bench_cmd->add_option("--samples", bench.samples)->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
    bench_cmd->add_option("--theta", bench.theta)->capture_default_str()->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--compare", bench.compare, "Comma list of cover files to score alongside");
    bench_cmd->add_option("--out", bench.out);
    bench_cmd->add_option("--manifest", bench.manifest);
    bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);

    StudyArgs study;
    auto* study_cmd = app.add_subcommand("study", "Overlap-stripping study or external-degree profile");
    study_cmd->add_option("--graph", study.graph)->required();
    study_cmd->add_option("--truth", study.truth)->required();
    study_cmd->add_option("--truth-format", study.truth_format)->check(CLI::IsMember({"lfr", "snap"}))
        ->capture_default_str();
    study_cmd->add_option("--disjoint", study.disjoint)->capture_default_str();
    auto* strip_flag = study_cmd->add_flag("--strip", study.strip);
    study_cmd->add_flag("--profile", study.profile)->excludes(strip_flag);
    study_cmd->add_option("--out", study.out);

    PermArgs perm;
    auto* perm_cmd = app.add_subcommand("perm", "Per-vertex permanence table");
    perm_cmd->add_option("--graph", perm.graph)->required();
    perm_cmd->add_option("--disjoint", perm.disjoint)->capture_default_str();
    perm_cmd->add_option("--out", perm.out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        out << tool_version << '\n';
        return exit_ok;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage_error;
    }

    try {
        if (*detect_cmd)
            return cmd_detect(detect, args, out, err);
        if (*eval_cmd)
            return cmd_eval(eval, out, err);
        if (*bench_cmd)
            return cmd_bench(bench, args, out, err);
        if (*study_cmd)
            return cmd_study(study, out, err);
        if (*perm_cmd)
            return cmd_perm(perm, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_usage_error;
}

} // namespace pvoc
