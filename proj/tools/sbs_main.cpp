#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbs/csv.hpp"
#include "sbs/errors.hpp"
#include "sbs/log.hpp"
#include "sbs/pipeline.hpp"
#include "sbs/report.hpp"
#include "sbs/util.hpp"
#include "sbs/version.hpp"

namespace fs = std::filesystem;

namespace {

struct RunFlags {
    std::string corpus;
    std::string config;
    std::string out;
    std::string format;
    std::vector<std::string> groups;
    bool no_spam = false;
    bool no_query = false;
    long long window = -1;
    long long prune_min = -1;
};

int do_run(const RunFlags& f) {
    auto cfg = sbs::pipeline::load_config(f.config);
    cfg.out_dir = f.out;
    if (!f.format.empty()) cfg.corpus_format = f.format;
    if (!f.groups.empty()) {
        cfg.groups.clear();
        for (const auto& g : f.groups) cfg.groups.push_back(sbs::util::lower_utf8(g));
    }
    if (f.no_spam) cfg.spam.enabled = false;
    if (f.no_query) cfg.query.enabled = false;
    if (f.window >= 0) {
        if (f.window < 2) throw sbs::ConfigError("window must be at least 2");
        cfg.graph_cfg.window = static_cast<size_t>(f.window);
    }
    if (f.prune_min >= 0) {
        if (f.prune_min < 1) throw sbs::ConfigError("prune-min must be at least 1");
        cfg.graph_cfg.prune_min_weight = f.prune_min;
    }

    auto res = sbs::pipeline::run(f.corpus, cfg);
    std::cout << "corpus: " << res.total << " rows, kept " << res.kept << " (rejected "
              << res.rejected << ", spam " << res.spam_flagged << ")\n";
    for (const auto& g : res.group_order) {
        const auto& gr = res.groups.at(g);
        std::cout << "group " << g << ": " << gr.docs << " docs";
        if (!gr.ranking.empty()) {
            const auto& top = gr.ranking.front();
            for (const auto& s : gr.scores)
                if (s.orientation == top)
                    std::cout << ", top " << top << " ("
                              << sbs::util::format_fixed(s.share_sbs, 2) << "%)";
        }
        std::cout << "\n";
    }
    std::cout << "artifacts: " << res.out_dir << " (" << res.artifact_digests.size() + 1
              << " files)\n";
    return 0;
}

int do_report(const std::string& dir, const std::string& format) {
    auto load_table = [&](const std::string& name) {
        std::string path = (fs::path(dir) / (name + ".csv")).string();
        if (!fs::exists(path)) throw sbs::StageError("report", "missing artifact: " + path);
        return sbs::report::table_from_csv(name, sbs::util::read_file(path));
    };
    auto stats = load_table("sample_stats");
    auto importance = load_table("importance");

    std::string rendered;
    std::string out_name;
    if (format == "markdown") {
        rendered = "## Sample statistics\n\n" + sbs::report::to_markdown(stats) +
                   "\n## Orientation importance\n\n" + sbs::report::to_markdown(importance);
        out_name = "report.md";
    } else if (format == "csv") {
        rendered = sbs::report::to_csv(stats) + "\n" + sbs::report::to_csv(importance);
        out_name = "report.csv";
    } else {
        rendered = sbs::report::tables_to_json({stats, importance});
        out_name = "report.json";
    }
    sbs::util::write_file((fs::path(dir) / out_name).string(), rendered);
    std::cout << rendered;
    return 0;
}

int do_validate(const std::string& file, const std::string& out_csv) {
    auto v = sbs::pipeline::validate_share_grid(file);
    if (!out_csv.empty()) {
        std::string csv = sbs::util::csv_line(
            {"orientation", "column", "published", "reconstructed", "delta", "flagged"});
        for (const auto& c : v.cells) {
            csv += sbs::util::csv_line({c.orientation, c.column,
                                        sbs::util::format_fixed(c.published, 4),
                                        sbs::util::format_fixed(c.reconstructed, 4),
                                        sbs::util::format_fixed(c.delta, 4),
                                        c.flagged ? "1" : "0"});
        }
        sbs::util::write_file(out_csv, csv);
    }
    std::cout << sbs::pipeline::validation_text(v);
    return v.flagged == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"concept importance scoring over word co-occurrence networks"};
    app.set_version_flag("--version", SBS_VERSION);
    app.require_subcommand(1);

    RunFlags rf;
    auto* run_cmd = app.add_subcommand("run", "analyze a corpus and write report artifacts");
    run_cmd->add_option("--corpus", rf.corpus, "corpus file (jsonl or csv)")->required();
    run_cmd->add_option("--config", rf.config, "JSON run configuration")->required();
    run_cmd->add_option("--out", rf.out, "output directory")->required();
    run_cmd->add_option("--format", rf.format, "corpus format override")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    run_cmd->add_option("--groups", rf.groups, "only analyze these groups")->delimiter(',');
    run_cmd->add_flag("--no-spam-filter", rf.no_spam, "disable the spam filter");
    run_cmd->add_flag("--no-query-filter", rf.no_query, "disable the query filter");
    run_cmd->add_option("--window", rf.window, "co-occurrence window override");
    run_cmd->add_option("--prune-min", rf.prune_min, "minimum edge weight override");

    std::string report_dir;
    std::string report_format = "markdown";
    auto* report_cmd = app.add_subcommand("report", "render tables from run artifacts");
    report_cmd->add_option("dir", report_dir, "artifact directory of a previous run")
        ->required();
    report_cmd->add_option("--format", report_format, "output format")
        ->check(CLI::IsMember({"csv", "json", "markdown"}));

    std::string grid_file;
    std::string grid_out;
    auto* validate_cmd =
        app.add_subcommand("validate", "cross-check a published share grid against itself");
    validate_cmd->add_option("file", grid_file, "share grid CSV")->required();
    validate_cmd->add_option("--out", grid_out, "write per-cell deltas to this CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);                                     // error text on stderr
        return 2;
    }

    try {
        if (*run_cmd) return do_run(rf);
        if (*report_cmd) return do_report(report_dir, report_format);
        if (*validate_cmd) return do_validate(grid_file, grid_out);
    } catch (const sbs::ConfigError& e) {
        sbs::log::error(e.what());
        return 2;
    } catch (const sbs::StageError& e) {
        sbs::log::error(e.what());
        return 1;
    } catch (const std::exception& e) {
        sbs::log::error(e.what());
        return 1;
    }
    return 2;
}
