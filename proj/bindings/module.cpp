#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sbs/errors.hpp"
#include "sbs/pipeline.hpp"
#include "sbs/scoring.hpp"
#include "sbs/textprep.hpp"
#include "sbs/version.hpp"

namespace py = pybind11;

namespace {

std::vector<std::string> preprocess_text(const std::string& text, const std::string& language,
                                         size_t min_token_len, bool use_builtin_stopwords) {
    sbs::textprep::PrepConfig cfg;
    cfg.language = language;
    cfg.min_token_len = min_token_len;
    cfg.ngram_max = 1;
    if (use_builtin_stopwords)
        for (const auto& w : sbs::textprep::builtin_stopwords(language)) cfg.stopwords.insert(w);
    auto stream = sbs::textprep::preprocess("doc", text, cfg, {});
    std::vector<std::string> out;
    out.reserve(stream.tokens.size());
    for (const auto& t : stream.tokens) out.push_back(t.text);
    return out;
}

py::dict run_to_dict(const sbs::pipeline::RunResult& res) {
    py::dict d;
    d["total"] = res.total;
    d["kept"] = res.kept;
    d["rejected"] = res.rejected;
    d["spam_flagged"] = res.spam_flagged;
    d["out_dir"] = res.out_dir;
    d["corpus_digest"] = res.corpus_digest;
    d["config_digest"] = res.config_digest;
    py::dict groups;
    for (const auto& g : res.group_order) {
        const auto& gr = res.groups.at(g);
        py::dict gd;
        gd["docs"] = gr.docs;
        gd["ranking"] = gr.ranking;
        py::list scores;
        for (const auto& s : gr.scores) {
            py::dict sd;
            sd["orientation"] = s.orientation;
            sd["prevalence"] = s.raw_prevalence;
            sd["diversity"] = s.raw_diversity;
            sd["connectivity"] = s.raw_connectivity;
            sd["z_prevalence"] = s.z_prevalence;
            sd["z_diversity"] = s.z_diversity;
            sd["z_connectivity"] = s.z_connectivity;
            sd["sbs"] = s.sbs;
            sd["share_sbs"] = s.share_sbs;
            scores.append(sd);
        }
        gd["scores"] = scores;
        groups[py::str(g)] = gd;
    }
    d["groups"] = groups;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "concept importance scoring over word co-occurrence networks";
    m.attr("__version__") = SBS_VERSION;

    py::register_exception<sbs::ConfigError>(m, "ConfigError");
    py::register_exception<sbs::StageError>(m, "StageError");

    m.def("stem", &sbs::textprep::stem, py::arg("token"), py::arg("language"),
          "Snowball stem of a single token");

    m.def("preprocess", &preprocess_text, py::arg("text"), py::arg("language") = "italian",
          py::arg("min_token_len") = 2, py::arg("use_builtin_stopwords") = true,
          "Tokenize, drop stopwords and stem one text (no multiword detection)");

    m.def("standardize", &sbs::scoring::standardize, py::arg("values"),
          "Population z-scores; fewer than two values or zero spread gives zeros");

    m.def("relative_shares", &sbs::scoring::relative_shares, py::arg("raw"),
          "Percentage share of the total per entry");

    m.def(
        "run",
        [](const std::string& corpus_path, const std::string& config_path,
           const std::string& out_dir) {
            auto cfg = sbs::pipeline::load_config(config_path);
            if (!out_dir.empty()) cfg.out_dir = out_dir;
            return run_to_dict(sbs::pipeline::run(corpus_path, cfg));
        },
        py::arg("corpus_path"), py::arg("config_path"), py::arg("out_dir") = "",
        "Full pipeline run; returns the summary and writes artifacts to out_dir");

    m.def(
        "validate_share_grid",
        [](const std::string& path, double tolerance) {
            auto v = sbs::pipeline::validate_share_grid(path, tolerance);
            py::dict d;
            d["checked"] = v.cells.size();
            d["flagged"] = v.flagged;
            d["max_abs_delta"] = v.max_abs_delta;
            py::list cells;
            for (const auto& c : v.cells) {
                if (!c.flagged) continue;
                py::dict cd;
                cd["orientation"] = c.orientation;
                cd["column"] = c.column;
                cd["published"] = c.published;
                cd["reconstructed"] = c.reconstructed;
                cd["delta"] = c.delta;
                cells.append(cd);
            }
            d["flagged_cells"] = cells;
            return d;
        },
        py::arg("path"), py::arg("tolerance") = 1.0,
        "Check a share grid: composite row vs mean of component rows");
}
