#include "projkit/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace projkit {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_sidecar(const std::filesystem::path& path, const std::vector<Vector>& pts) {
    std::ostringstream os;
    const std::size_t dim = pts.empty() ? 0 : pts.front().dim();
    os << "k";
    for (std::size_t i = 0; i < dim; ++i) os << ",coord_" << i;
    os << "\n";
    for (std::size_t k = 0; k < pts.size(); ++k) {
        os << k;
        for (std::size_t i = 0; i < dim; ++i) os << ',' << fmt17(pts[k][i]);
        os << "\n";
    }
    write_text_atomic(path, os.str());
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

std::vector<Vector> read_sidecar(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open sidecar: " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty sidecar: " + path.string());
    const std::size_t dim = split_csv(line).size() - 1;
    if (dim == 0) throw ConfigError("sidecar without coordinates: " + path.string());
    std::vector<Vector> pts;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != dim + 1) {
            throw ConfigError("ragged sidecar row in " + path.string());
        }
        std::vector<double> c(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::size_t used = 0;
            c[i] = std::stod(cells[i + 1], &used);
            if (used != cells[i + 1].size()) {
                throw ConfigError("bad number in " + path.string());
            }
        }
        pts.emplace_back(std::move(c));
    }
    return pts;
}

std::filesystem::path sidecar_path(const std::filesystem::path& main_csv, const char* tag) {
    std::filesystem::path p = main_csv;
    p.replace_filename(main_csv.stem().string() + tag + main_csv.extension().string());
    return p;
}

void check_gap_column(const Trace& tr, const std::filesystem::path& main_csv,
                      std::ifstream& in) {
    const auto half = tr.halfstep_gaps();
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != 5) throw ConfigError("ragged trace row in " + main_csv.string());
        if (row >= half.size() || fmt17(half[row]) != cells[1]) {
            throw ConfigError("trace gap column does not match the iterates in " +
                              main_csv.string());
        }
        ++row;
    }
    if (row != half.size()) {
        throw ConfigError("trace row count does not match the iterates in " + main_csv.string());
    }
}

}  // namespace

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ConfigError("cannot write: " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void write_trace(const std::filesystem::path& dir, const std::string& stem, const Trace& trace) {
    std::filesystem::create_directories(dir);
    const auto z = trace.merged();
    std::ostringstream os;
    os << "k,gap,step,cos_alpha,cos_beta\n";
    for (std::size_t k = 0; k + 1 < z.size(); ++k) {
        os << k << ',' << fmt17(distance(z[k], z[k + 1])) << ',';
        if (k + 2 < z.size()) os << fmt17(distance(z[k], z[k + 2]));
        os << ',';
        if (k + 2 < z.size()) {
            const BuildingBlock blk = make_block(z[k], z[k + 1], z[k + 2]);
            if (!blk.alpha_degenerate) os << fmt17(blk.cos_alpha);
            os << ',';
            if (!blk.beta_degenerate) os << fmt17(blk.cos_beta);
        } else {
            os << ',';
        }
        os << "\n";
    }
    write_text_atomic(dir / (stem + ".csv"), os.str());
    write_sidecar(dir / (stem + "_a.csv"), trace.a_iters);
    write_sidecar(dir / (stem + "_b.csv"), trace.b_iters);
}

Trace read_trace(const std::filesystem::path& main_csv) {
    Trace tr;
    tr.a_iters = read_sidecar(sidecar_path(main_csv, "_a"));
    tr.b_iters = read_sidecar(sidecar_path(main_csv, "_b"));
    if (tr.b_iters.empty()) throw ConfigError("trace has no b-iterates");
    if (tr.a_iters.size() == tr.b_iters.size()) {
        tr.x0_in_a = true;
    } else if (tr.a_iters.size() + 1 == tr.b_iters.size()) {
        tr.x0_in_a = false;
    } else {
        throw ConfigError("sidecar lengths are inconsistent");
    }
    for (std::size_t i = 0; i < tr.a_iters.size(); ++i) {
        tr.gaps.push_back(distance(tr.a_iters[i], tr.b_iters[tr.pair_b_index(i)]));
    }
    for (std::size_t j = 0; j + 1 < tr.b_iters.size(); ++j) {
        tr.steps.push_back(distance(tr.b_iters[j], tr.b_iters[j + 1]));
        const std::size_t a_idx = j + (tr.x0_in_a ? 1 : 0);
        tr.blocks.push_back(make_block(tr.b_iters[j], tr.a_iters[a_idx], tr.b_iters[j + 1]));
    }
    tr.status = RunStatus::max_iter;

    // integrity: the stored gap column must reproduce bitwise
    std::ifstream in(main_csv);
    if (!in) throw ConfigError("cannot open trace: " + main_csv.string());
    std::string line;
    std::getline(in, line);
    if (split_csv(line) != std::vector<std::string>{"k", "gap", "step", "cos_alpha", "cos_beta"}) {
        throw ConfigError("unexpected trace header in " + main_csv.string());
    }
    check_gap_column(tr, main_csv, in);
    return tr;
}

std::string diagnostics_to_json(const DiagnosticsBundle& bundle) {
    nlohmann::json j;
    if (!bundle.separability.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& est : bundle.separability) {
            arr.push_back({{"omega", est.omega},
                           {"gamma_hat", est.gamma_hat},
                           {"blocks_used", est.blocks_used}});
        }
        j["separability"] = arr;
    }
    if (bundle.holder) {
        const auto& h = *bundle.holder;
        nlohmann::json viols = nlohmann::json::array();
        for (const auto& v : h.violations) {
            viols.push_back({{"a_plus", v.a_plus.coords()},
                             {"b_plus", v.b_plus.coords()},
                             {"b", v.b.coords()},
                             {"r", v.r},
                             {"cos_beta", v.cos_beta},
                             {"threshold", v.threshold}});
        }
        j["holder"] = {{"sigma", h.sigma},
                       {"c", h.c},
                       {"violations", viols},
                       {"a_samples", h.a_samples},
                       {"candidates_checked", h.candidates_checked},
                       {"note", h.note}};
    }
    if (bundle.rate) {
        j["rate"] = {{"kind", bundle.rate->kind == RateKind::power ? "power" : "linear"},
                     {"value", bundle.rate->value},
                     {"r2", bundle.rate->r_squared},
                     {"window", {bundle.rate->window_begin, bundle.rate->window_end}}};
    }
    return j.dump(2) + "\n";
}

void write_diagnostics(const std::filesystem::path& path, const DiagnosticsBundle& bundle) {
    write_text_atomic(path, diagnostics_to_json(bundle));
}

}  // namespace projkit
