#include "spinflat/decide.hpp"
#include "spinflat/spinlift.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace spinflat;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
    if (dynamic_cast<const CapExceededError*>(&e)) return kExitCap;
    return kExitInternal;
}

struct BatchRow {
    std::string name;
    bool ok = false;
    SpinReport report;
    std::string error;
    int error_code = 0;
};

const char* kTsvHeader = "name\torientable\tholonomy_order\tsylow_order\tspin_exists\t"
                         "count_cover\thom_z2\tcount_manifold";

std::string tsv_row(const BatchRow& row) {
    std::ostringstream os;
    os << row.name << '\t';
    if (!row.ok) {
        os << "error\terror\terror\terror\terror\terror\terror";
        return os.str();
    }
    const SpinReport& r = row.report;
    os << (r.orientable ? "true" : "false") << '\t' << r.holonomy_order << '\t' << r.sylow_order
       << '\t' << (r.exists ? "true" : "false") << '\t' << r.count_cover << '\t' << r.hom_z2
       << '\t' << r.count_manifold;
    return os.str();
}

int run_analyze(const std::string& path, const AnalyzeOptions& opts, bool json) {
    try {
        SpinReport r = analyze(parse_group_file(path), opts);
        std::cout << (json ? render_json(r) + "\n" : render_text(r));
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

IntMat read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::vector<i64> entries;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            Rat v = parse_rat(tok);
            if (!v.is_integer()) throw ParseError("matrix entries must be integers");
            entries.push_back(v.num);
        }
    }
    int n = 0;
    while (static_cast<std::size_t>(n) * n < entries.size()) ++n;
    if (static_cast<std::size_t>(n) * n != entries.size() || n < 2 || n > 8)
        throw ParseError("expected an n x n integer matrix with 2 <= n <= 8");
    IntMat m(n);
    m.a = entries;
    return m;
}

int run_lift(const std::string& path, bool json) {
    try {
        IntMat X = read_matrix_file(path);
        CliffordElement x = lift(X);
        if (!x.is_spin() || x.lambda_matrix() != X.to_rational())
            throw InternalError("lift does not project back to the input matrix");
        if (json) {
            nlohmann::ordered_json j;
            j["preimage"] = x.str();
            j["other_preimage"] = (-x).str();
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << x.str() << '\n';
            std::cout << "# the other preimage is the negative of the element above\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int run_batch(const std::string& dir, const AnalyzeOptions& opts, bool json, bool keep_going) {
    std::vector<std::string> files;
    try {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".grp")
                files.push_back(entry.path().string());
    } catch (const fs::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    }
    std::sort(files.begin(), files.end());

    std::vector<BatchRow> rows(files.size());
    const long long count = static_cast<long long>(files.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        BatchRow& row = rows[i];
        row.name = fs::path(files[i]).stem().string();
        try {
            row.report = analyze(parse_group_file(files[i]), opts);
            row.ok = true;
        } catch (const std::exception& e) {
            row.error = e.what();
            row.error_code = exit_code_for(e);
        }
    }

    std::size_t orientable = 0, with_spin = 0, errors = 0;
    for (const BatchRow& r : rows) {
        if (!r.ok) {
            ++errors;
            continue;
        }
        if (r.report.orientable) ++orientable;
        if (r.report.exists) ++with_spin;
    }

    if (json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const BatchRow& r : rows) {
            nlohmann::ordered_json o;
            o["name"] = r.name;
            if (r.ok) {
                o["orientable"] = r.report.orientable;
                o["holonomy_order"] = r.report.holonomy_order;
                o["sylow_order"] = r.report.sylow_order;
                o["spin_exists"] = r.report.exists;
                o["count_cover"] = r.report.count_cover;
                o["hom_z2"] = r.report.hom_z2;
                o["count_manifold"] = r.report.count_manifold;
            } else {
                o["error"] = r.error;
            }
            out.push_back(std::move(o));
        }
        nlohmann::ordered_json summary;
        summary["total"] = rows.size();
        summary["orientable"] = orientable;
        summary["spin"] = with_spin;
        summary["errors"] = errors;
        nlohmann::ordered_json doc;
        doc["rows"] = std::move(out);
        doc["summary"] = std::move(summary);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << kTsvHeader << '\n';
        for (const BatchRow& r : rows) std::cout << tsv_row(r) << '\n';
        std::cout << "# total=" << rows.size() << " orientable=" << orientable
                  << " spin=" << with_spin << " errors=" << errors << '\n';
        for (const BatchRow& r : rows)
            if (!r.ok) std::cout << "# error " << r.name << ": " << r.error << '\n';
    }

    if (errors == 0 || keep_going) return 0;
    for (const BatchRow& r : rows)
        if (!r.ok) return r.error_code;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin structures on flat manifolds from crystallographic group data"};
    app.require_subcommand(1);

    bool json = false;
    bool oracle = false;
    bool lifts = false;
    bool keep_going = false;
    long long cap = 10000;

    std::string analyze_path;
    CLI::App* cmd_analyze =
        app.add_subcommand("analyze", "decide spin existence and count structures");
    cmd_analyze->add_option("input", analyze_path, "group input file")->required();
    cmd_analyze->add_flag("--json", json, "emit JSON instead of key=value text");
    cmd_analyze->add_flag("--oracle", oracle, "cross-check the count by exhaustive enumeration");
    cmd_analyze->add_flag("--lifts", lifts, "list the sign assignments of every structure");
    cmd_analyze->add_option("--cap", cap, "holonomy group order cap");

    std::string lift_path;
    CLI::App* cmd_lift = app.add_subcommand("lift", "lift one SO(n,Z) matrix to Spin(n)");
    cmd_lift->add_option("matrix", lift_path, "file with one signed permutation matrix, det +1")
        ->required();
    cmd_lift->add_flag("--json", json, "emit JSON");

    std::string batch_dir;
    CLI::App* cmd_batch = app.add_subcommand("batch", "analyze every .grp file in a directory");
    cmd_batch->add_option("directory", batch_dir, "directory of group input files")->required();
    cmd_batch->add_flag("--json", json, "emit JSON instead of TSV");
    cmd_batch->add_flag("--oracle", oracle, "cross-check every count by enumeration");
    cmd_batch->add_option("--cap", cap, "holonomy group order cap");
    cmd_batch->add_flag("--keep-going", keep_going, "exit 0 even if some files fail");

    CLI11_PARSE(app, argc, argv);

    AnalyzeOptions opts;
    opts.cap = cap;
    opts.run_oracle = oracle;
    opts.enumerate_assignments = lifts;

    if (cmd_analyze->parsed()) return run_analyze(analyze_path, opts, json);
    if (cmd_lift->parsed()) return run_lift(lift_path, json);
    if (cmd_batch->parsed()) return run_batch(batch_dir, opts, json, keep_going);
    return 1;
}
