#include <unistd.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vext/errors.hpp"
#include "vext/oracle.hpp"
#include "vext/serialize.hpp"
#include "vext/session.hpp"

namespace {

using vext::EvalOutcome;

nlohmann::json outcome_to_json(const std::string& input, const EvalOutcome& out) {
    nlohmann::json j;
    j["input"] = input;
    switch (out.kind) {
        case EvalOutcome::Kind::Exact:
            j["kind"] = "exact";
            j["text"] = out.text;
            j["value"] = vext::value_to_json(*out.exact);
            break;
        case EvalOutcome::Kind::Lazy:
            j["kind"] = "sampled";
            j["text"] = out.text;
            break;
        case EvalOutcome::Kind::Truth:
            j["kind"] = "truth";
            j["text"] = out.text;
            break;
        case EvalOutcome::Kind::Text:
            j["kind"] = "report";
            j["text"] = out.text;
            break;
        case EvalOutcome::Kind::Error:
            j["kind"] = "error";
            j["error"] = out.error_type;
            j["message"] = out.text;
            if (out.line > 0) j["line"] = out.line;
            if (out.col > 0) j["col"] = out.col;
            break;
        case EvalOutcome::Kind::Empty:
            j["kind"] = "empty";
            break;
    }
    return j;
}

struct RunFlags {
    bool json = false;
    bool keep_going = false;
};

// Returns true when the outcome is a diagnostic.
bool emit(const std::string& input, const EvalOutcome& out, const RunFlags& flags,
          const std::string& source, int line_no) {
    if (flags.json) {
        if (out.kind != EvalOutcome::Kind::Empty)
            std::cout << outcome_to_json(input, out).dump() << "\n";
        return out.is_error();
    }
    if (out.is_error()) {
        std::cerr << source << ":" << (out.line > 0 ? out.line : line_no);
        if (out.col > 0) std::cerr << ":" << out.col;
        std::cerr << ": " << out.error_type << ": " << out.text << "\n";
        return true;
    }
    if (out.kind != EvalOutcome::Kind::Empty) std::cout << out.text << "\n";
    return false;
}

int run_script(vext::Session& session, const std::string& path, const RunFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open script '" << path << "'\n";
        return 2;
    }
    bool failed = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        EvalOutcome out = session.eval_line(line, line_no);
        if (!flags.json && out.kind != EvalOutcome::Kind::Empty) std::cout << "> " << line << "\n";
        if (emit(line, out, flags, path, line_no)) {
            failed = true;
            if (!flags.keep_going) return 1;
        }
    }
    return failed ? 1 : 0;
}

int run_repl(vext::Session& session, const RunFlags& flags) {
    const bool tty = isatty(fileno(stdin)) != 0;
    if (tty && !flags.json)
        std::cout << "virtual extension calculator; values: inf, eps, n, cyc[...]; Ctrl-D quits\n";
    std::string line;
    int line_no = 0;
    while (true) {
        if (tty && !flags.json) std::cout << "vext> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        ++line_no;
        emit(line, session.eval_line(line, line_no), flags, "<stdin>", line_no);
    }
    if (tty && !flags.json) std::cout << "\n";
    return 0;
}

int run_vet(int universe_size, int max_period, int arity, bool sample_mode, int sample_count,
            std::uint64_t seed, const RunFlags& flags) {
    std::vector<vext::UniverseElement> universe;
    for (int v = 0; v < universe_size; ++v) universe.push_back(vext::UniverseElement::integer(v));
    vext::FragmentModel model = vext::enumerate_fragment(universe, max_period);

    vext::VetOptions opts;
    opts.arity_cap = arity;
    opts.exhaustive = !sample_mode;
    opts.sample_count = sample_count;
    opts.seed = seed;

    const auto start = std::chrono::steady_clock::now();
    std::vector<vext::VetReport> reports = vext::vet_exhaustive(model, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const vext::VetReport& r : reports) std::cout << vext::vet_report_to_json(r).dump() << "\n";

    bool violations = false;
    std::ostringstream table;
    table << "item    verdict        checked  witnesses\n";
    for (const vext::VetReport& r : reports) {
        if (r.verdict == vext::VetVerdict::Fails) violations = true;
        std::string item = vext::vet_item_label(r.item);
        std::string verdict = vext::vet_verdict_label(r.verdict);
        table << item << std::string(item.size() < 8 ? 8 - item.size() : 1, ' ')
              << verdict << std::string(verdict.size() < 15 ? 15 - verdict.size() : 1, ' ')
              << r.checked << std::string(8, ' ') << r.witnesses.size() << "\n";
    }
    table << "model: " << (reports.empty() ? std::string("none") : reports.front().model)
          << "  elapsed: " << vext::format_compact(secs) << "s\n";
    table << (violations ? "VERDICT: violations found\n" : "VERDICT: all rules verified\n");
    std::cerr << table.str();
    return violations ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual-ext: exact arithmetic and transfer checking on virtual extensions"};

    std::int64_t horizon = 10000;
    double tol = 1e-9;
    int max_period = 64;
    int max_degree = 32;
    std::uint64_t seed = 0;
    RunFlags flags;
    std::string script;

    app.add_option("--horizon", horizon, "sampling horizon for the lazy tier");
    app.add_option("--tol", tol, "tolerance for sampled comparisons");
    app.add_option("--max-period", max_period, "cap on cyclic period");
    app.add_option("--max-degree", max_degree, "cap on polynomial degree");
    app.add_option("--seed", seed, "seed for randomized oracle sampling");
    app.add_flag("--json", flags.json, "machine-readable JSON output");
    app.add_option("--script", script, "run a script file instead of the interactive loop");
    app.add_flag("--keep-going", flags.keep_going, "keep evaluating a script after a diagnostic");

    auto* vet = app.add_subcommand("vet", "machine-check the transfer rules on a finite model");
    int vet_universe = 2;
    int vet_period = 2;
    int vet_arity = 2;
    bool vet_all = false;
    int vet_sample = 200;
    vet->add_option("--universe", vet_universe, "ground set size (elements 0..K-1)");
    vet->add_option("--max-period", vet_period, "fragment period bound");
    vet->add_option("--arity", vet_arity, "relation arity cap");
    auto* all_flag = vet->add_flag("--all", vet_all, "enumerate every relation exhaustively");
    auto* sample_opt =
        vet->add_option("--sample", vet_sample, "check this many sampled relation instances");
    sample_opt->excludes(all_flag);

    CLI11_PARSE(app, argc, argv);

    if (vet->parsed()) {
        const bool sample_mode = sample_opt->count() > 0 && !vet_all;
        try {
            return run_vet(vet_universe, vet_period, vet_arity, sample_mode, vet_sample, seed,
                           flags);
        } catch (const vext::Error& e) {
            std::cerr << "vet: " << e.what() << "\n";
            return 2;
        }
    }

    vext::Caps caps;
    caps.max_period = max_period;
    caps.max_degree = max_degree;
    vext::LazyConfig lazy = vext::default_lazy_config();
    lazy.horizon = horizon;
    lazy.tol = tol;
    vext::Session session(caps, lazy);

    if (!script.empty()) return run_script(session, script, flags);
    return run_repl(session, flags);
}
