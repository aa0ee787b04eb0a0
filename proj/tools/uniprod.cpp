#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uniprod/derivation.hpp"
#include "uniprod/errors.hpp"
#include "uniprod/matrixlab.hpp"
#include "uniprod/parse.hpp"
#include "uniprod/report_json.hpp"

namespace {

using uniprod::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

uniprod::SymmetryFlags flags_from(const std::string& csv, bool provided) {
    uniprod::SymmetryFlags f;
    if (!provided) return f;
    f.phi1_tracial = false;
    f.phi2_tracial_each_arg = false;
    f.phi2_symmetric = false;
    for (const auto& tok : split_csv(csv)) {
        if (tok == "tracial")
            f.phi1_tracial = true;
        else if (tok == "phi2tracial")
            f.phi2_tracial_each_arg = true;
        else if (tok == "symmetric")
            f.phi2_symmetric = true;
        else
            throw UsageError("unknown symmetry flag: " + tok +
                             " (expected tracial, phi2tracial, symmetric)");
    }
    return f;
}

uniprod::Factorizer first_order_from(const std::string& name) {
    if (name == "tensor") return uniprod::Factorizer::tensor_product;
    return uniprod::Factorizer::free_product;
}

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("UNIPROD_OUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    return std::string(dir) + "/" + path;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::string path = resolve_out_path(out_path);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return 2;
    }
    file << text;
    return file.good() ? 0 : 2;
}

std::string render_reports(const std::vector<uniprod::DerivationReport>& reports,
                           const Json& invocation, const std::string& format) {
    if (format == "text") return uniprod::reports_to_text(reports);
    if (format == "latex") return uniprod::reports_to_latex(reports);
    return uniprod::render_document(
        uniprod::make_document(invocation, uniprod::reports_payload(reports)));
}

Json row_to_json(const uniprod::LabRow& r) {
    Json j;
    j["instance"] = r.instance;
    j["dim"] = r.dim;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["estimate"] = r.estimate;
    j["stderr"] = r.standard_error;
    j["candidate_1"] = r.prediction_1;
    j["candidate_2"] = r.prediction_2;
    j["verdict"] = r.verdict;
    j["pass"] = r.pass;
    return j;
}

std::string rows_to_text(const std::vector<uniprod::LabRow>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += "instance " + r.instance + ": dim " + std::to_string(r.dim) +
               ", samples " + std::to_string(r.samples) + ", seed " +
               std::to_string(r.seed) + "\n";
        out += "  estimate " + std::to_string(r.estimate) + " (stderr " +
               std::to_string(r.standard_error) + ")\n";
        out += "  candidate 1 predicts " + std::to_string(r.prediction_1) +
               ", candidate 2 predicts " + std::to_string(r.prediction_2) + "\n";
        out += "  verdict: " + r.verdict + "\n";
    }
    return out;
}

std::string rows_to_latex(const std::vector<uniprod::LabRow>& rows) {
    std::string out = "\\begin{tabular}{lrrrrl}\n";
    out += "instance & estimate & stderr & cand.~1 & cand.~2 & verdict \\\\\n";
    for (const auto& r : rows) {
        out += r.instance + " & " + std::to_string(r.estimate) + " & " +
               std::to_string(r.standard_error) + " & " +
               std::to_string(r.prediction_1) + " & " +
               std::to_string(r.prediction_2) + " & " + r.verdict + " \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

struct DeriveArgs {
    std::string pattern;
    std::string flags;
    bool flags_given = false;
    std::string first_order = "free";
    std::string out;
    std::string format = "json";
};

struct ClassifyArgs {
    int order = 1;
    int max_letters = 4;
    std::string out;
    std::string format = "json";
};

struct ExploreArgs {
    std::string pattern;
    std::string branch = "all";
    std::string out;
    std::string format = "json";
};

struct VerifyArgs {
    std::string instance;
    int dim = 200;
    int samples = 2000;
    std::uint64_t seed = 42;
    std::string csv;
    std::string out;
    std::string format = "json";
};

int run_derive(const DeriveArgs& args) {
    uniprod::SymmetryFlags flags = flags_from(args.flags, args.flags_given);
    uniprod::MomentSymbol sym = uniprod::parse_moment(args.pattern);
    uniprod::Pattern pattern = uniprod::make_pattern(sym, flags);
    auto reports =
        uniprod::derive_pattern(pattern, first_order_from(args.first_order));
    Json invocation;
    invocation["command"] = "derive";
    invocation["pattern"] = args.pattern;
    invocation["flags"] = uniprod::flags_to_json(flags);
    invocation["first_order"] =
        args.first_order == "tensor" ? "tensor" : "free";
    invocation["format"] = args.format;
    return emit(render_reports(reports, invocation, args.format), args.out);
}

int run_reproduce(const std::string& out, const std::string& format) {
    uniprod::PaperReproduction chain = uniprod::reproduce_paper();
    Json invocation;
    invocation["command"] = "reproduce-paper";
    invocation["format"] = format;
    return emit(render_reports(chain.reports, invocation, format), out);
}

int run_classify(const ClassifyArgs& args) {
    if (args.order != 1)
        throw UsageError("classify supports --order 1 only");
    uniprod::ClassificationResult result =
        uniprod::classify_first_order(args.max_letters);
    Json invocation;
    invocation["command"] = "classify";
    invocation["order"] = 1;
    invocation["max_letters"] = args.max_letters;
    invocation["format"] = args.format;
    return emit(render_reports(result.reports, invocation, args.format),
                args.out);
}

int run_explore(const ExploreArgs& args) {
    uniprod::MomentSymbol sym = uniprod::parse_moment(args.pattern);
    uniprod::Pattern pattern = uniprod::make_pattern(sym, uniprod::SymmetryFlags{});
    uniprod::BranchChoice choice = uniprod::BranchChoice::all;
    if (args.branch == "1") choice = uniprod::BranchChoice::candidate_1;
    else if (args.branch == "2") choice = uniprod::BranchChoice::candidate_2;
    else if (args.branch != "all")
        throw UsageError("--branch takes 1, 2 or all");
    auto reports = uniprod::explore_pattern(pattern, choice);
    Json invocation;
    invocation["command"] = "explore";
    invocation["pattern"] = args.pattern;
    invocation["branch"] = args.branch;
    invocation["format"] = args.format;
    return emit(render_reports(reports, invocation, args.format), args.out);
}

int run_verify(const VerifyArgs& args) {
    bool known = false;
    for (const auto& name : uniprod::lab_instances())
        if (name == args.instance) known = true;
    if (!known) {
        std::string names;
        for (const auto& name : uniprod::lab_instances()) {
            if (!names.empty()) names += ", ";
            names += name;
        }
        throw UsageError("unknown instance " + args.instance +
                         " (available: " + names + ")");
    }
    uniprod::EnsembleSpec spec;
    spec.dim = args.dim;
    uniprod::LabRow row =
        uniprod::run_instance(args.instance, spec, args.samples, args.seed);
    std::vector<uniprod::LabRow> rows{row};
    Json invocation;
    invocation["command"] = "verify-mc";
    invocation["instance"] = args.instance;
    invocation["dim"] = args.dim;
    invocation["samples"] = args.samples;
    invocation["seed"] = args.seed;
    invocation["format"] = args.format;
    std::string text;
    if (args.format == "text")
        text = rows_to_text(rows);
    else if (args.format == "latex")
        text = rows_to_latex(rows);
    else {
        Json payload = Json::array();
        payload.push_back(row_to_json(row));
        text = uniprod::render_document(
            uniprod::make_document(invocation, payload));
    }
    if (!args.csv.empty()) {
        int rc = emit(uniprod::lab_rows_csv(rows), args.csv);
        if (rc != 0) return rc;
    }
    int rc = emit(text, args.out);
    if (rc != 0) return rc;
    return row.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic derivation engine for mixed-moment product rules"};
    app.require_subcommand(1);

    DeriveArgs derive_args;
    CLI::App* derive = app.add_subcommand(
        "derive", "derive the product rule for one moment pattern");
    derive->add_option("--pattern", derive_args.pattern, "moment pattern, e.g. \"phi2(a1 b1, a2 b2)\"")
        ->required();
    CLI::Option* flags_opt =
        derive->add_option("--flags", derive_args.flags,
                           "comma list of tracial, phi2tracial, symmetric");
    derive->add_option("--first-order", derive_args.first_order,
                       "first-order factorization model")
        ->check(CLI::IsMember({"free", "tensor"}));
    derive->add_option("--out", derive_args.out, "output file");
    derive->add_option("--format", derive_args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    std::string reproduce_out;
    std::string reproduce_format = "json";
    CLI::App* reproduce = app.add_subcommand(
        "reproduce-paper", "run the built-in reference derivation chain");
    reproduce->add_option("--out", reproduce_out, "output file");
    reproduce->add_option("--format", reproduce_format, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand(
        "classify", "stage every mixed class up to a letter bound");
    classify->add_option("--order", classify_args.order, "moment order")
        ->required();
    classify->add_option("--max-letters", classify_args.max_letters,
                         "letter bound (2..6)");
    classify->add_option("--out", classify_args.out, "output file");
    classify->add_option("--format", classify_args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    ExploreArgs explore_args;
    CLI::App* explore = app.add_subcommand(
        "explore", "continue a second-order pattern past the branch point");
    explore->add_option("--pattern", explore_args.pattern, "moment pattern")
        ->required();
    explore->add_option("--branch", explore_args.branch,
                        "which branch rule to continue under (1, 2 or all)");
    explore->add_option("--out", explore_args.out, "output file");
    explore->add_option("--format", explore_args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify-mc", "Monte Carlo check of a named matrix instance");
    verify->add_option("--instance", verify_args.instance, "instance name")
        ->required();
    verify->add_option("--dim", verify_args.dim, "matrix dimension");
    verify->add_option("--samples", verify_args.samples, "number of draws");
    verify->add_option("--seed", verify_args.seed, "generator seed");
    verify->add_option("--csv", verify_args.csv, "also write rows as CSV");
    verify->add_option("--out", verify_args.out, "output file");
    verify->add_option("--format", verify_args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "latex"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    derive_args.flags_given = flags_opt->count() > 0;

    try {
        if (derive->parsed()) return run_derive(derive_args);
        if (reproduce->parsed()) return run_reproduce(reproduce_out, reproduce_format);
        if (classify->parsed()) return run_classify(classify_args);
        if (explore->parsed()) return run_explore(explore_args);
        if (verify->parsed()) return run_verify(verify_args);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const uniprod::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::DegeneratePatternError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::BranchOverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::MissingOrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::OrderError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const uniprod::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
