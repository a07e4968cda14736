// kinn: exact counting, enumeration, identity verification and rendering of
// polygon dissections.
//
// Exit codes: 0 success / identity verified, 1 identity refuted
// (counterexample found), 2 usage or domain error, 3 output I/O error.

#include "CLI11.hpp"

#include "kinn/catalan.hpp"
#include "kinn/enumerate.hpp"
#include "kinn/render.hpp"
#include "kinn/serialize.hpp"
#include "kinn/verify.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    std::string what;
    int n = 0;
    std::optional<int> k;
    std::optional<std::uint64_t> limit;
    std::optional<int> n_max, k_max, q_max;
    std::string format = "text";
    std::string input_path, inline_text, output_path;
};

int require_k(const Options& opt) {
    if (!opt.k) throw std::domain_error("this operation needs -k");
    return *opt.k;
}

int run_count(const Options& opt) {
    std::string value;
    if (opt.what == "triangulations") {
        if (opt.n < 3) throw std::domain_error("triangulations: requires n >= 3");
        value = kinn::catalan(opt.n - 2).str();
    } else if (opt.what == "k_in_n" || opt.what == "f_closed") {
        value = kinn::f_closed(require_k(opt), opt.n).str();
    } else if (opt.what == "convolution_lhs") {
        value = kinn::convolution_lhs(require_k(opt), opt.n).str();
    } else if (opt.what == "convolution_rhs") {
        value = kinn::convolution_rhs(require_k(opt), opt.n).str();
    } else if (opt.what == "avg_cycles") {
        value = kinn::average_cycles_closed(require_k(opt), opt.n).str();
    } else {
        throw std::domain_error("unknown quantity: " + opt.what);
    }
    std::cout << value << "\n";
    return kExitOk;
}

int run_enumerate(const Options& opt) {
    std::uint64_t emitted = 0;
    const auto emit = [&](const std::string& line) {
        std::cout << line << "\n";
        ++emitted;
        return !opt.limit || emitted < *opt.limit;
    };
    if (opt.limit && *opt.limit == 0) return kExitOk;
    if (opt.what == "triangulations") {
        kinn::enumerate_triangulations(
            opt.n, [&](const kinn::Triangulation& t) { return emit(kinn::serialize(t)); });
    } else if (opt.what == "k_in_n") {
        kinn::enumerate_k_in_n(require_k(opt), opt.n,
                               [&](const kinn::KInN& x) { return emit(kinn::serialize(x)); });
    } else {
        throw std::domain_error("unknown stream: " + opt.what);
    }
    return kExitOk;
}

int run_verify(const Options& opt) {
    const kinn::Identity id = kinn::identity_from_string(opt.what);
    kinn::VerifyRange range;
    range.n_max = opt.n_max;
    range.k_max = opt.k_max;
    range.q_max = opt.q_max;
    const kinn::IdentityReport report = kinn::verify_identity(id, range);
    std::cout << (opt.format == "json" ? kinn::report_json(report) + "\n"
                                       : kinn::report_text(report));
    return report.passed ? kExitOk : kExitRefuted;
}

int run_render(const Options& opt) {
    std::string text;
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path, std::ios::binary);
        if (!in) throw std::domain_error("cannot read input file: " + opt.input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    } else {
        text = opt.inline_text;
    }

    const auto parsed = kinn::parse(text);
    const std::string svg = std::holds_alternative<kinn::KInN>(parsed)
                                ? kinn::render_svg(std::get<kinn::KInN>(parsed))
                                : kinn::render_svg(std::get<kinn::Dissection>(parsed));

    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << opt.output_path << "\n";
        return kExitIo;
    }
    out << svg;
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing output file: " << opt.output_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting, enumeration and verification of polygon dissections"};
    app.require_subcommand(1);
    Options opt;

    auto* count = app.add_subcommand("count", "print an exact count or average");
    count->add_option("what", opt.what,
                      "one of: triangulations, k_in_n, f_closed, convolution_lhs, "
                      "convolution_rhs, avg_cycles")
        ->required();
    count->add_option("-n", opt.n, "polygon size / index")->required();
    count->add_option("-k", opt.k, "face size / convolution order");

    auto* enumerate = app.add_subcommand("enumerate", "stream canonical serializations");
    enumerate->add_option("what", opt.what, "one of: triangulations, k_in_n")->required();
    enumerate->add_option("-n", opt.n, "polygon size")->required();
    enumerate->add_option("-k", opt.k, "marked face size");
    enumerate->add_option("--limit", opt.limit, "stop after this many items");

    auto* verify = app.add_subcommand("verify", "check an identity on a parameter grid");
    verify->add_option("what", opt.what,
                       "one of: eq1, eq2, eq2_truncated, eq3, eq4, eq5, eq6, eq7, corollary")
        ->required();
    verify->add_option("--n-max", opt.n_max, "upper bound for n");
    verify->add_option("--k-max", opt.k_max, "upper bound for k");
    verify->add_option("--q-max", opt.q_max, "upper bound for q");
    verify->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* render = app.add_subcommand("render", "write an SVG diagram of a dissection");
    auto* in_file = render->add_option("--input", opt.input_path, "dissection file");
    auto* in_line = render->add_option("--inline", opt.inline_text, "dissection text");
    render->add_option("--output", opt.output_path, "SVG output path")->required();
    in_file->excludes(in_line);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (verify->parsed()) return run_verify(opt);
        if (render->parsed()) {
            if (opt.input_path.empty() && opt.inline_text.empty())
                throw std::domain_error("render needs --input or --inline");
            return run_render(opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
