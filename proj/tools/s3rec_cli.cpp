// Command-line front end. Exit codes: 0 affirmative, 1 negative,
// 2 inconclusive or budget exhausted, 3 input error.
#include "s3rec/s3rec.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

constexpr int kInputError = 3;

struct Freer {
    void operator()(s3rec_triangulation* t) const { s3rec_free(t); }
};
using Handle = std::unique_ptr<s3rec_triangulation, Freer>;

int report_failure(s3rec_status s, const std::string& path)
{
    if (s == S3REC_ERR_PARSE) {
        std::cerr << path << ":" << s3rec_last_error_line() << ":" << s3rec_last_error_column()
                  << ": error: " << s3rec_last_error() << "\n";
        return kInputError;
    }
    std::cerr << "s3rec: " << s3rec_last_error() << "\n";
    return s == S3REC_ERR_BUDGET ? 2 : kInputError;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"s3rec: normal surface tools and 3-sphere recognition"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    int threads = 1;
    app.add_flag("--json", as_json, "Print the JSON report");
    app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    app.set_version_flag("--version", std::string(s3rec_version()));

    std::string path;
    auto add = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", path, "Gluing table")->required();
        return c;
    };
    auto* check = add("check", "Closed 3-manifold (or closed surface) check");
    auto* homology = add("homology", "Integral homology groups");
    auto* enumerate = add("enumerate", "Vertex solutions or Hilbert basis of the matching equations");
    std::string mode = "normal", kind = "hilbert";
    long budget = 1'000'000;
    enumerate->add_option("--mode", mode, "normal | almost")->check(CLI::IsMember({"normal", "almost"}));
    enumerate->add_option("--kind", kind, "vertex | hilbert")->check(CLI::IsMember({"vertex", "hilbert"}));
    enumerate->add_option("--budget", budget, "Intermediate vector cap")->check(CLI::PositiveNumber);
    auto* recognize = add("recognize", "Decide whether the triangulation is the 3-sphere");
    recognize->add_option("--budget", budget, "Intermediate vector cap")->check(CLI::PositiveNumber);
    auto* plcurve = add("plcurve", "Enumerate and classify normal curves on a surface");
    long max_weight = 8;
    int depth = -1;
    plcurve->add_option("--max-weight", max_weight, "Largest curve weight")->check(CLI::NonNegativeNumber);
    plcurve->add_option("--depth", depth, "Move search depth (default: curve weight)");
    auto* verify = add("verify", "Re-check a JSON report against the triangulation");
    std::string report_path;
    verify->add_option("report", report_path, "JSON report")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    s3rec_triangulation* raw = nullptr;
    if (auto s = s3rec_load(path.c_str(), &raw); s != S3REC_OK) return report_failure(s, path);
    Handle tri(raw);

    const s3rec_format fmt = as_json ? S3REC_JSON : S3REC_TEXT;
    s3rec_outcome outcome = S3REC_INCONCLUSIVE;
    char* out = nullptr;
    s3rec_status s = S3REC_OK;
    if (*check) {
        s = s3rec_check(tri.get(), fmt, &outcome, &out);
    } else if (*homology) {
        s = s3rec_homology(tri.get(), fmt, &outcome, &out);
    } else if (*enumerate) {
        s = s3rec_enumerate(tri.get(), mode == "almost", kind == "hilbert", budget, threads, fmt, &outcome, &out);
    } else if (*recognize) {
        s = s3rec_recognize(tri.get(), budget, threads, fmt, &outcome, &out);
    } else if (*plcurve) {
        s = s3rec_plcurve(tri.get(), max_weight, depth, fmt, &outcome, &out);
    } else if (*verify) {
        std::ifstream in(report_path);
        if (!in) {
            std::cerr << "s3rec: cannot read " << report_path << "\n";
            return kInputError;
        }
        std::stringstream text;
        text << in.rdbuf();
        s = s3rec_verify(tri.get(), text.str().c_str(), fmt, &outcome, &out);
        path = report_path;
    }
    if (s != S3REC_OK) return report_failure(s, path);
    std::cout << out;
    s3rec_string_free(out);
    return static_cast<int>(outcome);
}
