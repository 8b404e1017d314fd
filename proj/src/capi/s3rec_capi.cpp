#include "s3rec/s3rec.h"

#include "s3rec/error.hpp"
#include "s3rec/io.hpp"
#include "s3rec/json_io.hpp"

#include <cstring>
#include <new>

struct s3rec_triangulation {
    s3rec::GluingTable table;
};

namespace {

using s3rec::Error;
using s3rec::ErrorCode;
using namespace s3rec::report;

struct LastError {
    std::string message;
    int line = 0;
    int column = 0;
};

thread_local LastError last_error;

s3rec_status fail(s3rec_status s, std::string msg, int line = 0, int column = 0)
{
    last_error = {std::move(msg), line, column};
    return s;
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

// Runs f, translating exceptions into status codes.
template <class F>
s3rec_status guarded(F&& f)
{
    last_error = {};
    try {
        return f();
    } catch (const s3rec::ParseError& e) {
        return fail(S3REC_ERR_PARSE, e.message(), e.line(), e.column());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ResourceBudgetExceeded) return fail(S3REC_ERR_BUDGET, e.what());
        return fail(S3REC_ERR_INPUT, std::string(s3rec::error_code_name(e.code())) + ": " + e.what());
    } catch (const json::exception& e) {
        return fail(S3REC_ERR_INPUT, std::string("report: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(S3REC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(S3REC_ERR_INTERNAL, e.what());
    }
}

const s3rec::Triangulation* as3(const s3rec_triangulation* t) { return std::get_if<s3rec::Triangulation>(&t->table); }
const s3rec::SurfaceTriangulation* as2(const s3rec_triangulation* t)
{
    return std::get_if<s3rec::SurfaceTriangulation>(&t->table);
}

s3rec_status emit(const json& j, s3rec_format fmt, s3rec_outcome* outcome, char** out, s3rec_outcome o)
{
    if (outcome) *outcome = o;
    *out = dup(fmt == S3REC_JSON ? j.dump(2) + "\n" : render_text(j));
    return S3REC_OK;
}

s3rec_outcome yes_no(const json& j) { return j["affirmative"].get<bool>() ? S3REC_AFFIRMATIVE : S3REC_NEGATIVE; }

s3rec_status need(bool ok, const char* what)
{
    return ok ? S3REC_OK : fail(S3REC_ERR_ARGUMENT, what);
}

#define S3REC_REQUIRE(cond, msg)                                 \
    do {                                                         \
        if (s3rec_status s_ = need((cond), (msg)); s_ != S3REC_OK) \
            return s_;                                           \
    } while (0)

json check_json(const s3rec_triangulation* t)
{
    return as3(t) ? check_report(*as3(t)) : check_report(*as2(t));
}

json homology_json_of(const s3rec_triangulation* t)
{
    return as3(t) ? homology_report(*as3(t)) : homology_report(*as2(t));
}

json enumerate_json(const s3rec::Triangulation& tri, bool almost, bool hilbert, long budget, int threads)
{
    const auto sys = s3rec::matching_matrix(tri, almost ? s3rec::CoordMode::AlmostNormal : s3rec::CoordMode::Normal);
    s3rec::EnumerationOptions opt{budget, threads};
    return enumerate_report(hilbert ? s3rec::hilbert_basis(sys, opt) : s3rec::vertex_solutions(sys, opt));
}

std::vector<ClassifiedCurve> classify_all(const s3rec::SurfaceTriangulation& f, long max_weight, int depth)
{
    std::vector<ClassifiedCurve> out;
    for (auto& c : s3rec::enumerate_normal_curves(f, max_weight)) {
        ClassifiedCurve cc;
        cc.vertex_linking = s3rec::is_vertex_linking_curve(f, c);
        cc.classification = s3rec::classify(f, c, depth);
        cc.curve = std::move(c);
        out.push_back(std::move(cc));
    }
    return out;
}

// Recomputes a non-certificate report and compares it field by field.
s3rec::VerifyResult reproduce(const s3rec_triangulation* t, const json& given)
{
    const std::string cmd = given.at("command").get<std::string>();
    json fresh;
    if (cmd == "check") {
        fresh = check_json(t);
    } else if (cmd == "homology") {
        fresh = homology_json_of(t);
    } else if (cmd == "enumerate") {
        if (!as3(t)) throw Error(ErrorCode::InvalidArgument, "enumeration reports need a 3-dimensional triangulation");
        const auto sys = given.at("system").get<std::string>();
        const auto kind = given.at("kind").get<std::string>();
        if ((sys != "normal" && sys != "almost_normal") || (kind != "HilbertBasis" && kind != "VertexSolutions"))
            throw Error(ErrorCode::InvalidArgument, "report: unknown enumeration kind");
        fresh = enumerate_json(*as3(t), sys == "almost_normal", kind == "HilbertBasis", 1'000'000, 1);
        // Work counters depend on the budget and thread count, not the answer.
        fresh["peak_intermediate"] = given.at("peak_intermediate");
    } else if (cmd == "plcurve") {
        if (!as2(t)) throw Error(ErrorCode::InvalidArgument, "curve reports need a surface");
        const auto& f = *as2(t);
        const auto& curves = given.at("curves");
        int depth = -1;
        for (const auto& c : curves)
            if (c.at("depth_limit").get<long>() != c.at("weight").get<long>()) depth = c.at("depth_limit").get<int>();
        fresh = plcurve_report(f, given.at("max_weight").get<long>(), classify_all(f, given.at("max_weight").get<long>(), depth));
        // Witness moves are replayed independently as well.
        for (const auto& c : curves) {
            auto curve = s3rec::NormalCurveVector::from_counts(c.at("counts").get<std::vector<long>>());
            for (const auto& w : c.at("witnesses")) {
                s3rec::SideWitness sw;
                sw.side_vertices = w.at("side_vertices").get<std::vector<int>>();
                for (const auto& m : w.at("moves"))
                    sw.moves.push_back({m.at("vertex").get<int>(), m.at("run_start").get<int>(), m.at("run_length").get<int>(),
                                        m.at("vanish").get<bool>(), m.at("weight_before").get<long>(),
                                        m.at("weight_after").get<long>()});
                if (!s3rec::replay(f, curve, sw)) return {false, "witness replay for curve " + curve.to_string()};
            }
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "report: '" + cmd + "' reports carry nothing to verify");
    }
    for (const auto& [key, value] : fresh.items())
        if (!given.contains(key) || given.at(key) != value) return {false, "field '" + key + "' differs"};
    for (const auto& [key, value] : given.items())
        if (!fresh.contains(key)) return {false, "unexpected field '" + key + "'"};
    return {};
}

}  // namespace

extern "C" {

const char* s3rec_version(void) { return "1.0.0"; }

s3rec_status s3rec_load(const char* path, s3rec_triangulation** out)
{
    S3REC_REQUIRE(path && out, "null argument");
    return guarded([&] {
        *out = new s3rec_triangulation{s3rec::load_gluing_table(path)};
        return S3REC_OK;
    });
}

s3rec_status s3rec_parse(const char* text, s3rec_triangulation** out)
{
    S3REC_REQUIRE(text && out, "null argument");
    return guarded([&] {
        *out = new s3rec_triangulation{s3rec::parse_gluing_table(text)};
        return S3REC_OK;
    });
}

void s3rec_free(s3rec_triangulation* t) { delete t; }

int s3rec_dimension(const s3rec_triangulation* t) { return !t ? 0 : as3(t) ? 3 : 2; }

int s3rec_size(const s3rec_triangulation* t)
{
    if (!t) return 0;
    return as3(t) ? as3(t)->size() : as2(t)->size();
}

s3rec_status s3rec_serialize(const s3rec_triangulation* t, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    return guarded([&] {
        *out = dup(as3(t) ? s3rec::serialize(*as3(t)) : s3rec::serialize(*as2(t)));
        return S3REC_OK;
    });
}

s3rec_status s3rec_check(const s3rec_triangulation* t, s3rec_format fmt, s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    return guarded([&] {
        auto j = check_json(t);
        return emit(j, fmt, outcome, out, yes_no(j));
    });
}

s3rec_status s3rec_homology(const s3rec_triangulation* t, s3rec_format fmt, s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    return guarded([&] {
        auto j = homology_json_of(t);
        return emit(j, fmt, outcome, out, yes_no(j));
    });
}

s3rec_status s3rec_enumerate(const s3rec_triangulation* t, int almost, int hilbert, long budget, int threads,
                             s3rec_format fmt, s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    S3REC_REQUIRE(as3(t), "enumeration needs a 3-dimensional triangulation");
    S3REC_REQUIRE(budget > 0 && threads > 0, "budget and threads must be positive");
    return guarded([&] { return emit(enumerate_json(*as3(t), almost, hilbert, budget, threads), fmt, outcome, out, S3REC_AFFIRMATIVE); });
}

s3rec_status s3rec_recognize(const s3rec_triangulation* t, long budget, int threads, s3rec_format fmt,
                             s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    S3REC_REQUIRE(as3(t), "recognition needs a 3-dimensional triangulation");
    S3REC_REQUIRE(budget > 0 && threads > 0, "budget and threads must be positive");
    return guarded([&] {
        const auto r = s3rec::recognize(*as3(t), {budget, threads});
        const s3rec_outcome o = r.verdict == s3rec::Verdict::YesSphere  ? S3REC_AFFIRMATIVE
                                : r.verdict == s3rec::Verdict::NoSphere ? S3REC_NEGATIVE
                                                                        : S3REC_INCONCLUSIVE;
        return emit(recognize_report(r), fmt, outcome, out, o);
    });
}

s3rec_status s3rec_plcurve(const s3rec_triangulation* t, long max_weight, int depth, s3rec_format fmt,
                           s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && out, "null argument");
    S3REC_REQUIRE(as2(t), "curve classification needs a surface");
    S3REC_REQUIRE(max_weight >= 0, "max weight must be nonnegative");
    return guarded([&] {
        const auto& f = *as2(t);
        return emit(plcurve_report(f, max_weight, classify_all(f, max_weight, depth)), fmt, outcome, out, S3REC_AFFIRMATIVE);
    });
}

s3rec_status s3rec_verify(const s3rec_triangulation* t, const char* report_json, s3rec_format fmt,
                          s3rec_outcome* outcome, char** out)
{
    S3REC_REQUIRE(t && report_json && out, "null argument");
    return guarded([&] {
        const json given = json::parse(report_json);
        require_schema(given);
        const std::string cmd = given.at("command").get<std::string>();
        s3rec::VerifyResult r;
        if (cmd == "recognize") {
            if (!as3(t)) throw Error(ErrorCode::InvalidArgument, "recognition reports need a 3-dimensional triangulation");
            r = s3rec::verify_certificate(*as3(t), recognition_from_json(given));
        } else {
            r = reproduce(t, given);
        }
        return emit(verify_report(cmd, r), fmt, outcome, out, r.ok ? S3REC_AFFIRMATIVE : S3REC_NEGATIVE);
    });
}

const char* s3rec_last_error(void) { return last_error.message.c_str(); }
int s3rec_last_error_line(void) { return last_error.line; }
int s3rec_last_error_column(void) { return last_error.column; }

void s3rec_string_free(char* s) { std::free(s); }

}  // extern "C"
