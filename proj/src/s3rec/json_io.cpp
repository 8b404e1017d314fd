#include "s3rec/json_io.hpp"

#include "s3rec/error.hpp"

#include <sstream>

namespace s3rec::report {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "report: " + what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

json header(const char* command)
{
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

json int_list(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(integer(x));
    return a;
}

const char* mode_name(CoordMode m) { return m == CoordMode::Normal ? "normal" : "almost_normal"; }

const char* system_name(MatchingSystem::Kind k)
{
    switch (k) {
    case MatchingSystem::Kind::Plain: return "plain";
    case MatchingSystem::Kind::Normal: return "normal";
    case MatchingSystem::Kind::AlmostNormal: return "almost_normal";
    }
    return "?";
}

ManifoldCheck::Reason reason_from(const std::string& s)
{
    for (auto r : {ManifoldCheck::Reason::Ok, ManifoldCheck::Reason::BoundaryFace, ManifoldCheck::Reason::BadEdge,
                   ManifoldCheck::Reason::BadVertexLink})
        if (s == reason_name(r)) return r;
    bad("unknown manifold reason '" + s + "'");
}

Verdict verdict_from(const std::string& s)
{
    for (auto v : {Verdict::YesSphere, Verdict::NoSphere, Verdict::Inconclusive})
        if (s == verdict_name(v)) return v;
    bad("unknown verdict '" + s + "'");
}

Certificate certificate_from(const std::string& s)
{
    for (auto c : {Certificate::VertexStar, Certificate::PuncturedBall, Certificate::AlmostNormalSphere,
                   Certificate::Uncertified})
        if (s == certificate_name(c)) return c;
    bad("unknown certificate '" + s + "'");
}

json manifold_json(const ManifoldCheck& m)
{
    json j;
    j["ok"] = m.ok();
    j["reason"] = reason_name(m.reason);
    j["witness"] = m.witness;
    return j;
}

json move_json(const CurveMove& m)
{
    json j;
    j["vertex"] = m.vertex;
    j["run_start"] = m.run_start;
    j["run_length"] = m.run_length;
    j["vanish"] = m.vanish;
    j["weight_before"] = m.weight_before;
    j["weight_after"] = m.weight_after;
    return j;
}

}  // namespace

json integer(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Integer to_integer(const json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                            s != "-";
        if (digits) return Integer(s);
    }
    bad("expected an integer, got " + j.dump());
}

json vector_json(const NormalVector& v)
{
    json j;
    j["mode"] = mode_name(v.mode());
    j["coords"] = int_list(v.coords());
    return j;
}

NormalVector vector_from_json(const json& j)
{
    const auto mode_s = field(j, "mode").get<std::string>();
    CoordMode mode;
    if (mode_s == "normal")
        mode = CoordMode::Normal;
    else if (mode_s == "almost_normal")
        mode = CoordMode::AlmostNormal;
    else
        bad("unknown coordinate mode '" + mode_s + "'");
    IntVector coords;
    for (const auto& x : field(j, "coords")) coords.push_back(to_integer(x));
    if (coords.size() % coords_per_tet(mode) != 0) bad("coordinate count does not fit the mode");
    return NormalVector(mode, std::move(coords));
}

json homology_json(const HomologyGroups& h)
{
    json a = json::array();
    for (int k = 0; k < 4; ++k) {
        json g;
        g["dimension"] = k;
        g["rank"] = h.groups[k].rank;
        g["torsion"] = int_list(h.groups[k].torsion);
        g["text"] = to_string(h.groups[k]);
        a.push_back(g);
    }
    return a;
}

HomologyGroups homology_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 4) bad("homology must list four groups");
    HomologyGroups h;
    for (int k = 0; k < 4; ++k) {
        h.groups[k].rank = field(j[k], "rank").get<long>();
        for (const auto& t : field(j[k], "torsion")) h.groups[k].torsion.push_back(to_integer(t));
    }
    return h;
}

json check_report(const Triangulation& tri)
{
    json j = header("check");
    j["dimension"] = 3;
    j["tetrahedra"] = tri.size();
    j["vertices"] = tri.vertex_count();
    j["edges"] = tri.edge_count();
    j["closed_manifold"] = manifold_json(is_closed_3_manifold(tri));
    j["orientable"] = is_orientable(tri);
    j["affirmative"] = j["closed_manifold"]["ok"];
    return j;
}

json check_report(const SurfaceTriangulation& f)
{
    json j = header("check");
    j["dimension"] = 2;
    j["triangles"] = f.size();
    j["vertices"] = f.vertex_count();
    j["edges"] = f.edge_count();
    j["closed"] = f.is_closed();
    j["connected"] = f.is_connected();
    j["orientable"] = f.is_orientable();
    j["euler_characteristic"] = f.euler_characteristic();
    j["sphere"] = f.is_sphere();
    j["affirmative"] = f.is_closed();
    return j;
}

json homology_report(const Triangulation& tri)
{
    json j = header("homology");
    j["dimension"] = 3;
    const bool closed = is_closed_3_manifold(tri).reason != ManifoldCheck::Reason::BoundaryFace;
    const auto h = closed ? homology(tri) : cellular_homology(tri);
    j["closed"] = closed;
    j["groups"] = homology_json(h);
    j["sphere_homology"] = h.is_sphere_homology();
    j["affirmative"] = h.is_sphere_homology();
    return j;
}

json homology_report(const SurfaceTriangulation& f)
{
    // Surface homology from the Euler characteristic and orientability.
    json j = header("homology");
    j["dimension"] = 2;
    if (!f.is_closed() || !f.is_connected()) bad("surface homology needs a closed connected surface");
    HomologyGroups h;
    h.groups[0].rank = 1;
    const long chi = f.euler_characteristic();
    if (f.is_orientable()) {
        h.groups[1].rank = 2 - chi;
        h.groups[2].rank = 1;
    } else {
        h.groups[1].rank = 1 - chi;
        h.groups[1].torsion = {Integer(2)};
    }
    j["closed"] = true;
    j["groups"] = homology_json(h);
    j["sphere_homology"] = f.is_sphere();
    j["affirmative"] = f.is_sphere();
    return j;
}

json enumerate_report(const SolutionSet& s)
{
    json j = header("enumerate");
    j["kind"] = kind_name(s.kind);
    j["system"] = system_name(s.system_kind);
    j["provenance"] = s.provenance;
    j["cells"] = s.cells;
    j["peak_intermediate"] = s.peak_intermediate;
    j["count"] = s.members.size();
    json m = json::array();
    for (const auto& v : s.members) m.push_back(int_list(v));
    j["members"] = m;
    j["affirmative"] = true;
    return j;
}

json recognize_report(const RecognitionReport& r)
{
    json j = header("recognize");
    j["verdict"] = verdict_name(r.verdict);
    j["reason"] = r.reason;
    j["manifold"] = manifold_json(r.manifold);
    j["orientable"] = r.orientable ? json(*r.orientable) : json(nullptr);
    j["homology"] = r.homology ? homology_json(*r.homology) : json(nullptr);
    j["provenance"] = r.provenance;
    j["normal_basis_size"] = r.normal_basis_size;
    j["almost_basis_size"] = r.almost_basis_size;
    json spheres = json::array();
    for (const auto& s : r.normal_spheres) spheres.push_back(vector_json(s));
    j["normal_spheres"] = spheres;
    json family = json::array();
    for (const auto& s : r.family) family.push_back(vector_json(s));
    j["family"] = family;
    json comps = json::array();
    for (const auto& c : r.components) {
        json cj;
        cj["tetrahedra"] = c.tetrahedra;
        cj["tag"] = tag_name(c.tag.kind);
        cj["tag_vertex"] = c.tag.vertex_class;
        json b = json::array();
        for (const auto& s : c.boundary) b.push_back({s.surface, s.side});
        cj["boundary"] = b;
        cj["vertices"] = c.vertices;
        cj["certificate"] = certificate_name(c.certificate);
        cj["witness"] = c.witness ? vector_json(*c.witness) : json(nullptr);
        comps.push_back(cj);
    }
    j["components"] = comps;
    json trace = json::array();
    for (const auto& t : r.trace) trace.push_back({{"step", t.step}, {"outcome", t.outcome}});
    j["trace"] = trace;
    j["trust_points"] = r.trust_points;
    j["affirmative"] = r.verdict == Verdict::YesSphere;
    return j;
}

RecognitionReport recognition_from_json(const json& j)
{
    require_schema(j);
    if (field(j, "command") != "recognize") bad("not a recognize report");
    RecognitionReport r;
    r.verdict = verdict_from(field(j, "verdict").get<std::string>());
    r.reason = field(j, "reason").get<std::string>();
    const auto& m = field(j, "manifold");
    r.manifold.reason = reason_from(field(m, "reason").get<std::string>());
    r.manifold.witness = field(m, "witness").get<std::vector<long>>();
    if (!field(j, "orientable").is_null()) r.orientable = field(j, "orientable").get<bool>();
    if (!field(j, "homology").is_null()) r.homology = homology_from_json(field(j, "homology"));
    r.provenance = field(j, "provenance").get<std::string>();
    r.normal_basis_size = field(j, "normal_basis_size").get<long>();
    r.almost_basis_size = field(j, "almost_basis_size").get<long>();
    for (const auto& s : field(j, "normal_spheres")) r.normal_spheres.push_back(vector_from_json(s));
    for (const auto& s : field(j, "family")) r.family.push_back(vector_from_json(s));
    for (const auto& cj : field(j, "components")) {
        ComponentReport c;
        c.tetrahedra = field(cj, "tetrahedra").get<int>();
        const auto tag = field(cj, "tag").get<std::string>();
        if (tag == tag_name(ComponentTag::Kind::VertexStar))
            c.tag.kind = ComponentTag::Kind::VertexStar;
        else if (tag != tag_name(ComponentTag::Kind::Generic))
            bad("unknown component tag '" + tag + "'");
        c.tag.vertex_class = field(cj, "tag_vertex").get<int>();
        for (const auto& b : field(cj, "boundary")) {
            if (!b.is_array() || b.size() != 2) bad("boundary entries are [surface, side] pairs");
            c.boundary.push_back({b[0].get<int>(), b[1].get<int>()});
        }
        c.vertices = field(cj, "vertices").get<std::vector<int>>();
        c.certificate = certificate_from(field(cj, "certificate").get<std::string>());
        if (!field(cj, "witness").is_null()) c.witness = vector_from_json(field(cj, "witness"));
        r.components.push_back(std::move(c));
    }
    for (const auto& t : field(j, "trace"))
        r.trace.push_back({field(t, "step").get<std::string>(), field(t, "outcome").get<std::string>()});
    r.trust_points = field(j, "trust_points").get<std::vector<std::string>>();
    return r;
}

json plcurve_report(const SurfaceTriangulation& f, long max_weight, const std::vector<ClassifiedCurve>& curves)
{
    json j = header("plcurve");
    j["triangles"] = f.size();
    j["max_weight"] = max_weight;
    j["count"] = curves.size();
    json a = json::array();
    for (const auto& c : curves) {
        json cj;
        cj["counts"] = c.curve.counts();
        cj["weight"] = c.classification.weight;
        cj["vertex_linking"] = c.vertex_linking;
        cj["status"] = curve_status_name(c.classification.status);
        cj["depth_limit"] = c.classification.depth_limit;
        cj["one_step_changes"] = c.classification.one_step_changes;
        json ws = json::array();
        for (const auto& w : c.classification.witnesses) {
            json moves = json::array();
            for (const auto& m : w.moves) moves.push_back(move_json(m));
            ws.push_back({{"side_vertices", w.side_vertices}, {"moves", moves}});
        }
        cj["witnesses"] = ws;
        cj["note"] = c.classification.note;
        a.push_back(cj);
    }
    j["curves"] = a;
    j["affirmative"] = true;
    return j;
}

json verify_report(const std::string& checked_command, const VerifyResult& r)
{
    json j = header("verify");
    j["checked_command"] = checked_command;
    j["ok"] = r.ok;
    j["failed_step"] = r.failed_step;
    j["affirmative"] = r.ok;
    return j;
}

void require_schema(const json& j)
{
    if (!j.is_object()) bad("not a JSON object");
    if (field(j, "schema") != kSchema) bad("unsupported schema " + field(j, "schema").dump());
    const auto cmd = field(j, "command");
    for (const char* c : {"check", "homology", "enumerate", "recognize", "plcurve", "verify"})
        if (cmd == c) return;
    bad("unknown command " + cmd.dump());
}

std::string render_text(const json& j)
{
    std::ostringstream out;
    const std::string cmd = field(j, "command").get<std::string>();
    if (cmd == "check") {
        if (j["dimension"] == 3) {
            const auto& m = j["closed_manifold"];
            out << "tetrahedra " << j["tetrahedra"] << ", vertices " << j["vertices"] << ", edges " << j["edges"] << "\n";
            out << "closed 3-manifold: " << (m["ok"].get<bool>() ? "yes" : "no") << " (" << m["reason"].get<std::string>()
                << ")\n";
            if (!m["witness"].empty()) out << "witness: " << m["witness"].dump() << "\n";
            out << "orientable: " << (j["orientable"].get<bool>() ? "yes" : "no") << "\n";
        } else {
            out << "triangles " << j["triangles"] << ", vertices " << j["vertices"] << ", edges " << j["edges"] << "\n";
            out << "closed: " << (j["closed"].get<bool>() ? "yes" : "no")
                << ", orientable: " << (j["orientable"].get<bool>() ? "yes" : "no")
                << ", euler characteristic " << j["euler_characteristic"] << "\n";
        }
    } else if (cmd == "homology") {
        for (const auto& g : j["groups"]) out << "H" << g["dimension"] << " = " << g["text"].get<std::string>() << "\n";
        if (!j["closed"].get<bool>()) out << "(cellular homology of a triangulation with boundary)\n";
        out << "homology sphere: " << (j["sphere_homology"].get<bool>() ? "yes" : "no") << "\n";
    } else if (cmd == "enumerate") {
        out << j["kind"].get<std::string>() << " of the " << j["system"].get<std::string>() << " system: " << j["count"]
            << " members over " << j["cells"] << " cells (provenance " << j["provenance"].get<std::string>() << ")\n";
        for (const auto& m : j["members"]) {
            for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m[i].dump();
            out << "\n";
        }
    } else if (cmd == "recognize") {
        out << "verdict: " << j["verdict"].get<std::string>();
        if (!j["reason"].get<std::string>().empty()) out << " (" << j["reason"].get<std::string>() << ")";
        out << "\n";
        for (const auto& t : j["trace"]) out << "  " << t["step"].get<std::string>() << ": " << t["outcome"].get<std::string>() << "\n";
        for (const auto& t : j["trust_points"]) out << "  trusted: " << t.get<std::string>() << "\n";
    } else if (cmd == "plcurve") {
        out << j["count"] << " connected normal curves of weight <= " << j["max_weight"] << "\n";
        for (const auto& c : j["curves"]) {
            out << "weight " << c["weight"] << "  [";
            const auto& k = c["counts"];
            for (std::size_t i = 0; i < k.size(); ++i) out << (i ? " " : "") << k[i].dump();
            out << "]  " << c["status"].get<std::string>();
            if (c["vertex_linking"].get<bool>()) out << " (vertex link)";
            out << "\n";
        }
    } else if (cmd == "verify") {
        out << "verify " << j["checked_command"].get<std::string>() << ": " << (j["ok"].get<bool>() ? "ok" : "FAILED");
        if (!j["failed_step"].get<std::string>().empty()) out << " at " << j["failed_step"].get<std::string>();
        out << "\n";
    }
    return out.str();
}

}  // namespace s3rec::report
