#include "s3rec/io.hpp"

#include "s3rec/error.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace s3rec {

namespace {

class LineCursor {
public:
    LineCursor(std::string_view line, int line_no) : line_(line), line_no_(line_no) {}

    void skip_space()
    {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ >= line_.size();
    }
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(line_no_, static_cast<int>(pos_) + 1, msg);
    }
    void expect(std::string_view token)
    {
        skip_space();
        if (line_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos_ += token.size();
    }
    bool accept(char c)
    {
        skip_space();
        if (pos_ < line_.size() && line_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer");
        if (pos_ - start > 9) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stol(std::string(line_.substr(start, pos_ - start)));
    }
    std::string word()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        return std::string(line_.substr(start, pos_ - start));
    }
    std::size_t pos() const { return pos_; }
    void set_pos(std::size_t p) { pos_ = p; }

private:
    std::string_view line_;
    std::size_t pos_ = 0;
    int line_no_;
};

struct RawSlot {
    int target = -1;
    std::string perm;
    int line = 0;
    int column = 0;
};

}  // namespace

GluingTable parse_gluing_table(std::string_view text)
{
    std::vector<std::pair<int, std::string_view>> lines;
    {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            std::string_view line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) lines.emplace_back(line_no, line);
            start = end + 1;
        }
    }
    if (lines.empty()) throw ParseError(1, 1, "empty gluing table");

    std::size_t li = 0;
    int dim = 0;
    {
        LineCursor c(lines[li].second, lines[li].first);
        c.expect("dim");
        dim = static_cast<int>(c.integer());
        if (dim != 2 && dim != 3) c.fail("dimension must be 2 or 3");
        if (!c.at_end()) c.fail("trailing characters");
        ++li;
    }
    if (li >= lines.size()) throw ParseError(lines.back().first + 1, 1, "missing 'count' line");
    long count = 0;
    {
        LineCursor c(lines[li].second, lines[li].first);
        c.expect("count");
        count = c.integer();
        if (!c.at_end()) c.fail("trailing characters");
        ++li;
    }
    const int faces = dim + 1;
    std::vector<std::vector<RawSlot>> slots(count, std::vector<RawSlot>(faces));
    std::vector<bool> seen(count, false);

    for (; li < lines.size(); ++li) {
        LineCursor c(lines[li].second, lines[li].first);
        c.expect("simplex");
        std::size_t idx_pos = c.pos();
        long idx = c.integer();
        if (idx >= count) {
            c.set_pos(idx_pos + 1);
            c.fail("simplex index out of range");
        }
        if (seen[idx]) c.fail("simplex listed twice");
        seen[idx] = true;
        c.expect(":");
        for (int f = 0; f < faces; ++f) {
            c.expect("f" + std::to_string(f) + "=");
            RawSlot& s = slots[idx][f];
            s.line = lines[li].first;
            c.skip_space();
            s.column = static_cast<int>(c.pos()) + 1;
            if (c.accept('-')) continue;
            c.expect("(");
            long j = c.integer();
            if (j >= count) c.fail("target simplex out of range");
            c.expect(",");
            c.skip_space();
            std::size_t wpos = c.pos();
            s.perm = c.word();
            if (static_cast<int>(s.perm.size()) != faces) {
                c.set_pos(wpos);
                c.fail("permutation word must have " + std::to_string(faces) + " digits");
            }
            c.expect(")");
            s.target = static_cast<int>(j);
        }
        if (!c.at_end()) c.fail("trailing characters");
    }
    for (long i = 0; i < count; ++i)
        if (!seen[i])
            throw ParseError(lines.back().first + 1, 1, "missing line for simplex " + std::to_string(i));

    if (dim == 3) {
        std::vector<FaceGluing> gl;
        for (int t = 0; t < count; ++t)
            for (int f = 0; f < 4; ++f) {
                const RawSlot& s = slots[t][f];
                if (s.target < 0) continue;
                auto p = Perm4::from_word(s.perm);
                if (!p) throw ParseError(s.line, s.column, "not a permutation: " + s.perm);
                gl.push_back({t, f, s.target, (*p)[f], *p});
            }
        // A face listed as boundary on one side but glued on the other is
        // caught here, since build() only sees the glued direction.
        for (const auto& g : gl)
            if (slots[g.target_tet][g.target_face].target < 0)
                throw Error(ErrorCode::NonInvolutiveGluing,
                            "face (" + std::to_string(g.source_tet) + "," + std::to_string(g.source_face) +
                                ") is glued to a face marked as boundary");
        return Triangulation::build(static_cast<int>(count), gl);
    }
    std::vector<EdgeGluing> gl;
    for (int t = 0; t < count; ++t)
        for (int e = 0; e < 3; ++e) {
            const RawSlot& s = slots[t][e];
            if (s.target < 0) continue;
            auto p = Perm3::from_word(s.perm);
            if (!p) throw ParseError(s.line, s.column, "not a permutation: " + s.perm);
            gl.push_back({t, e, s.target, (*p)[e], *p});
        }
    for (const auto& g : gl)
        if (slots[g.target_triangle][g.target_edge].target < 0)
            throw Error(ErrorCode::NonInvolutiveGluing, "edge glued to an edge marked as boundary");
    return SurfaceTriangulation::build(static_cast<int>(count), gl);
}

GluingTable load_gluing_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_gluing_table(ss.str());
}

std::string serialize(const Triangulation& tri)
{
    std::ostringstream out;
    out << "dim 3\ncount " << tri.size() << "\n";
    for (int t = 0; t < tri.size(); ++t) {
        out << "simplex " << t << ":";
        for (int f = 0; f < 4; ++f) {
            out << " f" << f << "=";
            if (const auto& p = tri.partner(t, f))
                out << "(" << p->tet << "," << p->map.word() << ")";
            else
                out << "-";
        }
        out << "\n";
    }
    return out.str();
}

std::string serialize(const SurfaceTriangulation& surface)
{
    std::ostringstream out;
    out << "dim 2\ncount " << surface.size() << "\n";
    for (int t = 0; t < surface.size(); ++t) {
        out << "simplex " << t << ":";
        for (int e = 0; e < 3; ++e) {
            out << " f" << e << "=";
            if (const auto& p = surface.partner(t, e))
                out << "(" << p->triangle << "," << p->map.word() << ")";
            else
                out << "-";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace s3rec
