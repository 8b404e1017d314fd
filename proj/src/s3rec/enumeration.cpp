#include "s3rec/enumeration.hpp"

#include "s3rec/error.hpp"
#include "s3rec/surface_builder.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>

namespace s3rec {

std::vector<NormalVector> SolutionSet::vectors() const
{
    if (system_kind == MatchingSystem::Kind::Plain) throw Error(ErrorCode::InvalidArgument, "plain system has no coordinate mode");
    CoordMode mode = system_kind == MatchingSystem::Kind::Normal ? CoordMode::Normal : CoordMode::AlmostNormal;
    std::vector<NormalVector> out;
    out.reserve(members.size());
    for (const auto& m : members) out.emplace_back(mode, m);
    return out;
}

const char* kind_name(SolutionSet::Kind k)
{
    return k == SolutionSet::Kind::VertexSolutions ? "VertexSolutions" : "HilbertBasis";
}

std::string system_hash(const MatchingSystem& sys)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    mix(std::to_string(static_cast<int>(sys.kind)));
    mix(std::to_string(sys.matrix.rows()));
    mix(std::to_string(sys.matrix.cols()));
    for (int i = 0; i < sys.matrix.rows(); ++i)
        for (int j = 0; j < sys.matrix.cols(); ++j) mix(sys.matrix(i, j).str());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<std::vector<int>> admissibility_cells(const MatchingSystem& sys)
{
    std::vector<std::vector<int>> cells;
    if (sys.kind == MatchingSystem::Kind::Plain) {
        std::vector<int> all(sys.variables());
        for (int i = 0; i < sys.variables(); ++i) all[i] = i;
        cells.push_back(std::move(all));
        return cells;
    }
    const int t = sys.tetrahedra;
    const bool almost = sys.kind == MatchingSystem::Kind::AlmostNormal;
    const int per = almost ? 10 : 7;
    if (t == 0) return cells;
    // choice[i] in 0..2 = quad kind; the octagon tetrahedron uses 7 + kind
    const int oct_choices = almost ? 3 * t : 1;
    for (int oc = 0; oc < oct_choices; ++oc) {
        const int oct_tet = almost ? oc / 3 : -1;
        std::vector<int> choice(t, 0);
        for (;;) {
            std::vector<int> vars;
            for (int i = 0; i < t; ++i) {
                for (int c = 0; c < 4; ++c) vars.push_back(i * per + c);
                vars.push_back(i * per + (i == oct_tet ? 7 + oc % 3 : 4 + choice[i]));
            }
            cells.push_back(std::move(vars));
            int i = 0;
            for (; i < t; ++i) {
                if (i == oct_tet) continue;
                if (++choice[i] < 3) break;
                choice[i] = 0;
            }
            if (i == t) break;
        }
    }
    return cells;
}

namespace {

constexpr int kMaxCellVariables = 256;
using ZeroSet = std::bitset<kMaxCellVariables>;

// The system restricted to one cell's variables, zero rows dropped.
struct CellSystem {
    std::vector<int> vars;
    std::vector<std::vector<Integer>> rows;
};

CellSystem restrict_to(const MatchingSystem& sys, const std::vector<int>& vars)
{
    if (static_cast<int>(vars.size()) > kMaxCellVariables)
        throw Error(ErrorCode::ResourceBudgetExceeded, "too many variables in one admissibility cell");
    CellSystem c;
    c.vars = vars;
    for (int r = 0; r < sys.matrix.rows(); ++r) {
        std::vector<Integer> row(vars.size());
        bool nonzero = false;
        for (std::size_t j = 0; j < vars.size(); ++j) {
            row[j] = sys.matrix(r, vars[j]);
            if (row[j] != 0) nonzero = true;
        }
        if (nonzero) c.rows.push_back(std::move(row));
    }
    return c;
}

bool keep_member(const MatchingSystem& sys, const IntVector& full)
{
    if (sys.kind != MatchingSystem::Kind::AlmostNormal) return true;
    Integer oct = 0;
    for (int i = 0; i < sys.tetrahedra; ++i)
        for (int k = 7; k < 10; ++k) oct += full[i * 10 + k];
    return oct == 1;
}

// ---- double description ------------------------------------------------

struct Ray {
    std::vector<Integer> x;
    ZeroSet zeros;
};

ZeroSet zero_set(const std::vector<Integer>& x)
{
    ZeroSet z;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0) z.set(i);
    return z;
}

Integer evaluate(const std::vector<Integer>& row, const std::vector<Integer>& x)
{
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (row[i] != 0 && x[i] != 0) s += row[i] * x[i];
    return s;
}

std::vector<std::vector<Integer>> cell_rays(const CellSystem& cs, long budget, long& peak)
{
    const std::size_t m = cs.vars.size();
    std::vector<Ray> rays;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Integer> x(m);
        x[i] = 1;
        rays.push_back({x, zero_set(x)});
    }
    std::vector<bool> used(cs.rows.size(), false);
    for (std::size_t step = 0; step < cs.rows.size(); ++step) {
        // Pick the row that creates the fewest candidate pairs.
        std::size_t best = 0;
        long best_cost = -1;
        for (std::size_t r = 0; r < cs.rows.size(); ++r) {
            if (used[r]) continue;
            long pos = 0, neg = 0;
            for (const auto& ray : rays) {
                int s = evaluate(cs.rows[r], ray.x).sign();
                pos += s > 0;
                neg += s < 0;
            }
            if (best_cost < 0 || pos * neg < best_cost) {
                best_cost = pos * neg;
                best = r;
            }
        }
        used[best] = true;
        const auto& row = cs.rows[best];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            val[i] = evaluate(row, rays[i].x);
            if (val[i] > 0) pos.push_back(i);
            else if (val[i] < 0) neg.push_back(i);
            else next.push_back(rays[i]);
        }
        for (auto p : pos)
            for (auto n : neg) {
                ZeroSet common = rays[p].zeros & rays[n].zeros;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != n && (common & ~rays[r].zeros).none()) adjacent = false;
                if (!adjacent) continue;
                std::vector<Integer> x(m);
                for (std::size_t i = 0; i < m; ++i) x[i] = val[p] * rays[n].x[i] - val[n] * rays[p].x[i];
                make_primitive(x);
                next.push_back({x, zero_set(x)});
                if (static_cast<long>(next.size()) > budget)
                    throw Error(ErrorCode::ResourceBudgetExceeded, "vertex enumeration exceeded the intermediate budget");
            }
        rays = std::move(next);
        peak = std::max(peak, static_cast<long>(rays.size()));
    }
    std::vector<std::vector<Integer>> out;
    for (auto& r : rays) out.push_back(std::move(r.x));
    return out;
}

// ---- Hilbert basis completion -----------------------------------------

using Small = std::vector<std::int64_t>;

struct Element {
    Small x;
    std::int64_t degree = 0;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::ResourceBudgetExceeded, "coordinates exceed the 64-bit completion range");
    return r;
}

std::int64_t form(const std::vector<std::int64_t>& row, const Small& x)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (row[i] != 0 && x[i] != 0) {
            std::int64_t p;
            if (__builtin_mul_overflow(row[i], x[i], &p))
                throw Error(ErrorCode::ResourceBudgetExceeded, "coordinates exceed the 64-bit completion range");
            s = checked_add(s, p);
        }
    return s;
}

bool leq(const Small& a, const Small& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Minimal elements under the componentwise order.
std::vector<Element> minimal_elements(std::vector<Element> v)
{
    std::sort(v.begin(), v.end(), [](const Element& a, const Element& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.x < b.x;
    });
    std::vector<Element> out;
    for (auto& e : v) {
        bool reducible = false;
        for (const auto& o : out)
            if (leq(o.x, e.x)) {
                reducible = true;
                break;
            }
        if (!reducible) out.push_back(std::move(e));
    }
    return out;
}

struct Signed {
    Element e;
    std::int64_t value;
};

// s is reducible by z when z <= s and z's value lies between 0 and s's.
bool reduced_by(const std::vector<Signed>& set, const Small& x, std::int64_t value)
{
    for (const auto& z : set) {
        if (value > 0 && (z.value < 0 || z.value > value)) continue;
        if (value < 0 && (z.value > 0 || z.value < value)) continue;
        if (value == 0 && z.value != 0) continue;
        if (leq(z.e.x, x)) return true;
    }
    return false;
}

std::vector<Small> cell_hilbert(const CellSystem& cs, long budget, long& peak)
{
    const std::size_t m = cs.vars.size();
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : cs.rows) {
        std::vector<std::int64_t> row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = r[j].convert_to<std::int64_t>();
        rows.push_back(std::move(row));
    }
    std::vector<Element> basis;
    for (std::size_t i = 0; i < m; ++i) {
        Small x(m, 0);
        x[i] = 1;
        basis.push_back({x, 1});
    }
    std::vector<bool> used(rows.size(), false);
    for (std::size_t step = 0; step < rows.size(); ++step) {
        std::size_t best = 0;
        long best_cost = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r]) continue;
            long pos = 0, neg = 0;
            for (const auto& b : basis) {
                auto v = form(rows[r], b.x);
                pos += v > 0;
                neg += v < 0;
            }
            if (best_cost < 0 || pos * neg < best_cost) {
                best_cost = pos * neg;
                best = r;
            }
        }
        used[best] = true;
        const auto& row = rows[best];

        std::vector<Signed> all;
        std::vector<std::size_t> pos_idx, neg_idx;
        for (auto& b : basis) {
            auto v = form(row, b.x);
            if (v > 0) pos_idx.push_back(all.size());
            if (v < 0) neg_idx.push_back(all.size());
            all.push_back({std::move(b), v});
        }
        std::size_t pos_new_begin = 0, neg_new_begin = 0;
        while (pos_new_begin < pos_idx.size() || neg_new_begin < neg_idx.size()) {
            const std::size_t pos_end = pos_idx.size(), neg_end = neg_idx.size();
            std::vector<Signed> candidates;
            for (std::size_t a = 0; a < pos_end; ++a)
                for (std::size_t b = (a >= pos_new_begin ? 0 : neg_new_begin); b < neg_end; ++b) {
                    const auto& p = all[pos_idx[a]];
                    const auto& n = all[neg_idx[b]];
                    Small x(m);
                    for (std::size_t i = 0; i < m; ++i) x[i] = checked_add(p.e.x[i], n.e.x[i]);
                    std::int64_t v = p.value + n.value;
                    if (reduced_by(all, x, v)) continue;
                    candidates.push_back({{std::move(x), p.e.degree + n.e.degree}, v});
                }
            std::sort(candidates.begin(), candidates.end(), [](const Signed& a, const Signed& b) {
                return a.e.degree != b.e.degree ? a.e.degree < b.e.degree : a.e.x < b.e.x;
            });
            pos_new_begin = pos_end;
            neg_new_begin = neg_end;
            for (auto& c : candidates) {
                if (reduced_by(all, c.e.x, c.value)) continue;
                if (c.value > 0) pos_idx.push_back(all.size());
                if (c.value < 0) neg_idx.push_back(all.size());
                all.push_back(std::move(c));
                if (static_cast<long>(all.size()) > budget)
                    throw Error(ErrorCode::ResourceBudgetExceeded, "Hilbert basis completion exceeded the intermediate budget");
            }
            peak = std::max(peak, static_cast<long>(all.size()));
        }
        std::vector<Element> zero;
        for (auto& s : all)
            if (s.value == 0) zero.push_back(std::move(s.e));
        basis = minimal_elements(std::move(zero));
    }
    std::vector<Small> out;
    for (auto& b : basis) out.push_back(std::move(b.x));
    return out;
}

template <class CellFn>
SolutionSet run_cells(const MatchingSystem& sys, const EnumerationOptions& opt, SolutionSet::Kind kind, CellFn fn)
{
    auto cells = admissibility_cells(sys);
    std::set<IntVector> found;
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    std::atomic<long> peak{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= cells.size()) return;
            try {
                long local_peak = 0;
                auto cs = restrict_to(sys, cells[i]);
                std::vector<IntVector> vs = fn(cs, local_peak);
                std::lock_guard<std::mutex> g(lock);
                peak = std::max(peak.load(), local_peak);
                for (auto& v : vs) {
                    IntVector full(sys.variables());
                    for (std::size_t j = 0; j < cs.vars.size(); ++j) full[cs.vars[j]] = v[j];
                    if (keep_member(sys, full)) found.insert(std::move(full));
                }
            } catch (...) {
                std::lock_guard<std::mutex> g(lock);
                if (!failure) failure = std::current_exception();
                next = cells.size();
                return;
            }
        }
    };
    const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(cells.size())));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    SolutionSet out;
    out.kind = kind;
    out.system_kind = sys.kind;
    out.members.assign(found.begin(), found.end());
    out.provenance = system_hash(sys);
    out.cells = static_cast<long>(cells.size());
    out.peak_intermediate = peak;
    return out;
}

}  // namespace

SolutionSet vertex_solutions(const MatchingSystem& sys, const EnumerationOptions& opt)
{
    return run_cells(sys, opt, SolutionSet::Kind::VertexSolutions, [&](const CellSystem& cs, long& peak) {
        return cell_rays(cs, opt.budget, peak);
    });
}

SolutionSet hilbert_basis(const MatchingSystem& sys, const EnumerationOptions& opt)
{
    return run_cells(sys, opt, SolutionSet::Kind::HilbertBasis, [&](const CellSystem& cs, long& peak) {
        std::vector<IntVector> out;
        for (const auto& x : cell_hilbert(cs, opt.budget, peak)) out.emplace_back(x.begin(), x.end());
        return out;
    });
}

std::vector<NormalVector> find_spheres(const Triangulation& tri, const SolutionSet& basis, SphereKind kind)
{
    std::set<NormalVector> out;
    if (basis.system_kind == MatchingSystem::Kind::Plain) return {};
    for (const auto& v : basis.vectors()) {
        if (!is_embeddable(v) || !satisfies_matching(tri, v)) continue;
        for (auto& c : components(tri, v)) {
            bool ok = kind == SphereKind::Normal ? is_normal_two_sphere(tri, c) : is_octagonal_almost_normal_sphere(tri, c);
            if (ok) out.insert(std::move(c));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace s3rec
