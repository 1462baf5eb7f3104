#include "moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "mp_table.hpp"

namespace hd {

int MovePattern::delta_vertices() const {
    auto count = [](const std::vector<std::vector<PatternPass>>& side) {
        std::set<std::string> names;
        for (const auto& run : side)
            for (const auto& pp : run) names.insert(pp.vert);
        return int(names.size());
    };
    return count(rhs) - count(lhs);
}

namespace {

// slot a role token occupies on the circuit: role 1 is the over pass of a
// positive crossing and the under pass of a negative one, role 2 the opposite
char role_slot(bool barred, int role) {
    if (!barred) return role == 1 ? 'o' : 'u';
    return role == 1 ? 'u' : 'o';
}

std::vector<std::vector<PatternPass>> side_runs(const MPSide& side) {
    std::map<std::string, bool> barred;
    for (const auto& [nm, b] : side.crossings) barred[nm] = b;
    std::vector<std::vector<PatternPass>> runs;
    for (const auto& leg : side.legs) {
        std::vector<PatternPass> run;
        for (const auto& [nm, role] : leg)
            run.push_back({nm, barred[nm] ? -1 : 1, role_slot(barred[nm], role)});
        runs.push_back(std::move(run));
    }
    return runs;
}

std::vector<MovePattern> build_table() {
    std::vector<MovePattern> t;
    // 0-2: push a finger of one arc across another, one positive and one
    // negative crossing, product of the four beads equal to the unit
    MovePattern ins;
    ins.name = "ZeroTwo-insert";
    ins.lhs = {{}};
    ins.rhs = {{{"a", 1, 'u'}, {"b", -1, 'o'}, {"b", -1, 'u'}, {"a", 1, 'o'}}};
    MovePattern del;
    del.name = "ZeroTwo-delete";
    del.lhs = ins.rhs;
    del.rhs = {{}};
    t.push_back(ins);
    t.push_back(del);
    for (const auto& mp : mp_identities()) {
        MovePattern f;
        f.name = mp.name + "-forward";
        f.lhs = side_runs(mp.lhs);
        f.rhs = side_runs(mp.rhs);
        MovePattern b;
        b.name = mp.name + "-backward";
        b.lhs = f.rhs;
        b.rhs = f.lhs;
        t.push_back(std::move(f));
        t.push_back(std::move(b));
    }
    // chirality flip: a pair of interleaved twists changes handedness
    MovePattern cpf;
    cpf.name = "CP-forward";
    cpf.lhs = {{{"x", 1, 'o'}, {"y", 1, 'o'}, {"y", 1, 'u'}, {"x", 1, 'u'}}};
    cpf.rhs = {{{"x", -1, 'o'}, {"y", -1, 'o'}, {"y", -1, 'u'}, {"x", -1, 'u'}}};
    MovePattern cpb;
    cpb.name = "CP-backward";
    cpb.lhs = cpf.rhs;
    cpb.rhs = cpf.lhs;
    t.push_back(std::move(cpf));
    t.push_back(std::move(cpb));
    return t;
}

} // namespace

const std::vector<MovePattern>& move_table() {
    static const std::vector<MovePattern> t = build_table();
    return t;
}

const MovePattern& move_by_name(const std::string& name) {
    for (const auto& p : move_table())
        if (p.name == name) return p;
    throw ParseError("unknown move '" + name + "'");
}

std::string move_table_text() {
    std::ostringstream os;
    os << "# Rewrite patterns on signed Gauss codes. Each move lists its left\n"
          "# and right side as runs of passes separated by '|'; a pass token is\n"
          "# <vertex><sign><slot> with pattern-local vertex names, '_' is an\n"
          "# empty run. Pattern vertices must have both passes inside the\n"
          "# matched runs; right-side vertices are created fresh.\n";
    auto put_side = [&](const char* tag, const std::vector<std::vector<PatternPass>>& side) {
        os << tag;
        bool first_run = true;
        for (const auto& run : side) {
            os << (first_run ? " " : " | ");
            first_run = false;
            if (run.empty()) {
                os << "_";
                continue;
            }
            bool first = true;
            for (const auto& pp : run) {
                if (!first) os << " ";
                first = false;
                os << pp.vert << (pp.sign > 0 ? '+' : '-') << pp.slot;
            }
        }
        os << "\n";
    };
    for (const auto& p : move_table()) {
        os << "move " << p.name << "\n";
        put_side("lhs", p.lhs);
        put_side("rhs", p.rhs);
    }
    return os.str();
}

std::vector<MovePattern> parse_move_table(const std::string& text) {
    std::vector<MovePattern> out;
    std::istringstream is(text);
    std::string line;
    auto parse_side = [](const std::string& body) {
        std::vector<std::vector<PatternPass>> side;
        std::vector<PatternPass> run;
        std::istringstream ls(body);
        std::string tok;
        while (ls >> tok) {
            if (tok == "|") {
                side.push_back(run);
                run.clear();
            } else if (tok == "_") {
                // empty run marker
            } else {
                if (tok.size() < 3) throw ParseError("bad pattern token '" + tok + "'");
                char slot = tok.back();
                char sgn = tok[tok.size() - 2];
                if ((slot != 'o' && slot != 'u') || (sgn != '+' && sgn != '-'))
                    throw ParseError("bad pattern token '" + tok + "'");
                run.push_back({tok.substr(0, tok.size() - 2), sgn == '+' ? 1 : -1, slot});
            }
        }
        side.push_back(run);
        return side;
    };
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "move") {
            MovePattern p;
            ls >> p.name;
            out.push_back(p);
        } else if (kw == "lhs" || kw == "rhs") {
            if (out.empty()) throw ParseError("side line before any move");
            std::string rest;
            std::getline(ls, rest);
            (kw == "lhs" ? out.back().lhs : out.back().rhs) = parse_side(rest);
        } else {
            throw ParseError("unexpected keyword '" + kw + "' in pattern table");
        }
    }
    return out;
}

namespace {

struct RunMatch {
    std::map<std::string, int> binding;
    std::vector<int> used;
};

bool match_run(const OGraph& g, int start, const std::vector<PatternPass>& run,
               const std::map<std::string, int>& binding, RunMatch& out) {
    int N = int(g.circuit.size());
    out.binding = binding;
    out.used.clear();
    for (size_t off = 0; off < run.size(); ++off) {
        int pos = (start + int(off)) % N;
        const Pass& p = g.circuit[pos];
        if (p.slot != run[off].slot) return false;
        if (g.sign_of(p.v) != run[off].sign) return false;
        auto it = out.binding.find(run[off].vert);
        if (it != out.binding.end()) {
            if (it->second != p.v) return false;
        } else {
            for (const auto& [nm, v] : out.binding)
                if (v == p.v) return false;
            out.binding[run[off].vert] = p.v;
        }
        out.used.push_back(pos);
    }
    return true;
}

void match_rec(const OGraph& g, const MovePattern& p, int pidx, size_t r,
               const std::map<std::string, int>& binding, std::vector<int>& starts,
               std::vector<int>& used, std::vector<MoveSite>& out) {
    int N = int(g.circuit.size());
    if (r == p.lhs.size()) {
        // every bound vertex must have both of its passes inside the match
        std::vector<int> vs;
        for (int pos : used) vs.push_back(g.circuit[pos].v);
        std::sort(vs.begin(), vs.end());
        std::vector<int> want;
        for (const auto& [nm, v] : binding) {
            want.push_back(v);
            want.push_back(v);
        }
        std::sort(want.begin(), want.end());
        if (vs != want) return;
        MoveSite s;
        s.pattern = pidx;
        s.run_starts = starts;
        s.positions = used;
        for (const auto& kv : binding) s.binding.push_back(kv);
        out.push_back(std::move(s));
        return;
    }
    for (int st = 0; st < N; ++st) {
        RunMatch m;
        if (!match_run(g, st, p.lhs[r], binding, m)) continue;
        bool overlap = false;
        for (int pos : m.used)
            if (std::find(used.begin(), used.end(), pos) != used.end()) { overlap = true; break; }
        if (overlap) continue;
        starts.push_back(st);
        size_t before = used.size();
        used.insert(used.end(), m.used.begin(), m.used.end());
        match_rec(g, p, pidx, r + 1, m.binding, starts, used, out);
        used.resize(before);
        starts.pop_back();
    }
}

int pattern_index(const MovePattern& p) {
    const auto& t = move_table();
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i].name == p.name) return int(i);
    return -1;
}

} // namespace

std::vector<MoveSite> find_sites(const OGraph& g, const MovePattern& p) {
    std::vector<MoveSite> out;
    int N = int(g.circuit.size());
    int pidx = pattern_index(p);
    if (p.is_insert()) {
        for (int t = 0; t < N; ++t) {
            MoveSite s;
            s.pattern = pidx;
            s.run_starts = {t};
            out.push_back(std::move(s));
        }
        return out;
    }
    std::vector<int> starts, used;
    match_rec(g, p, pidx, 0, {}, starts, used, out);
    return out;
}

OGraph apply_move(const OGraph& g, const MovePattern& p, const MoveSite& site) {
    int N = int(g.circuit.size());
    std::map<std::string, int> binding(site.binding.begin(), site.binding.end());
    if (!p.is_insert()) {
        // guard against stale sites: the left side must still match here
        std::map<std::string, int> cur;
        std::vector<int> used;
        if (site.run_starts.size() != p.lhs.size()) throw StaleSite("run count mismatch");
        for (size_t r = 0; r < p.lhs.size(); ++r) {
            RunMatch m;
            if (!match_run(g, site.run_starts[r], p.lhs[r], cur, m))
                throw StaleSite("pattern no longer matches at recorded site");
            cur = m.binding;
            used.insert(used.end(), m.used.begin(), m.used.end());
        }
        std::sort(used.begin(), used.end());
        std::vector<int> rec = site.positions;
        std::sort(rec.begin(), rec.end());
        if (used != rec || cur != binding) throw StaleSite("site binding changed");
    }

    // fresh ids for every right-side vertex, in order of appearance
    std::map<std::string, int> newid;
    std::map<int, int> newsign;
    int next = g.n + 1;
    for (const auto& run : p.rhs)
        for (const auto& pp : run)
            if (!newid.count(pp.vert)) {
                newid[pp.vert] = next;
                newsign[next] = pp.sign;
                ++next;
            }

    std::map<int, size_t> start_run;
    for (size_t r = 0; r < site.run_starts.size(); ++r) start_run[site.run_starts[r]] = r;
    std::set<int> skip(site.positions.begin(), site.positions.end());

    std::vector<Pass> circ;
    bool insert = p.is_insert();
    for (int pos = 0; pos < N; ++pos) {
        if (!insert && start_run.count(pos))
            for (const auto& pp : p.rhs[start_run[pos]]) circ.push_back({newid[pp.vert], pp.slot});
        if (!skip.count(pos)) circ.push_back(g.circuit[pos]);
        if (insert && pos == site.run_starts[0])
            for (const auto& pp : p.rhs[0]) circ.push_back({newid[pp.vert], pp.slot});
    }

    std::set<int> removed;
    for (const auto& [nm, v] : binding) removed.insert(v);

    // renumber by first appearance
    std::map<int, int> remap;
    OGraph r;
    r.name = g.name;
    for (const auto& ps : circ)
        if (!remap.count(ps.v)) remap[ps.v] = int(remap.size()) + 1;
    r.n = int(remap.size());
    r.sign.assign(size_t(r.n) + 1, 0);
    for (const auto& ps : circ) {
        r.circuit.push_back({remap[ps.v], ps.slot});
        int sgn = ps.v > g.n ? newsign[ps.v] : g.sign_of(ps.v);
        r.sign[remap[ps.v]] = sgn;
    }
    for (int v = 1; v <= g.n; ++v)
        if (!removed.count(v) && !remap.count(v))
            throw std::logic_error("move dropped vertex " + std::to_string(v));

    ValidationReport rep = validate(r);
    if (!rep.all())
        throw std::logic_error("move '" + p.name + "' produced an invalid graph (bad pattern table)");
    return r;
}

std::vector<FuzzStep> fuzz(const OGraph& g, std::uint64_t seed, int steps, int vertex_budget) {
    std::vector<FuzzStep> out;
    out.push_back({"start", g});
    std::mt19937_64 rng(seed);
    OGraph cur = g;
    for (int step = 0; step < steps; ++step) {
        std::vector<std::pair<const MovePattern*, MoveSite>> options;
        for (const auto& p : move_table()) {
            if (cur.n + p.delta_vertices() > vertex_budget) continue;
            if (cur.n + p.delta_vertices() < 1) continue;
            for (auto& s : find_sites(cur, p)) options.emplace_back(&p, std::move(s));
        }
        if (options.empty()) break;
        size_t pick = size_t(rng() % options.size());
        cur = apply_move(cur, *options[pick].first, options[pick].second);
        out.push_back({options[pick].first->name, cur});
    }
    return out;
}

} // namespace hd
