#include "indcut/reduction.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "indcut/dimacs.hpp"

namespace indcut {

R3Formula to_one_in_three(const Cnf3& f) {
    R3Formula out;
    out.num_vars = f.num_vars + 4 * static_cast<int>(f.clauses.size());
    out.all_positive = false;
    for (size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& [x, y, z] = f.clauses[i];
        const int a = f.num_vars + 4 * static_cast<int>(i);
        const int b = a + 1, c = a + 2, d = a + 3;
        out.clauses.push_back({pos(a), pos(b), ~x});
        out.clauses.push_back({pos(b), pos(c), y});
        out.clauses.push_back({pos(c), pos(d), ~z});
    }
    out.all_positive = true;
    for (const auto& cl : out.clauses)
        for (const Lit& l : cl)
            if (l.negated) out.all_positive = false;
    return out;
}

R3Formula positivize(const R3Formula& f) {
    bool has_negative = false;
    for (const auto& cl : f.clauses)
        for (const Lit& l : cl)
            if (l.negated) has_negative = true;
    if (!has_negative) {
        R3Formula out = f;
        out.all_positive = true;
        return out;
    }

    const int n = f.num_vars;
    const int f1 = 2 * n, f2 = 2 * n + 1, t = 2 * n + 2;
    auto primed = [n](int v) { return n + v; };

    R3Formula out;
    out.num_vars = 2 * n + 3;
    out.all_positive = true;
    for (const auto& cl : f.clauses) {
        std::array<Lit, 3> rewritten = cl;
        for (Lit& l : rewritten)
            if (l.negated) l = pos(primed(l.var));
        out.clauses.push_back(rewritten);
    }
    // Every variable gets a twin forced to the opposite value.
    for (int v = 0; v < n; ++v) {
        out.clauses.push_back({pos(v), pos(primed(v)), pos(f1)});
        out.clauses.push_back({pos(v), pos(primed(v)), pos(f2)});
    }
    out.clauses.push_back({pos(f1), pos(f2), pos(t)});
    return out;
}

IcInstance build_ic_instance(const R3Formula& f) {
    if (!f.all_positive)
        throw std::invalid_argument("graph construction requires an all-positive formula");
    // The clause gadget hangs off three variable vertices; with a repeated
    // variable they collapse into an articulation point and the
    // correspondence breaks. The chain stages never emit such clauses.
    for (const auto& cl : f.clauses)
        if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var)
            throw std::invalid_argument(
                "graph construction requires three distinct variables per clause");

    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    const int order = n + 9 * m + 5;
    const int r1 = n + 9 * m, r2 = r1 + 1, r3 = r1 + 2;
    const int t1 = r1 + 3, t2 = r1 + 4;

    IcInstance inst;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        inst.labels.emplace_back("x" + std::to_string(v + 1), v);
        edges.emplace_back(v, r1);
        edges.emplace_back(v, r2);
    }
    for (int i = 0; i < m; ++i) {
        const int base = n + 9 * i;
        const int a[3] = {base, base + 1, base + 2};
        const int b[3] = {base + 3, base + 4, base + 5};
        const int c[3] = {base + 6, base + 7, base + 8};
        for (int j = 0; j < 3; ++j) {
            const std::string suffix =
                "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            inst.labels.emplace_back("a" + suffix, a[j]);
            inst.labels.emplace_back("b" + suffix, b[j]);
            inst.labels.emplace_back("c" + suffix, c[j]);
        }
        for (auto [x, y] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            edges.emplace_back(a[x], a[y]);
            edges.emplace_back(b[x], b[y]);
            edges.emplace_back(c[x], c[y]);
        }
        for (int j = 0; j < 3; ++j) edges.emplace_back(a[j], b[j]);
        // occurrence wiring: each c-vertex attaches to its variable
        for (int j = 0; j < 3; ++j) edges.emplace_back(c[j], f.clauses[i][j].var);
        edges.emplace_back(r1, a[0]);
        edges.emplace_back(r2, b[0]);
        edges.emplace_back(r3, a[0]);
        edges.emplace_back(r3, b[0]);
        edges.emplace_back(t1, c[0]);
        edges.emplace_back(t1, c[1]);
        edges.emplace_back(t2, c[0]);
        edges.emplace_back(t2, c[2]);
    }
    edges.emplace_back(r1, r2);
    edges.emplace_back(r1, r3);
    edges.emplace_back(r2, r3);
    edges.emplace_back(t1, t2);
    inst.labels.emplace_back("r1", r1);
    inst.labels.emplace_back("r2", r2);
    inst.labels.emplace_back("r3", r3);
    inst.labels.emplace_back("t1", t1);
    inst.labels.emplace_back("t2", t2);

    inst.graph = Graph(order, edges);
    inst.sizes.n_dprime = n;
    inst.sizes.m_dprime = m;
    inst.sizes.order = inst.graph.order();
    inst.sizes.size = inst.graph.size();
    detail::require(inst.graph.order() == n + 9 * m + 5,
                    "generated graph order must be n'' + 9m'' + 5");
    detail::require(inst.graph.size() == 23 * m + 2 * n + 4,
                    "generated graph size must match the gadget wiring");
    return inst;
}

IcInstance reduce_full(const Cnf3& f) {
    const R3Formula stage1 = to_one_in_three(f);
    const R3Formula stage2 = positivize(stage1);

    detail::require(stage1.num_vars == f.num_vars + 4 * static_cast<int>(f.clauses.size()),
                    "exactly-one stage variable count off");
    detail::require(stage1.clauses.size() == 3 * f.clauses.size(),
                    "exactly-one stage clause count off");

    IcInstance inst = build_ic_instance(stage2);
    inst.sizes.n_prime = stage1.num_vars;
    inst.sizes.m_prime = static_cast<int>(stage1.clauses.size());
    inst.sizes.n_dprime = stage2.num_vars;
    inst.sizes.m_dprime = static_cast<int>(stage2.clauses.size());
    return inst;
}

bool evaluate_r3(const R3Formula& f, const Assignment& a) {
    for (const auto& cl : f.clauses) {
        int truths = 0;
        for (const Lit& l : cl) truths += (a[l.var] != l.negated);
        if (truths != 1) return false;
    }
    return true;
}

bool brute_r3(const R3Formula& f) {
    if (f.num_vars > 25)
        throw std::invalid_argument("exactly-one brute force limited to 25 variables");
    const uint32_t limit = uint32_t{1} << f.num_vars;
    for (uint32_t pattern = 0; pattern < limit; ++pattern) {
        Assignment a(f.num_vars, 0);
        for (int v = 0; v < f.num_vars; ++v) a[v] = (pattern >> v) & 1;
        if (evaluate_r3(f, a)) return true;
    }
    return false;
}

Cnf3 read_dimacs_cnf(std::istream& in) {
    Cnf3 f;
    int declared_clauses = -1;
    bool have_header = false;
    std::vector<Lit> current;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf" ||
                f.num_vars < 0 || declared_clauses < 0)
                throw parse_error(line_no, "malformed header, expected 'p cnf <n> <m>'");
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error(line_no, "clause before problem line");
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty())
                    throw parse_error(line_no, "empty clause cannot be padded");
                if (current.size() > 3)
                    throw parse_error(line_no, "clause with more than 3 literals");
                while (current.size() < 3) current.push_back(current.back());
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                const int v = std::abs(lit);
                if (v > f.num_vars)
                    throw parse_error(line_no,
                                      "variable out of range 1.." + std::to_string(f.num_vars));
                current.push_back({v - 1, lit < 0});
            }
        }
    }
    if (!have_header) throw parse_error(line_no, "missing problem line");
    if (!current.empty()) throw parse_error(line_no, "unterminated clause");
    return f;
}

void write_labels(std::ostream& out, const IcInstance& inst) {
    for (const auto& [role, v] : inst.labels) out << role << ' ' << v + 1 << '\n';
}

} // namespace indcut
