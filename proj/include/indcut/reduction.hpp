#ifndef INDCUT_REDUCTION_HPP
#define INDCUT_REDUCTION_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "indcut/graph.hpp"
#include "indcut/twosat.hpp"

namespace indcut {

// 3-SAT formula; every clause carries exactly three literal slots
// (shorter input clauses are padded by repeating a literal).
struct Cnf3 {
    int num_vars = 0;
    std::vector<std::array<Lit, 3>> clauses;
};

// Conjunction of exactly-one constraints R(a, b, c).
struct R3Formula {
    int num_vars = 0;
    std::vector<std::array<Lit, 3>> clauses;
    bool all_positive = false;
};

struct ReductionSizes {
    int n_prime = 0;  // variables after the exactly-one stage
    int m_prime = 0;  // clauses after the exactly-one stage
    int n_dprime = 0; // variables after the positivization stage
    int m_dprime = 0; // clauses after the positivization stage
    int order = 0;    // vertices of the generated graph
    int size = 0;     // edges of the generated graph
};

// Vertex roles: "x<j>" for variables, "a_<i>_<j>" / "b_<i>_<j>" /
// "c_<i>_<j>" for the clause gadgets, "r1".."r3", "t1", "t2".
struct IcInstance {
    Graph graph;
    std::vector<std::pair<std::string, int>> labels;
    ReductionSizes sizes;
};

// Per input clause, four fresh variables and three exactly-one clauses.
// Output has n + 4m variables and 3m clauses, equisatisfiable.
R3Formula to_one_in_three(const Cnf3& f);

// Rewrites every negative occurrence through a primed twin variable and
// the forced-false pair f1, f2. Identity when f is already positive;
// otherwise output has 2n' + 3 variables and m' + 2n' + 1 clauses.
R3Formula positivize(const R3Formula& f);

// Clause gadgets of three triangles plus a matching, wired to variable
// vertices, an anchor triangle and an anchor edge. Requires an
// all-positive formula; the graph has order n'' + 9m'' + 5 and an
// independent cut exactly when the formula is satisfiable.
IcInstance build_ic_instance(const R3Formula& f);

// Chains the three stages and records per-stage sizes.
IcInstance reduce_full(const Cnf3& f);

bool evaluate_r3(const R3Formula& f, const Assignment& a);

// Exhaustive satisfiability of an exactly-one formula; refuses more than
// 25 variables.
bool brute_r3(const R3Formula& f);

// DIMACS CNF: "p cnf <n> <m>", clauses as literal runs terminated by 0.
// Clauses with fewer than three literals are padded; longer ones are
// rejected.
Cnf3 read_dimacs_cnf(std::istream& in);

// One "role vertex-id" line per labeled vertex, 1-based ids.
void write_labels(std::ostream& out, const IcInstance& inst);

} // namespace indcut

#endif
