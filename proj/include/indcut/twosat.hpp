#ifndef INDCUT_TWOSAT_HPP
#define INDCUT_TWOSAT_HPP

#include <optional>
#include <vector>

namespace indcut {

struct Lit {
    int var = 0;
    bool negated = false;

    friend Lit operator~(Lit l) { return {l.var, !l.negated}; }
    bool operator==(const Lit&) const = default;
};

inline Lit pos(int var) { return {var, false}; }
inline Lit neg(int var) { return {var, true}; }

// Clause of one or two literals; no empty clauses.
struct TwoSatClause {
    Lit lits[2];
    int size = 0;
};

struct TwoSatFormula {
    int num_vars = 0;
    std::vector<TwoSatClause> clauses;

    void add_unit(Lit a) { clauses.push_back({{a, a}, 1}); }
    void add(Lit a, Lit b) { clauses.push_back({{a, b}, 2}); }
};

// Truth value per variable.
using Assignment = std::vector<char>;

// Independent clause evaluator, used by tests and the brute solver.
bool satisfies(const TwoSatFormula& f, const Assignment& a);

// Implication-graph / SCC decision procedure. Deterministic: the same
// formula always yields the same assignment. Unit clauses (x) become the
// implication ~x -> x. Variables that occur in no clause come out false.
std::optional<Assignment> solve(const TwoSatFormula& f);

// Exhaustive scan over bit patterns in counting order starting at
// all-false; bit k of the pattern is variable k. Refuses num_vars > 25.
std::optional<Assignment> brute_solve(const TwoSatFormula& f);

} // namespace indcut

#endif
