#include "latcount/relaxation.hpp"
#include "latcount/errors.hpp"

#include <map>
#include <string>

namespace latcount {

RelaxedFormula relax(const CnfFormula& f) {
    RelaxedFormula rf;
    rf.clause_width = f.width();
    rf.num_new_variables = f.num_occurrences();
    std::map<int, IorGroup> groups; // keyed by original variable, ascending
    int next = 1;
    for (const auto& clause : f.clauses) {
        std::array<int, 3> vars{0, 0, 0};
        for (size_t t = 0; t < clause.size(); ++t) {
            const Literal& lit = clause[t];
            vars[t] = next;
            auto& g = groups[lit.variable];
            g.original_variable = lit.variable;
            g.occurrences.push_back(IorOccurrence{next, lit.negated ? -1 : 1});
            ++next;
        }
        rf.clauses.push_back(vars);
    }
    rf.groups.reserve(groups.size());
    for (auto& [ov, g] : groups) rf.groups.push_back(std::move(g));
    return rf;
}

int eval_relaxed(const RelaxedFormula& rf, std::span<const int> assignment) {
    if (static_cast<int>(assignment.size()) != rf.num_new_variables)
        throw DimensionMismatch("assignment has " + std::to_string(assignment.size()) +
                                " entries, formula has " +
                                std::to_string(rf.num_new_variables) + " variables");
    auto value = [&](int var) { return assignment[var - 1]; };
    // CNF part: every (all-positive) clause needs one fresh variable true
    for (int j = 0; j < rf.num_clauses(); ++j) {
        bool sat = false;
        for (int t = 0; t < rf.clause_width; ++t)
            if (value(rf.clauses[j][t]) == 1) {
                sat = true;
                break;
            }
        if (!sat) return -1;
    }
    // IOR part: sign * value identical within each group
    for (const auto& g : rf.groups) {
        int first = g.occurrences.front().sign * value(g.occurrences.front().variable);
        for (const auto& occ : g.occurrences)
            if (occ.sign * value(occ.variable) != first) return -1;
    }
    return 1;
}

} // namespace latcount
