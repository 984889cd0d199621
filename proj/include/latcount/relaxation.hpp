#ifndef LATCOUNT_RELAXATION_HPP
#define LATCOUNT_RELAXATION_HPP

#include "latcount/cnf.hpp"

#include <array>
#include <span>
#include <vector>

namespace latcount {

// One occurrence of an original variable after identity relaxation: the fresh
// variable that replaced the whole literal, and the literal's polarity
// (+1 plain, -1 negated). The fresh variable stands for the literal's value,
// so sign * fresh recovers the original variable's value.
struct IorOccurrence {
    int variable = 0; // 1-based fresh variable index
    int sign = 1;     // +1 or -1
};

// Identical-occurrence requirement for one original variable: all occurrences
// must report a consistent value for it, i.e. sign_i * x_i identical across i.
struct IorGroup {
    int original_variable = 0;
    std::vector<IorOccurrence> occurrences;

    int size() const { return static_cast<int>(occurrences.size()); }
};

// Result of identity relaxation. Each literal occurrence becomes a fresh
// variable: clause j (1-based), position t (1-based) holds fresh variable
// width*(j-1)+t. The relaxed clauses are all-positive (the fresh variable IS
// the literal); polarities survive only inside the IOR groups.
struct RelaxedFormula {
    int clause_width = 0;
    int num_new_variables = 0;               // n = width * num_clauses
    std::vector<std::array<int, 3>> clauses; // fresh variable per position; width entries used
    std::vector<IorGroup> groups;            // one group per occurring original variable

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// Replace each literal occurrence with a fresh variable and record the
// identical-occurrence groups that tie the copies back together.
RelaxedFormula relax(const CnfFormula& f);

// Evaluate the relaxed formula (CNF part AND all IOR groups) at a +/-1
// assignment to the fresh variables. Returns +1 (true) or -1 (false).
// Throws DimensionMismatch if assignment.size() != num_new_variables.
int eval_relaxed(const RelaxedFormula& rf, std::span<const int> assignment);

} // namespace latcount

#endif
