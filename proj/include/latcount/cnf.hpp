#ifndef LATCOUNT_CNF_HPP
#define LATCOUNT_CNF_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace latcount {

struct Literal {
    int variable = 0; // 1-based
    bool negated = false;
};

inline bool operator==(const Literal& a, const Literal& b) {
    return a.variable == b.variable && a.negated == b.negated;
}

// A uniform-width CNF formula (every clause has 2 literals, or every clause has 3).
// Duplicate literals inside a clause are allowed and meaningful: each occurrence
// counts separately in the relaxation.
struct CnfFormula {
    int num_variables = 0;
    std::vector<std::vector<Literal>> clauses;

    int width() const { return clauses.empty() ? 0 : static_cast<int>(clauses.front().size()); }
    int num_clauses() const { return static_cast<int>(clauses.size()); }
    // total literal occurrences = width * num_clauses
    int num_occurrences() const { return width() * num_clauses(); }
};

// Parse DIMACS cnf text. Accepts 'c' comment lines, requires a 'p cnf <vars> <clauses>'
// header before any clause, clauses are zero-terminated and may span lines.
// Throws: MissingHeader, ClauseWidthUnsupported (width not in {2,3}), VariableOutOfRange,
// ClauseCountMismatch, MixedWidths.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

// Serialize back to DIMACS. parse_dimacs(to_dimacs(f)) reproduces the clause list exactly.
std::string to_dimacs(const CnfFormula& f);

} // namespace latcount

#endif
