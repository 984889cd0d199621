#include "latcount/cnf.hpp"
#include "latcount/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace latcount {

namespace {

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    return true;
}

} // namespace

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    long declared_clauses = 0;
    std::vector<Literal> current;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            if (have_header) throw MissingHeader("duplicate 'p' header");
            std::string fmt;
            long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
                throw MissingHeader("malformed 'p cnf <vars> <clauses>' header");
            f.num_variables = static_cast<int>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header)
            throw MissingHeader("clause data before 'p cnf' header");
        // clause tokens, possibly spanning lines, each clause 0-terminated
        do {
            if (!is_integer_token(tok))
                throw VariableOutOfRange("non-integer token '" + tok + "' in clause data");
            long v = std::strtol(tok.c_str(), nullptr, 10);
            if (v == 0) {
                int w = static_cast<int>(current.size());
                if (w != 2 && w != 3)
                    throw ClauseWidthUnsupported("clause width " + std::to_string(w) +
                                                 " unsupported (need 2 or 3)");
                if (!f.clauses.empty() && f.width() != w)
                    throw MixedWidths("clause width " + std::to_string(w) +
                                      " differs from first clause width " +
                                      std::to_string(f.width()));
                f.clauses.push_back(current);
                current.clear();
            } else {
                long var = v < 0 ? -v : v;
                if (var > f.num_variables)
                    throw VariableOutOfRange("literal " + tok + " exceeds declared variable count " +
                                             std::to_string(f.num_variables));
                current.push_back(Literal{static_cast<int>(var), v < 0});
            }
        } while (ls >> tok);
    }
    if (!have_header) throw MissingHeader("no 'p cnf' header found");
    if (!current.empty())
        throw ClauseCountMismatch("trailing unterminated clause (missing 0)");
    if (static_cast<long>(f.clauses.size()) != declared_clauses)
        throw ClauseCountMismatch("header declares " + std::to_string(declared_clauses) +
                                  " clauses, found " + std::to_string(f.clauses.size()));
    return f;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_variables << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (const auto& lit : cl) out << (lit.negated ? -lit.variable : lit.variable) << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace latcount
