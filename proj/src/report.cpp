#include "latcount/report.hpp"

#include <cstdio>
#include <sstream>

namespace latcount {

std::string format_float(double x) {
    if (x == 0.0) return "0.0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos && s.find_first_of("in") == std::string::npos)
        s += ".0"; // integral-looking value: keep it a float field
    return s;
}

std::string format_signs(const SignVector& signs) {
    std::ostringstream out;
    for (size_t i = 0; i < signs.size(); ++i) {
        if (i) out << ';';
        out << signs[i];
    }
    return out.str();
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

void json_int_matrix(std::ostringstream& out, const IntMatrix& z) {
    out << '[';
    for (int j = 0; j < z.n; ++j) {
        if (j) out << ',';
        out << '[';
        for (int ax = 0; ax < z.d; ++ax) {
            if (ax) out << ',';
            out << z.at(j, ax);
        }
        out << ']';
    }
    out << ']';
}

} // namespace

std::string emit_report(const CountOutcome& o, ReportFormat format, bool include_timing) {
    std::ostringstream out;
    const CountResult& r = o.result;
    if (format == ReportFormat::Csv) {
        out << "constant_term,count,satisfiable,relaxed_count,modulus,axes,lattice_points,"
               "imaginary_residual,lattice_distance,tolerance\n";
        out << format_float(r.constant_term) << ',' << o.model_count << ',';
        out << bool_str(r.satisfiable) << ',' << r.count << ',' << r.modulus << ',' << r.axes
            << ',' << r.lattice_points << ',' << format_float(r.imaginary_residual) << ','
            << format_float(r.lattice_distance) << ',' << format_float(r.tolerance) << '\n';
        return out.str();
    }
    out << "{\n";
    out << "  \"constant_term\": " << format_float(r.constant_term) << ",\n";
    out << "  \"count\": " << o.model_count << ",\n";
    out << "  \"satisfiable\": " << bool_str(r.satisfiable) << ",\n";
    out << "  \"relaxed_count\": " << r.count << ",\n";
    out << "  \"raw_sum_re\": " << format_float(r.raw_sum.real()) << ",\n";
    out << "  \"raw_sum_im\": " << format_float(r.raw_sum.imag()) << ",\n";
    out << "  \"imaginary_residual\": " << format_float(r.imaginary_residual) << ",\n";
    out << "  \"lattice_distance\": " << format_float(r.lattice_distance) << ",\n";
    out << "  \"tolerance\": " << format_float(r.tolerance) << ",\n";
    out << "  \"modulus\": " << r.modulus << ",\n";
    out << "  \"axes\": " << r.axes << ",\n";
    out << "  \"lattice_points\": " << r.lattice_points << ",\n";
    out << "  \"diagnostics\": {\n";
    out << "    \"variables\": " << o.diag.num_original_variables << ",\n";
    out << "    \"occurring_variables\": " << o.diag.num_occurring_variables << ",\n";
    out << "    \"clauses\": " << o.diag.num_clauses << ",\n";
    out << "    \"clause_width\": " << o.diag.clause_width << ",\n";
    out << "    \"relaxed_variables\": " << o.diag.num_relaxed_variables << ",\n";
    out << "    \"scheme\": {\"axes\": " << o.diag.scheme.axes << ", \"u\": "
        << format_float(o.diag.scheme.u) << ", \"p\": " << format_float(o.diag.scheme.p)
        << ", \"v\": " << format_float(o.diag.scheme.v) << ", \"h\": "
        << format_float(o.diag.scheme.h) << "},\n";
    out << "    \"min_max_frequency\": " << format_float(o.diag.min_max) << ",\n";
    out << "    \"max_max_frequency\": " << format_float(o.diag.max_max) << ",\n";
    out << "    \"argmin_signs\": \"" << format_signs(o.diag.argmin) << "\",\n";
    out << "    \"integer_min_max\": " << o.diag.integer_min_max << ",\n";
    out << "    \"multiplier\": " << o.diag.multiplier << ",\n";
    out << "    \"integer_frequencies\": ";
    json_int_matrix(out, o.diag.integer_freqs);
    if (include_timing)
        out << ",\n    \"wall_ms\": " << format_float(o.diag.wall_ms) << "\n";
    else
        out << "\n";
    out << "  }\n";
    out << "}\n";
    return out.str();
}

std::string emit_report(const OracleResult& r, ReportFormat format) {
    std::ostringstream out;
    const std::string exact =
        r.constant_term.get_num().get_str() + "/" + r.constant_term.get_den().get_str();
    if (format == ReportFormat::Csv) {
        out << "count,total_assignments,constant_term,constant_term_exact\n";
        out << r.count << ',' << r.total_assignments << ','
            << format_float(r.constant_term.get_d()) << ',' << exact << '\n';
        return out.str();
    }
    out << "{\n";
    out << "  \"count\": " << r.count << ",\n";
    out << "  \"total_assignments\": " << r.total_assignments << ",\n";
    out << "  \"constant_term\": " << format_float(r.constant_term.get_d()) << ",\n";
    out << "  \"constant_term_exact\": \"" << exact << "\"\n";
    out << "}\n";
    return out.str();
}

std::string emit_report(const std::vector<SpectrumReport>& rows, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "n,min_max_frequency,max_max_frequency,argmin_signs\n";
        for (const auto& row : rows)
            out << row.n << ',' << format_float(row.min_max) << ',' << format_float(row.max_max)
                << ',' << format_signs(row.argmin) << '\n';
        return out.str();
    }
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        out << "  {\"n\": " << row.n << ", \"min_max_frequency\": " << format_float(row.min_max)
            << ", \"max_max_frequency\": " << format_float(row.max_max)
            << ", \"argmin_signs\": \"" << format_signs(row.argmin) << "\"}"
            << (i + 1 < rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
    return out.str();
}

std::string emit_profile(const std::vector<std::pair<double, double>>& rows,
                         ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "t,g\n";
        for (const auto& [t, g] : rows) out << format_float(t) << ',' << format_float(g) << '\n';
        return out.str();
    }
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i)
        out << "  {\"t\": " << format_float(rows[i].first)
            << ", \"g\": " << format_float(rows[i].second) << "}"
            << (i + 1 < rows.size() ? "," : "") << '\n';
    out << "]\n";
    return out.str();
}

std::string emit_report(const VerifyReport& r, ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        out << "agree,lattice_count,enumeration_count,expansion_ran,expansion_count,"
               "expansion_constant\n";
        out << bool_str(r.agree) << ',' << r.lattice_count << ',' << r.enumeration_count << ','
            << bool_str(r.expansion_ran) << ',';
        if (r.expansion_ran)
            out << r.expansion_count << ',' << r.expansion_constant;
        else
            out << ',';
        out << '\n';
        return out.str();
    }
    out << "{\n";
    out << "  \"agree\": " << bool_str(r.agree) << ",\n";
    out << "  \"lattice_count\": " << r.lattice_count << ",\n";
    out << "  \"enumeration_count\": " << r.enumeration_count << ",\n";
    out << "  \"expansion_ran\": " << bool_str(r.expansion_ran);
    if (r.expansion_ran) {
        out << ",\n  \"expansion_count\": " << r.expansion_count << ",\n";
        out << "  \"expansion_constant\": \"" << r.expansion_constant << "\"\n";
    } else {
        out << "\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace latcount
