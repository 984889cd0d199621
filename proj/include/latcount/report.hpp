#ifndef LATCOUNT_REPORT_HPP
#define LATCOUNT_REPORT_HPP

#include "latcount/counter.hpp"
#include "latcount/oracle.hpp"
#include "latcount/spectrum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace latcount {

// 12 significant digits; always carries a decimal point or exponent so float
// fields stay visibly floats ("-1" renders as "-1.0").
std::string format_float(double x);

// "e1;e2;...;en" rendering of a sign vector
std::string format_signs(const SignVector& signs);

enum class ReportFormat { Json, Csv };

// Deterministic reports: fixed field order, fixed float formatting. The wall
// time diagnostic is emitted only when include_timing is set, so reports can
// be compared byte for byte.
std::string emit_report(const CountOutcome& outcome, ReportFormat format,
                        bool include_timing = true);
std::string emit_report(const OracleResult& result, ReportFormat format);
std::string emit_report(const std::vector<SpectrumReport>& rows, ReportFormat format);
std::string emit_profile(const std::vector<std::pair<double, double>>& rows,
                         ReportFormat format);

// three-route comparison used by the verify command
struct VerifyReport {
    std::int64_t lattice_count = 0;
    std::int64_t enumeration_count = 0;
    bool expansion_ran = false;
    std::int64_t expansion_count = 0;
    std::string expansion_constant; // exact "num/den"
    bool agree = false;
};

std::string emit_report(const VerifyReport& report, ReportFormat format);

} // namespace latcount

#endif
