#ifndef QUATNORM_REPORT_IO_HPP
#define QUATNORM_REPORT_IO_HPP

#include <iosfwd>

#include "quatnorm/cert.hpp"

namespace quatnorm {

/// Key-value header plus one failure record per line.
void write_report_text(std::ostream& os, const CertReport& report, const Basis& basis);

/// Structured report with stable field names: n, degree_bound, mode,
/// squads_total, squads_clear, clear_ratio, failures[], elapsed_ms.
void write_report_json(std::ostream& os, const CertReport& report, const Basis& basis);

} // namespace quatnorm

#endif
