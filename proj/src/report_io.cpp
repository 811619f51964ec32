#include "quatnorm/report_io.hpp"

#include <ostream>

#include <json.hpp>

#include "quatnorm/format.hpp"

namespace quatnorm {

void write_report_text(std::ostream& os, const CertReport& report, const Basis& basis) {
    os << "n=" << report.n << '\n'
       << "degree_bound=" << report.degree_bound << '\n'
       << "mode=" << (report.clear_only ? "clear_only" : "all") << '\n'
       << "pairs_scanned=" << report.pairs_scanned << '\n'
       << "squads_total=" << report.squads_total << '\n'
       << "squads_clear=" << report.squads_clear << '\n'
       << "clear_ratio=" << format_rat(report.clear_ratio) << '\n'
       << "elapsed_ms=" << report.elapsed.count() << '\n'
       << "failures=" << report.failures.size() << '\n';
    for (const auto& [label, count] : report.label_counts)
        os << "squads[" << label << "]=" << count << '\n';
    for (const auto& fail : report.failures) {
        const auto& s = fail.squad;
        os << "FAIL f=" << s.f_index << " g=" << s.g_index << " L=" << format_word(s.left)
           << " R=" << format_word(s.right) << " leader=" << format_word(s.leader)
           << " label=" << leader_label(basis, s) << " nf=" << format_poly(fail.remainder)
           << '\n';
    }
}

void write_report_json(std::ostream& os, const CertReport& report, const Basis& basis) {
    nlohmann::json j;
    j["n"] = report.n;
    j["degree_bound"] = report.degree_bound;
    j["mode"] = report.clear_only ? "clear_only" : "all";
    j["pairs_scanned"] = report.pairs_scanned;
    j["squads_total"] = report.squads_total;
    j["squads_clear"] = report.squads_clear;
    j["clear_ratio"] = report.clear_ratio.get_d();
    j["clear_ratio_exact"] = format_rat(report.clear_ratio);
    j["elapsed_ms"] = report.elapsed.count();
    j["labels"] = nlohmann::json::object();
    for (const auto& [label, count] : report.label_counts) j["labels"][label] = count;
    j["failures"] = nlohmann::json::array();
    for (const auto& fail : report.failures) {
        const auto& s = fail.squad;
        j["failures"].push_back({{"f", s.f_index},
                                 {"g", s.g_index},
                                 {"L", format_word(s.left)},
                                 {"R", format_word(s.right)},
                                 {"leader", format_word(s.leader)},
                                 {"label", leader_label(basis, s)},
                                 {"nf", format_poly(fail.remainder)}});
    }
    os << j.dump(2) << '\n';
}

} // namespace quatnorm
