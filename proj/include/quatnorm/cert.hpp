#ifndef QUATNORM_CERT_HPP
#define QUATNORM_CERT_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quatnorm/reduce.hpp"

namespace quatnorm {

/// A proper overlap between two rules: lead(f)*R = L*lead(g) with
/// 0 < |L| < |lead(f)| and 0 < |R| < |lead(g)|. The shared word is the leader.
struct SQuadruplet {
    std::size_t f_index;
    std::size_t g_index;
    Word right; // R
    Word left;  // L
    Word leader;
};

struct CertFailure {
    SQuadruplet squad;
    Polynomial remainder;
};

struct CertReport {
    int n = 0;
    int degree_bound = 0;
    bool clear_only = true;
    std::uint64_t pairs_scanned = 0;
    std::uint64_t squads_total = 0;
    std::uint64_t squads_clear = 0;
    std::vector<CertFailure> failures;
    std::chrono::milliseconds elapsed{0};
    Rat clear_ratio;                                  // squads_clear / squads_total
    std::map<std::string, std::uint64_t> label_counts; // leader taxonomy coverage

    bool passed() const { return failures.empty(); }
};

enum class CertMode { ClearOnly, All };

/// All S-quadruplets between the two rules (f = g self-overlaps included;
/// the degenerate self-overlap with L = R is dropped, its S-polynomial being
/// identically zero for rules whose leading word is a letter power).
std::vector<SQuadruplet> overlaps(const Basis& basis, std::size_t f_index, std::size_t g_index);

/// True iff the leader with its first and last letters removed contains no
/// leading word of the basis.
bool is_clear(const SQuadruplet& s, const Basis& basis);

/// f*R - L*g, scaled so the shared leader cancels exactly.
Polynomial s_polynomial(const SQuadruplet& s, const Basis& basis);

/// Diagnostic leader label built from the two generators' leading-word shapes
/// (table, I, V, U, N4, N), e.g. "N+I". Metadata only.
std::string leader_label(const Basis& basis, const SQuadruplet& s);

/// Enumerates every S-quadruplet with leader degree <= degree_bound (clear
/// ones only in ClearOnly mode), reduces each S-polynomial to normal form
/// against the basis, and reports counts, failures and the clear ratio.
/// The report is identical for any worker count.
CertReport certify(const Basis& basis, int degree_bound, CertMode mode, int workers = 1);

} // namespace quatnorm

#endif
