// Acceptance suite: one pass/fail line per criterion, exit code 0 iff all pass.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "quatnorm/cert.hpp"
#include "quatnorm/format.hpp"
#include "quatnorm/oracle.hpp"
#include "quatnorm/qideal.hpp"
#include "quatnorm/reduce.hpp"
#include "quatnorm/structcheck.hpp"

#include "support.hpp"

using namespace quatnorm;

namespace {

std::vector<Word> words_up_to(int n, int d) {
    AlphabetConfig alph(n);
    auto letters = alph.letters();
    std::vector<Word> out{Word()};
    std::size_t level_begin = 0;
    for (int deg = 1; deg <= d; ++deg) {
        const std::size_t level_end = out.size();
        for (std::size_t t = level_begin; t < level_end; ++t)
            for (Letter a : letters) {
                std::vector<Letter> ext(out[t].letters());
                ext.push_back(a);
                out.emplace_back(std::move(ext));
            }
        level_begin = level_end;
    }
    return out;
}

// --- criterion 1: clear-mode certification of the basis --------------------

bool c1_certify_clear(std::string& detail) {
    const std::pair<int, int> scales[] = {{1, 6}, {2, 6}, {3, 5}};
    detail.clear();
    bool ok = true;
    for (auto [n, d] : scales) {
        CertReport report = certify(enumerate_bg(n, d), d, CertMode::ClearOnly, 4);
        detail += "(" + std::to_string(n) + "," + std::to_string(d) +
                  "): failures=" + std::to_string(report.failures.size()) +
                  " squads=" + std::to_string(report.squads_total) +
                  " elapsed_ms=" + std::to_string(report.elapsed.count()) + "  ";
        ok = ok && report.passed();
    }
    return ok;
}

// --- criterion 2: all-mode certification, the filter drops only redundancy --

bool c2_certify_all(std::string& detail) {
    CertReport report = certify(enumerate_bg(2, 5), 5, CertMode::All, 4);
    detail = "(2,5) all-mode: failures=" + std::to_string(report.failures.size()) +
             " squads=" + std::to_string(report.squads_total) +
             " non_clear=" + std::to_string(report.squads_total - report.squads_clear);
    return report.passed() && report.squads_total > report.squads_clear;
}

// --- criterion 3: clear-ratio regression bound ------------------------------

bool c3_clear_ratio(std::string& detail) {
    CertReport report = certify(enumerate_bg(3, 6), 6, CertMode::ClearOnly, 4);
    detail = "(3,6): squads_clear/squads_total = " + std::to_string(report.squads_clear) + "/" +
             std::to_string(report.squads_total) + " = " + format_rat(report.clear_ratio) +
             " (~" + std::to_string(report.clear_ratio.get_d()) + "), bound 3/4";
    return report.clear_ratio <= rat_of(3, 4);
}

// --- criterion 4: reducedness of every enumerated basis ---------------------

bool c4_reducedness(std::string& detail) {
    int checked = 0;
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 7; ++d) {
            if (!is_reduced_basis(enumerate_bg(n, d)).empty()) {
                detail = "violations at n=" + std::to_string(n) + " D=" + std::to_string(d);
                return false;
            }
            ++checked;
        }
    detail = std::to_string(checked) + " bases audited, no violations";
    return true;
}

// --- criterion 5: the basis generates the defining ideal --------------------

bool c5_ideal_generation(std::string& detail) {
    int reduced = 0;
    for (int n = 1; n <= 3; ++n) {
        Basis bg = enumerate_bg(n, 4);
        for (const auto& gen : ideal_generators(n).elements()) {
            if (!reduces_to_zero(gen.poly, bg).first) {
                detail = "generator with nonzero normal form at n=" + std::to_string(n) + ": " +
                         format_poly(gen.poly);
                return false;
            }
            ++reduced;
        }
    }
    detail = std::to_string(reduced) + " generators reduced to zero";
    return true;
}

// --- criterion 6: oracle membership of every engine-produced element --------

bool c6_oracle_membership(std::string& detail) {
    int checked = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& el : enumerate_bg(n, 7).elements()) {
            if (!oracle::coordinatize(el.poly, n).is_zero()) {
                detail = "nonzero coordinatization in the basis at n=" + std::to_string(n) +
                         ": " + format_poly(el.poly);
                return false;
            }
            ++checked;
        }
        for (const auto& el : ideal_generators(n).elements()) {
            if (!oracle::coordinatize(el.poly, n).is_zero()) {
                detail = "nonzero coordinatization among generators at n=" + std::to_string(n);
                return false;
            }
            ++checked;
        }
    }
    for (int n = 1; n <= 2; ++n)
        for (const auto& el : extended_rules(n, 5).elements()) {
            if (!oracle::coordinatize(el.poly, n).is_zero()) {
                detail = "nonzero coordinatization among extended rules at n=" +
                         std::to_string(n) + ": " + format_poly(el.poly);
                return false;
            }
            ++checked;
        }
    detail = std::to_string(checked) + " elements coordinatize to zero";
    return true;
}

// --- criterion 7: normalization is sound w.r.t. the oracle ------------------

bool c7_soundness(std::string& detail) {
    std::mt19937_64 rng(70007);
    std::uniform_int_distribution<int> n_dist(1, 3);
    Basis bases[] = {enumerate_bg(1, 5), enumerate_bg(2, 5), enumerate_bg(3, 5)};
    for (int round = 0; round < 1000; ++round) {
        const int n = n_dist(rng);
        Polynomial p = qtest::random_poly(rng, n, 5, 6);
        Polynomial nf = normal_form(p, bases[n - 1]).first;
        if (!oracle::coord_equal(p, nf, n)) {
            detail = "oracle mismatch at round " + std::to_string(round) + ": " + format_poly(p);
            return false;
        }
    }
    detail = "1000 random polynomials preserved under normalization";
    return true;
}

// --- criterion 8: normal forms are strategy-independent ---------------------

bool c8_confluence(std::string& detail) {
    std::mt19937_64 rng(80008);
    std::uniform_int_distribution<int> n_dist(1, 3);
    Basis bases[] = {enumerate_bg(1, 5), enumerate_bg(2, 5), enumerate_bg(3, 5)};
    for (int round = 0; round < 200; ++round) {
        const int n = n_dist(rng);
        Polynomial p = qtest::random_poly(rng, n, 5, 6);
        Polynomial det = normal_form(p, bases[n - 1]).first;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            Polynomial rnd =
                normal_form(p, bases[n - 1], ReductionStrategy::seeded(seed * 7919 + round))
                    .first;
            if (!(rnd == det)) {
                detail = "strategy divergence at round " + std::to_string(round);
                return false;
            }
        }
    }
    detail = "200 polynomials x 20 strategies, all normal forms identical";
    return true;
}

// --- criterion 9: irreducibility matches the structural pattern -------------

bool c9_structure_equivalence(std::string& detail) {
    const std::pair<int, int> scales[] = {{2, 5}, {3, 4}};
    long checked = 0;
    for (auto [n, d] : scales) {
        Basis bg = enumerate_bg(n, d);
        AlphabetConfig alph(n);
        for (const Word& w : words_up_to(n, d)) {
            const bool irreducible = !find_division(w, bg).has_value();
            const bool conforms = conforms_normal_pattern(w, alph).has_value();
            if (irreducible != conforms) {
                detail = "mismatch at n=" + std::to_string(n) + ", word " + format_word(w) +
                         ": irreducible=" + std::to_string(irreducible) +
                         " conforms=" + std::to_string(conforms);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " words agree (n=2 deg<=5, n=3 deg<=4)";
    return true;
}

// --- criterion 10: commutator families reduce to zero -----------------------

bool c10_commutators(std::string& detail) {
    std::mt19937_64 rng(100010);
    std::uniform_int_distribution<int> n_dist(1, 3);
    Basis bases[] = {enumerate_bg(1, 6), enumerate_bg(2, 6), enumerate_bg(3, 6)};
    for (int round = 0; round < 300; ++round) {
        const int n = n_dist(rng);
        AlphabetConfig alph(n);
        auto letters = alph.letters();
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        Word a({letters[pick(rng)]});
        Word t = qtest::random_word(rng, n, 5, 1);
        if (!reduces_to_zero(bracket_commutator(a, t), bases[n - 1]).first) {
            detail = "a[T]-[T]a not reduced: a=" + format_word(a) + " T=" + format_word(t);
            return false;
        }
        Word x = qtest::random_word(rng, n, 3, 1);
        Word y = qtest::random_word(rng, n, 3, 1);
        if (x.degree() + y.degree() <= 6 &&
            !reduces_to_zero(bracket(x * y) - bracket(y * x), bases[n - 1]).first) {
            detail = "[XY]-[YX] not reduced: X=" + format_word(x) + " Y=" + format_word(y);
            return false;
        }
    }
    detail = "300 bracket commutators and shift differences reduced to zero";
    return true;
}

// --- criterion 11: special commutation families -----------------------------

bool c11_special_families(std::string& detail) {
    std::mt19937_64 rng(110011);
    std::uniform_int_distribution<int> n_dist(1, 3);
    Basis bases[] = {enumerate_bg(1, 7), enumerate_bg(2, 7), enumerate_bg(3, 7)};
    for (int round = 0; round < 200; ++round) {
        const int n = n_dist(rng);
        const Basis& bg = bases[n - 1];
        std::uniform_int_distribution<int> l_dist(1, n);
        const Letter q = Letter::var(l_dist(rng));
        const Letter qb = q.conjugated();
        Word s = qtest::random_word(rng, n, 5, 1);

        Polynomial sq = bracket_commutator(s, Word({q}));
        if (!reduces_to_zero(sq, bg).first) {
            detail = "S[q]-[q]S not reduced: S=" + format_word(s);
            return false;
        }
        Word qqbar({q, qb});
        Polynomial sn = Polynomial::monomial(s * qqbar) - Polynomial::monomial(qqbar * s);
        if (!reduces_to_zero(sn, bg).first) {
            detail = "S*qq'-qq'*S not reduced: S=" + format_word(s);
            return false;
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const Basis& bg = bases[n - 1];
        AlphabetConfig alph(n);
        for (int l = 1; l <= n; ++l)
            for (int r = 1; r <= 3; ++r) {
                std::vector<Letter> block;
                for (int t = 0; t < r; ++t) block.push_back(Letter::var(l));
                for (int t = 0; t < r; ++t) block.push_back(Letter::conj_var(l));
                Word power(std::move(block));
                for (Letter x : alph.letters()) {
                    Polynomial f = Polynomial::monomial(Word({x}) * power) -
                                   Polynomial::monomial(power * Word({x}));
                    if (!reduces_to_zero(f, bg).first) {
                        detail = "x*q^r*q'^r - q^r*q'^r*x not reduced: x=" +
                                 format_letter(x) + " r=" + std::to_string(r);
                        return false;
                    }
                }
            }
    }
    detail = "200 random S plus all letter/power cases reduced to zero";
    return true;
}

// --- criterion 12: deleting any BG3/BG4 element is detected -----------------

bool c12_mutation_sensitivity(std::string& detail) {
    Basis bg = enumerate_bg(2, 6);
    AlphabetConfig alph(2);
    std::vector<std::size_t> mutable_indices;
    for (std::size_t t = 0; t < bg.size(); ++t) {
        Family f = bg[t].family;
        if (f == Family::BG3a || f == Family::BG3b || f == Family::BG3c || f == Family::BG4)
            mutable_indices.push_back(t);
    }
    int detected = 0;
    bool documented_deletion_failed = false;
    for (std::size_t idx : mutable_indices) {
        Basis mutated = bg.without(idx);
        // The deleted leading word becomes irreducible yet conforms to no
        // pattern, so the exhaustive degree<=5 equivalence scan would flag it.
        const bool equivalence_breaks =
            !find_division(bg[idx].lead, mutated).has_value() &&
            !conforms_normal_pattern(bg[idx].lead, alph).has_value();
        // And the missing rule's overlaps surface nonzero normal forms.
        const bool certification_breaks =
            !certify(mutated, 6, CertMode::ClearOnly, 4).passed();
        if (bg[idx].lead == Word({Letter::var(2), Letter::var(1), Letter::var(1)}))
            documented_deletion_failed = certification_breaks;
        if (equivalence_breaks || certification_breaks) ++detected;
        else {
            detail = "undetected deletion of element " + std::to_string(idx) + " (" +
                     std::string(family_name(bg[idx].family)) + " " + bg[idx].params + ")";
            return false;
        }
    }
    detail = std::to_string(detected) + "/" + std::to_string(mutable_indices.size()) +
             " deletions detected; certification caught the [q2*q1]*q1 deletion: " +
             (documented_deletion_failed ? "yes" : "no");
    return detected == static_cast<int>(mutable_indices.size()) && documented_deletion_failed;
}

} // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "clear-mode certification at (1,6), (2,6), (3,5)", c1_certify_clear},
        {2, "all-mode certification at (2,5)", c2_certify_all},
        {3, "clear ratio bound at (3,6)", c3_clear_ratio},
        {4, "reducedness for n<=3, D<=7", c4_reducedness},
        {5, "ideal generators reduce to zero", c5_ideal_generation},
        {6, "oracle membership of basis, generators, extended rules", c6_oracle_membership},
        {7, "oracle soundness of normalization (1000 random)", c7_soundness},
        {8, "confluence across strategies (200 x 20)", c8_confluence},
        {9, "structure pattern equals irreducibility (exhaustive)", c9_structure_equivalence},
        {10, "commutator families reduce to zero (300 random)", c10_commutators},
        {11, "special power families reduce to zero", c11_special_families},
        {12, "mutation sensitivity of BG3/BG4 deletions", c12_mutation_sensitivity},
    };

    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);

    int failures = 0;
    for (const auto& crit : criteria) {
        if (only && crit.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = crit.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %2d: %s — %s\n", ok ? "PASS" : "FAIL", crit.id, crit.name,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
