#include <doctest.h>

#include "quatnorm/cert.hpp"
#include "quatnorm/errors.hpp"
#include "quatnorm/format.hpp"
#include "quatnorm/oracle.hpp"
#include "quatnorm/qideal.hpp"

#include "support.hpp"

using namespace quatnorm;
using qtest::P;
using qtest::W;

namespace {

std::size_t index_of_lead(const Basis& basis, const Word& lead) {
    for (std::size_t t = 0; t < basis.size(); ++t)
        if (basis[t].lead == lead) return t;
    REQUIRE(false);
    return 0;
}

Basis table_only_basis() {
    Basis bg = enumerate_bg(1, 2);
    std::vector<BasisElement> kept;
    for (const auto& el : bg.elements())
        if (el.family == Family::BG2a) kept.push_back(el);
    return Basis(AlphabetConfig(1), 4, std::move(kept));
}

} // namespace

TEST_CASE("overlaps") {
    Basis table = table_only_basis();
    // ji + k  and  ij - k  overlap in the single leader jij
    std::size_t f = index_of_lead(table, W("j*i", 1));
    std::size_t g = index_of_lead(table, W("i*j", 1));
    auto squads = overlaps(table, f, g);
    REQUIRE(squads.size() == 1);
    CHECK(squads[0].leader == W("j*i*j", 1));
    CHECK(squads[0].left == W("j", 1));
    CHECK(squads[0].right == W("j", 1));

    // q1'q1 has no self-overlap
    Basis bg = enumerate_bg(1, 2);
    std::size_t c = index_of_lead(bg, W("q1'*q1", 1));
    CHECK(overlaps(bg, c, c).empty());

    // suffix q2q1 of [q3 q2]q1 meets the prefix of [q2 q1]q1
    Basis bg3 = enumerate_bg(3, 3);
    std::size_t a = index_of_lead(bg3, W("q3*q2*q1"));
    std::size_t b = index_of_lead(bg3, W("q2*q1*q1"));
    auto sq = overlaps(bg3, a, b);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].leader == W("q3*q2*q1*q1"));
    CHECK(sq[0].left == W("q3"));
    CHECK(sq[0].right == W("q1"));
}

TEST_CASE("is_clear") {
    Basis table = table_only_basis();
    std::size_t f = index_of_lead(table, W("j*i", 1));
    std::size_t g = index_of_lead(table, W("i*j", 1));
    auto squads = overlaps(table, f, g);
    REQUIRE(squads.size() == 1);
    CHECK(is_clear(squads[0], table)); // interior "i" is irreducible

    Basis bg3 = enumerate_bg(3, 4);
    std::size_t a = index_of_lead(bg3, W("q3*q2*q1"));
    std::size_t b = index_of_lead(bg3, W("q2*q1*q1"));
    auto sq = overlaps(bg3, a, b);
    REQUIRE(sq.size() == 1);
    // interior q2*q1 is the leading word of [q2]q1 - q1[q2]
    CHECK_FALSE(is_clear(sq[0], bg3));

    // a degree-2 leader has an empty interior
    std::size_t ii = index_of_lead(table, W("i*i", 1));
    auto self_sq = overlaps(table, ii, ii);
    for (const auto& s : self_sq) CHECK(is_clear(s, table));
}

TEST_CASE("s_polynomial") {
    Basis table = table_only_basis();
    std::size_t f = index_of_lead(table, W("j*i", 1));
    std::size_t g = index_of_lead(table, W("i*j", 1));
    auto squads = overlaps(table, f, g);
    REQUIRE(squads.size() == 1);
    Polynomial s = s_polynomial(squads[0], table);
    CHECK(s == P("k*j + j*k", 1));
    CHECK(deglex_less(s.leading_term().word, squads[0].leader));
}

TEST_CASE("certification of the basis passes") {
    Basis bg = enumerate_bg(1, 5);
    CertReport report = certify(bg, 5, CertMode::ClearOnly);
    CHECK(report.passed());
    CHECK(report.squads_total > 0);
    CHECK(report.squads_clear <= report.squads_total);
    CHECK(report.pairs_scanned == bg.size() * bg.size());
}

TEST_CASE("a corrupted basis is caught") {
    Basis bg = enumerate_bg(2, 6);
    std::size_t victim = index_of_lead(bg, W("q2*q1*q1", 2)); // a BG3(b) element
    CHECK(bg[victim].family == Family::BG3b);
    CertReport report = certify(bg.without(victim), 6, CertMode::ClearOnly);
    CHECK_FALSE(report.passed());
    for (const auto& fail : report.failures)
        CHECK_FALSE(fail.remainder.is_zero());
}

TEST_CASE("table-only basis certifies in all mode") {
    CertReport report = certify(table_only_basis(), 4, CertMode::All);
    CHECK(report.passed());
    CHECK_FALSE(report.clear_only);
}

TEST_CASE("clear filter only discards redundant work (n=1)") {
    Basis bg = enumerate_bg(1, 6);
    CertReport clear_report = certify(bg, 6, CertMode::ClearOnly);
    CertReport all_report = certify(bg, 6, CertMode::All);
    CHECK(clear_report.passed() == all_report.passed());
    CHECK(clear_report.squads_total == all_report.squads_total);
    CHECK(clear_report.squads_clear == all_report.squads_clear);
}

TEST_CASE("worker count does not change the report") {
    Basis bg = enumerate_bg(2, 5);
    CertReport one = certify(bg, 5, CertMode::ClearOnly, 1);
    CertReport four = certify(bg, 5, CertMode::ClearOnly, 4);
    CHECK(one.squads_total == four.squads_total);
    CHECK(one.squads_clear == four.squads_clear);
    CHECK(one.failures.size() == four.failures.size());
    CHECK(one.label_counts == four.label_counts);
    CHECK(one.clear_ratio == four.clear_ratio);
}

TEST_CASE("clear_only rejects degree-one elements") {
    std::vector<BasisElement> els;
    els.emplace_back(P("i - j", 1), Family::BG2a, "");
    Basis degenerate(AlphabetConfig(1), 4, std::move(els));
    CHECK_THROWS_AS(certify(degenerate, 4, CertMode::ClearOnly), DegreeOneElement);
    CHECK_NOTHROW(certify(degenerate, 4, CertMode::All));
}

TEST_CASE("every S-polynomial is an ideal member") {
    Basis bg = enumerate_bg(2, 4);
    for (std::size_t fi = 0; fi < bg.size(); ++fi)
        for (std::size_t gi = 0; gi < bg.size(); ++gi)
            for (const auto& s : overlaps(bg, fi, gi))
                CHECK(oracle::coordinatize(s_polynomial(s, bg), 2).is_zero());
}
