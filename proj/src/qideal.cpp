#include "quatnorm/qideal.hpp"

#include <string>
#include <unordered_set>

#include "quatnorm/errors.hpp"
#include "quatnorm/format.hpp"

namespace quatnorm {

namespace {

// [Y]*x - x*[Y]
Polynomial bracket_right_comm(const Word& y, const Word& x) {
    Polynomial b = bracket(y);
    return b.framed(Word(), x) - b.framed(x, Word());
}

// x*[Y] - [Y]*x
Polynomial bracket_left_comm(const Word& x, const Word& y) { return bracket_commutator(x, y); }

std::vector<Polynomial> table_relations() {
    const Letter i = Letter::i(), j = Letter::j(), k = Letter::k();
    auto rel = [](Word w, Rat c, Word v) {
        return Polynomial::monomial(w) + Polynomial::monomial(std::move(c), std::move(v));
    };
    return {
        rel({i, i}, Rat(1), Word()), rel({j, j}, Rat(1), Word()), rel({k, k}, Rat(1), Word()),
        rel({i, j}, Rat(-1), {k}),   rel({j, i}, Rat(1), {k}),    rel({j, k}, Rat(-1), {i}),
        rel({k, j}, Rat(1), {i}),    rel({k, i}, Rat(-1), {j}),   rel({i, k}, Rat(1), {j}),
    };
}

// 2 qbar_l + q_l + i q_l i + j q_l j + k q_l k, written leading-term first
// as k q_l k + j q_l j + i q_l i + 2 qbar_l + q_l.
Polynomial conjugate_defining(int l) {
    const Letter i = Letter::i(), j = Letter::j(), k = Letter::k();
    const Letter q = Letter::var(l), qb = Letter::conj_var(l);
    return Polynomial::from_terms({
        Term{Rat(1), Word({k, q, k})},
        Term{Rat(1), Word({j, q, j})},
        Term{Rat(1), Word({i, q, i})},
        Term{Rat(2), Word({qb})},
        Term{Rat(1), Word({q})},
    });
}

std::string letter_param(Letter a) { return format_letter(a); }

} // namespace

Basis ideal_generators(int n) {
    if (n < 1) throw InvalidN(n);
    AlphabetConfig alph(n);
    std::vector<BasisElement> out;

    int idx = 0;
    for (auto& p : table_relations())
        out.emplace_back(std::move(p), Family::GenTable, "t=" + std::to_string(idx++));
    for (int l = 1; l <= n; ++l)
        out.emplace_back(conjugate_defining(l), Family::GenConj, "l=" + std::to_string(l));
    for (Letter a : alph.letters()) {
        for (int l = 1; l <= n; ++l) {
            const Letter q = Letter::var(l);
            const Word brackets[4] = {Word({q}),
                                      Word({Letter::i(), q}),
                                      Word({Letter::j(), q}),
                                      Word({Letter::k(), q})};
            for (const Word& y : brackets) {
                Polynomial p = bracket_left_comm(Word({a}), y);
                out.emplace_back(std::move(p), Family::GenComm,
                                 "a=" + letter_param(a) + " Y=" + format_word(y));
            }
        }
    }
    return Basis(alph, 3, std::move(out));
}

namespace {

struct BgBuilder {
    int n;
    int bound;
    std::vector<BasisElement> out;
    std::unordered_set<std::string> seen;

    void emit(Polynomial p, Family fam, std::string params) {
        if (p.is_zero()) return;
        if (static_cast<int>(p.leading_term().word.degree()) > bound) return;
        if (!seen.insert(poly_key(p)).second) return;
        out.emplace_back(std::move(p), fam, std::move(params));
    }

    // Nondecreasing interior words of the given length over the letter range
    // [low, high) in the conjugate-alternating order, restricted to Q u Qbar.
    void interior_words(Letter low, Letter high_exclusive, std::size_t len,
                        std::vector<std::vector<Letter>>& acc) const {
        std::vector<Letter> range;
        for (int l = 1; l <= n; ++l)
            for (Letter a : {Letter::var(l), Letter::conj_var(l)})
                if (compare_letters(low, a) != std::strong_ordering::greater &&
                    compare_letters(a, high_exclusive) == std::strong_ordering::less)
                    range.push_back(a);
        std::vector<Letter> cur;
        build(range, 0, len, cur, acc);
    }

    static void build(const std::vector<Letter>& range, std::size_t start, std::size_t remaining,
                      std::vector<Letter>& cur, std::vector<std::vector<Letter>>& acc) {
        if (remaining == 0) {
            acc.push_back(cur);
            return;
        }
        for (std::size_t t = start; t < range.size(); ++t) {
            cur.push_back(range[t]);
            build(range, t, remaining - 1, cur, acc);
            cur.pop_back();
        }
    }
};

} // namespace

Basis enumerate_bg(int n, int degree_bound) {
    if (n < 1) throw InvalidN(n);
    if (degree_bound < 2) throw InvalidBound(degree_bound);
    AlphabetConfig alph(n);
    const std::vector<Letter> E = {Letter::i(), Letter::j(), Letter::k()};
    BgBuilder bg{n, degree_bound, {}, {}};

    // BG2(a): multiplication table of the basis letters
    int idx = 0;
    for (auto& p : table_relations())
        bg.emit(std::move(p), Family::BG2a, "t=" + std::to_string(idx++));

    // BG2(b): 1'1 - 11' ; [2]1' - 1'[2] ; [2]1 - 1[2]
    for (int a = 1; a <= n; ++a) {
        const Letter q = Letter::var(a), qb = Letter::conj_var(a);
        bg.emit(Polynomial::monomial(Word({qb, q})) - Polynomial::monomial(Word({q, qb})),
                Family::BG2b, "1=q" + std::to_string(a));
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const std::string ab = "1=q" + std::to_string(a) + " 2=q" + std::to_string(b);
            bg.emit(bracket_right_comm(Word({Letter::var(b)}), Word({Letter::conj_var(a)})),
                    Family::BG2b, ab + " rhs=1'");
            bg.emit(bracket_right_comm(Word({Letter::var(b)}), Word({Letter::var(a)})),
                    Family::BG2b, ab + " rhs=1");
        }

    // BG2(c): 2[1] - [1]2 ; e[1] - [1]e
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b)
            bg.emit(bracket_left_comm(Word({Letter::var(b)}), Word({Letter::var(a)})),
                    Family::BG2c, "1=q" + std::to_string(a) + " 2=q" + std::to_string(b));
        for (Letter e : E)
            bg.emit(bracket_left_comm(Word({e}), Word({Letter::var(a)})), Family::BG2c,
                    "1=q" + std::to_string(a) + " e=" + letter_param(e));
    }

    // BG3(a): k1k + j1j + i1i + 2*1' + 1
    for (int a = 1; a <= n; ++a)
        bg.emit(conjugate_defining(a), Family::BG3a, "1=q" + std::to_string(a));

    // BG3(b)
    for (int a = 1; a <= n; ++a) {
        const Letter q1 = Letter::var(a), q1b = Letter::conj_var(a);
        for (int b = a + 1; b <= n; ++b) {
            const Letter q2 = Letter::var(b), q2b = Letter::conj_var(b);
            const std::string ab = "1=q" + std::to_string(a) + " 2=q" + std::to_string(b);
            for (int c = b + 1; c <= n; ++c) {
                const Letter q3 = Letter::var(c);
                const std::string abc = ab + " 3=q" + std::to_string(c);
                bg.emit(bracket_right_comm(Word({q3, q2}), Word({q1})), Family::BG3b,
                        abc + " form=[32]1");
                bg.emit(bracket_right_comm(Word({q3, q1}), Word({q2b})), Family::BG3b,
                        abc + " form=[31]2'");
                bg.emit(bracket_right_comm(Word({q3, q1}), Word({q2})), Family::BG3b,
                        abc + " form=[31]2");
            }
            bg.emit(bracket_right_comm(Word({q2, q1}), Word({q1b})), Family::BG3b,
                    ab + " form=[21]1'");
            bg.emit(bracket_right_comm(Word({q2, q1}), Word({q1})), Family::BG3b,
                    ab + " form=[21]1");
            for (Letter e : E) {
                const std::string abe = ab + " e=" + letter_param(e);
                bg.emit(bracket_right_comm(Word({e, q2}), Word({q1})), Family::BG3b,
                        abe + " form=[e2]1");
                bg.emit(bracket_right_comm(Word({e, q1}), Word({q2})), Family::BG3b,
                        abe + " form=[e1]2");
                bg.emit(bracket_right_comm(Word({e, q1}), Word({q2b})), Family::BG3b,
                        abe + " form=[e1]2'");
            }
        }
        for (Letter e : E) {
            const std::string ae = "1=q" + std::to_string(a) + " e=" + letter_param(e);
            bg.emit(bracket_right_comm(Word({e, q1}), Word({q1})), Family::BG3b,
                    ae + " form=[e1]1");
            bg.emit(bracket_right_comm(Word({e, q1}), Word({q1b})), Family::BG3b,
                    ae + " form=[e1]1'");
        }
        bg.emit(bracket_right_comm(Word({Letter::j(), q1}), Word({Letter::i()})), Family::BG3b,
                "1=q" + std::to_string(a) + " form=[j1]i");
        bg.emit(bracket_right_comm(Word({Letter::k(), q1}), Word({Letter::i()})), Family::BG3b,
                "1=q" + std::to_string(a) + " form=[k1]i");
        bg.emit(bracket_right_comm(Word({Letter::k(), q1}), Word({Letter::j()})), Family::BG3b,
                "1=q" + std::to_string(a) + " form=[k1]j");
    }

    // BG3(c): 2[21] - [21]2
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            bg.emit(bracket_left_comm(Word({Letter::var(b)}), Word({Letter::var(b), Letter::var(a)})),
                    Family::BG3c, "1=q" + std::to_string(a) + " 2=q" + std::to_string(b));

    // BG4: 3[231]-[231]3 ; 3[241]-[241]3 ; 3[2e1]-[2e1]3 ; e'[2e1]-[2e1]e'
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            const Letter q1 = Letter::var(a), q2 = Letter::var(b);
            const std::string ab = "1=q" + std::to_string(a) + " 2=q" + std::to_string(b);
            for (int c = b + 1; c <= n; ++c) {
                const Letter q3 = Letter::var(c);
                const std::string abc = ab + " 3=q" + std::to_string(c);
                bg.emit(bracket_left_comm(Word({q3}), Word({q2, q3, q1})), Family::BG4,
                        abc + " form=3[231]");
                for (int d = c + 1; d <= n; ++d)
                    bg.emit(bracket_left_comm(Word({q3}), Word({q2, Letter::var(d), q1})),
                            Family::BG4, abc + " 4=q" + std::to_string(d) + " form=3[241]");
                for (Letter e : E)
                    bg.emit(bracket_left_comm(Word({q3}), Word({q2, e, q1})), Family::BG4,
                            abc + " e=" + letter_param(e) + " form=3[2e1]");
            }
            for (Letter ep : E)
                for (Letter e : E) {
                    if (compare_letters(ep, e) == std::strong_ordering::greater) continue;
                    if (ep == Letter::k() && e == Letter::k()) continue;
                    bg.emit(bracket_left_comm(Word({ep}), Word({q2, e, q1})), Family::BG4,
                            ab + " e'=" + letter_param(ep) + " e=" + letter_param(e) +
                                " form=e'[2e1]");
                }
        }

    // BGm, m >= 5: 3[2Am1]-[2Am1]3 and 3[2Ae1]-[2Ae1]3 with A nondecreasing
    // over Q u Qbar, |A| = m-4, and 3 <= A < (m or e) letterwise; the upper
    // bound is vacuous against a basis letter.
    for (int m = 5; m <= degree_bound; ++m) {
        const std::size_t alen = static_cast<std::size_t>(m - 4);
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c) {
                    const Letter q1 = Letter::var(a), q2 = Letter::var(b), q3 = Letter::var(c);
                    const std::string abc = "1=q" + std::to_string(a) + " 2=q" + std::to_string(b) +
                                            " 3=q" + std::to_string(c);
                    for (int d = c + 1; d <= n; ++d) {
                        const Letter qm = Letter::var(d);
                        std::vector<std::vector<Letter>> interiors;
                        bg.interior_words(q3, qm, alen, interiors);
                        for (const auto& A : interiors) {
                            std::vector<Letter> y = {q2};
                            y.insert(y.end(), A.begin(), A.end());
                            y.push_back(qm);
                            y.push_back(q1);
                            bg.emit(bracket_left_comm(Word({q3}), Word(y)), Family::BGm,
                                    abc + " m=q" + std::to_string(d) +
                                        " A=" + format_word(Word(A)));
                        }
                    }
                    for (Letter e : E) {
                        std::vector<std::vector<Letter>> interiors;
                        bg.interior_words(q3, e, alen, interiors);
                        for (const auto& A : interiors) {
                            std::vector<Letter> y = {q2};
                            y.insert(y.end(), A.begin(), A.end());
                            y.push_back(e);
                            y.push_back(q1);
                            bg.emit(bracket_left_comm(Word({q3}), Word(y)), Family::BGm,
                                    abc + " e=" + letter_param(e) + " A=" + format_word(Word(A)));
                        }
                    }
                }
    }

    return Basis(alph, degree_bound, std::move(bg.out));
}

Basis extended_rules(int n, int degree_bound) {
    if (n < 1) throw InvalidN(n);
    if (degree_bound < 2) throw InvalidBound(degree_bound);
    AlphabetConfig alph(n);
    const std::vector<Letter> letters = alph.letters();

    std::vector<BasisElement> out;
    std::unordered_set<std::string> seen;
    auto emit = [&](Polynomial p, Family fam, std::string params) {
        if (p.is_zero()) return;
        if (!seen.insert(poly_key(p)).second) return;
        out.emplace_back(std::move(p), fam, std::move(params));
    };

    // enumerate all words of each degree, split into X|Y at every position
    std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(degree_bound) + 1);
    by_degree[0].push_back(Word());
    for (int d = 1; d <= degree_bound; ++d)
        for (const Word& w : by_degree[static_cast<std::size_t>(d - 1)])
            for (Letter a : letters) {
                std::vector<Letter> ext(w.letters());
                ext.push_back(a);
                by_degree[static_cast<std::size_t>(d)].push_back(Word(std::move(ext)));
            }

    for (int d = 2; d <= degree_bound; ++d)
        for (const Word& w : by_degree[static_cast<std::size_t>(d)])
            for (std::size_t cut = 1; cut < w.degree(); ++cut) {
                Word x = w.prefix(cut);
                Word y = w.subword(cut, w.degree() - cut);
                emit(bracket_commutator(x, y), Family::ExtCommXY,
                     "X=" + format_word(x) + " Y=" + format_word(y));
                emit(bracket(x * y) - bracket(y * x), Family::ExtShift,
                     "X=" + format_word(x) + " Y=" + format_word(y));
            }

    return Basis(alph, degree_bound, std::move(out));
}

} // namespace quatnorm
