#include "quatnorm/structcheck.hpp"

#include <cstdint>
#include <set>
#include <tuple>

#include "quatnorm/errors.hpp"
#include "quatnorm/reduce.hpp"

namespace quatnorm {

namespace {

// Nondeterministic left-to-right parse of the pattern, tracking the three
// nondecreasing chains. Automaton phases: inside the variable region, right
// after a peak (its floor is due), right after a basis letter, and right
// after a floor of the basis chain (the next basis letter is due).
enum Phase : std::uint8_t { QRegion = 0, AfterPeak = 1, AtBasis = 2, AfterBasisFloor = 3 };

struct Parser {
    const std::vector<Letter>& word;
    std::vector<PatternRole> roles;
    std::set<std::tuple<std::size_t, std::uint8_t, std::int32_t, std::int32_t, std::int32_t, bool,
                        bool, std::int32_t>>
        dead;

    static constexpr std::int32_t kNone = -1;

    bool run(std::size_t pos, Phase phase, std::int32_t ceil, std::int32_t peak,
             std::int32_t floor, bool block_open, bool k_used, std::int32_t pending) {
        auto key = std::make_tuple(pos, static_cast<std::uint8_t>(phase), ceil, peak, floor,
                                   block_open, k_used, pending);
        if (dead.count(key)) return false;

        if (pos == word.size())
            return phase == QRegion || phase == AtBasis || phase == AfterBasisFloor;

        const Letter x = word[pos];
        const std::int32_t xc = x.code();

        switch (phase) {
            case QRegion:
                if (!x.is_basis()) {
                    // ceiling-block letter
                    if (ceil == kNone || xc >= ceil) {
                        roles[pos] = PatternRole::Block;
                        if (run(pos + 1, QRegion, xc, peak, floor, true, k_used, kNone))
                            return true;
                    }
                    // peak (variables only, strictly above an open block)
                    if (x.is_qvar() && (peak == kNone || xc >= peak) &&
                        (ceil == kNone || (block_open ? xc > ceil : xc >= ceil))) {
                        roles[pos] = PatternRole::Peak;
                        if (run(pos + 1, AfterPeak, xc, xc, floor, false, k_used, xc))
                            return true;
                    }
                } else if ((peak == kNone || xc >= peak) && !(x == Letter::k() && k_used)) {
                    roles[pos] = PatternRole::BasisLetter;
                    if (run(pos + 1, AtBasis, xc, xc, floor, false, k_used || x == Letter::k(),
                            kNone))
                        return true;
                }
                break;
            case AfterPeak:
                if (x.is_qvar() && xc < pending && (floor == kNone || xc >= floor)) {
                    roles[pos] = PatternRole::Floor;
                    if (run(pos + 1, QRegion, ceil, peak, xc, false, k_used, kNone)) return true;
                }
                break;
            case AtBasis:
                if (x.is_qvar() && (floor == kNone || xc >= floor)) {
                    roles[pos] = PatternRole::BasisFloor;
                    if (run(pos + 1, AfterBasisFloor, ceil, peak, xc, false, k_used, kNone))
                        return true;
                }
                break;
            case AfterBasisFloor:
                if (x.is_basis() && (peak == kNone || xc >= peak) &&
                    !(x == Letter::k() && k_used)) {
                    roles[pos] = PatternRole::BasisLetter;
                    if (run(pos + 1, AtBasis, xc, xc, floor, false, k_used || x == Letter::k(),
                            kNone))
                        return true;
                }
                break;
        }
        dead.insert(key);
        return false;
    }
};

} // namespace

std::optional<PatternDecomposition> conforms_normal_pattern(const Word& w,
                                                            const AlphabetConfig& alphabet) {
    // Candidate embeddings: the word may start flush with a pattern word, just
    // after a dropped peak (any variable), or just after a dropped basis
    // letter. Suffix truncation needs no completion letter.
    std::vector<std::optional<Letter>> fronts;
    fronts.push_back(std::nullopt);
    for (int l = 1; l <= alphabet.n; ++l) fronts.emplace_back(Letter::var(l));
    for (Letter e : {Letter::i(), Letter::j(), Letter::k()}) fronts.emplace_back(e);

    for (const auto& front : fronts) {
        std::vector<Letter> extended;
        if (front) extended.push_back(*front);
        extended.insert(extended.end(), w.letters().begin(), w.letters().end());

        Parser parser{extended, std::vector<PatternRole>(extended.size()), {}};
        if (!parser.run(0, QRegion, Parser::kNone, Parser::kNone, Parser::kNone, false, false,
                        Parser::kNone))
            continue;

        PatternDecomposition out;
        out.virtual_front = front;
        const std::size_t skip = front ? 1 : 0;
        out.roles.assign(parser.roles.begin() + static_cast<std::ptrdiff_t>(skip),
                         parser.roles.end());
        for (PatternRole role : parser.roles) {
            if (role == PatternRole::Peak) ++out.r;
            if (role == PatternRole::BasisFloor) ++out.s;
        }
        return out;
    }
    return std::nullopt;
}

std::vector<Word> irreducible_words(int n, int d, const Basis& basis) {
    if (d > basis.degree_bound()) throw DegreeGuard(d, basis.degree_bound());
    AlphabetConfig alph(n);
    const std::vector<Letter> letters = alph.letters();

    // Every subword of an irreducible word is irreducible, so it suffices to
    // extend the irreducible frontier one letter at a time.
    std::vector<Word> out;
    std::vector<Word> frontier{Word()};
    out.push_back(Word());
    for (int deg = 1; deg <= d; ++deg) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Letter a : letters) {
                std::vector<Letter> ext(w.letters());
                ext.push_back(a);
                Word cand(std::move(ext));
                if (!find_division(cand, basis).has_value()) next.push_back(std::move(cand));
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

} // namespace quatnorm
