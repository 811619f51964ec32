#ifndef QUATNORM_LETTER_HPP
#define QUATNORM_LETTER_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quatnorm/errors.hpp"

namespace quatnorm {

enum class LetterKind { QVar, QConj, Basis };
enum class BasisId { I = 0, J = 1, K = 2 };

/// One symbol of the alphabet: a variable q_l, its conjugate q_l', or one of
/// the basis letters i, j, k. Encoded so that integer comparison realizes the
/// conjugate-alternating order q_1 < q_1' < q_2 < q_2' < ... < i < j < k.
class Letter {
public:
    static Letter var(int index) { return Letter(2 * (index - 1)); }
    static Letter conj_var(int index) { return Letter(2 * (index - 1) + 1); }
    static Letter basis(BasisId b) { return Letter(kBasisBase + static_cast<std::int32_t>(b)); }
    static Letter i() { return basis(BasisId::I); }
    static Letter j() { return basis(BasisId::J); }
    static Letter k() { return basis(BasisId::K); }

    LetterKind kind() const {
        if (code_ >= kBasisBase) return LetterKind::Basis;
        return (code_ & 1) ? LetterKind::QConj : LetterKind::QVar;
    }
    bool is_basis() const { return code_ >= kBasisBase; }
    bool is_qvar() const { return code_ < kBasisBase && (code_ & 1) == 0; }
    bool is_qconj() const { return code_ < kBasisBase && (code_ & 1) == 1; }

    /// Variable index l, valid for QVar/QConj letters.
    int index() const { return static_cast<int>(code_ / 2) + 1; }
    BasisId basis_id() const { return static_cast<BasisId>(code_ - kBasisBase); }

    /// Letterwise conjugation: q <-> q'; basis letters map to themselves
    /// (their sign lives in the enclosing term's coefficient).
    Letter conjugated() const {
        if (is_basis()) return *this;
        return Letter(code_ ^ 1);
    }

    std::int32_t code() const { return code_; }

    friend std::strong_ordering operator<=>(Letter a, Letter b) { return a.code_ <=> b.code_; }
    friend bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }

private:
    explicit Letter(std::int32_t code) : code_(code) {}
    static constexpr std::int32_t kBasisBase = 1 << 24;
    std::int32_t code_;
};

/// Three-way comparison under the conjugate-alternating order.
inline std::strong_ordering compare_letters(Letter a, Letter b) { return a <=> b; }

/// Active alphabet: n quaternionic variables plus their conjugates and i, j, k.
struct AlphabetConfig {
    int n;

    explicit AlphabetConfig(int n_) : n(n_) {
        if (n < 1) throw InvalidN(n);
    }

    bool contains(Letter a) const { return a.is_basis() || a.index() <= n; }

    void require(Letter a) const {
        if (!contains(a)) throw IndexOutOfRange(a.index(), n);
    }

    int letter_count() const { return 2 * n + 3; }

    /// All letters in increasing order.
    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        out.reserve(static_cast<std::size_t>(letter_count()));
        for (int l = 1; l <= n; ++l) {
            out.push_back(Letter::var(l));
            out.push_back(Letter::conj_var(l));
        }
        out.push_back(Letter::i());
        out.push_back(Letter::j());
        out.push_back(Letter::k());
        return out;
    }

    std::vector<Letter> q_letters() const {
        std::vector<Letter> out;
        for (int l = 1; l <= n; ++l) out.push_back(Letter::var(l));
        return out;
    }
};

} // namespace quatnorm

#endif
