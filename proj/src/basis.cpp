#include "quatnorm/basis.hpp"

#include <unordered_set>

#include "quatnorm/errors.hpp"

namespace quatnorm {

std::string_view family_name(Family f) {
    switch (f) {
        case Family::BG2a: return "BG2a";
        case Family::BG2b: return "BG2b";
        case Family::BG2c: return "BG2c";
        case Family::BG3a: return "BG3a";
        case Family::BG3b: return "BG3b";
        case Family::BG3c: return "BG3c";
        case Family::BG4: return "BG4";
        case Family::BGm: return "BGm";
        case Family::GenTable: return "GenTable";
        case Family::GenConj: return "GenConj";
        case Family::GenComm: return "GenComm";
        case Family::ExtCommXY: return "ExtCommXY";
        case Family::ExtShift: return "ExtShift";
    }
    return "?";
}

Basis::Basis(AlphabetConfig alphabet, int degree_bound, std::vector<BasisElement> elements)
    : alphabet_(alphabet), degree_bound_(degree_bound), elements_(std::move(elements)) {
    for (const auto& el : elements_) {
        if (static_cast<int>(el.lead.degree()) > degree_bound_)
            throw Error("basis element of leading degree " + std::to_string(el.lead.degree()) +
                        " exceeds the declared bound " + std::to_string(degree_bound_));
        for (Letter a : el.lead.letters()) alphabet_.require(a);
    }
    std::unordered_set<std::string> keys;
    keys.reserve(elements_.size());
    for (std::size_t p = 0; p < elements_.size(); ++p)
        if (!keys.insert(poly_key(elements_[p].poly)).second)
            throw Error("duplicate basis element at index " + std::to_string(p));
    build_index();
}

void Basis::build_index() {
    by_first_letter_.clear();
    for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
        const Word& lw = elements_[idx].lead;
        if (lw.empty()) continue; // constants never match a word position
        by_first_letter_[lw.at(0).code()].push_back(idx);
    }
}

const std::vector<std::size_t>& Basis::rules_starting_with(Letter a) const {
    auto it = by_first_letter_.find(a.code());
    return it == by_first_letter_.end() ? empty_ : it->second;
}

Basis Basis::without(std::size_t idx) const {
    std::vector<BasisElement> rest;
    rest.reserve(elements_.size() - 1);
    for (std::size_t p = 0; p < elements_.size(); ++p)
        if (p != idx) rest.push_back(elements_[p]);
    return Basis(alphabet_, degree_bound_, std::move(rest));
}

Basis Basis::merged(const Basis& other) const {
    std::vector<BasisElement> all(elements_);
    std::unordered_set<std::string> keys;
    keys.reserve(all.size() + other.size());
    for (const auto& el : all) keys.insert(poly_key(el.poly));
    for (const auto& el : other.elements())
        if (keys.insert(poly_key(el.poly)).second) all.push_back(el);
    int bound = degree_bound_ > other.degree_bound_ ? degree_bound_ : other.degree_bound_;
    int n = alphabet_.n > other.alphabet_.n ? alphabet_.n : other.alphabet_.n;
    return Basis(AlphabetConfig(n), bound, std::move(all));
}

} // namespace quatnorm
