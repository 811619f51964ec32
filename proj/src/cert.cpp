#include "quatnorm/cert.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "quatnorm/errors.hpp"

namespace quatnorm {

std::vector<SQuadruplet> overlaps(const Basis& basis, std::size_t f_index, std::size_t g_index) {
    const Word& fl = basis[f_index].lead;
    const Word& gl = basis[g_index].lead;
    std::vector<SQuadruplet> out;
    const std::size_t max_t = std::min(fl.degree(), gl.degree());
    for (std::size_t t = 1; t < max_t; ++t) {
        if (!(fl.suffix(t) == gl.prefix(t))) continue;
        Word left = fl.prefix(fl.degree() - t);
        Word right = gl.suffix(gl.degree() - t);
        if (f_index == g_index && left == right) continue;
        Word leader = fl * right;
        out.push_back(SQuadruplet{f_index, g_index, std::move(right), std::move(left),
                                  std::move(leader)});
    }
    return out;
}

bool is_clear(const SQuadruplet& s, const Basis& basis) {
    if (s.leader.degree() <= 2) return true; // empty interior
    Word interior = s.leader.subword(1, s.leader.degree() - 2);
    return !find_division(interior, basis).has_value();
}

Polynomial s_polynomial(const SQuadruplet& s, const Basis& basis) {
    const BasisElement& f = basis[s.f_index];
    const BasisElement& g = basis[s.g_index];
    Polynomial left_poly = f.poly.framed(Word(), s.right).scaled(Rat(1) / f.lead_coeff);
    Polynomial right_poly = g.poly.framed(s.left, Word()).scaled(Rat(1) / g.lead_coeff);
    return left_poly - right_poly;
}

namespace {

// Shape classification of a rule's leading word, used only for coverage labels.
const char* lead_shape(const BasisElement& el) {
    switch (el.family) {
        case Family::BG2a: return "table";
        case Family::BG2b:
        case Family::BG2c: return "I";
        case Family::BG3a: return "V";
        case Family::BG3b: {
            const Word& w = el.lead;
            // m3 m2 m1 descending-with-one-tie is U, m3 m1 m2 with a dip is V
            return compare_letters(w.at(1), w.at(2)) == std::strong_ordering::less ? "V" : "U";
        }
        case Family::BG3c: return "U";
        case Family::BG4: return "N4";
        case Family::BGm: return "N";
        default: return "extra";
    }
}

} // namespace

std::string leader_label(const Basis& basis, const SQuadruplet& s) {
    return std::string(lead_shape(basis[s.f_index])) + "+" + lead_shape(basis[s.g_index]);
}

CertReport certify(const Basis& basis, int degree_bound, CertMode mode, int workers) {
    const auto start = std::chrono::steady_clock::now();

    if (mode == CertMode::ClearOnly)
        for (std::size_t idx = 0; idx < basis.size(); ++idx)
            if (basis[idx].lead.degree() <= 1) throw DegreeOneElement(idx);

    CertReport report;
    report.n = basis.alphabet().n;
    report.degree_bound = degree_bound;
    report.clear_only = mode == CertMode::ClearOnly;
    report.pairs_scanned =
        static_cast<std::uint64_t>(basis.size()) * static_cast<std::uint64_t>(basis.size());

    std::vector<SQuadruplet> to_reduce;
    for (std::size_t fi = 0; fi < basis.size(); ++fi)
        for (std::size_t gi = 0; gi < basis.size(); ++gi)
            for (SQuadruplet& s : overlaps(basis, fi, gi)) {
                if (static_cast<int>(s.leader.degree()) > degree_bound) continue;
                ++report.squads_total;
                const bool clear = is_clear(s, basis);
                if (clear) ++report.squads_clear;
                ++report.label_counts[leader_label(basis, s)];
                if (clear || mode == CertMode::All) to_reduce.push_back(std::move(s));
            }

    std::vector<std::optional<Polynomial>> remainders(to_reduce.size());
    auto reduce_range = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t t = begin; t < to_reduce.size(); t += stride) {
            auto [nf, trace] = normal_form(s_polynomial(to_reduce[t], basis), basis);
            if (!nf.is_zero()) remainders[t] = std::move(nf);
        }
    };
    if (workers <= 1) {
        reduce_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int wkr = 0; wkr < workers; ++wkr)
            pool.emplace_back(reduce_range, static_cast<std::size_t>(wkr),
                              static_cast<std::size_t>(workers));
        for (auto& th : pool) th.join();
    }
    for (std::size_t t = 0; t < to_reduce.size(); ++t)
        if (remainders[t])
            report.failures.push_back(CertFailure{to_reduce[t], std::move(*remainders[t])});

    report.clear_ratio = report.squads_total == 0
                             ? Rat(0)
                             : Rat(static_cast<long>(report.squads_clear),
                                   static_cast<long>(report.squads_total));
    report.clear_ratio.canonicalize();
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace quatnorm
