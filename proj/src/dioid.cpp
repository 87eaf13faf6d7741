#include "actsets/dioid.hpp"

namespace actsets {

const ActSet& DioidElement::set() const {
    if (!set_) throw DegenerateInput("empty dioid element has no act set");
    return *set_;
}

ActSet oplus(const ActSet& a, const ActSet& b) {
    require_same_space(a.space(), b.space());
    std::vector<UtilityAct> acts = a.generators();
    acts.insert(acts.end(), b.generators().begin(), b.generators().end());
    return ActSet::canonicalize(a.space(), std::move(acts));
}

DioidElement oplus(const DioidElement& a, const DioidElement& b) {
    require_same_space(a.space(), b.space());
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return DioidElement::of(oplus(a.set(), b.set()));
}

ActSet otimes(const ActSet& a, const ActSet& b) {
    require_same_space(a.space(), b.space());
    std::vector<UtilityAct> sums;
    sums.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) sums.push_back(act_sum(x, y));
    return ActSet::canonicalize(a.space(), std::move(sums));
}

DioidElement otimes(const DioidElement& a, const DioidElement& b) {
    require_same_space(a.space(), b.space());
    if (a.is_empty() || b.is_empty()) return DioidElement::empty(a.space());
    return DioidElement::of(otimes(a.set(), b.set()));
}

DioidElement star_difference(const ActSet& m, const ActSet& l) {
    require_same_space(m.space(), l.space());
    std::vector<Facet> eroded;
    eroded.reserve(m.facets().size());
    for (const auto& f : m.facets())
        eroded.push_back(Facet{f.normal, f.offset - l.support(f.normal)});
    auto result = vertex_enumerate(m.space(), eroded);
    if (!result) return DioidElement::empty(m.space());
    return DioidElement::of(std::move(*result));
}

DioidElement scale(const DioidElement& g, const Rational& kappa) {
    if (g.is_empty()) return g;
    return DioidElement::of(g.set().scale(kappa));
}

DioidLawReport check_dioid_laws(const std::vector<std::array<DioidElement, 3>>& triples) {
    DioidLawReport report;
    for (size_t t = 0; t < triples.size(); ++t) {
        const auto& [a, b, c] = triples[t];
        require_same_space(a.space(), b.space());
        require_same_space(a.space(), c.space());
        const DioidElement zero = DioidElement::empty(a.space());
        const DioidElement unit = DioidElement::of(ActSet::lower_orthant(a.space()));

        auto expect = [&](bool ok, const char* law) {
            if (!ok) report.failures.push_back("triple #" + std::to_string(t) + ": " + law);
        };
        expect(oplus(a, b) == oplus(b, a), "union commutativity");
        expect(otimes(a, b) == otimes(b, a), "fusion commutativity");
        expect(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)), "union associativity");
        expect(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)), "fusion associativity");
        expect(otimes(a, oplus(b, c)) == oplus(otimes(a, b), otimes(a, c)), "distributivity");
        expect(oplus(a, a) == a, "union idempotency");
        expect(oplus(a, zero) == a, "empty neutral for union");
        expect(otimes(a, zero) == zero, "empty absorbs fusion");
        expect(otimes(a, unit) == a, "lower orthant is the fusion unit");
        ++report.triples_checked;
    }
    return report;
}

}  // namespace actsets
