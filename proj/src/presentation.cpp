#include "pgw/presentation.hpp"

namespace pgw {

void validate_presentation(const VarietyPresentation& p) {
    const Signature& sig = p.sig();
    check_term_well_formed(sig, p.groupoid);
    if (p.groupoid.max_var() > 1) throw InputError("designated groupoid term must be binary");
    for (const auto& id : p.identities) {
        check_term_well_formed(sig, id.lhs);
        check_term_well_formed(sig, id.rhs);
    }
    if (p.witness) {
        const WitnessSet& w = *p.witness;
        if (w.has_connection() && w.m_terms.size() % 2 == 0)
            throw InputError("connection witness needs an odd number of terms");
        for (const auto& t : w.m_terms) {
            check_term_well_formed(sig, t);
            if (t.max_var() > 1) throw InputError("connection terms are binary terms in x, y");
        }
        if (!w.u_terms.empty() || !w.zero.empty() || !w.one.empty()) {
            if (w.zero.size() != w.one.size())
                throw InputError("witness tuples 0 and 1 must have equal length");
            if (w.u_terms.empty() || w.zero.empty())
                throw InputError("semidegeneracy witness needs zero/one tuples and U terms");
            if (w.u_terms.size() % 2 == 0) throw InputError("chain length k must be odd");
            for (const auto& t : w.zero) {
                check_term_well_formed(sig, t);
                if (!t.closed()) throw InputError("witness tuple 0 must be closed terms");
            }
            for (const auto& t : w.one) {
                check_term_well_formed(sig, t);
                if (!t.closed()) throw InputError("witness tuple 1 must be closed terms");
            }
            for (const auto& t : w.u_terms) {
                check_term_well_formed(sig, t);
                if (t.max_var() >= 2 + w.l())
                    throw InputError("chain term uses a variable beyond x, y, z1..zl");
            }
        }
    }
}

std::vector<Identity> connection_identities(const VarietyPresentation& p,
                                            const std::vector<Term>& m_terms) {
    const Term x = Term::var(0), y = Term::var(1);
    int count = static_cast<int>(m_terms.size());
    auto neighbour = [&](int i) {  // 1-based chain position; 0 is x, count+1 is y
        if (i <= 0) return x;
        if (i > count) return y;
        return m_terms[static_cast<std::size_t>(i - 1)];
    };
    std::vector<Identity> ids;
    for (int i = 1; i <= count; i += 2) {
        const Term& mi = m_terms[static_cast<std::size_t>(i - 1)];
        ids.push_back(make_identity(p.apply_groupoid(mi, neighbour(i - 1)), mi, {"x", "y"}));
        ids.push_back(make_identity(p.apply_groupoid(mi, neighbour(i + 1)), mi, {"x", "y"}));
    }
    return ids;
}

Term u_with_tuple(const Term& u, const std::vector<Term>& tuple) {
    std::vector<Term> subs{Term::var(0), Term::var(1)};
    subs.insert(subs.end(), tuple.begin(), tuple.end());
    return subst_term(u, subs);
}

std::vector<Identity> semidegeneracy_identities(const VarietyPresentation& p,
                                                const std::vector<Term>& zero,
                                                const std::vector<Term>& one,
                                                const std::vector<Term>& u_terms) {
    (void)p;
    const Term x = Term::var(0), y = Term::var(1);
    int k = static_cast<int>(u_terms.size());
    auto at_zero = [&](int i) { return u_with_tuple(u_terms[static_cast<std::size_t>(i - 1)], zero); };
    auto at_one = [&](int i) { return u_with_tuple(u_terms[static_cast<std::size_t>(i - 1)], one); };
    std::vector<Identity> ids;
    ids.push_back(make_identity(x, at_zero(1), {"x", "y"}));
    for (int i = 1; i < k; ++i) {
        if (i % 2 == 1)
            ids.push_back(make_identity(at_one(i), at_one(i + 1), {"x", "y"}));
        else
            ids.push_back(make_identity(at_zero(i), at_zero(i + 1), {"x", "y"}));
    }
    ids.push_back(make_identity(at_one(k), y, {"x", "y"}));
    return ids;
}

}  // namespace pgw
