#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgw/identity.hpp"
#include "pgw/signature.hpp"
#include "pgw/term.hpp"

namespace pgw {

// Term data witnessing connection and semidegeneracy. Connection terms are
// binary (variables 0=x, 1=y); chain terms are (2+l)-ary (2=z1, ...); zero and
// one are closed term tuples of length l. Either half may be absent.
struct WitnessSet {
    // connection: 2n-1 terms, odd count
    std::vector<Term> m_terms;
    // semidegeneracy: k odd chain terms over 2+l variables
    std::vector<Term> zero;
    std::vector<Term> one;
    std::vector<Term> u_terms;

    bool has_connection() const { return !m_terms.empty(); }
    bool has_semidegeneracy() const { return !u_terms.empty() && !zero.empty() && !one.empty(); }
    int n() const { return (static_cast<int>(m_terms.size()) + 1) / 2; }
    int k() const { return static_cast<int>(u_terms.size()); }
    int l() const { return static_cast<int>(zero.size()); }
};

struct VarietyPresentation {
    std::shared_ptr<const Signature> signature;
    std::vector<Identity> identities;
    Term groupoid = Term::var(0);      // binary term over variables 0=x, 1=y
    std::string preset_name;           // empty unless loaded from a bundled preset
    std::optional<WitnessSet> witness;

    const Signature& sig() const { return *signature; }

    // t1 * t2 desugared through the designated groupoid term.
    Term apply_groupoid(const Term& t1, const Term& t2) const {
        std::vector<Term> subs{t1, t2};
        return subst_term(groupoid, subs);
    }
};

void validate_presentation(const VarietyPresentation& p);

// The connection-lemma identity set for witness (n, m_1..m_{2n-1}): each odd
// m_i sits below both of its zigzag neighbours, with m_0 = x and m_{2n} = y.
std::vector<Identity> connection_identities(const VarietyPresentation& p,
                                            const std::vector<Term>& m_terms);

// The four chain-identity groups for (0-vec, 1-vec, U_1..U_k), with the closed
// zero/one tuples substituted for the chain variables.
std::vector<Identity> semidegeneracy_identities(const VarietyPresentation& p,
                                                const std::vector<Term>& zero,
                                                const std::vector<Term>& one,
                                                const std::vector<Term>& u_terms);

// U_i with the chain variables bound to the given closed l-tuple; the result
// is a binary term in x, y.
Term u_with_tuple(const Term& u, const std::vector<Term>& tuple);

}  // namespace pgw
