#pragma once

#include <string>
#include <vector>

#include "pgw/term.hpp"

namespace pgw {

// Equation lhs ~ rhs, implicitly universally quantified over the variables
// occurring in either side.
struct Identity {
    Term lhs;
    Term rhs;
    std::vector<std::string> var_names;  // surface names; may be shorter than var count

    int var_count() const { return std::max(lhs.max_var(), rhs.max_var()) + 1; }

    bool operator==(const Identity& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

inline Identity make_identity(Term lhs, Term rhs, std::vector<std::string> names = {}) {
    Identity id{std::move(lhs), std::move(rhs), std::move(names)};
    if (id.var_names.empty()) id.var_names = default_var_names(id.var_count());
    return id;
}

inline std::string print_identity(const Signature& sig, const Identity& id,
                                  const Term* infix_groupoid = nullptr) {
    return print_term(sig, id.lhs, id.var_names, infix_groupoid) + " = " +
           print_term(sig, id.rhs, id.var_names, infix_groupoid);
}

}  // namespace pgw
