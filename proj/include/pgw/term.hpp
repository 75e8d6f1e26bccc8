#pragma once

#include <span>
#include <string>
#include <vector>

#include "pgw/signature.hpp"

namespace pgw {

// First-order term. Variables are de Bruijn-style indices into whatever
// variable list the context supplies; symbols are signature indices.
class Term {
public:
    static Term var(int index) {
        Term t;
        t.sym_ = -1;
        t.var_ = index;
        return t;
    }

    static Term app(int symbol, std::vector<Term> args = {}) {
        Term t;
        t.sym_ = symbol;
        t.args_ = std::move(args);
        return t;
    }

    bool is_var() const { return sym_ < 0; }
    int var_index() const { return var_; }
    int symbol() const { return sym_; }
    const std::vector<Term>& args() const { return args_; }

    int depth() const {
        if (is_var() || args_.empty()) return 0;
        int d = 0;
        for (const auto& a : args_) d = std::max(d, a.depth());
        return d + 1;
    }

    int max_var() const {  // -1 when closed
        if (is_var()) return var_;
        int m = -1;
        for (const auto& a : args_) m = std::max(m, a.max_var());
        return m;
    }

    bool closed() const { return max_var() < 0; }

    void collect_vars(std::vector<bool>& seen) const {
        if (is_var()) {
            if (var_ >= static_cast<int>(seen.size())) seen.resize(static_cast<std::size_t>(var_) + 1, false);
            seen[static_cast<std::size_t>(var_)] = true;
            return;
        }
        for (const auto& a : args_) a.collect_vars(seen);
    }

    bool operator==(const Term& o) const {
        if (sym_ != o.sym_) return false;
        if (is_var()) return var_ == o.var_;
        return args_ == o.args_;
    }
    bool operator!=(const Term& o) const { return !(*this == o); }

private:
    int sym_ = -1;
    int var_ = 0;
    std::vector<Term> args_;
};

// Substitute terms for variables: var i becomes subs[i]. Variables past the
// end of subs are kept.
inline Term subst_term(const Term& t, std::span<const Term> subs) {
    if (t.is_var()) {
        if (t.var_index() < static_cast<int>(subs.size())) return subs[static_cast<std::size_t>(t.var_index())];
        return t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(subst_term(a, subs));
    return Term::app(t.symbol(), std::move(args));
}

// Shift every variable index by delta (used to move a term into a wider
// variable context).
inline Term shift_vars(const Term& t, int delta) {
    if (t.is_var()) return Term::var(t.var_index() + delta);
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(shift_vars(a, delta));
    return Term::app(t.symbol(), std::move(args));
}

std::string print_term(const Signature& sig, const Term& t,
                       std::span<const std::string> var_names,
                       const Term* infix_groupoid = nullptr);

// Default surface names for variable indices: x y z u v w then v<k>.
std::vector<std::string> default_var_names(int count);

// All terms over `num_vars` variables up to the given depth, in the canonical
// order: by depth, then symbol order (variables first, then constants), then
// argument tuples lexicographically by enumeration index. The order is a
// stable prefix: raising max_depth appends.
std::vector<Term> enumerate_terms(const Signature& sig, int num_vars, int max_depth);

void check_term_well_formed(const Signature& sig, const Term& t);

}  // namespace pgw
