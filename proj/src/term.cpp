#include "pgw/term.hpp"

#include <sstream>

namespace pgw {

std::string print_term(const Signature& sig, const Term& t,
                       std::span<const std::string> var_names,
                       const Term* infix_groupoid) {
    if (t.is_var()) {
        int i = t.var_index();
        if (i < static_cast<int>(var_names.size())) return var_names[static_cast<std::size_t>(i)];
        return "v" + std::to_string(i);
    }
    const Symbol& s = sig.symbol(t.symbol());
    if (s.arity == 0) return s.name;
    // Binary applications of the designated groupoid symbol print infix.
    if (infix_groupoid && !infix_groupoid->is_var() && infix_groupoid->args().size() == 2 &&
        infix_groupoid->args()[0] == Term::var(0) && infix_groupoid->args()[1] == Term::var(1) &&
        t.symbol() == infix_groupoid->symbol() && s.arity == 2) {
        auto wrap = [&](const Term& a) {
            std::string inner = print_term(sig, a, var_names, infix_groupoid);
            bool is_infix = !a.is_var() && a.symbol() == t.symbol() && sig.symbol(a.symbol()).arity == 2;
            return is_infix ? "(" + inner + ")" : inner;
        };
        return wrap(t.args()[0]) + " * " + wrap(t.args()[1]);
    }
    std::ostringstream os;
    os << "(" << s.name;
    for (const auto& a : t.args()) os << " " << print_term(sig, a, var_names, infix_groupoid);
    os << ")";
    return os.str();
}

std::vector<std::string> default_var_names(int count) {
    static const char* base[] = {"x", "y", "z", "u", "v", "w"};
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        if (i < 6)
            names.emplace_back(base[i]);
        else
            names.push_back("v" + std::to_string(i - 5));
    }
    return names;
}

std::vector<Term> enumerate_terms(const Signature& sig, int num_vars, int max_depth) {
    std::vector<Term> all;          // enumeration order
    std::vector<int> depth_of;      // parallel to all
    for (int v = 0; v < num_vars; ++v) {
        all.push_back(Term::var(v));
        depth_of.push_back(0);
    }
    for (int s = 0; s < sig.size(); ++s) {
        if (sig.symbol(s).arity == 0) {
            all.push_back(Term::app(s));
            depth_of.push_back(0);
        }
    }
    std::size_t level_begin = 0;  // first index of the previous depth level
    for (int d = 1; d <= max_depth; ++d) {
        std::size_t level_end = all.size();
        for (int s = 0; s < sig.size(); ++s) {
            int k = sig.symbol(s).arity;
            if (k == 0) continue;
            // Argument index tuples over all terms of depth < d, lexicographic,
            // restricted to tuples whose deepest argument has depth d-1.
            std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
            while (true) {
                bool fresh = false;
                for (auto i : idx)
                    if (i >= level_begin) fresh = true;
                if (fresh) {
                    std::vector<Term> args;
                    args.reserve(static_cast<std::size_t>(k));
                    for (auto i : idx) args.push_back(all[i]);
                    all.push_back(Term::app(s, std::move(args)));
                    depth_of.push_back(d);
                }
                int pos = k - 1;
                while (pos >= 0) {
                    if (++idx[static_cast<std::size_t>(pos)] < level_end) break;
                    idx[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
        level_begin = level_end;
    }
    return all;
}

void check_term_well_formed(const Signature& sig, const Term& t) {
    if (t.is_var()) {
        if (t.var_index() < 0) throw InputError("negative variable index");
        return;
    }
    if (t.symbol() < 0 || t.symbol() >= sig.size()) throw InputError("term uses symbol outside signature");
    const Symbol& s = sig.symbol(t.symbol());
    if (static_cast<int>(t.args().size()) != s.arity)
        throw InputError("arity mismatch for " + s.name + ": expected " + std::to_string(s.arity) +
                         ", got " + std::to_string(t.args().size()));
    for (const auto& a : t.args()) check_term_well_formed(sig, a);
}

}  // namespace pgw
