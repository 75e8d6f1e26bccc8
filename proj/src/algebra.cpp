#include "pgw/algebra.hpp"

#include <algorithm>

namespace pgw {

namespace {

std::size_t table_len(int size, int arity) {
    std::size_t len = 1;
    for (int i = 0; i < arity; ++i) len *= static_cast<std::size_t>(size);
    return len;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::shared_ptr<const Signature> sig, int size,
                             std::vector<std::vector<int>> tables)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)) {
    if (size_ < 1) throw InputError("algebra universe must be nonempty");
    if (static_cast<int>(tables_.size()) != sig_->size())
        throw InputError("expected one table per symbol");
    for (int s = 0; s < sig_->size(); ++s) {
        const auto& t = tables_[static_cast<std::size_t>(s)];
        if (t.size() != table_len(size_, sig_->symbol(s).arity))
            throw InputError("table for " + sig_->symbol(s).name + " has wrong length");
        for (int v : t)
            if (v < 0 || v >= size_)
                throw InputError("table entry out of universe for " + sig_->symbol(s).name);
    }
}

std::vector<int> FiniteAlgebra::flat() const {
    std::vector<int> out;
    for (const auto& t : tables_) out.insert(out.end(), t.begin(), t.end());
    return out;
}

int eval_term(const FiniteAlgebra& a, const Term& t, std::span<const int> env) {
    if (t.is_var()) {
        int i = t.var_index();
        if (i >= static_cast<int>(env.size())) throw InputError("unbound variable in term evaluation");
        return env[static_cast<std::size_t>(i)];
    }
    std::size_t idx = 0;
    for (const auto& arg : t.args())
        idx = idx * static_cast<std::size_t>(a.size()) +
              static_cast<std::size_t>(eval_term(a, arg, env));
    return a.table(t.symbol())[idx];
}

std::optional<std::vector<int>> find_identity_violation(const FiniteAlgebra& a, const Identity& id) {
    int nv = id.var_count();
    std::vector<int> env(static_cast<std::size_t>(nv), 0);
    while (true) {
        if (eval_term(a, id.lhs, env) != eval_term(a, id.rhs, env)) return env;
        int pos = nv - 1;
        while (pos >= 0) {
            if (++env[static_cast<std::size_t>(pos)] < a.size()) break;
            env[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) return std::nullopt;
    }
}

bool holds_all(const FiniteAlgebra& a, const std::vector<Identity>& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](const Identity& id) { return holds_identity(a, id); });
}

ProductAlgebra::ProductAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b, int max_size) {
    if (!(a.sig() == b.sig())) throw InputError("direct product: signature mismatch");
    la_ = a.size();
    lb_ = b.size();
    long long n = static_cast<long long>(la_) * lb_;
    if (n > max_size)
        throw InputError("direct product size " + std::to_string(n) + " exceeds limit " +
                         std::to_string(max_size));
    int size = static_cast<int>(n);
    std::vector<std::vector<int>> tables;
    for (int s = 0; s < a.sig().size(); ++s) {
        int k = a.sig().symbol(s).arity;
        std::vector<int> table(table_len(size, k));
        std::vector<int> args(static_cast<std::size_t>(k), 0);
        std::vector<int> la(static_cast<std::size_t>(k)), rb(static_cast<std::size_t>(k));
        std::size_t idx = 0;
        while (true) {
            for (int i = 0; i < k; ++i) {
                la[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(i)] / lb_;
                rb[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(i)] % lb_;
            }
            table[idx] = a.apply(s, la) * lb_ + b.apply(s, rb);
            ++idx;
            int pos = k - 1;
            while (pos >= 0) {
                if (++args[static_cast<std::size_t>(pos)] < size) break;
                args[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        tables.push_back(std::move(table));
    }
    alg_ = std::make_shared<FiniteAlgebra>(a.sig_ptr(), size, std::move(tables));
}

std::vector<int> ProductAlgebra::interleave(std::span<const int> as, std::span<const int> bs) const {
    if (as.size() != bs.size()) throw InputError("interleave: tuple lengths differ");
    std::vector<int> out;
    out.reserve(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) out.push_back(encode(as[i], bs[i]));
    return out;
}

namespace {

// Backtracking over images of 0..n-1 in ascending order; the first complete
// bijection found is lexicographically least.
bool extend_iso(const FiniteAlgebra& a, const FiniteAlgebra& b, std::vector<int>& map,
                std::vector<bool>& used, int next) {
    int n = a.size();
    if (next == n) return true;
    for (int img = 0; img < n; ++img) {
        if (used[static_cast<std::size_t>(img)]) continue;
        map[static_cast<std::size_t>(next)] = img;
        used[static_cast<std::size_t>(img)] = true;
        bool ok = true;
        for (int s = 0; ok && s < a.sig().size(); ++s) {
            int k = a.sig().symbol(s).arity;
            if (k == 0) {
                // Constants must match as soon as their source is mapped.
                if (a.constant(s) <= next)
                    ok = map[static_cast<std::size_t>(a.constant(s))] == b.constant(s);
                continue;
            }
            // Check every cell all of whose coordinates (and value) are mapped.
            std::vector<int> args(static_cast<std::size_t>(k), 0);
            while (ok) {
                bool all_mapped = true;
                for (int v : args)
                    if (v > next) all_mapped = false;
                if (all_mapped) {
                    int va = a.apply(s, args);
                    if (va <= next) {
                        std::vector<int> margs(static_cast<std::size_t>(k));
                        for (int i = 0; i < k; ++i)
                            margs[static_cast<std::size_t>(i)] =
                                map[static_cast<std::size_t>(args[static_cast<std::size_t>(i)])];
                        if (b.apply(s, margs) != map[static_cast<std::size_t>(va)]) ok = false;
                    }
                }
                int pos = k - 1;
                while (pos >= 0) {
                    if (++args[static_cast<std::size_t>(pos)] < n) break;
                    args[static_cast<std::size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
        if (ok && extend_iso(a, b, map, used, next + 1)) return true;
        used[static_cast<std::size_t>(img)] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (!(a.sig() == b.sig()) || a.size() != b.size()) return std::nullopt;
    std::vector<int> map(static_cast<std::size_t>(a.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.size()), false);
    if (extend_iso(a, b, map, used, 0)) return map;
    return std::nullopt;
}

FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const int> perm) {
    int n = a.size();
    std::vector<std::vector<int>> tables;
    for (int s = 0; s < a.sig().size(); ++s) {
        int k = a.sig().symbol(s).arity;
        std::vector<int> table(table_len(n, k));
        std::vector<int> args(static_cast<std::size_t>(k), 0);
        while (true) {
            std::size_t src = 0, dst = 0;
            for (int v : args) src = src * static_cast<std::size_t>(n) + static_cast<std::size_t>(v);
            for (int v : args)
                dst = dst * static_cast<std::size_t>(n) + static_cast<std::size_t>(perm[static_cast<std::size_t>(v)]);
            table[dst] = perm[static_cast<std::size_t>(a.table(s)[src])];
            int pos = k - 1;
            while (pos >= 0) {
                if (++args[static_cast<std::size_t>(pos)] < n) break;
                args[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
        tables.push_back(std::move(table));
    }
    return FiniteAlgebra(a.sig_ptr(), n, std::move(tables));
}

}  // namespace pgw
