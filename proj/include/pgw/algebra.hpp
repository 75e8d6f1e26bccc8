#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pgw/identity.hpp"
#include "pgw/signature.hpp"
#include "pgw/term.hpp"

namespace pgw {

// Finite algebra over a shared signature. The universe is 0..size-1 and every
// operation is a total row-major table (first argument most significant), so
// evaluation is plain indexing.
class FiniteAlgebra {
public:
    FiniteAlgebra(std::shared_ptr<const Signature> sig, int size,
                  std::vector<std::vector<int>> tables);

    const Signature& sig() const { return *sig_; }
    std::shared_ptr<const Signature> sig_ptr() const { return sig_; }
    int size() const { return size_; }

    const std::vector<int>& table(int symbol) const { return tables_[static_cast<std::size_t>(symbol)]; }
    const std::vector<std::vector<int>>& tables() const { return tables_; }

    int apply(int symbol, std::span<const int> args) const {
        const auto& t = tables_[static_cast<std::size_t>(symbol)];
        std::size_t idx = 0;
        for (int a : args) idx = idx * static_cast<std::size_t>(size_) + static_cast<std::size_t>(a);
        return t[idx];
    }

    int constant(int symbol) const { return tables_[static_cast<std::size_t>(symbol)][0]; }

    // Flattened table of all operations in symbol order; the canonical key
    // for lexicographic comparisons and isomorphism-class representatives.
    std::vector<int> flat() const;

    bool operator==(const FiniteAlgebra& o) const {
        return size_ == o.size_ && tables_ == o.tables_;
    }

private:
    std::shared_ptr<const Signature> sig_;
    int size_;
    std::vector<std::vector<int>> tables_;
};

int eval_term(const FiniteAlgebra& a, const Term& t, std::span<const int> env);

// First assignment violating the identity (lexicographically least), if any.
std::optional<std::vector<int>> find_identity_violation(const FiniteAlgebra& a, const Identity& id);

inline bool holds_identity(const FiniteAlgebra& a, const Identity& id) {
    return !find_identity_violation(a, id).has_value();
}

bool holds_all(const FiniteAlgebra& a, const std::vector<Identity>& ids);

// Direct product with row-major pair encoding (a,b) -> a*|B|+b. The encoding
// is part of the external contract: reports and the product-formula checks
// quantify over it.
class ProductAlgebra {
public:
    ProductAlgebra(const FiniteAlgebra& a, const FiniteAlgebra& b, int max_size = 4096);

    const FiniteAlgebra& algebra() const { return *alg_; }
    int left_size() const { return la_; }
    int right_size() const { return lb_; }

    int encode(int a, int b) const { return a * lb_ + b; }
    int left_of(int p) const { return p / lb_; }
    int right_of(int p) const { return p % lb_; }

    // The tuple [a-vec, b-vec] of encoded pairs.
    std::vector<int> interleave(std::span<const int> as, std::span<const int> bs) const;

private:
    int la_, lb_;
    std::shared_ptr<FiniteAlgebra> alg_;
};

// Lexicographically least table-preserving bijection A -> B, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Image of A under a relabeling of the universe (perm[i] = new name of i).
FiniteAlgebra relabel(const FiniteAlgebra& a, std::span<const int> perm);

}  // namespace pgw
