#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgw/algebra.hpp"
#include "pgw/presentation.hpp"

namespace pgw {

// Reflexive/antisymmetric/transitive boolean matrix: leq(x, y) means x is
// below y in the order derived from the groupoid term by x*y = x.
class OrderRelation {
public:
    OrderRelation(int size, std::vector<bool> leq) : size_(size), leq_(std::move(leq)) {}

    int size() const { return size_; }
    bool leq(int x, int y) const {
        return leq_[static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) +
                    static_cast<std::size_t>(y)];
    }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    nlohmann::json to_json() const;
    std::string to_dot() const;  // Hasse diagram via transitive reduction

private:
    int size_;
    std::vector<bool> leq_;
};

// Which partial-order axiom a candidate relation violates, with a witness.
struct OrderFailure {
    enum Axiom { Reflexivity, Antisymmetry, Transitivity } axiom;
    std::vector<int> witness;  // 1, 2 or 3 elements

    std::string describe() const;
};

using OrderResult = std::variant<OrderRelation, OrderFailure>;

OrderResult related_order(const FiniteAlgebra& a, const Term& groupoid);
inline OrderResult related_order(const FiniteAlgebra& a, const VarietyPresentation& p) {
    return related_order(a, p.groupoid);
}

bool is_po_groupoid(const FiniteAlgebra& a, const Term& groupoid);

bool is_connected(const OrderRelation& ord);

// Odd-length interior chain x >= m_1 <= m_2 >= ... <= y.
struct Zigzag {
    int x, y;
    std::vector<int> interior;

    int n() const { return (static_cast<int>(interior.size()) + 1) / 2; }
    bool replay(const OrderRelation& ord) const;
};

// Shortest zigzag between x and y, interior ties broken lexicographically;
// absent when x and y lie in different components.
std::optional<Zigzag> zigzag_between(const OrderRelation& ord, int x, int y);

}  // namespace pgw
