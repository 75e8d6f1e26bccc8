#include "pgw/order.hpp"

#include <sstream>

namespace pgw {

nlohmann::json OrderRelation::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int x = 0; x < size_; ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (int y = 0; y < size_; ++y) row.push_back(leq(x, y));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"size", size_}, {"leq", std::move(rows)}};
}

std::string OrderRelation::to_dot() const {
    // Cover edges: x < y with nothing strictly between.
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (int x = 0; x < size_; ++x) os << "  " << x << ";\n";
    for (int x = 0; x < size_; ++x) {
        for (int y = 0; y < size_; ++y) {
            if (x == y || !leq(x, y)) continue;
            bool covered = true;
            for (int m = 0; m < size_ && covered; ++m)
                if (m != x && m != y && leq(x, m) && leq(m, y)) covered = false;
            if (covered) os << "  " << x << " -> " << y << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string OrderFailure::describe() const {
    std::ostringstream os;
    switch (axiom) {
        case Reflexivity: os << "reflexivity fails at "; break;
        case Antisymmetry: os << "antisymmetry fails at "; break;
        case Transitivity: os << "transitivity fails at "; break;
    }
    os << "(";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << ")";
    return os.str();
}

OrderResult related_order(const FiniteAlgebra& a, const Term& groupoid) {
    int n = a.size();
    std::vector<bool> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<int> env(2);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            env[0] = x;
            env[1] = y;
            leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
                (eval_term(a, groupoid, env) == x);
        }
    auto at = [&](int x, int y) {
        return leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)];
    };
    for (int x = 0; x < n; ++x)
        if (!at(x, x)) return OrderFailure{OrderFailure::Reflexivity, {x}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && at(x, y) && at(y, x)) return OrderFailure{OrderFailure::Antisymmetry, {x, y}};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (at(x, y) && at(y, z) && !at(x, z))
                    return OrderFailure{OrderFailure::Transitivity, {x, y, z}};
    return OrderRelation(n, std::move(leq));
}

bool is_po_groupoid(const FiniteAlgebra& a, const Term& groupoid) {
    return std::holds_alternative<OrderRelation>(related_order(a, groupoid));
}

bool is_connected(const OrderRelation& ord) {
    int n = ord.size();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (comp[static_cast<std::size_t>(u)] < 0 && ord.comparable(v, u)) {
                comp[static_cast<std::size_t>(u)] = 0;
                stack.push_back(u);
            }
    }
    for (int v = 0; v < n; ++v)
        if (comp[static_cast<std::size_t>(v)] < 0) return false;
    return true;
}

bool Zigzag::replay(const OrderRelation& ord) const {
    if (interior.empty() || interior.size() % 2 == 0) return false;
    int prev = x;
    for (std::size_t i = 0; i < interior.size(); ++i) {
        int cur = interior[i];
        bool down = (i % 2 == 0);  // steps into odd positions go down
        if (down ? !ord.leq(cur, prev) : !ord.leq(prev, cur)) return false;
        prev = cur;
    }
    return ord.leq(prev, y);
}

std::optional<Zigzag> zigzag_between(const OrderRelation& ord, int x, int y) {
    int size = ord.size();
    // Different components: no zigzag, and the length-bounded search below
    // would be wasted work.
    {
        std::vector<bool> reach(static_cast<std::size_t>(size), false);
        std::vector<int> stack{x};
        reach[static_cast<std::size_t>(x)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < size; ++u)
                if (!reach[static_cast<std::size_t>(u)] && ord.comparable(v, u)) {
                    reach[static_cast<std::size_t>(u)] = true;
                    stack.push_back(u);
                }
        }
        if (!reach[static_cast<std::size_t>(y)]) return std::nullopt;
    }
    // Lexicographic search per interior length; the bound follows from
    // padding a shortest comparability path.
    for (int len = 1; len <= 2 * size + 1; len += 2) {
        std::vector<int> interior(static_cast<std::size_t>(len), 0);
        int pos = 0;
        while (pos >= 0) {
            if (interior[static_cast<std::size_t>(pos)] >= size) {
                interior[static_cast<std::size_t>(pos)] = 0;
                --pos;
                if (pos >= 0) ++interior[static_cast<std::size_t>(pos)];
                continue;
            }
            int prev = pos == 0 ? x : interior[static_cast<std::size_t>(pos - 1)];
            int cur = interior[static_cast<std::size_t>(pos)];
            bool down = (pos % 2 == 0);
            bool ok = down ? ord.leq(cur, prev) : ord.leq(prev, cur);
            if (ok && pos == len - 1) ok = ord.leq(cur, y);
            if (!ok) {
                ++interior[static_cast<std::size_t>(pos)];
                continue;
            }
            if (pos == len - 1) return Zigzag{x, y, interior};
            ++pos;
        }
    }
    return std::nullopt;
}

}  // namespace pgw
