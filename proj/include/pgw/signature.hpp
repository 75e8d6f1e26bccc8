#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgw/errors.hpp"

namespace pgw {

struct Symbol {
    std::string name;
    int arity = 0;
};

// Finite algebraic signature. Symbols are addressed by dense index in
// declaration order; names are unique.
class Signature {
public:
    int add(const std::string& name, int arity) {
        if (arity < 0) throw InputError("negative arity for symbol " + name);
        if (index_.count(name)) throw InputError("duplicate symbol " + name);
        symbols_.push_back({name, arity});
        index_[name] = static_cast<int>(symbols_.size()) - 1;
        return index_[name];
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    const Symbol& symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

    std::optional<int> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int require(const std::string& name) const {
        auto i = find(name);
        if (!i) throw InputError("unknown symbol " + name);
        return *i;
    }

    std::vector<int> constants() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (symbols_[static_cast<std::size_t>(i)].arity == 0) out.push_back(i);
        return out;
    }

    bool operator==(const Signature& o) const {
        if (symbols_.size() != o.symbols_.size()) return false;
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i].name != o.symbols_[i].name || symbols_[i].arity != o.symbols_[i].arity)
                return false;
        return true;
    }

private:
    std::vector<Symbol> symbols_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace pgw
