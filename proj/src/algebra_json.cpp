#include "pgw/algebra_json.hpp"

namespace pgw {

using nlohmann::json;

json algebra_to_json(const FiniteAlgebra& a) {
    json ops = json::object();
    for (int s = 0; s < a.sig().size(); ++s) ops[a.sig().symbol(s).name] = a.table(s);
    return json{{"size", a.size()}, {"ops", std::move(ops)}};
}

FiniteAlgebra algebra_from_json(std::shared_ptr<const Signature> sig, const json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("ops"))
        throw InputError("algebra JSON needs \"size\" and \"ops\"");
    int size = 0;
    try {
        size = j.at("size").get<int>();
    } catch (const json::exception&) {
        throw InputError("algebra JSON: \"size\" must be an integer");
    }
    const json& ops = j.at("ops");
    if (!ops.is_object()) throw InputError("algebra JSON: \"ops\" must be an object");
    std::vector<std::vector<int>> tables(static_cast<std::size_t>(sig->size()));
    std::vector<bool> seen(static_cast<std::size_t>(sig->size()), false);
    for (auto it = ops.begin(); it != ops.end(); ++it) {
        auto idx = sig->find(it.key());
        if (!idx) throw InputError("algebra JSON: unknown operation " + it.key());
        if (!it.value().is_array()) throw InputError("algebra JSON: table for " + it.key() + " must be an array");
        try {
            tables[static_cast<std::size_t>(*idx)] = it.value().get<std::vector<int>>();
        } catch (const json::exception&) {
            throw InputError("algebra JSON: table for " + it.key() + " must hold integers");
        }
        seen[static_cast<std::size_t>(*idx)] = true;
    }
    for (int s = 0; s < sig->size(); ++s)
        if (!seen[static_cast<std::size_t>(s)])
            throw InputError("algebra JSON: missing table for " + sig->symbol(s).name);
    return FiniteAlgebra(std::move(sig), size, std::move(tables));
}

}  // namespace pgw
