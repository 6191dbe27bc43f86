#include "classgraph/group_io.hpp"

#include <fstream>

#include "classgraph/errors.hpp"

namespace cg {

using nlohmann::json;

FiniteGroup group_from_json(const json& j) {
    if (!j.is_object()) throw InputError("group file: expected a JSON object");
    std::string label = j.value("label", "unnamed");
    if (j.contains("generators")) {
        if (!j.contains("degree")) throw InputError("group file: missing \"degree\"");
        int degree = j.at("degree").get<int>();
        if (degree <= 0) throw InputError("group file: degree must be positive");
        std::vector<Perm> gens;
        for (const auto& arr : j.at("generators")) {
            std::vector<int> img = arr.get<std::vector<int>>();
            if (static_cast<int>(img.size()) != degree)
                throw InputError("group file: generator image array length != degree");
            gens.emplace_back(std::move(img));  // Perm ctor rejects malformed bijections
        }
        if (gens.empty()) throw InputError("group file: empty generator list");
        return FiniteGroup::from_generators(std::move(label), std::move(gens));
    }
    if (j.contains("table")) {
        int order = j.at("order").get<int>();
        int identity = j.at("identity").get<int>();
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(order) * order);
        const auto& rows = j.at("table");
        if (static_cast<int>(rows.size()) != order) throw InputError("group file: table row count != order");
        for (const auto& row : rows) {
            std::vector<int> r = row.get<std::vector<int>>();
            if (static_cast<int>(r.size()) != order)
                throw InputError("group file: table row length != order");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return FiniteGroup::from_table(std::move(label), std::move(flat), order, identity);
    }
    throw InputError("group file: expected \"generators\" or \"table\"");
}

json group_to_json(const FiniteGroup& g) {
    json j;
    j["label"] = g.label();
    if (g.perm_backed()) {
        j["degree"] = g.degree();
        json gens = json::array();
        for (int i : g.generators()) gens.push_back(g.perm(i).images());
        j["generators"] = std::move(gens);
    } else {
        int n = g.order();
        j["order"] = n;
        j["identity"] = g.identity();
        json table = json::array();
        for (int a = 0; a < n; ++a) {
            json row = json::array();
            for (int b = 0; b < n; ++b) row.push_back(g.mul(a, b));
            table.push_back(std::move(row));
        }
        j["table"] = std::move(table);
    }
    return j;
}

FiniteGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return group_from_json(j);
}

void save_group(const FiniteGroup& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write group file: " + path);
    out << group_to_json(g).dump(2) << '\n';
}

json subgroup_list_json(const FiniteGroup& g,
                        const std::vector<std::pair<std::string, Subgroup>>& named) {
    (void)g;
    json subs = json::object();
    for (const auto& [name, sub] : named) subs[name] = sub.elements();
    json j;
    j["subgroups"] = std::move(subs);
    return j;
}

}  // namespace cg
