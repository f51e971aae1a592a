#include "chromatica/json_io.hpp"

#include <stdexcept>

namespace chromatica {

Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts())
        arr.push_back(part);
    return arr;
}

Json to_json(const TPoly& p) {
    Json arr = Json::array();
    for (const auto& s : p.coeff_strings())
        arr.push_back(s);
    return arr;
}

Json to_json(const SymFunc& f) {
    Json j;
    j["basis"] = std::string(1, basis_letter(f.basis()));
    j["degree"] = f.degree();
    Json terms = Json::array();
    for (const auto& [lam, c] : f.terms()) {
        Json term;
        term["partition"] = to_json(lam);
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const Graph& g) {
    Json j;
    j["n"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const IntervalSeq& s) {
    Json arr = Json::array();
    for (int v : s.values())
        arr.push_back(v);
    return arr;
}

Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (long long c : p.coeffs)
        arr.push_back(c);
    return arr;
}

Json to_json(const PTableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows)
        rows.push_back(row);
    Json j;
    j["shape"] = to_json(t.shape);
    j["rows"] = std::move(rows);
    j["weight"] = inv_weight(t);
    return j;
}

Json to_json(const PositivityReport& r) {
    Json j;
    j["verdict"] = r.verdict();
    Json negatives = Json::array();
    for (const auto& [lam, c] : r.negative_terms) {
        Json item;
        item["partition"] = to_json(lam);
        item["coeff"] = to_json(c);
        negatives.push_back(std::move(item));
    }
    j["negative_terms"] = std::move(negatives);
    j["e_expansion"] = to_json(r.e_form);
    return j;
}

Json to_json(const InjectionReport& r) {
    Json j;
    j["map"] = r.map_name;
    j["sequence"] = to_json(r.seq);
    j["expected_shift"] = r.expected_shift;
    j["source_count"] = r.source_count;
    j["total"] = r.total;
    j["targets_valid"] = r.targets_valid;
    j["injective"] = r.injective;
    j["branch_disjoint"] = r.branch_disjoint;
    j["weight_ok"] = r.weight_ok;
    j["counting_ok"] = r.counting_ok;
    j["all_ok"] = r.all_ok();
    Json weight_violations = Json::array();
    for (const auto& v : r.weight_violations) {
        Json item;
        item["source"] = v.source;
        item["image"] = v.image;
        item["source_weight"] = v.source_weight;
        item["image_weight"] = v.image_weight;
        weight_violations.push_back(std::move(item));
    }
    j["weight_violations"] = std::move(weight_violations);
    j["validity_violations"] = r.validity_violations;
    j["collisions"] = r.collision_pairs;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j;
}

Json to_json(const UniquenessReport& r) {
    Json j;
    j["graphs"] = r.graph_count;
    j["fingerprint_groups"] = r.fingerprint_groups;
    j["distinct"] = r.distinct();
    Json collisions = Json::array();
    for (const auto& c : r.collisions) {
        Json item;
        item["first"] = c.first;
        item["second"] = c.second;
        item["isomorphic_duplicate"] = c.isomorphic_duplicate;
        item["equal_csf"] = c.equal_csf;
        collisions.push_back(std::move(item));
    }
    j["collisions"] = std::move(collisions);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs \"n\" and \"edges\"");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, std::move(edges));
}

} // namespace chromatica
