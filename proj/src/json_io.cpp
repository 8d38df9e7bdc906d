#include "triflow/json_io.hpp"

namespace triflow {

using nlohmann::json;

json graph_to_json(const Multigraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
    j["edges"] = edges;
    return j;
}

Multigraph graph_from_json(const json& j) {
    Multigraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("graph json: edge entries are [id, u, v]");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), e[2].get<std::string>());
    }
    return g;
}

json orientation_to_json(const Orientation& d) {
    json j = json::object();
    for (const auto& [id, th] : d.entries()) j[id] = {th.first, th.second};
    return j;
}

Orientation orientation_from_json(const json& j) {
    Orientation d;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& arr = it.value();
        if (!arr.is_array() || arr.size() != 2)
            throw std::invalid_argument("orientation json: entries are [tail, head]");
        d.set(it.key(), arr[0].get<std::string>(), arr[1].get<std::string>());
    }
    return d;
}

json boundary_to_json(const Z3Boundary& b) {
    json j = json::object();
    for (const auto& [v, r] : b.beta) j[v] = r;
    return j;
}

Z3Boundary boundary_from_json(const json& j) {
    Z3Boundary b;
    for (auto it = j.begin(); it != j.end(); ++it) b.set(it.key(), it.value().get<int>());
    return b;
}

json flow_to_json(const FlowAssignment& f) {
    json j = json::object();
    json edges = json::object();
    for (const auto& [id, th] : f.orientation.entries())
        edges[id] = {th.first, th.second, f.value.at(id)};
    j["k"] = f.k;
    j["edges"] = edges;
    return j;
}

FlowAssignment flow_from_json(const json& j) {
    FlowAssignment f;
    f.k = j.at("k").get<int>();
    const auto& edges = j.at("edges");
    for (auto it = edges.begin(); it != edges.end(); ++it) {
        const auto& arr = it.value();
        if (!arr.is_array() || arr.size() != 3)
            throw std::invalid_argument("flow json: entries are [tail, head, value]");
        f.orientation.set(it.key(), arr[0].get<std::string>(), arr[1].get<std::string>());
        f.value[it.key()] = arr[2].get<int>();
    }
    return f;
}

json tritree_to_json(const TriTreeSeq& t) {
    json j;
    j["base"] = {t.base[0], t.base[1], t.base[2]};
    json at = json::array();
    for (const auto& a : t.attach) at.push_back({a.vertex, a.y, a.z});
    j["attach"] = at;
    j["edge_ids"] = t.edge_ids;
    return j;
}

TriTreeSeq tritree_from_json(const json& j) {
    TriTreeSeq t;
    const auto& b = j.at("base");
    if (!b.is_array() || b.size() != 3)
        throw std::invalid_argument("tritree json: base is [x1, x2, x3]");
    t.base = {b[0].get<std::string>(), b[1].get<std::string>(), b[2].get<std::string>()};
    for (const auto& a : j.at("attach")) {
        if (!a.is_array() || a.size() != 3)
            throw std::invalid_argument("tritree json: attach entries are [v, y, z]");
        t.attach.push_back({a[0].get<std::string>(), a[1].get<std::string>(), a[2].get<std::string>()});
    }
    for (const auto& id : j.at("edge_ids")) t.edge_ids.push_back(id.get<std::string>());
    return t;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["base"] = c.base;
    j["base_vertices"] = c.base_vertices;
    json steps = json::array();
    for (const auto& st : c.steps) {
        json s;
        if (st.kind == CertStep::Kind::BullGrow) {
            s["op"] = "bull_grow";
            s["u"] = st.u;
            s["v"] = st.v;
            s["w"] = st.w;
            s["a"] = st.a;
            s["b"] = st.b;
            s["consume_ab"] = st.consume;
        } else {
            s["op"] = "two_sum_k3";
            s["edge"] = {st.su, st.sv};
            s["apex"] = st.apex;
        }
        steps.push_back(s);
    }
    j["steps"] = steps;
    j["target"] = c.target_fingerprint;
    return j;
}

Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.base = j.at("base").get<std::string>();
    for (const auto& v : j.at("base_vertices")) c.base_vertices.push_back(v.get<std::string>());
    for (const auto& s : j.at("steps")) {
        CertStep st;
        std::string op = s.at("op").get<std::string>();
        if (op == "bull_grow") {
            st.kind = CertStep::Kind::BullGrow;
            st.u = s.at("u").get<std::string>();
            st.v = s.at("v").get<std::string>();
            st.w = s.at("w").get<std::string>();
            st.a = s.at("a").get<std::string>();
            st.b = s.at("b").get<std::string>();
            st.consume = s.at("consume_ab").get<bool>();
        } else if (op == "two_sum_k3") {
            st.kind = CertStep::Kind::TwoSumK3;
            st.su = s.at("edge")[0].get<std::string>();
            st.sv = s.at("edge")[1].get<std::string>();
            st.apex = s.at("apex").get<std::string>();
        } else {
            throw std::invalid_argument("certificate json: unknown op " + op);
        }
        c.steps.push_back(st);
    }
    if (j.contains("target")) c.target_fingerprint = j.at("target").get<std::string>();
    return c;
}

json z3proof_to_json(const Z3Proof& p) {
    json steps = json::array();
    for (const auto& st : p.steps) {
        json s;
        switch (st.kind) {
            case Z3Step::Kind::Contract2Cycle:
                s["op"] = "contract_2cycle";
                s["edges"] = st.edge_ids;
                break;
            case Z3Step::Kind::ContractZ3Subgraph:
                s["op"] = "contract_z3_subgraph";
                s["edges"] = st.edge_ids;
                s["proof"] = st.subproof ? z3proof_to_json(*st.subproof) : json();
                break;
            case Z3Step::Kind::LiftPair:
                s["op"] = "lift_pair";
                s["v"] = st.v;
                s["ea"] = st.ea;
                s["eb"] = st.eb;
                break;
            case Z3Step::Kind::LiftPath:
                s["op"] = "lift_path";
                s["edges"] = st.edge_ids;
                break;
            case Z3Step::Kind::TreePlus:
                s["op"] = "tree_plus";
                s["tritree"] = tritree_to_json(st.tritree);
                s["leaf"] = st.leaf;
                s["e1"] = st.ea;
                s["e2"] = st.eb;
                break;
            case Z3Step::Kind::Base2K2:
                s["op"] = "base_2k2";
                break;
            case Z3Step::Kind::BaseK1:
                s["op"] = "base_k1";
                break;
        }
        steps.push_back(s);
    }
    json j;
    j["steps"] = steps;
    return j;
}

Z3Proof z3proof_from_json(const json& j) {
    Z3Proof p;
    for (const auto& s : j.at("steps")) {
        Z3Step st;
        std::string op = s.at("op").get<std::string>();
        if (op == "contract_2cycle") {
            st.kind = Z3Step::Kind::Contract2Cycle;
            for (const auto& e : s.at("edges")) st.edge_ids.push_back(e.get<std::string>());
        } else if (op == "contract_z3_subgraph") {
            st.kind = Z3Step::Kind::ContractZ3Subgraph;
            for (const auto& e : s.at("edges")) st.edge_ids.push_back(e.get<std::string>());
            st.subproof = std::make_shared<Z3Proof>(z3proof_from_json(s.at("proof")));
        } else if (op == "lift_pair") {
            st.kind = Z3Step::Kind::LiftPair;
            st.v = s.at("v").get<std::string>();
            st.ea = s.at("ea").get<std::string>();
            st.eb = s.at("eb").get<std::string>();
        } else if (op == "lift_path") {
            st.kind = Z3Step::Kind::LiftPath;
            for (const auto& e : s.at("edges")) st.edge_ids.push_back(e.get<std::string>());
        } else if (op == "tree_plus") {
            st.kind = Z3Step::Kind::TreePlus;
            st.tritree = tritree_from_json(s.at("tritree"));
            st.leaf = s.at("leaf").get<std::string>();
            st.ea = s.at("e1").get<std::string>();
            st.eb = s.at("e2").get<std::string>();
        } else if (op == "base_2k2") {
            st.kind = Z3Step::Kind::Base2K2;
        } else if (op == "base_k1") {
            st.kind = Z3Step::Kind::BaseK1;
        } else {
            throw std::invalid_argument("z3 proof json: unknown op " + op);
        }
        p.steps.push_back(st);
    }
    return p;
}

json partition_to_json(const SpanningPartition& p) {
    json j;
    j["e1"] = p.e1;
    j["e2"] = p.e2;
    j["z3_proof"] = z3proof_to_json(p.z3_proof);
    return j;
}

SpanningPartition partition_from_json(const json& j) {
    SpanningPartition p;
    for (const auto& e : j.at("e1")) p.e1.push_back(e.get<std::string>());
    for (const auto& e : j.at("e2")) p.e2.push_back(e.get<std::string>());
    p.z3_proof = z3proof_from_json(j.at("z3_proof"));
    return p;
}

}  // namespace triflow
