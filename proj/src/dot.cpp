#include "triflow/dot.hpp"

#include <set>
#include <sstream>

namespace triflow {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string dot_graph(const Multigraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& v : g.vertices()) os << "  " << quote(v) << ";\n";
    for (const Edge& e : g.edges())
        os << "  " << quote(e.u) << " -- " << quote(e.v) << " [label=" << quote(e.id) << "];\n";
    os << "}\n";
    return os.str();
}

std::string dot_orientation(const Orientation& d) {
    std::ostringstream os;
    os << "digraph D {\n";
    std::set<std::string> verts;
    for (const auto& [id, th] : d.entries()) {
        verts.insert(th.first);
        verts.insert(th.second);
    }
    for (const auto& v : verts) os << "  " << quote(v) << ";\n";
    for (const auto& [id, th] : d.entries())
        os << "  " << quote(th.first) << " -> " << quote(th.second) << " [label=" << quote(id)
           << "];\n";
    os << "}\n";
    return os.str();
}

std::string dot_flow(const FlowAssignment& f) {
    std::ostringstream os;
    os << "digraph F {\n";
    std::set<std::string> verts;
    for (const auto& [id, th] : f.orientation.entries()) {
        verts.insert(th.first);
        verts.insert(th.second);
    }
    for (const auto& v : verts) os << "  " << quote(v) << ";\n";
    for (const auto& [id, th] : f.orientation.entries())
        os << "  " << quote(th.first) << " -> " << quote(th.second) << " [label="
           << quote(id + "=" + std::to_string(f.value.at(id))) << "];\n";
    os << "}\n";
    return os.str();
}

}  // namespace triflow
