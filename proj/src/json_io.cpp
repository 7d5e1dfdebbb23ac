#include "sheafrig/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>

namespace sheafrig {

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw PreconditionError("expected a rational ('p/q' string or integer)");
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const Json& j, int expected_cols) {
    require(j.is_array(), "expected a matrix (array of rows)");
    int rows = static_cast<int>(j.size());
    int cols = expected_cols;
    if (rows > 0) {
        require(j[0].is_array(), "expected a matrix row");
        cols = static_cast<int>(j[0].size());
    }
    require(cols >= 0, "cannot infer matrix width");
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        require(static_cast<int>(j[i].size()) == cols, "ragged matrix");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rat_from_json(j[i][c]);
    }
    return m;
}

namespace {

// Vertex labels are arbitrary integers in files; internally they are dense
// indices in input order.
struct LabelMap {
    std::vector<long long> labels;
    std::map<long long, int> index;

    static LabelMap from_json(const Json& j) {
        LabelMap m;
        require(j.is_array(), "expected a vertex list");
        for (const auto& v : j) {
            require(v.is_number_integer(), "vertex labels must be integers");
            long long lab = v.get<long long>();
            require(m.index.emplace(lab, static_cast<int>(m.labels.size())).second, "duplicate vertex label");
            m.labels.push_back(lab);
        }
        return m;
    }

    int at(const Json& v) const {
        require(v.is_number_integer(), "vertex labels must be integers");
        auto it = index.find(v.get<long long>());
        require(it != index.end(), "unknown vertex label");
        return it->second;
    }
};

Json identity_labels(int n) {
    Json a = Json::array();
    for (int v = 0; v < n; ++v) a.push_back(v);
    return a;
}

} // namespace

Json graph_to_json(const Multigraph& g) {
    Json j;
    j["vertices"] = identity_labels(g.num_vertices());
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
    j["edges"] = std::move(edges);
    return j;
}

Multigraph graph_from_json(const Json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("edges"), "graph needs vertices and edges");
    LabelMap labels = LabelMap::from_json(j["vertices"]);
    Multigraph g(static_cast<int>(labels.labels.size()));
    require(j["edges"].is_array(), "edges must be an array");
    for (const auto& e : j["edges"]) {
        require(e.is_array() && e.size() == 2, "each edge is a pair");
        g.add_edge(labels.at(e[0]), labels.at(e[1]));
    }
    return g;
}

Json hypergraph_to_json(const Hypergraph& g) {
    Json j;
    j["vertices"] = identity_labels(g.num_vertices());
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back(e);
    j["hyperedges"] = std::move(edges);
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("hyperedges"),
            "hypergraph needs vertices and hyperedges");
    LabelMap labels = LabelMap::from_json(j["vertices"]);
    Hypergraph g(static_cast<int>(labels.labels.size()));
    for (const auto& e : j["hyperedges"]) {
        require(e.is_array(), "each hyperedge is an array");
        std::vector<int> verts;
        for (const auto& v : e) verts.push_back(labels.at(v));
        g.add_edge(std::move(verts));
    }
    return g;
}

Json motion_spec_to_json(const MotionSheafSpec& spec) {
    Json j;
    j["graph"] = hypergraph_to_json(spec.base);
    j["n"] = spec.ambient_dim;
    Json subs = Json::array();
    for (const auto& s : spec.vertex_subspaces) subs.push_back(matrix_to_json(s.basis()));
    j["subspaces"] = std::move(subs);
    return j;
}

MotionSheafSpec motion_spec_from_json(const Json& j) {
    require(j.is_object() && j.contains("graph") && j.contains("n") && j.contains("subspaces"),
            "motion spec needs graph, n and subspaces");
    MotionSheafSpec spec;
    if (j["graph"].contains("hyperedges"))
        spec.base = hypergraph_from_json(j["graph"]);
    else
        spec.base = graph_from_json(j["graph"]).to_hypergraph();
    spec.ambient_dim = j["n"].get<int>();
    for (const auto& b : j["subspaces"])
        spec.vertex_subspaces.emplace_back(spec.ambient_dim, matrix_from_json(b, spec.ambient_dim));
    spec.validate();
    return spec;
}

Json associated_spec_to_json(const AssociatedSheafSpec& spec) {
    Json j;
    j["graph"] = graph_to_json(spec.base);
    j["n"] = spec.ambient_dim;
    Json subs = Json::array();
    for (const auto& s : spec.vertex_subspaces) subs.push_back(matrix_to_json(s.basis()));
    j["subspaces"] = std::move(subs);
    Json forms = Json::array();
    for (const auto& f : spec.edge_forms) {
        Json row = Json::array();
        for (const auto& c : f.coefficients()) row.push_back(rat_to_json(c));
        forms.push_back(std::move(row));
    }
    j["forms"] = std::move(forms);
    return j;
}

AssociatedSheafSpec associated_spec_from_json(const Json& j) {
    require(j.is_object() && j.contains("graph") && j.contains("n") && j.contains("subspaces") &&
                j.contains("forms"),
            "associated spec needs graph, n, subspaces and forms");
    AssociatedSheafSpec spec;
    spec.base = graph_from_json(j["graph"]);
    spec.ambient_dim = j["n"].get<int>();
    for (const auto& b : j["subspaces"])
        spec.vertex_subspaces.emplace_back(spec.ambient_dim, matrix_from_json(b, spec.ambient_dim));
    for (const auto& f : j["forms"]) {
        std::vector<Rat> c;
        for (const auto& x : f) c.push_back(rat_from_json(x));
        spec.edge_forms.emplace_back(spec.ambient_dim, std::move(c));
    }
    spec.validate();
    return spec;
}

Json framework_to_json(const Framework& fw) {
    Json j;
    j["graph"] = graph_to_json(fw.graph);
    j["dim"] = fw.dim;
    Json pos = Json::object();
    for (int v = 0; v < fw.graph.num_vertices(); ++v) {
        Json p = Json::array();
        for (const auto& x : fw.positions[v]) p.push_back(rat_to_json(x));
        pos[std::to_string(v)] = std::move(p);
    }
    j["positions"] = std::move(pos);
    return j;
}

Framework framework_from_json(const Json& j) {
    require(j.is_object() && j.contains("graph") && j.contains("dim") && j.contains("positions"),
            "framework needs graph, dim and positions");
    Framework fw;
    fw.graph = graph_from_json(j["graph"]);
    fw.dim = j["dim"].get<int>();
    fw.positions.assign(fw.graph.num_vertices(), {});
    LabelMap labels = LabelMap::from_json(j["graph"]["vertices"]);
    for (const auto& [key, val] : j["positions"].items()) {
        int v = labels.at(Json(std::stoll(key)));
        std::vector<Rat> p;
        for (const auto& x : val) p.push_back(rat_from_json(x));
        fw.positions[v] = std::move(p);
    }
    fw.validate();
    return fw;
}

Json arrangement_to_json(const Arrangement& arr) {
    Json j;
    j["graph"] = graph_to_json(arr.graph);
    j["dim"] = arr.dim;
    Json spaces = Json::object();
    for (int v = 0; v < arr.graph.num_vertices(); ++v) {
        Json s;
        Json p = Json::array();
        for (const auto& x : arr.spaces[v].point) p.push_back(rat_to_json(x));
        s["point"] = std::move(p);
        s["directions"] = matrix_to_json(arr.spaces[v].directions);
        spaces[std::to_string(v)] = std::move(s);
    }
    j["spaces"] = std::move(spaces);
    return j;
}

Arrangement arrangement_from_json(const Json& j) {
    require(j.is_object() && j.contains("graph") && j.contains("dim") && j.contains("spaces"),
            "arrangement needs graph, dim and spaces");
    Arrangement arr;
    arr.graph = graph_from_json(j["graph"]);
    arr.dim = j["dim"].get<int>();
    arr.spaces.assign(arr.graph.num_vertices(), AffineSubspace{{}, Mat(0, arr.dim)});
    LabelMap labels = LabelMap::from_json(j["graph"]["vertices"]);
    for (const auto& [key, val] : j["spaces"].items()) {
        int v = labels.at(Json(std::stoll(key)));
        AffineSubspace a;
        for (const auto& x : val.at("point")) a.point.push_back(rat_from_json(x));
        a.directions = val.contains("directions") ? matrix_from_json(val["directions"], arr.dim)
                                                  : Mat(0, arr.dim);
        arr.spaces[v] = std::move(a);
    }
    arr.validate();
    return arr;
}

Json sheaf_to_json(const CellularSheaf& f) {
    Json j;
    j["graph"] = graph_to_json(f.base);
    j["vertex_dims"] = f.vertex_dim;
    j["edge_dims"] = f.edge_dim;
    Json maps = Json::array();
    for (size_t e = 0; e < f.restriction.size(); ++e) {
        Json m;
        m["at_u"] = matrix_to_json(f.restriction[e][0]);
        m["at_v"] = matrix_to_json(f.restriction[e][1]);
        m["sign_u"] = f.sign[e][0];
        maps.push_back(std::move(m));
    }
    j["restrictions"] = std::move(maps);
    return j;
}

Json cohomology_to_json(const CohomologyReport& rep) {
    Json j;
    j["h0"] = rep.h0;
    j["h1"] = rep.h1;
    j["rank"] = rep.coboundary_rank;
    return j;
}

Json verdict_to_json(const RigidityVerdict& v) {
    Json j;
    j["h0"] = v.h0;
    j["h1"] = v.h1;
    j["trivial_dim"] = v.trivial_dim;
    j["independent"] = v.independent;
    j["rigid"] = v.rigid;
    j["minimally_rigid"] = v.minimally_rigid;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json sparsity_to_json(const SparsityReport& rep) {
    Json j;
    j["sparse"] = rep.sparse;
    j["tight"] = rep.tight;
    if (rep.violating_set) j["witness"] = *rep.violating_set;
    return j;
}

Json move_to_json(const ExtensionMove& m) {
    Json j;
    j["d"] = m.dim_d;
    j["k"] = m.order_k;
    j["deleted"] = m.deleted_edge_ids;
    j["attach"] = m.attach_vertices;
    if (m.new_vertex >= 0) j["new_vertex"] = m.new_vertex;
    return j;
}

ExtensionMove move_from_json(const Json& j) {
    ExtensionMove m;
    m.dim_d = j.at("d").get<int>();
    m.order_k = j.at("k").get<int>();
    m.deleted_edge_ids = j.at("deleted").get<std::vector<int>>();
    m.attach_vertices = j.at("attach").get<std::vector<int>>();
    if (j.contains("new_vertex")) m.new_vertex = j["new_vertex"].get<int>();
    return m;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw PreconditionError(std::string("malformed JSON: ") + ex.what());
    }
    return j;
}

void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw PreconditionError("cannot open output file: " + tmp);
        out << text;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw PreconditionError("cannot move report into place: " + path);
}

} // namespace sheafrig
