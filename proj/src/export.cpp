#include "qbg/export.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace qbg {

using Json = nlohmann::ordered_json;

namespace {

std::string root_label(const RootSystem& rs, int a) { return format_affine_root(rs, {a, 0}); }

std::vector<int> nodes_of(NodeSet mask, int rank) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

Json header(const RootSystem& rs, const char* kind) {
    Json j;
    j["schema"] = kJsonSchema;
    j["kind"] = kind;
    j["type"] = std::string(1, rs.type());
    j["rank"] = rs.rank();
    return j;
}

Json affine_root_json(const RootSystem& rs, const AffineRoot& b) {
    return Json{{"root", rs.root(b.alpha)}, {"delta", b.k}, {"text", format_affine_root(rs, b)}};
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string graph_to_dot(const QbgGraph& g) {
    const WeylGroup& W = g.group();
    const RootSystem& rs = W.roots();
    std::ostringstream os;
    os << "digraph qbg {\n";
    os << "  // " << rs.name() << " J=" << format_nodes(g.parabolic().mask) << "\n";
    os << "  node [shape=plaintext];\n";
    for (Elem w : g.vertices()) os << "  " << quoted(W.render(w)) << ";\n";
    for (const Edge& e : g.edges()) {
        os << "  " << quoted(W.render(e.src)) << " -> " << quoted(W.render(e.dst)) << " [label="
           << quoted(root_label(rs, e.label));
        if (e.kind == EdgeKind::Quantum) os << ", style=dashed, color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_to_json(const QbgGraph& g) {
    const WeylGroup& W = g.group();
    const RootSystem& rs = W.roots();
    Json j = header(rs, "qbg");
    j["parabolic"] = nodes_of(g.parabolic().mask, rs.rank());
    Json verts = Json::array();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
        Elem w = g.vertices()[i];
        Json v{{"id", i}, {"label", W.render(w)}, {"word", W.reduced_word(w)}, {"length", W.length(w)}};
        if (rs.type() == 'A') v["permutation"] = W.permutation(w);
        verts.push_back(v);
    }
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const Edge& e : g.edges())
        edges.push_back(Json{{"src", g.index(e.src)},
                             {"dst", g.index(e.dst)},
                             {"label", rs.root(e.label)},
                             {"kind", e.kind == EdgeKind::Quantum ? "quantum" : "bruhat"},
                             {"weight", edge_weight(rs, e)}});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::string graph_to_text(const QbgGraph& g) {
    const WeylGroup& W = g.group();
    std::ostringstream os;
    os << W.roots().name() << " J=" << format_nodes(g.parabolic().mask) << ": " << g.num_vertices() << " vertices, "
       << g.num_edges() << " edges, " << g.num_quantum() << " quantum\n";
    for (const Edge& e : g.edges())
        os << W.render(e.src) << " -> " << W.render(e.dst) << " " << root_label(W.roots(), e.label) << " "
           << to_string(e.kind) << "\n";
    return os.str();
}

namespace {

struct SliceView {
    std::vector<LevelZeroWeight> elems;
    std::map<LevelZeroWeight, std::size_t> id;
    std::vector<std::pair<std::size_t, PosetCover>> covers;
};

SliceView view(const LevelZeroSlice& s) {
    SliceView v;
    v.elems = s.elements();
    for (std::size_t i = 0; i < v.elems.size(); ++i) v.id[v.elems[i]] = i;
    for (std::size_t i = 0; i < v.elems.size(); ++i)
        for (const PosetCover& c : s.covers(v.elems[i]))
            if (v.id.count(c.target)) v.covers.push_back({i, c});
    return v;
}

}  // namespace

std::string slice_to_dot(const LevelZeroSlice& s) {
    const LevelZeroContext& ctx = s.context();
    const RootSystem& rs = ctx.group().roots();
    SliceView v = view(s);
    std::ostringstream os;
    os << "digraph level_zero {\n";
    os << "  // " << rs.name() << " lambda=" << format_vec(ctx.lambda()) << " |n|<=" << s.window() << "\n";
    os << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < v.elems.size(); ++i) {
        os << "  m" << i << " [label=" << quoted(ctx.render_affine(v.elems[i]));
        if (v.elems[i].n == 0) os << ", fontcolor=red";
        os << "];\n";
    }
    for (const auto& [i, c] : v.covers) {
        os << "  m" << i << " -> m" << v.id[c.target] << " [label=" << quoted(format_affine_root(rs, c.label));
        if (v.elems[i].n == 0 && c.target.n == 0) os << ", color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string slice_to_json(const LevelZeroSlice& s) {
    const LevelZeroContext& ctx = s.context();
    const WeylGroup& W = ctx.group();
    const RootSystem& rs = W.roots();
    SliceView v = view(s);
    Json j = header(rs, "level_zero_slice");
    j["lambda"] = ctx.lambda();
    j["window"] = s.window();
    j["computed_window"] = s.computed_window();
    j["step"] = ctx.step();
    Json elems = Json::array();
    for (std::size_t i = 0; i < v.elems.size(); ++i) {
        const LevelZeroWeight& mu = v.elems[i];
        elems.push_back(Json{{"id", i},
                             {"w", W.reduced_word(mu.w)},
                             {"n", mu.n},
                             {"classical", ctx.classical(mu)},
                             {"label", ctx.render_affine(mu)}});
    }
    j["elements"] = elems;
    Json covers = Json::array();
    for (const auto& [i, c] : v.covers)
        covers.push_back(Json{{"src", i}, {"dst", v.id[c.target]}, {"label", affine_root_json(rs, c.label)}});
    j["covers"] = covers;
    return j.dump(2) + "\n";
}

std::string slice_to_text(const LevelZeroSlice& s) {
    const LevelZeroContext& ctx = s.context();
    const RootSystem& rs = ctx.group().roots();
    SliceView v = view(s);
    std::ostringstream os;
    os << rs.name() << " lambda=" << format_vec(ctx.lambda()) << " |n|<=" << s.window() << ": " << v.elems.size()
       << " elements, " << v.covers.size() << " covers\n";
    for (const auto& mu : v.elems) os << ctx.render(mu) << "  " << ctx.render_affine(mu) << "\n";
    for (const auto& [i, c] : v.covers)
        os << ctx.render(v.elems[i]) << " < " << ctx.render(c.target) << " " << format_affine_root(rs, c.label) << "\n";
    return os.str();
}

LiftedGraph lift_graph(const AffineWeyl& A, const QbgGraph& g, Elem z, const Vec& mu) {
    LiftedGraph l{&g, z, mu, {}};
    for (const Edge& e : g.edges()) l.covers.push_back(lift_edge(A, g.parabolic(), e, z, mu));
    return l;
}

std::string lift_to_dot(const AffineWeyl& A, const LiftedGraph& l) {
    const RootSystem& rs = A.roots();
    std::ostringstream os;
    os << "digraph lift {\n";
    os << "  // " << rs.name() << " J=" << format_nodes(l.graph->parabolic().mask) << " mu=" << format_vec(l.mu) << "\n";
    os << "  node [shape=plaintext];\n";
    std::vector<std::string> names;
    for (const AffineCover& c : l.covers) {
        std::string x = A.render(c.x), y = A.render(c.y);
        for (const std::string& n : {x, y})
            if (std::find(names.begin(), names.end(), n) == names.end()) {
                names.push_back(n);
                os << "  " << quoted(n) << ";\n";
            }
    }
    const auto edges = l.graph->edges();
    for (std::size_t i = 0; i < l.covers.size(); ++i) {
        const AffineCover& c = l.covers[i];
        os << "  " << quoted(A.render(c.x)) << " -> " << quoted(A.render(c.y))
           << " [label=" << quoted(format_affine_root(rs, negate(rs, c.root)));
        if (edges[i].kind == EdgeKind::Quantum) os << ", style=dashed, color=red";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string lift_to_json(const AffineWeyl& A, const LiftedGraph& l) {
    const RootSystem& rs = A.roots();
    const WeylGroup& W = A.finite();
    const QbgGraph& g = *l.graph;
    Json j = header(rs, "lift");
    j["parabolic"] = nodes_of(g.parabolic().mask, rs.rank());
    j["z"] = W.reduced_word(l.z);
    j["mu"] = l.mu;
    auto elem = [&](const AffineElem& x) {
        return Json{{"w", W.reduced_word(x.w)}, {"mu", x.mu}, {"text", A.render(x)}, {"length", A.length(x)}};
    };
    const auto edges = g.edges();
    Json covers = Json::array();
    for (std::size_t i = 0; i < l.covers.size(); ++i) {
        const Edge& e = edges[i];
        const AffineCover& c = l.covers[i];
        covers.push_back(Json{{"edge",
                               {{"src", W.render(e.src)},
                                {"dst", W.render(e.dst)},
                                {"label", rs.root(e.label)},
                                {"kind", e.kind == EdgeKind::Quantum ? "quantum" : "bruhat"}}},
                              {"x", elem(c.x)},
                              {"y", elem(c.y)},
                              {"label", affine_root_json(rs, negate(rs, c.root))}});
    }
    j["covers"] = covers;
    return j.dump(2) + "\n";
}

std::string lift_to_text(const AffineWeyl& A, const LiftedGraph& l) {
    const RootSystem& rs = A.roots();
    const WeylGroup& W = A.finite();
    std::ostringstream os;
    os << rs.name() << " J=" << format_nodes(l.graph->parabolic().mask) << " z=" << W.render(l.z)
       << " mu=" << format_vec(l.mu) << "\n";
    const auto edges = l.graph->edges();
    for (std::size_t i = 0; i < l.covers.size(); ++i) {
        const Edge& e = edges[i];
        const AffineCover& c = l.covers[i];
        os << W.render(e.src) << " -> " << W.render(e.dst) << " " << root_label(rs, e.label) << " "
           << to_string(e.kind) << ":  " << A.render(c.x) << " > " << A.render(c.y) << "  "
           << format_affine_root(rs, negate(rs, c.root)) << "\n";
    }
    return os.str();
}

}  // namespace qbg
