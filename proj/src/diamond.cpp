#include "qbg/diamond.hpp"

#include "qbg/errors.hpp"

namespace qbg {

namespace {

Trichotomy classify(const RootSystem& rs, const Parabolic& J, int root) {
    if (J.in_J[root]) return Trichotomy::Fixed;
    return rs.is_positive(root) ? Trichotomy::Up : Trichotomy::Down;
}

// z with r_theta w = floor(r_theta w) z
Elem theta_twist(const WeylGroup& W, const Parabolic& J, Elem w) {
    Elem rw = W.mul(W.reflection(W.roots().theta()), w);
    return W.mul(W.inverse(W.floor(rw, J)), rw);
}

bool has_edge(const QbgGraph& g, const Edge& e) {
    auto found = g.find_edge(e.src, e.label);
    return found && *found == e;
}

EdgeKind theta_family_kind(EdgeKind gamma_kind, bool pair_nonzero, DiamondFamily& fam) {
    if (gamma_kind == EdgeKind::Bruhat) {
        fam = pair_nonzero ? DiamondFamily::DQ3 : DiamondFamily::DQ31;
        return pair_nonzero ? EdgeKind::Quantum : EdgeKind::Bruhat;
    }
    fam = pair_nonzero ? DiamondFamily::DQ4 : DiamondFamily::DQ41;
    return pair_nonzero ? EdgeKind::Bruhat : EdgeKind::Quantum;
}

}  // namespace

int left_step_root(const WeylGroup& W, Elem w, int node) {
    const RootSystem& rs = W.roots();
    int a = node == kAffineNode ? rs.negate(rs.theta()) : rs.simple(node);
    return W.act(W.inverse(w), a);
}

LeftStep left_multiplication_step(const WeylGroup& W, const Parabolic& J, Elem w, int node) {
    const RootSystem& rs = W.roots();
    if (!W.in_quotient(w, J)) throw ConfigError("left step: " + W.render(w) + " is not a coset representative");
    int r = left_step_root(W, w, node);
    LeftStep s{classify(rs, J, r), w, std::nullopt, W.identity()};
    if (s.kind == Trichotomy::Fixed) return s;
    if (node != kAffineNode) {
        s.target = W.left_simple(w, node);
        if (s.kind == Trichotomy::Up) s.edge = Edge{w, s.target, r, EdgeKind::Bruhat};
        else s.edge = Edge{s.target, w, rs.negate(r), EdgeKind::Bruhat};
        return s;
    }
    s.target = W.floor(W.mul(W.reflection(rs.theta()), w), J);
    if (s.kind == Trichotomy::Up) {
        s.edge = Edge{w, s.target, r, EdgeKind::Quantum};
        return s;
    }
    // w^{-1} theta in Phi+ \ Phi_J+
    int gamma = rs.negate(r);
    s.z = theta_twist(W, J, w);
    s.edge = Edge{s.target, w, W.act(s.z, gamma), EdgeKind::Quantum};
    AffineWeyl A(W);
    Elem zmu = project_translation(A, rs.coroot(gamma), J).z;
    if (W.inverse(zmu) != s.z) throw InvariantViolation("left step: z differs from the inverse of z_mu");
    if (!is_J_adjusted(rs, W.act_coroot(s.z, rs.coroot(gamma)), J))
        throw InvariantViolation("left step: z gamma^vee is not J-adjusted");
    return s;
}

const char* to_string(DiamondFamily f) {
    switch (f) {
        case DiamondFamily::DQ1: return "dq1";
        case DiamondFamily::DQ2: return "dq2";
        case DiamondFamily::DQ3: return "dq3";
        case DiamondFamily::DQ31: return "dq31";
        case DiamondFamily::DQ4: return "dq4";
        case DiamondFamily::DQ41: return "dq41";
    }
    return "?";
}

DiamondFamily relabeled(DiamondFamily f) {
    if (f == DiamondFamily::DQ3) return DiamondFamily::DQ4;
    if (f == DiamondFamily::DQ4) return DiamondFamily::DQ3;
    return f;
}

std::optional<Diamond> match_diamond(const QbgGraph& g, DiamondSide side, Elem w, int node, int gamma) {
    const WeylGroup& W = g.group();
    const RootSystem& rs = W.roots();
    const Parabolic& J = g.parabolic();
    if (!g.contains(w) || !rs.is_positive(gamma) || J.in_J[gamma]) return std::nullopt;
    auto eg = g.find_edge(w, gamma);
    if (!eg) return std::nullopt;
    const Elem u = eg->dst;
    const Elem winv = W.inverse(w);
    const Elem uinv = W.inverse(u);
    Diamond d{DiamondFamily::DQ1, side, node, w, gamma, W.identity(), W.identity(), {}, {}, {}, {}};

    if (node != kAffineNode) {
        const int alpha = rs.simple(node);
        const int a = W.act(winv, alpha);
        const int b = W.act(uinv, alpha);
        d.family = eg->kind == EdgeKind::Bruhat ? DiamondFamily::DQ1 : DiamondFamily::DQ2;
        if (side == DiamondSide::Left) {
            if (classify(rs, J, a) != Trichotomy::Up || gamma == a) return std::nullopt;
            const Elem v = W.left_simple(w, node);
            const Elem top = W.left_simple(u, node);
            d.bottom_left = {w, v, a, EdgeKind::Bruhat};
            d.bottom_right = *eg;
            d.top_left = {v, top, gamma, eg->kind};
            d.top_right = {u, top, b, EdgeKind::Bruhat};
            if (!has_edge(g, d.bottom_left)) return std::nullopt;
        } else {
            if (classify(rs, J, b) != Trichotomy::Down || gamma == a) return std::nullopt;
            const Elem v = W.left_simple(w, node);
            const Elem right = W.left_simple(u, node);
            d.top_left = *eg;
            d.top_right = {right, u, rs.negate(b), EdgeKind::Bruhat};
            d.bottom_left = {v, w, rs.negate(a), EdgeKind::Bruhat};
            d.bottom_right = {v, right, gamma, eg->kind};
            if (!has_edge(g, d.top_right)) return std::nullopt;
        }
        return d;
    }

    const int theta = rs.theta();
    const Elem rtheta = W.reflection(theta);
    const int a = W.act(winv, theta);  // w^{-1} theta
    const int c = W.act(uinv, theta);
    const bool nonzero = rs.pair(rs.coroot(gamma), rs.root(a)) != 0;
    const EdgeKind zkind = theta_family_kind(eg->kind, nonzero, d.family);
    const Elem v = W.floor(W.mul(rtheta, w), J);
    const Elem vu = W.floor(W.mul(rtheta, u), J);
    d.z = theta_twist(W, J, w);
    d.z2 = theta_twist(W, J, u);
    if (side == DiamondSide::Left) {
        if (classify(rs, J, a) != Trichotomy::Down) return std::nullopt;
        if (eg->kind == EdgeKind::Quantum && gamma == rs.negate(a)) return std::nullopt;
        d.bottom_left = {w, v, rs.negate(a), EdgeKind::Quantum};
        d.bottom_right = *eg;
        d.top_left = {v, vu, W.act(d.z, gamma), zkind};
        d.top_right = {u, vu, rs.negate(c), EdgeKind::Quantum};
        if (!has_edge(g, d.bottom_left)) return std::nullopt;
    } else {
        if (classify(rs, J, c) != Trichotomy::Up) return std::nullopt;
        if (eg->kind == EdgeKind::Quantum && gamma == rs.negate(a)) return std::nullopt;
        d.top_left = *eg;
        d.top_right = {vu, u, W.act(d.z2, c), EdgeKind::Quantum};
        d.bottom_left = {v, w, W.act(d.z, a), EdgeKind::Quantum};
        d.bottom_right = {v, vu, W.act(d.z, gamma), zkind};
        if (!has_edge(g, d.top_right)) return std::nullopt;
    }
    return d;
}

Diamond diamond_complete(const QbgGraph& g, DiamondSide side, Elem w, int node, int gamma) {
    auto d = match_diamond(g, side, w, node, gamma);
    if (!d) throw ConfigError("no diamond configuration matches");
    return *d;
}

namespace {

std::vector<Diamond> diamonds_at(const QbgGraph& g, DiamondSide side, Elem w) {
    std::vector<Diamond> out;
    for (const Edge& e : g.out(w))
        for (int node = kAffineNode; node < g.group().rank(); ++node)
            if (auto d = match_diamond(g, side, w, node, e.label)) out.push_back(*d);
    return out;
}

}  // namespace

std::vector<Diamond> all_diamonds(const QbgGraph& g, DiamondSide side) {
    const auto& verts = g.vertices();
    std::vector<std::vector<Diamond>> per(verts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < verts.size(); ++i) per[i] = diamonds_at(g, side, verts[i]);
    std::vector<Diamond> out;
    for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Diamond> all_diamonds_serial(const QbgGraph& g, DiamondSide side) {
    std::vector<Diamond> out;
    for (Elem w : g.vertices()) {
        auto here = diamonds_at(g, side, w);
        out.insert(out.end(), here.begin(), here.end());
    }
    return out;
}

DiamondCheck check_diamond(const QbgGraph& g, const Diamond& d) {
    const RootSystem& rs = g.group().roots();
    const Parabolic& J = g.parabolic();
    auto valid = [&](const Edge& e) { return rs.is_positive(e.label) && !J.in_J[e.label] && has_edge(g, e); };
    DiamondCheck r;
    r.edges_exist = valid(d.bottom_left) && valid(d.bottom_right) && valid(d.top_left) && valid(d.top_right);
    if (!r.edges_exist) return r;
    Vec lhs = add(edge_weight(rs, d.bottom_left), edge_weight(rs, d.top_left));
    Vec rhs = add(edge_weight(rs, d.bottom_right), edge_weight(rs, d.top_right));
    r.weights_congruent = reduce_mod_J(lhs, J) == reduce_mod_J(rhs, J);
    return r;
}

}  // namespace qbg
