#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qbg/errors.hpp"
#include "qbg/export.hpp"
#include "qbg/tilted.hpp"
#include "qbg/verify.hpp"

using namespace qbg;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string type;
    int rank = 0;
    std::string parabolic;
    std::string lambda;
    int window = 1;
    std::string format;
    std::string out;
    std::string types;
    std::string suite;
    std::string u, z, mu;
};

TypeSpec resolve_type(const Options& o) {
    if (o.type.empty()) throw ConfigError("--type is required");
    if (o.type.size() == 1) {
        if (o.rank <= 0) throw ConfigError("--rank is required with a bare type letter");
        return {o.type[0], o.rank};
    }
    auto t = parse_types(o.type);
    if (t.size() != 1) throw ConfigError("--type names one root system");
    if (o.rank > 0 && o.rank != t[0].rank) throw ConfigError("--rank disagrees with --type");
    return t[0];
}

Vec parse_ints(const std::string& text, const char* what) {
    Vec out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw ConfigError(std::string("bad ") + what + " entry '" + item + "'");
        }
        if (used != item.size()) throw ConfigError(std::string("bad ") + what + " entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

Elem parse_elem(const WeylGroup& W, const std::string& text) {
    if (text == "e") return W.identity();
    std::vector<int> word;
    for (Int v : parse_ints(text, "word")) word.push_back(static_cast<int>(v));
    return W.from_word(word);
}

void emit(const Options& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + o.out);
    f << body;
}

std::string format_or(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format; }

std::vector<int> node_list(NodeSet mask, int rank) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if ((mask >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::string node_name(int node) { return node == kAffineNode ? "0" : std::to_string(node + 1); }

Parabolic parabolic_of(const RootSystem& rs, const Options& o) {
    return make_parabolic(rs, parse_nodes(o.parabolic, rs.rank()));
}

int cmd_qbg(const Options& o) {
    TypeSpec t = resolve_type(o);
    WeylGroup W(RootSystem::build(t.type, t.rank));
    QbgGraph g = build_qbg(W, parabolic_of(W.roots(), o));
    std::string f = format_or(o, "dot");
    emit(o, f == "dot" ? graph_to_dot(g) : f == "json" ? graph_to_json(g) : graph_to_text(g));
    return 0;
}

int cmd_lift(const Options& o) {
    TypeSpec t = resolve_type(o);
    WeylGroup W(RootSystem::build(t.type, t.rank));
    const RootSystem& rs = W.roots();
    AffineWeyl A(W);
    Parabolic J = parabolic_of(rs, o);
    if (J.nodes.size() == static_cast<std::size_t>(rs.rank())) throw ConfigError("lift needs a proper parabolic");
    QbgGraph g = build_qbg(W, J);
    Vec mu;
    Elem z = W.identity();
    if (o.mu.empty()) {
        mu = superantidominant_for(A, J, z, superantidominance_bound(g));
    } else {
        mu = parse_ints(o.mu, "mu");
        if (static_cast<int>(mu.size()) != rs.rank()) throw ConfigError("--mu has the wrong length");
        z = z_mu_adjusted(W, mu, J);
    }
    LiftedGraph l = lift_graph(A, g, z, mu);
    std::string f = format_or(o, "text");
    emit(o, f == "dot" ? lift_to_dot(A, l) : f == "json" ? lift_to_json(A, l) : lift_to_text(A, l));
    return 0;
}

int cmd_poset(const Options& o) {
    TypeSpec t = resolve_type(o);
    WeylGroup W(RootSystem::build(t.type, t.rank));
    if (o.lambda.empty()) throw ConfigError("--lambda is required");
    Vec lam = parse_ints(o.lambda, "lambda");
    LevelZeroContext ctx(W, lam);
    if (!o.parabolic.empty() && parse_nodes(o.parabolic, t.rank) != ctx.parabolic().mask)
        throw ConfigError("--parabolic is not the stabilizer of --lambda");
    if (o.window < 0) throw ConfigError("window too small: need --window >= 0");
    LevelZeroSlice s = LevelZeroSlice::build(ctx, o.window);
    std::string f = format_or(o, "dot");
    emit(o, f == "dot" ? slice_to_dot(s) : f == "json" ? slice_to_json(s) : slice_to_text(s));
    return 0;
}

int cmd_tilted(const Options& o) {
    TypeSpec t = resolve_type(o);
    WeylGroup W(RootSystem::build(t.type, t.rank));
    const RootSystem& rs = W.roots();
    Parabolic J = parabolic_of(rs, o);
    QbgGraph g = build_qbg(W, make_parabolic(rs, 0));
    TiltedQuery q(g);
    std::vector<Elem> us = o.u.empty() ? g.vertices() : std::vector<Elem>{parse_elem(W, o.u)};
    std::vector<Elem> zs = o.z.empty() ? W.quotient(J) : std::vector<Elem>{W.floor(parse_elem(W, o.z), J)};
    std::string f = format_or(o, "text");
    Json rows = Json::array();
    std::ostringstream os;
    os << rs.name() << " J=" << format_nodes(J.mask) << ": coset minima for the tilted order\n";
    for (Elem u : us)
        for (Elem z : zs) {
            Elem x = q.coset_min(u, z, J);
            if (f == "json")
                rows.push_back(Json{{"u", W.render(u)}, {"coset", W.render(z)}, {"min", W.render(x)}, {"distance", q.dist(u, x)}});
            else
                os << "u=" << W.render(u) << " coset=" << W.render(z) << " min=" << W.render(x)
                   << " distance=" << q.dist(u, x) << "\n";
        }
    if (f == "json") {
        Json j{{"schema", kJsonSchema}, {"kind", "tilted_minima"}, {"type", std::string(1, t.type)}, {"rank", t.rank}};
        j["parabolic"] = node_list(J.mask, t.rank);
        j["minima"] = rows;
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, os.str());
    }
    return 0;
}

int cmd_qlen(const Options& o) {
    TypeSpec t = resolve_type(o);
    WeylGroup W(RootSystem::build(t.type, t.rank));
    Parabolic J = parabolic_of(W.roots(), o);
    std::vector<Elem> us = o.u.empty() ? W.quotient(J) : std::vector<Elem>{parse_elem(W, o.u)};
    std::string f = format_or(o, "text");
    Json rows = Json::array();
    std::ostringstream os;
    for (Elem u : us) {
        auto word = quantum_length_word(W, J, u);
        std::string steps;
        for (int node : word) steps += (steps.empty() ? "" : ",") + node_name(node);
        if (f == "json")
            rows.push_back(Json{{"u", W.render(u)}, {"quantum_length", word.size()}, {"nodes", steps}});
        else
            os << W.render(u) << " " << word.size() << " [" << steps << "]\n";
    }
    if (f == "json") {
        Json j{{"schema", kJsonSchema}, {"kind", "quantum_length"}, {"type", std::string(1, t.type)}, {"rank", t.rank}};
        j["parabolic"] = node_list(J.mask, t.rank);
        j["elements"] = rows;
        emit(o, j.dump(2) + "\n");
    } else {
        emit(o, os.str());
    }
    return 0;
}

int cmd_verify(const Options& o) {
    std::vector<TypeSpec> types = o.types.empty() ? std::vector<TypeSpec>{resolve_type(o)} : parse_types(o.types);
    std::vector<std::string> suites;
    if (o.suite.empty() || o.suite == "all") {
        suites = suite_names();
    } else {
        std::stringstream in(o.suite);
        std::string s;
        while (std::getline(in, s, ',')) {
            suite_header(s);
            suites.push_back(s);
        }
    }
    SuiteOptions so;
    so.window = o.window;
    if (!o.lambda.empty()) so.lambda = parse_ints(o.lambda, "lambda");
    std::string f = format_or(o, "text");
    bool all_ok = true;
    Json results = Json::array();
    std::ostringstream os;
    for (const std::string& suite : suites) {
        os << "# " << suite << ": " << suite_header(suite) << "\n";
        for (const TypeSpec& t : types) {
            if (!o.parabolic.empty()) so.parabolic = parse_nodes(o.parabolic, t.rank);
            for (const SuiteResult& r : run_suite(suite, t.type, t.rank, so)) {
                all_ok = all_ok && r.ok();
                os << (r.ok() ? "PASS " : "FAIL ") << suite << " " << r.system << " " << r.parabolic
                   << " checked=" << r.checked;
                if (!r.ok()) os << " failures=" << r.failures << " first: " << r.first_failure;
                os << "\n";
                results.push_back(Json{{"suite", suite},
                                       {"system", r.system},
                                       {"parabolic", r.parabolic},
                                       {"checked", r.checked},
                                       {"failures", r.failures},
                                       {"first_failure", r.first_failure},
                                       {"status", r.ok() ? "pass" : "fail"}});
            }
        }
    }
    if (f == "json") {
        Json j{{"schema", kJsonSchema}, {"kind", "verify_report"}};
        Json headers = Json::object();
        for (const auto& s : suites) headers[s] = suite_header(s);
        j["suites"] = headers;
        j["results"] = results;
        j["status"] = all_ok ? "pass" : "fail";
        emit(o, j.dump(2) + "\n");
    } else {
        os << (all_ok ? "verify: pass\n" : "verify: FAIL\n");
        emit(o, os.str());
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Bruhat graphs, their lifts, level-zero weight posets and tilted Bruhat orders"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* s, bool needs_type) {
        auto* t = s->add_option("--type", o.type, "Cartan type letter, or letter and rank (B2)");
        if (needs_type) t->required();
        s->add_option("--rank", o.rank, "rank");
        s->add_option("--parabolic", o.parabolic, "comma-separated nodes of J (Bourbaki numbering)");
        s->add_option("--format", o.format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));
        s->add_option("--out", o.out, "output file (default stdout)");
    };
    std::map<std::string, std::function<int(const Options&)>> run;

    auto* qbg = app.add_subcommand("qbg", "QB(W^J) as DOT, JSON or text");
    qbg->alias("pqbg");
    common(qbg, true);
    run["qbg"] = cmd_qbg;

    auto* lift = app.add_subcommand("lift", "lift every edge of QB(W^J) to an affine Bruhat cover");
    common(lift, true);
    lift->add_option("--mu", o.mu, "J-adjusted antidominant translation, simple-coroot coordinates");
    run["lift"] = cmd_lift;

    auto* poset = app.add_subcommand("poset", "slice |n| <= window of the level-zero weight poset");
    common(poset, true);
    poset->add_option("--lambda", o.lambda, "dominant weight, fundamental-weight coordinates")->required();
    poset->add_option("--window", o.window, "largest |n| reported");
    run["poset"] = cmd_poset;

    auto* tilted = app.add_subcommand("tilted", "minima of cosets z W_J in the u-tilted Bruhat order");
    common(tilted, true);
    tilted->add_option("--u", o.u, "base point as a word (1,2) or e");
    tilted->add_option("--z", o.z, "coset representative as a word or e");
    run["tilted"] = cmd_tilted;

    auto* qlen = app.add_subcommand("qlen", "quantum length of elements of W^J");
    common(qlen, true);
    qlen->add_option("--u", o.u, "one element as a word (default all of W^J)");
    run["qlen"] = cmd_qlen;

    auto* verify = app.add_subcommand("verify", "run invariant suites");
    common(verify, false);
    verify->add_option("--suite", o.suite, "comma-separated suites or all");
    verify->add_option("--types", o.types, "root systems, e.g. A1..A4,B2,G2");
    verify->add_option("--lambda", o.lambda, "weight for the level-zero suite");
    verify->add_option("--window", o.window, "window for the level-zero suite");
    run["verify"] = cmd_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        for (auto* s : app.get_subcommands()) return run.at(s->get_name())(o);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
