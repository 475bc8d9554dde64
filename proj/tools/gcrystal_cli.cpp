// Command-line driver: verification runs, point transformations, conjecture
// experiments and crystal-graph export.
//
// Exit codes: 0 success, 1 verification failure or domain fault, 2 usage or validation error.

#include "gcrystal/suites.hpp"

#include <CLI11.hpp>

#include <deque>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

using namespace gcrystal;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

Json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in{path};
        if (!in) {
            throw ValidationError("cannot open '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string{"malformed JSON: "} + e.what());
    }
}

Coord parse_coord(const std::string& text)
{
    const auto v = detail::parse_int_list(text);
    if (v.size() != 2) {
        throw ValidationError("expected a node as l,m");
    }
    return {v[0], v[1]};
}

struct Options {
    std::string suite;
    int n = 0;
    int k = 0;
    int trials = 0;
    std::uint64_t seed = 1;
    std::int64_t bound = 0;
    bool json = false;
    int i = 0;
    std::string c;
    std::int64_t d = 1;
    std::string point;
    std::string side = "geom";
    std::string op = "e";
    std::string map;
    std::string quantity = "gamma";
    std::string at;
    std::string center = "b_inf";
    int radius = 2;
};

int emit_report(const RunReport& rep, bool json)
{
    if (json) {
        std::cout << rep.to_json().dump(2) << '\n';
    } else {
        std::cout << rep.summary();
    }
    return rep.passed() ? exit_ok : exit_fail;
}

int cmd_verify(const Options& o)
{
    const Shape shape{o.n, o.k};
    return emit_report(run_suite(o.suite, shape, o.trials, o.seed, o.bound), o.json);
}

int cmd_conjecture(const Options& o)
{
    const Shape shape{o.n, o.k};
    return emit_report(run_suite("conjecture", shape, o.trials, o.seed, o.bound), o.json);
}

int cmd_act(const Options& o, bool c_given, bool d_given)
{
    const Json input = read_json(o.point);
    Json out;
    if (o.side == "geom" || o.side == "geom-y") {
        if (o.op == "e") {
            if (!c_given) {
                throw ValidationError("--c is required for the geometric action");
            }
        } else if (o.op != "s" || o.side == "geom-y") {
            throw ValidationError("geometric sides support --op e" + std::string{o.side == "geom" ? " or s" : ""});
        }
        if (o.side == "geom") {
            const auto x = point_from_json<XPoint>(input);
            out = to_json(o.op == "e" ? act_e(x, o.i, parse_rational(o.c)) : weyl_s(x, o.i));
        } else {
            out = to_json(act_ebar(point_from_json<YPoint>(input), o.i, parse_rational(o.c)));
        }
    } else if (o.side == "trop" || o.side == "bkinf") {
        if (c_given) {
            throw ValidationError("--c applies only to geometric sides; use --d");
        }
        const std::int64_t steps = o.op == "f" ? -o.d : o.d;
        if (o.op != "e" && o.op != "f" && o.op != "s") {
            throw ValidationError("--op must be e, f or s");
        }
        if (o.op == "s" && d_given) {
            throw ValidationError("--d does not apply to the reflection");
        }
        if (o.side == "trop") {
            const auto x = point_from_json<TropPoint>(input);
            out = to_json(o.op == "s" ? trop_weyl(x, o.i) : trop_e(x, o.i, steps));
        } else {
            const auto b = belement_from_json(input);
            out = to_json(o.op == "s" ? weyl_s_tilde(b, o.i) : kashiwara_power(b, o.i, steps));
        }
    } else {
        throw ValidationError("--side must be geom, geom-y, trop or bkinf");
    }
    std::cout << out.dump() << '\n';
    return exit_ok;
}

int cmd_map(const Options& o, bool d_given)
{
    const Json input = read_json(o.point);
    Json out;
    if (o.map == "sigma") {
        out = to_json(sigma_map(point_from_json<XPoint>(input)));
    } else if (o.map == "xi") {
        out = to_json(xi_map(point_from_json<YPoint>(input)));
    } else if (o.map == "omega") {
        out = to_json(omega(point_from_json<TropPoint>(input)));
    } else if (o.map == "omega-inv") {
        out = to_json(omega_inv(belement_from_json(input)));
    } else if (o.map == "ud-probe") {
        const auto x = point_from_json<TropPoint>(input);
        UdQuantity q{UdQuantity::Kind::gamma, o.i, {}};
        if (o.quantity == "epsilon") {
            q.kind = UdQuantity::Kind::epsilon;
        } else if (o.quantity == "e") {
            q.kind = UdQuantity::Kind::e_coord;
            q.at = parse_coord(o.at);
        } else if (o.quantity != "gamma") {
            throw ValidationError("--quantity must be gamma, epsilon or e");
        }
        const TropInt d = d_given ? o.d : 0;
        out = Json{{"probe", ud_degree_probe(q, x, d)}, {"closed_form", ud_closed_form(q, x, d)}};
    } else {
        throw ValidationError("--map must be sigma, xi, omega, omega-inv or ud-probe");
    }
    std::cout << out.dump() << '\n';
    return exit_ok;
}

std::string node_label(const BElement& b)
{
    std::string s;
    for (int j = 1; j <= b.shape().k(); ++j) {
        if (j > 1) {
            s += " | ";
        }
        for (int i = j; i <= j + b.shape().kprime(); ++i) {
            s += (i > j ? " " : "") + std::to_string(b.get(j, i));
        }
    }
    return s;
}

int cmd_graph(const Options& o)
{
    if (o.radius < 0) {
        throw ValidationError("--radius must be non-negative");
    }
    std::optional<BElement> center;
    if (o.center == "b_inf") {
        center = BElement{Shape{o.n, o.k}};
    } else {
        center = belement_from_json(read_json(o.center));
    }
    const int n = center->shape().n();
    std::map<std::vector<std::int64_t>, std::size_t> ids;
    std::vector<BElement> nodes;
    std::deque<std::pair<std::size_t, int>> queue;
    ids.emplace(center->entries(), 0);
    nodes.push_back(*center);
    queue.emplace_back(0, 0);
    while (!queue.empty()) {
        const auto [id, dist] = queue.front();
        queue.pop_front();
        if (dist == o.radius) {
            continue;
        }
        for (int i = 0; i <= n; ++i) {
            for (KOp op : {KOp::f, KOp::e}) {
                const BElement next = kashiwara(nodes[id], op, i);
                if (ids.emplace(next.entries(), nodes.size()).second) {
                    nodes.push_back(next);
                    queue.emplace_back(nodes.size() - 1, dist + 1);
                }
            }
        }
    }
    std::cout << "digraph crystal {\n";
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        std::cout << "  b" << v << " [label=\"" << node_label(nodes[v]) << "\"];\n";
    }
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        for (int i = 0; i <= n; ++i) {
            const auto it = ids.find(kashiwara(nodes[v], KOp::f, i).entries());
            if (it != ids.end()) {
                std::cout << "  b" << v << " -> b" << it->second << " [label=\"" << i << "\"];\n";
            }
        }
    }
    std::cout << "}\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometric crystal verification tool"};
    app.require_subcommand(1);
    Options o;

    auto add_shape = [&](CLI::App* sub, bool required) {
        auto* n = sub->add_option("--n", o.n, "rank n");
        auto* k = sub->add_option("--k", o.k, "column height k");
        if (required) {
            n->required();
            k->required();
        }
    };
    auto add_run = [&](CLI::App* sub) {
        sub->add_option("--trials", o.trials, "number of random trials (default: suite default)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
        sub->add_option("--bound", o.bound, "sampling bound for random entries (default: suite default)")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json, "print the report as JSON");
    };

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::vector<std::string> suite_names;
    for (const auto& s : suite_registry()) {
        suite_names.push_back(s.name);
    }
    verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names));
    add_shape(verify, true);
    add_run(verify);

    auto* act = app.add_subcommand("act", "apply a crystal operator to a point");
    act->add_option("--side", o.side, "geom | geom-y | trop | bkinf")->capture_default_str();
    act->add_option("--op", o.op, "e | f | s")->capture_default_str();
    act->add_option("--i", o.i, "operator index")->required();
    auto* act_c = act->add_option("--c", o.c, "parameter P/Q for geometric sides");
    auto* act_d = act->add_option("--d", o.d, "step count for trop and bkinf");
    act->add_option("--point", o.point, "JSON input file, - for stdin")->required();

    auto* map = app.add_subcommand("map", "apply a chart change, the isomorphism, or the degree probe");
    map->add_option("--map", o.map, "sigma | xi | omega | omega-inv | ud-probe")->required();
    map->add_option("--point", o.point, "JSON input file, - for stdin")->required();
    map->add_option("--i", o.i, "index for ud-probe");
    auto* map_d = map->add_option("--d", o.d, "shift exponent for ud-probe (default 0)");
    map->add_option("--quantity", o.quantity, "gamma | epsilon | e for ud-probe")->capture_default_str();
    map->add_option("--at", o.at, "node l,m read by the e quantity");

    auto* conj = app.add_subcommand("conjecture", "run the proportionality experiment");
    add_shape(conj, true);
    add_run(conj);

    auto* graph = app.add_subcommand("graph", "export part of the crystal graph as DOT");
    add_shape(graph, false);
    graph->add_option("--center", o.center, "b_inf or a JSON element file")->capture_default_str();
    graph->add_option("--radius", o.radius, "BFS radius")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(o);
        }
        if (act->parsed()) {
            return cmd_act(o, act_c->count() > 0, act_d->count() > 0);
        }
        if (map->parsed()) {
            return cmd_map(o, map_d->count() > 0);
        }
        if (conj->parsed()) {
            return cmd_conjecture(o);
        }
        if (graph->parsed()) {
            if (o.center == "b_inf" && (o.n == 0 || o.k == 0)) {
                throw ValidationError("--n and --k are required with --center b_inf");
            }
            return cmd_graph(o);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainFault& e) {
        std::cerr << "domain fault: " << e.what() << '\n';
        return exit_fail;
    }
    return exit_usage;
}
