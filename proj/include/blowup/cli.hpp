#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests can drive it in-process.
//
// Exit codes: 0 success, 1 negative verdict (not a member, failed
// certificate), 2 any error. BLOWUP_OUTPUT=json makes --json the default.

#include "blowup/blowup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace blowup::cli {

inline constexpr int schema_version = 1;

enum ExitCode : int { Success = 0, Negative = 1, Failure = 2 };

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline json to_json(const Ambient& a) { return {{"n", a.n()}, {"r", a.r()}, {"config", to_string(a.config())}}; }

inline json to_json(const PointMultiplicityForm& f) {
    return {{"degree", to_string(f.degree)}, {"multiplicities", to_json(f.multiplicities)}};
}

inline json to_json(const CycleClass& c, int first_index = 1) {
    return {{"ambient", to_json(c.ambient())},
            {"dim", c.dim()},
            {"text", format_class(c, first_index)},
            {"coeffs", to_json(c.coeffs())},
            {"form", to_json(c.form())}};
}

inline json to_json(const Decomposition& d) {
    json out = json::array();
    for (const auto& t : d.terms) out.push_back({{"generator", to_string(t.generator)}, {"coefficient", to_string(t.coefficient)}});
    return out;
}

inline json to_json(const ViolatedInequality& v) {
    json out{{"inequality", to_string(v.kind)}, {"lhs", to_string(v.lhs)}, {"rhs", to_string(v.rhs)}};
    if (v.index) out["index"] = v.index;
    return out;
}

/// -n/-r/--dim/--config, or a single --ambient "n=..,r=..,dim=..,config=..".
struct AmbientFlags {
    int n = -1;
    int r = -1;
    int dim = -1;
    std::string config = "very-general";
    std::string spec;

    void attach(CLI::App* app, bool with_dim) {
        app->add_option("-n", n, "dimension of the projective space");
        app->add_option("-r", r, "number of blown-up points");
        if (with_dim) app->add_option("--dim", dim, "cycle dimension k (default n-1)");
        app->add_option("--config", config, "point configuration tag");
        app->add_option("--ambient", spec, "n=..,r=..[,dim=..][,config=..]");
    }

    AmbientSpec resolve() const {
        if (!spec.empty()) {
            if (n >= 0 || r >= 0 || dim >= 0) throw Error(ErrorKind::Parse, "give either --ambient or -n/-r/--dim, not both");
            return parse_ambient(spec);
        }
        if (n < 0 || r < 0) throw Error(ErrorKind::Parse, "the ambient needs -n and -r (or --ambient)");
        Ambient amb(n, r, parse_config(config));
        return {amb, dim >= 0 ? dim : n - 1};
    }
};

/// "18x10", "20,18x9" or "18,18,18".
inline std::vector<Integer> parse_multiplicity_list(const std::string& text) {
    std::vector<Integer> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto x = item.find('x');
        const std::string value = item.substr(0, x);
        int count = 1;
        if (x != std::string::npos) {
            try {
                count = std::stoi(item.substr(x + 1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::Parse, "bad repeat count in '" + item + "'");
            }
            if (count < 0) throw Error(ErrorKind::Parse, "negative repeat count in '" + item + "'");
        }
        Rational m;
        try {
            m = parse_rational(value);
        } catch (const std::invalid_argument& e) {
            throw Error(ErrorKind::Parse, e.what());
        }
        if (!is_integral(m)) throw Error(ErrorKind::Parse, "multiplicities are integers, got '" + value + "'");
        for (int i = 0; i < count; ++i) out.push_back(numerator_of(m));
    }
    return out;
}

inline Rational parse_scalar(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
}

struct Output {
    bool json_mode;
    std::ostream& out;
    std::ostream& err;
    json doc;

    void emit(const std::string& command, const std::string& text) {
        if (json_mode) {
            json full{{"schema_version", schema_version}, {"command", command}};
            for (auto& [k, v] : doc.items()) full[k] = v;
            out << full.dump(2) << '\n';
        } else {
            out << text;
        }
    }
};

inline std::string citation_lines(const std::vector<Citation>& cites) {
    std::string out;
    for (const auto& c : cites) out += "cite " + c.rule + ": " + c.statement + "\n";
    return out;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact cycle-class calculus on blow-ups of projective space at points", "blowup"};
    app.require_subcommand(1);
    app.fallthrough();
    bool force_json = false;
    bool force_text = false;
    auto* json_flag = app.add_flag("--json", force_json, "machine-readable output");
    app.add_flag("--text", force_text, "human-readable output")->excludes(json_flag);

    std::function<int(Output&)> action;
    std::string command;
    auto sub = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

    AmbientFlags amb;
    std::string class_text, second_text;

    // decompose
    {
        auto* s = sub("decompose", "linear-generation membership with a decomposition or a violated inequality");
        amb.attach(s, true);
        s->add_option("class", class_text, "class, e.g. \"3H - 2E1 - E2\"")->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto y = parse_class(class_text, spec.ambient, spec.dim);
                const auto v = is_linearly_generated_class(y);
                const int s_param = y.dim() + 1;
                o.doc = {{"class", to_json(y)},
                         {"s", s_param},
                         {"verdict", v.member ? "member" : "not-member"},
                         {"method", v.method == MembershipMethod::Greedy ? "greedy" : "lp"}};
                std::string text = "class: " + format_class(y) + "\nform: " + format_form(y.form()) +
                                   "\ns: " + std::to_string(s_param) + "\nverdict: " + (v.member ? "member" : "not-member") +
                                   (v.method == MembershipMethod::Greedy ? " (greedy)" : " (lp)") + "\n";
                if (v.witness) {
                    o.doc["decomposition"] = to_json(*v.witness);
                    text += format_decomposition(*v.witness);
                }
                if (v.violated) {
                    o.doc["violated"] = to_json(*v.violated);
                    text += "violated: " + to_string(v.violated->kind) +
                            (v.violated->index ? " (i=" + std::to_string(v.violated->index) + ")" : "") + ": " +
                            to_string(v.violated->lhs) + " < " + to_string(v.violated->rhs) + "\n";
                }
                o.emit("decompose", text);
                return v.member ? Success : Negative;
            };
        });
    }

    // intersect
    {
        auto* s = sub("intersect", "divisor . cycle, giving a cycle of one lower dimension");
        amb.attach(s, true);
        s->add_option("divisor", class_text)->required();
        s->add_option("cycle", second_text)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto d = parse_class(class_text, spec.ambient, spec.ambient.n() - 1);
                const auto y = parse_class(second_text, spec.ambient, spec.dim);
                const auto z = intersect_divisor(d, y);
                o.doc = {{"result", to_json(z)}};
                o.emit("intersect", format_class(z) + "\nform: " + format_form(z.form()) + "\ndim: " + std::to_string(z.dim()) + "\n");
                return Success;
            };
        });
    }

    // pair
    {
        auto* s = sub("pair", "degree of divisor . curve");
        amb.attach(s, false);
        s->add_option("divisor", class_text)->required();
        s->add_option("curve", second_text)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto d = parse_class(class_text, spec.ambient, spec.ambient.n() - 1);
                const auto b = parse_class(second_text, spec.ambient, 1);
                const auto value = degree_pairing(d, b);
                o.doc = {{"value", to_json(value)}};
                o.emit("pair", to_string(value) + "\n");
                return Success;
            };
        });
    }

    // top-self
    {
        auto* s = sub("top-self", "top self-intersection D^n of a divisor");
        amb.attach(s, false);
        s->add_option("divisor", class_text)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto d = parse_class(class_text, spec.ambient, spec.ambient.n() - 1);
                const auto value = top_self_intersection(d);
                o.doc = {{"value", to_json(value)}};
                o.emit("top-self", to_string(value) + "\n");
                return Success;
            };
        });
    }

    // cone
    int cone_times = 1;
    {
        auto* s = sub("cone", "class of the cone over a class; the new vertex is E0");
        amb.attach(s, true);
        s->add_option("class", class_text)->required();
        s->add_option("--times", cone_times, "iterate the cone construction")->check(CLI::PositiveNumber);
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto v = parse_class(class_text, spec.ambient, spec.dim);
                const auto w = iterated_cone(v, cone_times);
                // With repeated cones the newest vertex is E0 and earlier vertices follow it.
                o.doc = {{"result", to_json(w, 0)}};
                o.emit("cone", format_class(w, 0) + "\nambient: " + to_string(w.ambient()) + "\ndim: " + std::to_string(w.dim()) + "\n");
                return Success;
            };
        });
    }

    // section
    {
        auto* s = sub("section", "hyperplane section of a cone class written with vertex E0");
        amb.attach(s, true);
        s->add_option("class", class_text, "class on the cone's ambient, vertex labelled E0")->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto w = parse_class(class_text, spec.ambient, spec.dim, 0);
                const auto v = section_class(w);
                o.doc = {{"result", to_json(v)}};
                o.emit("section", format_class(v) + "\nambient: " + to_string(v.ambient()) + "\ndim: " + std::to_string(v.dim()) + "\n");
                return Success;
            };
        });
    }

    // reduce-span
    {
        auto* s = sub("reduce-span", "reduce a class for points spanning a P^m (config span-dim:M or collinear)");
        amb.attach(s, true);
        s->add_option("class", class_text)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                const auto y = parse_class(class_text, spec.ambient, spec.dim);
                const auto red = span_reduction(y);
                std::string text;
                if (red.linearly_generated) {
                    o.doc = {{"verdict", "linearly-generated"}, {"spanning_plane", to_json(*red.spanning_plane)}};
                    text = "verdict: linearly-generated\nspanning plane: " + format_class(*red.spanning_plane) + "\n";
                } else {
                    o.doc = {{"verdict", "reduced"}, {"result", to_json(*red.reduced)}};
                    text = "verdict: reduced\n" + format_class(*red.reduced) + "\nambient: " + to_string(red.reduced->ambient()) + "\n";
                }
                o.emit("reduce-span", text);
                return Success;
            };
        });
    }

    // cremona-orbit
    OrbitOptions orbit_opt;
    std::string max_degree_text, dump_path, resume_path;
    bool list_orbit = false;
    {
        auto* s = sub("cremona-orbit", "breadth-first orbit of a divisor class under the Weyl group");
        amb.attach(s, false);
        s->add_option("class", class_text, "seed divisor (ignored with --resume)");
        s->add_option("--max-length", orbit_opt.max_word_length, "word-length bound")->required();
        s->add_option("--max-degree", max_degree_text, "drop classes of larger H-degree");
        s->add_option("--threads", orbit_opt.threads, "worker threads for frontier expansion");
        s->add_flag("--permutations-only", orbit_opt.permutations_only, "use only the transposition roots");
        s->add_option("--dump", dump_path, "write records degree;m_1,...,m_r;word_length");
        s->add_option("--resume", resume_path, "continue from a dump file");
        s->add_flag("--list", list_orbit, "print every orbit element");
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto spec = amb.resolve();
                if (!max_degree_text.empty()) orbit_opt.max_degree = parse_scalar(max_degree_text);
                OrbitResult orbit;
                if (!resume_path.empty()) {
                    std::ifstream in(resume_path);
                    if (!in) throw Error(ErrorKind::InvalidQuery, "cannot read " + resume_path);
                    orbit = orbit_resume(read_orbit_dump(in, spec.ambient), orbit_opt);
                } else {
                    if (class_text.empty()) throw Error(ErrorKind::Parse, "a seed class or --resume is required");
                    orbit = orbit_enumerate(parse_class(class_text, spec.ambient, spec.ambient.n() - 1), orbit_opt);
                }
                if (!dump_path.empty()) {
                    std::ofstream f(dump_path);
                    if (!f) throw Error(ErrorKind::InvalidQuery, "cannot write " + dump_path);
                    write_orbit_dump(f, orbit);
                }
                o.doc = {{"count", orbit.count()},
                         {"max_degree", to_json(orbit.max_degree)},
                         {"closed", orbit.closed},
                         {"truncated_by_degree", orbit.truncated_by_degree},
                         {"levels_expanded", orbit.levels_expanded}};
                std::string text = "count: " + std::to_string(orbit.count()) + "\nmax degree: " + to_string(orbit.max_degree) +
                                   "\nclosed: " + (orbit.closed ? "yes" : "no") + "\n";
                if (list_orbit) {
                    json items = json::array();
                    for (const auto& e : orbit.elements) {
                        items.push_back({{"text", format_class(e.cls)}, {"word_length", e.word_length}});
                        text += format_class(e.cls) + "  [" + std::to_string(e.word_length) + "]\n";
                    }
                    o.doc["elements"] = items;
                }
                o.emit("cremona-orbit", text);
                return Success;
            };
        });
    }

    // group-type
    int gt_n = 0, gt_r = 0;
    {
        auto* s = sub("group-type", "type of the T_{2,n+1,r-n-1} Coxeter group");
        s->add_option("-n", gt_n)->required();
        s->add_option("-r", gt_r)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto g = group_type(gt_n, gt_r);
                o.doc = {{"n", gt_n}, {"r", gt_r}, {"type", to_string(g.kind)}, {"sum", to_json(g.sum)}, {"infinite", g.infinite()}};
                o.emit("group-type", to_string(g.kind) + "\nsum: " + to_string(g.sum) + "\ninfinite: " + (g.infinite() ? "yes" : "no") + "\n");
                return Success;
            };
        });
    }

    // status
    int st_n = 0, st_r = 0, st_k = 0;
    std::string st_config = "very-general";
    {
        auto* s = sub("status", "linear / finite generation status of Effb_k");
        s->add_option("-n", st_n)->required();
        s->add_option("-r", st_r)->required();
        s->add_option("-k", st_k)->required();
        s->add_option("--config", st_config);
        s->final_callback([&] {
            action = [&](Output& o) {
                const StatusQuery q{st_n, st_r, st_k, parse_config(st_config)};
                const auto st = status(q);
                json cites = json::array();
                for (const auto& c : st.citations) cites.push_back({{"rule", c.rule}, {"statement", c.statement}});
                o.doc = {{"query", {{"n", q.n}, {"r", q.r}, {"k", q.k}, {"config", to_string(q.config)}}},
                         {"linear", to_string(st.linear)},
                         {"finite", to_string(st.finite)},
                         {"linear_source", st.linear_source},
                         {"finite_source", st.finite_source},
                         {"citations", cites}};
                if (st.assumption) o.doc["assumption"] = *st.assumption;
                if (!st.notes.empty()) o.doc["notes"] = st.notes;
                if (st.witness) o.doc["witness"] = to_json(*st.witness);
                std::string text = "linear: " + to_string(st.linear) + "\nfinite: " + to_string(st.finite) + "\n" + citation_lines(st.citations);
                for (const auto& nline : st.notes) text += "note: " + nline + "\n";
                if (st.witness) text += "witness: " + format_class(*st.witness) + " (dim " + std::to_string(st.witness->dim()) + ")\n";
                o.emit("status", text);
                return Success;
            };
        });
    }

    // shgh-dim
    std::string shgh_d, shgh_m;
    {
        auto* s = sub("shgh-dim", "expected dimension of a planar linear system");
        s->add_option("-d", shgh_d, "degree")->required();
        s->add_option("-m", shgh_m, "multiplicities, e.g. 18x10 or 3,2,2")->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const Rational d = parse_scalar(shgh_d);
                if (!is_integral(d)) throw Error(ErrorKind::Parse, "degree must be an integer");
                const PlanarSystem sys{numerator_of(d), parse_multiplicity_list(shgh_m)};
                const auto count = shgh_expected_dim(sys);
                o.doc = {{"expected_dim", to_string(count.expected_dim)},
                         {"applicable", count.applicable},
                         {"top_three", to_string(count.top_three)},
                         {"r", sys.m.size()}};
                o.emit("shgh-dim", "expected dim: " + to_string(count.expected_dim) + "\napplicable: " + (count.applicable ? "yes" : "no") +
                                       " (d = " + to_string(sys.d) + ", m1+m2+m3 = " + to_string(count.top_three) +
                                       ", r = " + std::to_string(sys.m.size()) + ")\n");
                return Success;
            };
        });
    }

    // certify-ddelta
    std::string dd_delta, dd_prime;
    {
        auto* s = sub("certify-ddelta", "numeric certificate for the D_delta family on the quadric");
        s->add_option("--delta", dd_delta)->required();
        s->add_option("--delta-prime", dd_prime)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto report = certify_ddelta({parse_scalar(dd_delta), parse_scalar(dd_prime)});
                json checks = json::array();
                std::string text = "delta = " + to_string(report.params.delta) + ", delta' = " + to_string(report.params.delta_prime) + "\n";
                for (const auto& c : report.checks) {
                    json values = json::object();
                    text += std::string(c.passed ? "pass" : "FAIL") + "  " + c.name + "  " + c.condition + "\n";
                    for (const auto& [k, v] : c.values) {
                        values[k] = to_string(v);
                        text += "      " + k + " = " + to_string(v) + "\n";
                    }
                    checks.push_back({{"name", c.name}, {"condition", c.condition}, {"passed", c.passed}, {"values", values}});
                }
                text += std::string("overall: ") + (report.passed() ? "pass" : "fail") + "\n";
                o.doc = {{"delta", to_json(report.params.delta)},
                         {"delta_prime", to_json(report.params.delta_prime)},
                         {"passed", report.passed()},
                         {"checks", checks}};
                o.emit("certify-ddelta", text);
                return report.passed() ? Success : Negative;
            };
        });
    }

    // pushforward-q
    {
        auto* s = sub("pushforward-q", "push a curve class on the quadric (h, e0..e9 or r1, r2, f1..f9) to X^3_9");
        s->add_option("class", class_text)->required();
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto q = parse_quadric(class_text);
                const auto img = pushforward_to_X39(q);
                o.doc = {{"planar", format_quadric(quadric_basis_change(q, QuadricBasis::Planar))},
                         {"ruling", format_quadric(quadric_basis_change(q, QuadricBasis::Ruling))},
                         {"result", to_json(img)}};
                o.emit("pushforward-q", "planar: " + o.doc["planar"].get<std::string>() + "\nruling: " +
                                            o.doc["ruling"].get<std::string>() + "\npushforward: " + format_class(img) + "\n");
                return Success;
            };
        });
    }

    // named-class
    std::string nc_name;
    std::vector<int> nc_params;
    bool nc_check = false;
    {
        auto* s = sub("named-class", "emit a catalogued class (rnc, cone_over_rnc, secant_quartic_p4, cm_curve, ci_curve)");
        s->add_option("name", nc_name)->required();
        s->add_option("params", nc_params, "integer parameters");
        s->add_flag("--check", nc_check, "also run the linear-generation test");
        s->final_callback([&] {
            action = [&](Output& o) {
                const auto c = named_class(nc_name, nc_params);
                o.doc = {{"name", nc_name}, {"class", to_json(c)}};
                std::string text = format_class(c) + "\nambient: " + to_string(c.ambient()) + "\ndim: " + std::to_string(c.dim()) + "\n";
                int code = Success;
                if (nc_check) {
                    const auto v = is_linearly_generated_class(c);
                    o.doc["verdict"] = v.member ? "member" : "not-member";
                    if (v.violated) o.doc["violated"] = to_json(*v.violated);
                    text += std::string("verdict: ") + (v.member ? "member" : "not-member") + "\n";
                    code = v.member ? Success : Negative;
                }
                o.emit("named-class", text);
                return code;
            };
        });
    }

    const char* env = std::getenv("BLOWUP_OUTPUT");
    const bool env_json = env && std::string(env) == "json";

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Success : Failure;
    }
    if (const auto parsed = app.get_subcommands(); !parsed.empty()) command = parsed.front()->get_name();

    Output o{(env_json && !force_text) || force_json, out, err, {}};
    try {
        return action(o);
    } catch (const Error& e) {
        if (o.json_mode)
            out << json{{"schema_version", schema_version}, {"command", command}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}}.dump(2)
                << '\n';
        err << "error: " << e.what() << '\n';
        return Failure;
    }
}

}  // namespace blowup::cli
