#include <CLI11.hpp>

#include "fanolat/constraints/evaluator.hpp"
#include "fanolat/io.hpp"
#include "fanolat/plot.hpp"
#include "fanolat/verify.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace fanolat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    int genus = 0;
    std::string variant;
    bool json_out = false;
    unsigned threads = 0;
    long long max_rank = 60;
    std::string config;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
    try {
        return Rational::parse(s);
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + s + "' is not a rational number");
    }
}

std::vector<Rational> parse_list(const std::string& s, const std::string& what) {
    std::vector<Rational> out;
    for (auto& part : split(s, ',')) out.push_back(parse_rational(part, what));
    return out;
}

FanoContext make_context(const Globals& g, bool need_variant = false) {
    if (!g.genus) throw UsageError("--genus is required");
    Variant v = Variant::not_applicable;
    if (g.variant == "ordinary") v = Variant::ordinary;
    else if (g.variant == "special") v = Variant::special;
    else if (!g.variant.empty()) throw UsageError("--variant must be ordinary or special");
    if (need_variant && g.genus == 6 && v == Variant::not_applicable)
        throw UsageError("genus 6 needs --variant ordinary|special (the ext^1 bound differs)");
    try {
        return context(g.genus, v);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// A catalog name, a basis vector (v, w, s, t), or an explicit component list "r,c,l,p".
ChernCharacter resolve_class(const FanoContext& ctx, const std::string& text) {
    if (text.find(',') != std::string::npos) {
        auto v = parse_list(text, "class");
        if (v.size() < 3 || v.size() > 4) throw UsageError("class '" + text + "' needs 3 or 4 components");
        return {v[0], v[1], v[2], v.size() == 4 ? v[3] : Rational(0)};
    }
    if (text == "v" || text == "w") return text == "v" ? ku_basis(ctx).b1 : ku_basis(ctx).b2;
    if (text == "s" || text == "t") return text == "s" ? alt_basis(ctx).b1 : alt_basis(ctx).b2;
    if (text == "sky") return named_class(ctx, "skyscraper_projection");
    try {
        return named_class(ctx, text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + "; basis names: v, w, s, t");
    }
}

TruncatedClass parse_truncated(const std::string& s) {
    auto v = split(s, ',');
    if (v.size() != 3) throw UsageError("--M expects three integers a,b,c");
    try {
        return {std::stoll(v[0]), std::stoll(v[1]), std::stoll(v[2])};
    } catch (const std::exception&) {
        throw UsageError("--M expects three integers a,b,c");
    }
}

// name = "path" lines; '#' comments and [section] headers are ignored.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        auto eq = line.find('=');
        std::string val = eq == std::string::npos ? "" : trim(line.substr(eq + 1));
        if (eq == std::string::npos || val.size() < 2 || val.front() != '"' || val.back() != '"')
            throw UsageError(path + ":" + std::to_string(n) + ": expected name = \"path\"");
        out[trim(line.substr(0, eq))] = val.substr(1, val.size() - 2);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SearchOptions search_options(const Globals& g) {
    SearchOptions o;
    o.threads = g.threads;
    o.max_rank_cap = g.max_rank;
    return o;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string tuple_str(const std::vector<long long>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

void print_meta_text(const SearchMeta& m) {
    std::cout << "complete: " << (m.complete ? "true" : "false") << "\n";
    for (auto& w : m.warnings) std::cout << "warning: " << w << "\n";
}

// Brute force of a constraint file over its declared ranges.
json solve_file(const std::string& path, const dsl::Env& env, const Globals& g, std::vector<Tuple>& sols) {
    const dsl::ConstraintSystem sys = dsl::parse(read_file(path));
    sols = dsl::solve(sys, env, std::nullopt, g.threads);
    json vars = json::array();
    for (auto& v : sys.variables) vars.push_back(v.name);
    json box = json::array();
    for (auto& v : sys.variables) box.push_back(json::array({v.range->first, v.range->second}));
    return {{"constraints", path},
            {"variables", vars},
            {"beta", env.pt.beta.str()},
            {"alpha_sq", env.pt.alpha_sq.str()},
            {"solutions", tuples_json(sols)},
            {"complete", false},
            {"warnings", json::array({"enumerated over the declared variable ranges only"})},
            {"search_box", box}};
}

std::string preset_file(const std::map<std::string, std::string>& cfg, const std::string& preset) {
    auto it = cfg.find(preset);
    return it == cfg.end() ? "" : it->second;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice computations for tilt stability on prime Fano threefolds of index one"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--genus,-g", g.genus, "genus g (2..10 or 12)");
    app.add_option("--variant", g.variant, "ordinary or special (genus 6)");
    app.add_flag("--json", g.json_out, "machine-readable output");
    app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
    app.add_option("--max-rank", g.max_rank, "cap used when a search direction has no exact bound");
    app.add_option("--config", g.config, "TOML file mapping preset names to constraint files");

    // catalog
    auto* cat = app.add_subcommand("catalog", "print named classes, bases and Euler matrices");
    std::vector<std::string> cat_names;
    cat->add_option("names", cat_names, "class names (default: everything)");

    // chi
    auto* chi_cmd = app.add_subcommand("chi", "Euler pairing chi(A, B)");
    std::string chi_a, chi_b;
    chi_cmd->add_option("A", chi_a)->required();
    chi_cmd->add_option("B", chi_b)->required();

    // charge
    auto* charge_cmd = app.add_subcommand("charge", "tilt central charge and slopes of a class");
    std::string charge_cls, charge_a2, charge_beta;
    charge_cmd->add_option("class", charge_cls)->required();
    charge_cmd->add_option("--alpha-sq", charge_a2, "alpha^2 (default: the genus's standard point)");
    charge_cmd->add_option("--beta", charge_beta, "beta");

    // walls
    auto* walls = app.add_subcommand("walls", "fixed-beta tilt wall candidates for ch<=2 = M");
    std::string walls_m, walls_beta;
    bool no_li = false, strict = false, non_strict = false, require_bounded = false;
    long long ch2_den = 1;
    walls->add_option("--M", walls_m, "truncated class a,b,c with ch2 in units of L")->required();
    walls->add_option("--beta", walls_beta)->required();
    walls->add_flag("--no-li-filter", no_li, "keep candidates the Li-type bound excludes");
    auto* fs = walls->add_flag("--strict", strict, "strict ch1^beta bounds");
    walls->add_flag("--non-strict", non_strict, "non-strict ch1^beta bounds")->excludes(fs);
    walls->add_flag("--require-bounded", require_bounded, "fail instead of capping an unbounded direction");
    walls->add_option("--ch2-denominator", ch2_den, "ch2 enumerated in units of L / n");

    // destab
    auto* destab = app.add_subcommand("destab", "Kuznetsov-lattice destabilizer search");
    std::string destab_preset, destab_file, destab_target, destab_a2, destab_beta;
    long long destab_bound = -1;
    bool destab_rb = false;
    destab->add_option("--preset", destab_preset, "skyscraper, or a name from --config");
    destab->add_option("--constraints", destab_file, "constraint system file");
    destab->add_option("--bound", destab_bound, "ext^1 budget (default: per genus)");
    destab->add_option("--target", destab_target, "target coordinates a,b in the basis v, w");
    destab->add_option("--alpha-sq", destab_a2);
    destab->add_option("--beta", destab_beta);
    destab->add_flag("--require-bounded", destab_rb);

    // cone
    auto* cone = app.add_subcommand("cone", "mixed-class cone systems");
    std::string cone_preset, cone_file;
    bool cone_rb = false;
    cone->add_option("--preset", cone_preset, "A8, A9, or a name from --config");
    cone->add_option("--constraints", cone_file, "constraint system file");
    cone->add_flag("--require-bounded", cone_rb);

    // wall-circle
    auto* wc = app.add_subcommand("wall-circle", "numerical wall of A against M in the (beta, alpha) plane");
    std::string wc_a, wc_m;
    wc->add_option("--A", wc_a)->required();
    wc->add_option("--M", wc_m)->required();

    // plot-walls
    auto* plot = app.add_subcommand("plot-walls", "sample wall loci as CSV, optionally SVG");
    std::string plot_m, plot_beta, plot_svg;
    std::vector<std::string> plot_a;
    PlotWindow win;
    std::string bmin = "-2", bmax = "1", amax = "2";
    plot->add_option("--M", plot_m, "target class")->required();
    plot->add_option("--A", plot_a, "subobject classes (default: wall candidates at --beta)");
    plot->add_option("--beta", plot_beta, "beta for the candidate search");
    plot->add_option("--svg", plot_svg, "also write an SVG file");
    plot->add_option("--beta-min", bmin);
    plot->add_option("--beta-max", bmax);
    plot->add_option("--alpha-max", amax);
    plot->add_option("--denominator", win.denominator, "samples at beta = k / n");

    // verify
    auto* ver = app.add_subcommand("verify", "replay the regression suite");
    std::vector<std::string> only;
    std::string fault;
    ver->add_option("--only", only, "check ids (repeatable)");
    ver->add_option("--inject-fault", fault, "perturb a fixture: euler-matrix, destab-list, wall-list");

    for (auto* s : app.get_subcommands([](const CLI::App*) { return true; })) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const auto cfg = read_config(g.config);

        if (*cat) {
            const FanoContext ctx = make_context(g);
            json out;
            out["genus"] = ctx.genus;
            out["degree"] = ctx.degree.str();
            out["variant"] = to_string(ctx.variant);
            std::vector<std::string> names = cat_names.empty() ? named_class_names() : cat_names;
            for (auto& n : names) {
                if (!cat_names.empty()) {
                    out["classes"][n] = to_json(resolve_class(ctx, n));
                    continue;
                }
                try {
                    out["classes"][n] = to_json(named_class(ctx, n));
                } catch (const std::invalid_argument& e) {
                    out["unavailable"][n] = e.what();
                }
            }
            if (cat_names.empty()) {
                try {
                    out["bases"]["ku"] = to_json(ku_basis(ctx));
                } catch (const std::invalid_argument& e) {
                    out["unavailable"]["ku"] = e.what();
                }
                try {
                    out["bases"]["alternative"] = to_json(alt_basis(ctx));
                } catch (const std::invalid_argument& e) {
                    out["unavailable"]["alternative"] = e.what();
                }
            }
            print_json(out);
            return 0;
        }

        if (*chi_cmd) {
            const FanoContext ctx = make_context(g);
            const Rational x = chi(ctx, resolve_class(ctx, chi_a), resolve_class(ctx, chi_b));
            if (g.json_out) print_json({{"chi", x.str()}});
            else std::cout << x.str() << "\n";
            return 0;
        }

        if (*charge_cmd) {
            const FanoContext ctx = make_context(g);
            TiltPoint pt = ctx.genus >= 6 ? standard_point(ctx) : TiltPoint{Rational(1), Rational(-1, 2)};
            if (!charge_beta.empty()) pt.beta = parse_rational(charge_beta, "--beta");
            if (!charge_a2.empty()) pt = TiltPoint(parse_rational(charge_a2, "--alpha-sq"), pt.beta);
            const ChernCharacter x = resolve_class(ctx, charge_cls);
            const Charge z = charge(x, pt, ctx), z0 = rotated_charge(x, pt, ctx);
            json out{{"class", to_json(x)},
                     {"alpha_sq", pt.alpha_sq.str()},
                     {"beta", pt.beta.str()},
                     {"Z", {z.re.str(), z.im.str()}},
                     {"Z0", {z0.re.str(), z0.im.str()}},
                     {"mu", tilt_slope(x, pt, ctx).str()},
                     {"mu0", rotated_slope(x, pt, ctx).str()},
                     {"ch1beta", ch1_beta(x, pt.beta).str()},
                     {"ch2beta", ch2_beta(x, pt.beta, ctx.degree).str()},
                     {"delta", discriminant(x, ctx.degree).str()}};
            if (g.json_out) print_json(out);
            else
                for (auto& [k, v] : out.items())
                    std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            return 0;
        }

        if (*walls) {
            const FanoContext ctx = make_context(g);
            SearchOptions opts = search_options(g);
            if (strict) opts.strict_ch1_bounds = true;
            if (non_strict) opts.strict_ch1_bounds = false;
            opts.require_bounded = require_bounded;
            opts.ch2_denominator = ch2_den;
            WallSearchResult r = find_tilt_walls(parse_truncated(walls_m), parse_rational(walls_beta, "--beta"), ctx, opts);
            if (!no_li) r.candidates = filter_by_li_bound(r.candidates, ctx, ch2_den);
            if (g.json_out) {
                print_json(to_json(r, opts, !no_li));
            } else {
                std::cout << r.candidates.size() << " pair(s)" << (no_li ? "" : " after the Li filter") << "\n";
                for (auto& w : r.candidates)
                    std::cout << w.pair.first.str() << " & " << w.pair.second.str() << "  alpha_sq=" << w.alpha_sq_wall.str()
                              << "\n";
                print_meta_text(r.meta);
            }
            return 0;
        }

        if (*destab) {
            const FanoContext ctx = make_context(g, true);
            std::string file = destab_file;
            if (file.empty() && !destab_preset.empty() && destab_preset != "skyscraper") {
                file = preset_file(cfg, destab_preset);
                if (file.empty()) throw UsageError("unknown destab preset '" + destab_preset + "'; known: skyscraper");
            }
            if (file.empty() && destab_preset.empty()) throw UsageError("destab needs --preset or --constraints");
            TiltPoint pt = destab_point(ctx);
            if (!destab_beta.empty()) pt.beta = parse_rational(destab_beta, "--beta");
            if (!destab_a2.empty()) pt = TiltPoint(parse_rational(destab_a2, "--alpha-sq"), pt.beta);
            KuClassCoords target = default_destab_target(ctx);
            if (!destab_target.empty()) {
                auto v = parse_list(destab_target, "--target");
                if (v.size() != 2 || !v[0].is_integer() || !v[1].is_integer())
                    throw UsageError("--target expects two integers a,b");
                target = {to_ll(v[0].num()), to_ll(v[1].num()), std::nullopt};
            }
            const long long bound = destab_bound >= 0 ? destab_bound : default_ext1_bound(ctx);
            if (!file.empty()) {
                dsl::Env env{ctx, pt, to_chern(ctx, ku_basis(ctx), target), Rational(bound)};
                std::vector<Tuple> sols;
                json out = solve_file(file, env, g, sols);
                out["target"] = json::array({target.a, target.b});
                out["options"] = {{"ext1_bound", bound}};
                if (g.json_out) print_json(out);
                else {
                    std::cout << sols.size() << " solution(s)\n";
                    for (auto& t : sols) std::cout << tuple_str(t) << "\n";
                }
                return 0;
            }
            SearchOptions opts = search_options(g);
            opts.require_bounded = destab_rb;
            const DestabResult r = find_ku_destabilizers(target, ctx, pt, bound, opts);
            if (g.json_out) print_json(to_json(r, opts));
            else {
                std::cout << r.solutions.size() << " solution(s) (a,b,c,d)\n";
                for (auto& s : r.solutions) std::cout << tuple_str({s[0], s[1], s[2], s[3]}) << "\n";
                print_meta_text(r.meta);
            }
            return 0;
        }

        if (*cone) {
            const FanoContext ctx = make_context(g);
            std::string file = cone_file;
            if (file.empty() && !cone_preset.empty() && cone_preset != "A8" && cone_preset != "A9") {
                file = preset_file(cfg, cone_preset);
                if (file.empty()) throw UsageError("unknown cone preset '" + cone_preset + "'; known: A8, A9");
            }
            if (file.empty() && cone_preset.empty()) throw UsageError("cone needs --preset or --constraints");
            if (!file.empty()) {
                dsl::Env env{ctx, standard_point(ctx), std::nullopt, std::nullopt};
                std::vector<Tuple> sols;
                json out = solve_file(file, env, g, sols);
                out["genus"] = ctx.genus;
                if (g.json_out) print_json(out);
                else {
                    std::cout << sols.size() << " solution(s)\n";
                    for (auto& t : sols) std::cout << tuple_str(t) << "\n";
                }
                return 0;
            }
            SearchOptions opts = search_options(g);
            opts.require_bounded = cone_rb;
            ConeSystem sys;
            try {
                sys = cone_system(cone_preset == "A8" ? ConePreset::A8 : ConePreset::A9, ctx);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const ConeResult r = solve_cone_system(sys, opts);
            if (g.json_out) print_json(to_json(r, ctx, opts));
            else {
                std::cout << r.solutions.size() << " solution(s) (a,b,c)\n";
                for (auto& t : r.solutions) std::cout << tuple_str(t) << "\n";
                print_meta_text(r.meta);
            }
            return 0;
        }

        if (*wc) {
            const FanoContext ctx = make_context(g);
            const WallLocus w = wall_locus(resolve_class(ctx, wc_a), resolve_class(ctx, wc_m), ctx);
            json out;
            if (auto* c = std::get_if<WallCircle>(&w))
                out = {{"kind", "circle"}, {"center", c->center.str()}, {"radius_sq", c->radius_sq.str()}};
            else if (auto* l = std::get_if<WallLine>(&w)) out = {{"kind", "vertical_line"}, {"beta", l->beta.str()}};
            else out = {{"kind", std::holds_alternative<WallEverywhere>(w) ? "everywhere" : "nowhere"}};
            if (g.json_out) print_json(out);
            else std::cout << describe(w) << "\n";
            return 0;
        }

        if (*plot) {
            const FanoContext ctx = make_context(g);
            win.beta_min = parse_rational(bmin, "--beta-min");
            win.beta_max = parse_rational(bmax, "--beta-max");
            win.alpha_max = parse_rational(amax, "--alpha-max");
            if (win.denominator <= 0 || !(win.beta_min < win.beta_max) || win.alpha_max.sign() <= 0)
                throw UsageError("empty plot window");
            std::vector<LabeledLocus> loci;
            ChernCharacter M;
            if (plot_a.empty()) {
                if (plot_beta.empty()) throw UsageError("plot-walls needs --A classes or --beta for a candidate search");
                const TruncatedClass t = parse_truncated(plot_m);
                M = t.chern();
                SearchOptions opts = search_options(g);
                auto r = find_tilt_walls(t, parse_rational(plot_beta, "--beta"), ctx, opts);
                for (auto& c : r.candidates) loci.push_back({c.pair.first.str(), wall_locus(c.pair.first.chern(), M, ctx)});
            } else {
                M = resolve_class(ctx, plot_m);
                for (auto& a : plot_a) loci.push_back({a, wall_locus(resolve_class(ctx, a), M, ctx)});
            }
            const auto samples = sample_loci(loci, win);
            std::cout << samples_csv(samples);
            if (!plot_svg.empty()) {
                std::ofstream out(plot_svg);
                if (!out) throw UsageError("cannot write " + plot_svg);
                out << samples_svg(samples, win);
            }
            return 0;
        }

        if (*ver) {
            verify::Report rep;
            try {
                rep = verify::run(only, fault, g.threads);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (g.json_out) print_json(verify::to_json(rep));
            else std::cout << verify::summary(rep);
            return rep.all_pass() ? 0 : 2;
        }
    } catch (const UnboundedRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dsl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
