#include "affbgg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "affbgg/cache.hpp"
#include "affbgg/characters.hpp"
#include "affbgg/json_io.hpp"
#include "affbgg/parabolic.hpp"
#include "affbgg/weyl.hpp"

namespace affbgg {

namespace {

struct Common {
    std::string type = "A";
    int rank = 1;
    std::string format = "json";
    std::string cache_dir;
    int jobs = 1;
};

RootSystemData rs_of(const Common& c) {
    if (c.type.size() != 1) throw input_error("--type expects a single letter A..G");
    return build_root_system(c.type[0], c.rank);
}

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
    cmd->add_option("--type", c.type, "simple type letter A..G");
    cmd->add_option("--rank", c.rank, "rank of the simple type");
    if (with_format) cmd->add_option("--format", c.format, "output format");
    cmd->add_option("--cache-dir", c.cache_dir, "cache directory");
    cmd->add_option("--jobs", c.jobs, "worker threads for enumerations");
}

std::optional<Cache> open_cache(const Common& c) {
    std::string dir = c.cache_dir;
    if (dir.empty()) {
        const char* env = std::getenv("AFFBGG_CACHE_DIR");
        if (env) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    return Cache(dir);
}

RatVec parse_lambda(const RootSystemData& rs, const std::string& spec) {
    // comma-separated pairings <lambdabar, alpha_i^vee>
    RatVec lam(rs.rank, Rat(0));
    if (spec.empty()) return lam;
    std::vector<Rat> coords;
    std::string cur;
    for (char ch : spec) {
        if (ch == ',') {
            coords.push_back(Rat::parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    coords.push_back(Rat::parse(cur));
    if (int(coords.size()) != rs.rank)
        throw input_error("--lambda expects " + std::to_string(rs.rank) + " coordinates");
    for (int i = 0; i < rs.rank; ++i) lam = lam + coords[i] * rs.fundamental_weights[i];
    return lam;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    size_t pos = 0;
    std::int64_t v;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw input_error(what + ": not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw input_error(what + ": not an integer: '" + s + "'");
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(int(parse_int(cur, "index list")));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(int(parse_int(cur, "index list")));
    return out;
}

std::pair<std::int64_t, std::int64_t> parse_grade_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw input_error("--grades expects 'min..max'");
    return {parse_int(s.substr(0, pos), "--grades"),
            parse_int(s.substr(pos + 2), "--grades")};
}

OrderKind parse_order(const RootSystemData& rs, const std::string& order,
                      const std::string& twist) {
    if (order == "usual") return OrderKind::make_usual();
    if (order == "twisted") return OrderKind::make_twisted(parse_element(rs, twist));
    if (order == "semi") return OrderKind::make_semi_infinite();
    throw input_error("--order must be usual, twisted or semi");
}

std::string hasse_dot(const RootSystemData& rs, const OrderKind& kind,
                      const CoverGraph& g) {
    std::ostringstream dot;
    dot << "digraph hasse {\n  rankdir=BT;\n";
    for (size_t i = 0; i < g.elements.size(); ++i)
        dot << "  n" << i << " [label=\"" << format_element(rs, g.elements[i])
            << "\\ngrade " << grade(rs, kind, g.elements[i]) << "\"];\n";
    for (auto [up, lo] : g.edges) dot << "  n" << lo << " -> n" << up << ";\n";
    dot << "}\n";
    return dot.str();
}

void emit(std::ostream& out, const Common& c, const json& j) {
    if (c.format == "json")
        out << j.dump(2) << "\n";
    else
        throw input_error("unsupported format '" + c.format + "' for this command");
}

// ---- subcommand bodies ----------------------------------------------------

int run_rootsys(const Common& c, std::ostream& out) {
    emit(out, c, root_system_json(rs_of(c)));
    return 0;
}

int run_weyl(const Common& c, const std::string& op, const std::string& elt,
             const std::string& other, const std::string& twist, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    AffineWeylElement w = parse_element(rs, elt);
    json j;
    if (op == "mult") w = mult(w, parse_element(rs, other));
    if (op == "inv") w = inverse(w);
    j["elt"] = format_element(rs, w);
    j["length"] = length(rs, w);
    j["semi_infinite_length"] = semi_infinite_length(rs, w);
    if (op == "tlen" || !twist.empty())
        j["twisted_length"] = twisted_length(rs, w, parse_element(rs, twist.empty() ? "e" : twist));
    if (op == "word") {
        json arr = json::array();
        for (int i : reduced_word(rs, w)) arr.push_back(i);
        j["word"] = arr;
    }
    emit(out, c, j);
    return 0;
}

int run_bruhat(const Common& c, const std::string& op, const std::string& order,
               const std::string& twist, const std::string& elt, const std::string& other,
               const std::string& dir, int wnorm, int wdelta, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    OrderKind kind = parse_order(rs, order, twist);
    EnumWindow window{wnorm, wdelta};
    json j;
    j["window"] = {{"norm", wnorm}, {"delta", wdelta}};
    if (op == "leq") {
        AffineWeylElement a = parse_element(rs, elt), b = parse_element(rs, other);
        j["geq"] = order_geq(rs, kind, a, b);
        j["lhs"] = format_element(rs, a);
        j["rhs"] = format_element(rs, b);
        emit(out, c, j);
        return 0;
    }
    if (op == "covers") {
        AffineWeylElement w = parse_element(rs, elt);
        auto list = dir == "above" ? covers_above(rs, kind, w, window)
                                   : covers_below(rs, kind, w, window);
        json arr = json::array();
        for (const auto& v : list) arr.push_back(format_element(rs, v));
        j["elt"] = format_element(rs, w);
        j["direction"] = dir;
        j["covers"] = arr;
        emit(out, c, j);
        return 0;
    }
    if (op == "interval" || op == "squares") {
        AffineWeylElement top = parse_element(rs, elt);
        AffineWeylElement bottom = parse_element(rs, other);
        auto elts = order_interval(rs, kind, top, bottom, window);
        CoverGraph g = cover_graph(rs, kind, elts, window);
        if (c.format == "dot") {
            out << hasse_dot(rs, kind, g);
            return 0;
        }
        json arr = json::array();
        for (const auto& v : g.elements) arr.push_back(format_element(rs, v));
        j["elements"] = arr;
        json edges = json::array();
        for (auto [up, lo] : g.edges) {
            json e;
            e["upper"] = format_element(rs, g.elements[up]);
            e["lower"] = format_element(rs, g.elements[lo]);
            edges.push_back(e);
        }
        j["cover_edges"] = edges;
        if (op == "squares") {
            json sq = json::array();
            for (const auto& s : squares(g)) {
                json q = json::array();
                for (int idx : {s.w1, s.w2, s.w3, s.w4})
                    q.push_back(format_element(rs, g.elements[idx]));
                sq.push_back(q);
            }
            j["squares"] = sq;
        }
        emit(out, c, j);
        return 0;
    }
    throw input_error("unknown bruhat operation '" + op + "'");
}

int run_admissible(const Common& c, const std::string& op, const std::string& level,
                   const std::string& twist, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    Rat k = Rat::parse(level);
    if (op == "check") {
        AdmissibleNumber an = classify_level(rs, k);
        json j;
        j["admissible"] = an.admissible;
        if (an.admissible) {
            j["p"] = an.p;
            j["q"] = an.q;
            j["dual_case"] = an.dual_case;
        }
        emit(out, c, j);
        return 0;
    }
    IntegralSystem sys = integral_system(rs, k);
    if (op == "integral-system") {
        emit(out, c, integral_system_json(sys));
        return 0;
    }
    if (op == "enumerate") {
        std::vector<AdmissibleWeight> weights =
            twist.empty() ? enumerate_pr_plus(sys)
                          : pr_k_y(sys, parse_element(rs, twist));
        json arr = json::array();
        for (const auto& aw : weights) arr.push_back(admissible_weight_json(rs, aw));
        json j;
        j["count"] = arr.size();
        j["weights"] = arr;
        emit(out, c, j);
        return 0;
    }
    throw input_error("unknown admissible operation '" + op + "'");
}

int run_parabolic_decompose(const Common& c, const std::string& s_spec,
                            const std::string& elt, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    std::vector<int> S;
    for (int i : parse_int_list(s_spec)) S.push_back(i - 1);  // 1-based on the CLI
    ParabolicData pd = parabolic_data(rs, S);
    AffineWeylElement w = parse_element(rs, elt);
    ParabolicFactors f = decompose(pd, w);
    json j;
    j["elt"] = format_element(rs, w);
    j["u"] = format_element(rs, f.u);
    j["v"] = format_element(rs, f.v);
    j["minimal_rep"] = is_minimal_rep(pd, f.v);
    j["semi_infinite_lengths"] = {
        {"u", semi_infinite_length(rs, f.u)},
        {"v", semi_infinite_length(rs, f.v)},
        {"product", semi_infinite_length(rs, w)}};
    emit(out, c, j);
    return 0;
}

int run_parabolic_levels(const Common& c, const std::string& level,
                         const std::string& s_spec, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    std::vector<int> S;
    for (int i : parse_int_list(s_spec)) S.push_back(i - 1);
    ParabolicData pd = parabolic_data(rs, S);
    LeviLevels ll = levi_levels(pd, Rat::parse(level));
    json j;
    j["k0"] = rat_json(ll.k0);
    json arr = json::array();
    for (size_t i = 0; i < ll.k_i.size(); ++i) {
        json comp;
        comp["component"] = i;
        comp["type"] = std::string(1, pd.components[i].data.type_letter);
        comp["rank"] = pd.components[i].data.rank;
        comp["level"] = rat_json(ll.k_i[i]);
        arr.push_back(comp);
    }
    j["components"] = arr;
    emit(out, c, j);
    return 0;
}

int run_parabolic_borel_weil(const Common& c, const std::string& level,
                             const std::string& s_spec, const std::string& lambda_spec,
                             std::int64_t grade_p, int wnorm, int wdelta,
                             bool assume_remark, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    IntegralSystem sys = integral_system(rs, Rat::parse(level));
    std::vector<int> S;
    for (int i : parse_int_list(s_spec)) S.push_back(i - 1);
    AffineWeight lambda{parse_lambda(rs, lambda_spec), sys.level, Rat(0)};
    EnumWindow window{wnorm, wdelta};
    auto entries = borel_weil_index(sys, lambda, S, grade_p, window, assume_remark);
    json j;
    j["grade"] = grade_p;
    j["window"] = {{"norm", wnorm}, {"delta", wdelta}};
    if (S.size() != 1) j["conditional_on_remark"] = true;
    json arr = json::array();
    for (const auto& e : entries) {
        json je;
        je["w"] = format_element(sys.abstract_type, e.w_abstract);
        je["w_realized"] = format_element(rs, e.w_realized);
        json restr = json::array();
        for (const auto& rw : e.restriction) {
            json r;
            r["classical"] = ratvec_json(rw.classical);
            r["level"] = rat_json(rw.level);
            restr.push_back(r);
        }
        je["restriction"] = restr;
        arr.push_back(je);
    }
    j["entries"] = arr;
    emit(out, c, j);
    return 0;
}

ComplexKind parse_kind(const IntegralSystem& sys, const std::string& kind,
                       const std::string& twist_word) {
    if (kind == "one-sided") return ComplexKind::make_one_sided();
    if (kind == "two-sided") return ComplexKind::make_two_sided();
    if (kind == "twisted") {
        AffineWeylElement y = affine_identity(sys.abstract_type.rank);
        if (!twist_word.empty())
            for (int i : parse_int_list(twist_word))
                y = mult(y, simple_affine_reflection(sys.abstract_type, i));
        return ComplexKind::make_twisted(y);
    }
    throw input_error("--kind must be one-sided, twisted or two-sided");
}

int run_bgg_build(const Common& c, const std::string& level, const std::string& kind_name,
                  const std::string& twist_word, const std::string& lambda_spec,
                  const std::string& grades, int wnorm, int wdelta, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    IntegralSystem sys = integral_system(rs, Rat::parse(level));
    ComplexKind kind = parse_kind(sys, kind_name, twist_word);
    auto [gmin, gmax] = parse_grade_range(grades);
    AffineWeight lambda{parse_lambda(rs, lambda_spec), sys.level, Rat(0)};

    std::string cache_key;
    auto cache = open_cache(c);
    if (cache && c.format == "json") {
        cache_key = "bgg|" + c.type + "|" + std::to_string(c.rank) + "|" + level + "|" +
                    kind_name + "|" + twist_word + "|" + lambda_spec + "|" + grades + "|" +
                    std::to_string(wnorm) + "|" + std::to_string(wdelta);
        if (auto hit = cache->get(cache_key)) {
            out << hit->dump(2) << "\n";
            return 0;
        }
    }

    ComplexTruncation complex =
        build_complex(sys, lambda, kind, gmin, gmax, EnumWindow{wnorm, wdelta});
    if (c.format == "dot") {
        out << export_dot(sys.abstract_type, complex);
        return 0;
    }
    json j = complex_json(sys, complex);
    if (cache) cache->put(cache_key, j);
    emit(out, c, j);
    return 0;
}

int run_bgg_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw input_error("'" + path + "' is not valid JSON");

    RootSystemData rs =
        build_root_system(j.at("type").get<std::string>()[0], j.at("rank").get<int>());
    IntegralSystem sys = integral_system(rs, Rat::parse(j.at("level").get<std::string>()));
    const RootSystemData& abs = sys.abstract_type;
    std::string kind_name = j.at("kind").get<std::string>();
    ComplexKind kind = ComplexKind::make_one_sided();
    if (kind_name == "two-sided") kind = ComplexKind::make_two_sided();
    if (kind_name == "twisted")
        kind = ComplexKind::make_twisted(
            parse_element(abs, j.at("twist").get<std::string>()));
    OrderKind order = kind.tag == ComplexKind::one_sided ? OrderKind::make_usual()
                      : kind.tag == ComplexKind::twisted
                          ? OrderKind::make_twisted(kind.twist)
                          : OrderKind::make_semi_infinite();

    int failures = 0;
    auto fail = [&](const std::string& msg) {
        err << "verify: " << msg << "\n";
        ++failures;
    };

    std::map<AffineWeylElement, std::int64_t> listed_grade;
    for (const auto& [gstr, elts] : j.at("grades").items()) {
        std::int64_t g = parse_int(gstr, "grade key");
        for (const auto& estr : elts) {
            AffineWeylElement w = parse_element(abs, estr.get<std::string>());
            listed_grade[w] = g;
            if (grade(abs, order, w) != g)
                fail("grade mismatch for " + estr.get<std::string>());
        }
    }
    // edges: covers with the right grade step, endpoints listed
    std::vector<std::pair<std::pair<AffineWeylElement, AffineWeylElement>, int>> edges;
    std::int64_t step = kind.tag == ComplexKind::two_sided ? +1 : -1;
    for (const auto& je : j.at("edges")) {
        AffineWeylElement from = parse_element(abs, je.at("from").get<std::string>());
        AffineWeylElement to = parse_element(abs, je.at("to").get<std::string>());
        int sign = je.at("sign").get<int>();
        if (sign != 1 && sign != -1) fail("edge sign not +-1");
        if (!listed_grade.count(from) || !listed_grade.count(to)) {
            fail("edge endpoint not listed in grades");
            continue;
        }
        if (listed_grade[to] - listed_grade[from] != step) fail("edge grade step wrong");
        if (!as_reflection(abs, mult(from, inverse(to))))
            fail("edge endpoints not reflection-related");
        edges.push_back({{from, to}, sign});
    }
    // d^2 over the listed edges
    std::map<AffineWeylElement, std::vector<std::pair<AffineWeylElement, int>>> next;
    for (const auto& [e, s] : edges) next[e.first].push_back({e.second, s});
    for (const auto& [from, mids] : next) {
        std::map<AffineWeylElement, std::vector<int>> composite;
        for (const auto& [mid, s1] : mids) {
            auto it = next.find(mid);
            if (it == next.end()) continue;
            for (const auto& [to, s2] : it->second) composite[to].push_back(s1 * s2);
        }
        for (const auto& [to, prods] : composite) {
            if (prods.size() == 2 && prods[0] + prods[1] != 0)
                fail("two-intermediate pair does not cancel");
            if (prods.size() > 2) fail("more than two intermediates");
        }
    }
    json result;
    result["verified"] = failures == 0;
    result["failures"] = failures;
    out << result.dump(2) << "\n";
    return failures == 0 ? 0 : 3;
}

int run_char(const Common& c, const std::string& op, const std::string& level,
             const std::string& lambda_spec, int depth, int offset_window, int wnorm,
             int wdelta, const std::string& kind_name, const std::string& twist_word,
             const std::string& grades, std::ostream& out) {
    RootSystemData rs = rs_of(c);
    CharTruncation trunc{depth, offset_window};
    json j;

    std::string cache_key;
    auto cache = open_cache(c);
    if (cache && c.format == "json") {
        cache_key = "char|" + op + "|" + c.type + "|" + std::to_string(c.rank) + "|" +
                    level + "|" + lambda_spec + "|" + std::to_string(depth) + "|" +
                    std::to_string(offset_window) + "|" + std::to_string(wnorm) + "|" +
                    std::to_string(wdelta) + "|" + kind_name + "|" + twist_word + "|" +
                    grades;
        if (auto hit = cache->get(cache_key)) {
            out << hit->dump(2) << "\n";
            return 0;
        }
    }

    CharacterSeries series;
    if (op == "verma") {
        AffineWeight lambda{parse_lambda(rs, lambda_spec), Rat::parse(level), Rat(0)};
        series = verma_character(rs, lambda, trunc);
    } else {
        IntegralSystem sys = integral_system(rs, Rat::parse(level));
        AffineWeight lambda{parse_lambda(rs, lambda_spec), sys.level, Rat(0)};
        EnumWindow window{wnorm, wdelta};
        if (op == "irr") {
            series = irreducible_character(sys, lambda, window, trunc, c.jobs);
        } else if (op == "euler") {
            ComplexKind kind = parse_kind(sys, kind_name, twist_word);
            auto [gmin, gmax] = parse_grade_range(grades);
            ComplexTruncation complex =
                build_complex(sys, lambda, kind, gmin, gmax, window);
            series = euler_character(sys, complex, trunc, c.jobs);
        } else {
            throw input_error("unknown char operation '" + op + "'");
        }
    }
    if (c.format == "csv") {
        out << character_csv(series);
        return 0;
    }
    j = character_json(rs, series);
    if (cache) cache->put(cache_key, j);
    emit(out, c, j);
    return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact affine Weyl group, Bruhat order and BGG complex toolkit"};
    app.require_subcommand(0, 1);

    Common c;
    std::string op, elt, other, twist, level = "0", dir = "below", order = "usual";
    std::string s_spec = "1", lambda_spec, grades = "-4..4", kind_name = "one-sided";
    std::string twist_word, verify_path;
    int wnorm = 4, wdelta = 4, depth = 2, offset_window = 8;
    std::int64_t grade_p = 0;
    bool assume_remark = false;

    auto* rootsys = app.add_subcommand("rootsys", "root system data");
    auto* rootsys_show = rootsys->add_subcommand("show", "emit all fields");
    Common c_rootsys;
    add_common(rootsys_show, c_rootsys);

    auto* weyl = app.add_subcommand("weyl", "affine Weyl group arithmetic");
    Common c_weyl;
    std::string weyl_op;
    for (const char* name : {"mult", "inv", "len", "tlen", "silen", "word"}) {
        auto* sub = weyl->add_subcommand(name, "");
        add_common(sub, c_weyl);
        sub->add_option("--elt", elt, "element, e.g. 't[1,0]*s1s0'")->required();
        sub->add_option("--other", other, "right factor for mult");
        sub->add_option("--twist", twist, "twist element for tlen");
        sub->callback([&weyl_op, name] { weyl_op = name; });
    }

    auto* bruhat = app.add_subcommand("bruhat", "Bruhat order queries");
    Common c_bruhat;
    std::string bruhat_op;
    for (const char* name : {"leq", "covers", "interval", "squares"}) {
        auto* sub = bruhat->add_subcommand(name, "");
        add_common(sub, c_bruhat);
        sub->add_option("--order", order, "usual|twisted|semi");
        sub->add_option("--twist", twist, "twist element for twisted order");
        sub->add_option("--elt", elt, "element (or interval top)");
        sub->add_option("--other", other, "second element (or interval bottom)");
        sub->add_option("--dir", dir, "below|above for covers");
        sub->add_option("--window-norm", wnorm, "translation window");
        sub->add_option("--window-delta", wdelta, "reflection delta window");
        sub->callback([&bruhat_op, name] { bruhat_op = name; });
    }

    auto* adm = app.add_subcommand("admissible", "admissible levels and weights");
    Common c_adm;
    std::string adm_op;
    for (const char* name : {"check", "enumerate", "integral-system"}) {
        auto* sub = adm->add_subcommand(name, "");
        add_common(sub, c_adm);
        sub->add_option("--level", level, "level k as a rational 'p/q'")->required();
        sub->add_option("--twist", twist, "twist y for Pr_{k,y}");
        sub->callback([&adm_op, name] { adm_op = name; });
    }

    auto* para = app.add_subcommand("parabolic", "semi-infinite parabolic machinery");
    Common c_para;
    std::string para_op;
    {
        auto* sub = para->add_subcommand("decompose", "w = u v with v in W^S");
        add_common(sub, c_para);
        sub->add_option("--S", s_spec, "parabolic subset, 1-based indices");
        sub->add_option("--elt", elt, "element to factor")->required();
        sub->callback([&para_op] { para_op = "decompose"; });
    }
    {
        auto* sub = para->add_subcommand("levels", "Levi component levels");
        add_common(sub, c_para);
        sub->add_option("--S", s_spec, "parabolic subset, 1-based indices");
        sub->add_option("--level", level, "ambient level k")->required();
        sub->callback([&para_op] { para_op = "levels"; });
    }
    {
        auto* sub = para->add_subcommand("borel-weil", "Borel-Weil index sets");
        add_common(sub, c_para);
        sub->add_option("--S", s_spec, "parabolic subset, 1-based indices");
        sub->add_option("--level", level, "admissible level k")->required();
        sub->add_option("--lambda", lambda_spec, "classical coordinates of lambda");
        sub->add_option("--grade", grade_p, "semi-infinite grade p");
        sub->add_option("--window-norm", wnorm, "translation window");
        sub->add_option("--window-delta", wdelta, "reflection delta window");
        sub->add_flag("--assume-remark", assume_remark,
                      "allow non-minimal S (conditional on the Remark)");
        sub->callback([&para_op] { para_op = "borel-weil"; });
    }

    auto* bgg = app.add_subcommand("bgg", "BGG complex truncations");
    Common c_bgg;
    std::string bgg_op;
    {
        auto* sub = bgg->add_subcommand("build", "build and verify a truncation");
        add_common(sub, c_bgg);
        sub->add_option("--level", level, "admissible level k")->required();
        sub->add_option("--kind", kind_name, "one-sided|twisted|two-sided");
        sub->add_option("--twist-word", twist_word,
                        "comma-separated generator indices for the twist");
        sub->add_option("--lambda", lambda_spec, "classical coordinates of lambda");
        sub->add_option("--grades", grades, "grade range 'min..max'");
        sub->add_option("--window-norm", wnorm, "translation window");
        sub->add_option("--window-delta", wdelta, "reflection delta window");
        sub->callback([&bgg_op] { bgg_op = "build"; });
    }
    {
        auto* sub = bgg->add_subcommand("verify", "re-verify an exported complex");
        sub->add_option("file", verify_path, "complex JSON file")->required();
        sub->callback([&bgg_op] { bgg_op = "verify"; });
    }

    auto* chr = app.add_subcommand("char", "truncated formal characters");
    Common c_chr;
    std::string chr_op;
    for (const char* name : {"verma", "irr", "euler"}) {
        auto* sub = chr->add_subcommand(name, "");
        add_common(sub, c_chr);
        sub->add_option("--level", level, "level k")->required();
        sub->add_option("--lambda", lambda_spec, "classical coordinates of lambda");
        sub->add_option("--depth", depth, "max delta depth");
        sub->add_option("--offset-window", offset_window, "classical offset window");
        sub->add_option("--window-norm", wnorm, "group enumeration window");
        sub->add_option("--window-delta", wdelta, "reflection delta window");
        sub->add_option("--kind", kind_name, "complex kind for euler");
        sub->add_option("--twist-word", twist_word, "twist word for euler");
        sub->add_option("--grades", grades, "grade range for euler");
        sub->callback([&chr_op, name] { chr_op = name; });
    }

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (rootsys_show->parsed()) return run_rootsys(c_rootsys, out);
        if (!weyl_op.empty()) return run_weyl(c_weyl, weyl_op, elt, other, twist, out);
        if (!bruhat_op.empty())
            return run_bruhat(c_bruhat, bruhat_op, order, twist, elt, other, dir, wnorm,
                              wdelta, out);
        if (!adm_op.empty()) return run_admissible(c_adm, adm_op, level, twist, out);
        if (para_op == "decompose") return run_parabolic_decompose(c_para, s_spec, elt, out);
        if (para_op == "levels") return run_parabolic_levels(c_para, level, s_spec, out);
        if (para_op == "borel-weil")
            return run_parabolic_borel_weil(c_para, level, s_spec, lambda_spec, grade_p,
                                            wnorm, wdelta, assume_remark, out);
        if (bgg_op == "build")
            return run_bgg_build(c_bgg, level, kind_name, twist_word, lambda_spec, grades,
                                 wnorm, wdelta, out);
        if (bgg_op == "verify") return run_bgg_verify(verify_path, out, err);
        if (!chr_op.empty())
            return run_char(c_chr, chr_op, level, lambda_spec, depth, offset_window, wnorm,
                            wdelta, kind_name, twist_word, grades, out);
    } catch (const verification_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 2;
}

}  // namespace affbgg
