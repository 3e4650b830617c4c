#include "zelevinsky/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "zelevinsky/classify.hpp"
#include "zelevinsky/derivatives.hpp"
#include "zelevinsky/moves.hpp"
#include "zelevinsky/notation.hpp"
#include "zelevinsky/speh.hpp"

namespace zelevinsky::cli {

namespace {

using json = nlohmann::json;

struct Options {
    std::string command;
    bool json = false;
    std::string out_file;
    std::string in_file;
    std::string text;
    std::string side = "right";
    std::optional<int> order;
    bool shifted = false;
    bool refined = false;
    std::string what = "projectivity";
};

struct Outcome {
    json result;
    std::string table;
    int code = kOk;
};

// Bad flags or files; reported like CLI11 usage errors.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Side parse_side(const std::string& s) { return s == "left" ? Side::Left : Side::Right; }

std::string point_string(const CuspidalPoint& p) { return "[" + p.exp.to_string() + "]@" + p.line.id; }

json set_json(const MultisegmentSet& set) {
    json out = json::array();
    for (const auto& m : set) out.push_back(m.to_string());
    return out;
}

std::string set_table(const MultisegmentSet& set) {
    std::string out;
    for (const auto& m : set) out += "  " + m.to_string() + "\n";
    return out;
}

std::string vector_string(const TruncationVector& v) {
    std::string out;
    for (auto t : v.entries) out += t == Truncation::TruncOnce ? '1' : '0';
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

const Multisegment& single(const SessionInput& s) {
    if (s.multisegments.size() != 1)
        throw std::invalid_argument("expected exactly one multisegment, got " + std::to_string(s.multisegments.size()));
    return s.multisegments.front();
}

int order_or(const Options& o, int fallback) {
    const int order = o.order.value_or(fallback);
    if (order < 0) throw UsageError("--order must be non-negative");
    return order;
}

int required_order(const Options& o) {
    if (!o.order) throw UsageError("--order is required for " + o.command);
    return order_or(o, 0);
}

Outcome cmd_normalize(const SessionInput& s, const Options&) {
    Outcome r;
    json ms = json::array();
    for (const auto& m : s.multisegments) ms.push_back(m.to_string());
    r.result = {{"text", print_session(s)}, {"multisegments", ms}};
    r.table = print_session(s);
    return r;
}

Outcome cmd_level(const SessionInput& s, const Options&) {
    const Multisegment& m = single(s);
    const auto right = highest_derivative(m, Side::Right);
    const auto left = highest_derivative(m, Side::Left);
    Outcome r;
    r.result = {{"level", right.level},
                {"highest_right", right.multisegment.to_string()},
                {"highest_left", left.multisegment.to_string()}};
    r.table = "level: " + std::to_string(right.level) + "\nhighest right: " + right.multisegment.to_string() +
              "\nhighest left: " + left.multisegment.to_string() + "\n";
    return r;
}

std::optional<Multisegment> exact_derivative(const Multisegment& m, int order, Side side) {
    if (order == level(m)) return highest_derivative(m, side).multisegment;
    if (order == 0) return m;
    if (auto block = is_speh(m)) return speh_derivative_of_order(*block, order, side);
    return std::nullopt;
}

Outcome cmd_derive(const SessionInput& s, const Options& o) {
    const Multisegment& m = single(s);
    const Side side = parse_side(o.side);
    const int order = order_or(o, level(m));
    MultisegmentSet layers;
    for (const auto& n : derivative_candidates(m, order, side)) layers.insert(o.shifted ? shifted(n, side) : n);
    auto exact = exact_derivative(m, order, side);
    if (exact && o.shifted) exact = shifted(*exact, side);

    Outcome r;
    r.result = {{"side", o.side},
                {"order", order},
                {"shifted", o.shifted},
                {"layers", set_json(layers)},
                {"exact", exact ? json(exact->to_string()) : json(nullptr)}};
    r.table = "side: " + o.side + "\norder: " + std::to_string(order) + (o.shifted ? " (shifted)" : "") +
              "\nlayers:\n" + set_table(layers) + "exact: " + (exact ? exact->to_string() : "undetermined") + "\n";
    return r;
}

Outcome cmd_candidates(const SessionInput& s, const Options& o) {
    const Multisegment& m = single(s);
    const Side side = parse_side(o.side);
    const int order = required_order(o);
    const MultisegmentSet set =
        o.refined ? prefix_constrained_candidates(m, order, side) : derivative_candidates(m, order, side);
    Outcome r;
    r.result = {{"side", o.side}, {"order", order}, {"refined", o.refined}, {"candidates", set_json(set)}};
    r.table = std::to_string(set.size()) + " candidate(s), side " + o.side + ", order " + std::to_string(order) +
              (o.refined ? ", refined" : "") + "\n" + set_table(set);
    return r;
}

Outcome cmd_speh(const SessionInput& s, const Options&) {
    const Multisegment& m = single(s);
    const auto d = speh_decompose(m);
    Outcome r;
    json blocks = json::array();
    std::ostringstream table;
    for (const auto& b : d.blocks) {
        json members = json::array();
        for (const auto& seg : b.members()) members.push_back(seg.to_string());
        blocks.push_back({{"top", b.top().to_string()},
                          {"count", b.count()},
                          {"centered", b.centered().to_string()},
                          {"members", members}});
        table << "  top " << b.top().to_string() << " count " << b.count() << "  " << b.multisegment().to_string()
              << "\n";
    }
    r.result = {{"blocks", blocks},
                {"certificate",
                 {{"covers", d.covers},
                  {"no_extension", d.no_extension},
                  {"ordered_tops", d.ordered_tops},
                  {"nested", d.nested}}},
                {"certified", d.certified()}};
    r.table = std::to_string(d.blocks.size()) + " block(s)\n" + table.str() + "certified: " + yes_no(d.certified()) +
              "\n";
    return r;
}

Outcome cmd_ui_closure(const SessionInput& s, const Options&) {
    const Multisegment& m = single(s);
    const auto closure = ui_closure(m);
    Outcome r;
    r.result = {{"size", closure.size()}, {"closure", set_json(closure)}};
    r.table = std::to_string(closure.size()) + " multisegment(s)\n" + set_table(closure);
    return r;
}

Outcome cmd_generic(const SessionInput& s, const Options&) {
    const Multisegment& m = single(s);
    const auto support = csupp(m);
    const Multisegment g = generic_from_csupp(support);
    json pts = json::array();
    for (const auto& p : support) pts.push_back(point_string(p));
    Outcome r;
    r.result = {{"support", pts}, {"generic", g.to_string()}};
    r.table = g.to_string() + "\n";
    return r;
}

Outcome cmd_classify(const SessionInput& s, const Options& o) {
    bool value = false;
    if (o.what == "hom-opposite") {
        if (s.multisegments.size() != 2)
            throw std::invalid_argument("hom-opposite needs two multisegments, G_{n+1} first");
        value = hom_opposite_nonzero(s.multisegments[0], s.multisegments[1]);
    } else {
        const Multisegment& m = single(s);
        if (o.what == "projectivity") value = is_relatively_projective(m);
        else if (o.what == "generic") value = is_generic_St(m);
        else if (o.what == "one-dim") value = is_one_dimensional(m);
        else if (o.what == "generic-hom") value = generic_hom_necessary(m);
        else throw UsageError("unknown --what " + o.what);
    }
    Outcome r;
    r.result = {{"what", o.what}, {"value", value}};
    r.table = yes_no(value) + "\n";
    return r;
}

Outcome cmd_components(const SessionInput& s, const Options&) {
    const auto spec = restriction_components(single(s));
    json mandatory = json::array();
    std::ostringstream table;
    for (const auto& [cls, mult] : spec.mandatory) {
        mandatory.push_back({{"line", cls.line}, {"size", cls.size}, {"multiplicity", mult}});
        table << "  " << cls.line << " (size " << cls.size << ") x" << mult << "\n";
    }
    Outcome r;
    r.result = {{"mandatory", mandatory}, {"free_budget", spec.free_budget}, {"ambient", spec.ambient}};
    r.table = "ambient degree: " + std::to_string(spec.ambient) + "\nmandatory:\n" + table.str() +
              "free budget: " + std::to_string(spec.free_budget) + "\n";
    return r;
}

Outcome cmd_asymmetry(const SessionInput& s, const Options& o) {
    const Multisegment& m = single(s);
    const auto report = asymmetry_check(m, required_order(o));
    json pairs = json::array();
    std::ostringstream table;
    for (const auto& p : report.naive_pairs) {
        json entry = {{"right_vector", vector_string(p.right)},
                      {"left_vector", vector_string(p.left)},
                      {"right", p.right_result.to_string()},
                      {"left", p.left_result.to_string()},
                      {"eliminated_by", p.eliminated_by ? json(to_string(*p.eliminated_by)) : json(nullptr)}};
        if (p.evidence) {
            const auto& e = *p.evidence;
            entry["evidence"] = {{"L", e.L},
                                 {"delta_star", e.delta_star.to_string()},
                                 {"mirrored", e.mirrored},
                                 {"right_count", e.right_count},
                                 {"left_count", e.left_count},
                                 {"special_count", e.special_count},
                                 {"lower_bound_holds", e.lower_bound_holds},
                                 {"equality_holds", e.equality_holds}};
        } else {
            entry["evidence"] = nullptr;
        }
        pairs.push_back(entry);
        table << "  " << vector_string(p.right) << " / " << vector_string(p.left) << "  " << p.right_result.to_string()
              << "  " << (p.eliminated_by ? to_string(*p.eliminated_by) : "SURVIVES") << "\n";
    }
    Outcome r;
    r.result = {{"order", report.order},
                {"level", report.level},
                {"verdict", to_string(report.verdict)},
                {"naive_pairs", pairs},
                {"survivors", report.survivors()},
                {"L", report.L_choice ? json(*report.L_choice) : json(nullptr)}};
    r.table = std::string("verdict: ") + to_string(report.verdict) + "\norder " + std::to_string(report.order) +
              ", level " + std::to_string(report.level) + ", " + std::to_string(report.naive_pairs.size()) +
              " naive pair(s)\n" + table.str();
    if (report.verdict == Verdict::Undecided) r.code = kUndecided;
    return r;
}

json input_json(const SessionInput& s) {
    json lines = json::array();
    for (const auto& d : s.lines.declarations()) lines.push_back({{"id", d.id}, {"size", d.size}, {"dual", d.dual_id}});
    json ms = json::array();
    for (const auto& m : s.multisegments) ms.push_back(m.to_string());
    return {{"lines", lines}, {"multisegments", ms}};
}

json options_json(const Options& o) {
    json j = json::object();
    if (o.command == "derive" || o.command == "candidates") j["side"] = o.side;
    if (o.order) j["order"] = *o.order;
    if (o.command == "derive") j["shifted"] = o.shifted;
    if (o.command == "candidates") j["refined"] = o.refined;
    if (o.command == "classify") j["what"] = o.what;
    return j;
}

std::string read_input(const Options& o, std::istream& in) {
    if (!o.text.empty()) return o.text;
    if (!o.in_file.empty()) {
        std::ifstream file(o.in_file);
        if (!file) throw UsageError("cannot read " + o.in_file);
        return {std::istreambuf_iterator<char>(file), {}};
    }
    return {std::istreambuf_iterator<char>(in), {}};
}

using Handler = Outcome (*)(const SessionInput&, const Options&);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"normalize", cmd_normalize},     {"derive", cmd_derive},
        {"level", cmd_level},             {"candidates", cmd_candidates},
        {"speh-decompose", cmd_speh},     {"ui-closure", cmd_ui_closure},
        {"generic-from-csupp", cmd_generic}, {"classify", cmd_classify},
        {"components", cmd_components},   {"asymmetry", cmd_asymmetry},
    };
    return table;
}

void add_input(CLI::App* sub, Options& o) {
    sub->add_option("input", o.text, "multisegment text (default: --file or standard input)");
}

void add_order(CLI::App* sub, Options& o, const std::string& help) {
    sub->add_option_function<int>("--order,-i", [&o](const int& v) { o.order = v; }, help);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Multisegment calculus for derivatives and restrictions of GL(n) representations", "zelev"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "emit JSON instead of a table");
    app.add_option("--out", o.out_file, "write the output to a file");
    app.add_option("--file,-f", o.in_file, "read the input from a file");
    const auto sides = CLI::IsMember({"right", "left"});

    add_input(app.add_subcommand("normalize", "print the input in normal form")->fallthrough(), o);
    add_input(app.add_subcommand("level", "level and highest derivatives")->fallthrough(), o);

    auto* derive = app.add_subcommand("derive", "derivative layers and the exact derivative when determined");
    derive->fallthrough();
    derive->add_option("--side", o.side)->check(sides);
    add_order(derive, o, "derivative order (default: the level)");
    derive->add_flag("--shifted", o.shifted, "apply nu^{1/2} (right) or nu^{-1/2} (left)");
    add_input(derive, o);

    auto* candidates = app.add_subcommand("candidates", "derivative candidates of one order");
    candidates->fallthrough();
    candidates->add_option("--side", o.side)->check(sides);
    add_order(candidates, o, "derivative order");
    candidates->add_flag("--refined", o.refined, "keep only Speh-prefix truncations");
    add_input(candidates, o);

    add_input(app.add_subcommand("speh-decompose", "greedy Speh decomposition")->fallthrough(), o);
    add_input(app.add_subcommand("ui-closure", "closure under union-intersection moves")->fallthrough(), o);
    add_input(app.add_subcommand("generic-from-csupp", "generic multisegment with the same support")->fallthrough(), o);

    auto* classify = app.add_subcommand("classify", "decidable classifications");
    classify->fallthrough();
    classify->add_option("--what", o.what)
        ->check(CLI::IsMember({"projectivity", "generic", "one-dim", "generic-hom", "hom-opposite"}));
    add_input(classify, o);

    add_input(app.add_subcommand("components", "Bernstein components of the restriction")->fallthrough(), o);

    auto* asymmetry = app.add_subcommand("asymmetry", "left/right derivative asymmetry check");
    asymmetry->fallthrough();
    add_order(asymmetry, o, "derivative order");
    add_input(asymmetry, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }
    o.command = app.get_subcommands().front()->get_name();

    Outcome outcome;
    SessionInput session;
    try {
        session = parse_session(read_input(o, in));
        outcome = handlers().at(o.command)(session, o);
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return kParseError;
    } catch (const SemanticError& e) {
        err << "error at " << e.what() << "\n";
        return kSemanticError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const InvariantViolation& e) {
        err << "internal invariant failed: " << e.what() << "\n";
        return kInternalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kSemanticError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }

    std::string text;
    if (o.json) {
        json input = input_json(session);
        input["options"] = options_json(o);
        text = json{{"command", o.command}, {"input", input}, {"result", outcome.result}, {"version", 1}}.dump(2) + "\n";
    } else {
        text = outcome.table;
    }
    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out_file, std::ios::binary);
        if (!file || !(file << text)) {
            err << "error: cannot write " << o.out_file << "\n";
            return kSemanticError;
        }
    }
    return outcome.code;
}

}  // namespace zelevinsky::cli
