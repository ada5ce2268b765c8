// gshift -- command-line front end to the gshift library.
//
// Exit status: 0 success, 1 a check ran and failed, 2 bad input or error.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gshift/catalog.hpp"
#include "gshift/conjugacy.hpp"
#include "gshift/error.hpp"
#include "gshift/filtration.hpp"
#include "gshift/gmeasure.hpp"
#include "gshift/io.hpp"
#include "gshift/language.hpp"
#include "gshift/measure_graph.hpp"
#include "gshift/shannon.hpp"

using nlohmann::json;
using namespace gshift;

namespace {

struct Source {
    std::string graph, sft, example, weights;
};

SoficPresentation load_subshift(const Source& src)
{
    int given = !src.graph.empty() + !src.sft.empty() + !src.example.empty();
    if (given != 1)
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --graph, --sft, --example");
    if (!src.graph.empty())
        return io::parse_presentation(io::read_file(src.graph), src.graph);
    if (!src.sft.empty())
        return sft_to_presentation(io::parse_forbidden(io::read_file(src.sft), src.sft));
    if (src.example == "golden")
        return catalog::golden_mean();
    if (src.example == "even")
        return catalog::even_shift();
    if (src.example == "full")
        return catalog::full_shift();
    if (src.example == "reducible")
        return catalog::reducible_no_d();
    throw Error(ErrorKind::InvalidArgument, "unknown example '" + src.example + "' (golden, even, full, reducible)");
}

GFunction load_g(const Source& src)
{
    if (src.weights.empty()) {
        if (src.example == "golden")
            return catalog::golden_mean_g();
        if (src.example == "even")
            return catalog::even_shift_g();
        if (src.example == "full")
            return catalog::bernoulli(Rational(1, 2));
        throw Error(ErrorKind::InvalidArgument, "--weights is required");
    }
    return io::parse_weights(load_subshift(src), io::read_file(src.weights), src.weights);
}

json words_json(const Alphabet& alpha, const std::vector<Word>& words)
{
    json out = json::array();
    for (const Word& w : words)
        out.push_back(alpha.format(w));
    return out;
}

json g_json(const GFunction& g)
{
    const SoficPresentation& p = g.presentation();
    json edges = json::array();
    for (const Edge& e : p.edges())
        edges.push_back({{"src", p.state_name(e.source)},
                         {"symbol", p.alphabet().name(e.symbol)},
                         {"dst", p.state_name(e.target)},
                         {"weight", to_string(g.weight(e.source, e.symbol))}});
    json range = json::array();
    for (const Rational& r : g.weight_range())
        range.push_back(to_string(r));
    return {{"alphabet", p.alphabet().names()}, {"states", p.state_names()}, {"edges", edges}, {"range", range}};
}

json table_json(const ShiftMeasureTable& table)
{
    return json::parse(io::format_measure_table(table));
}

json past_json(const Alphabet& alpha, const EventuallyPeriodicPast& past)
{
    return format_past(alpha, past);
}

// Human-readable rendering of a report: one `key: value` line per scalar.
void render_text(std::ostream& out, const json& v, const std::string& indent)
{
    auto scalar = [](const json& x) {
        if (!x.is_string())
            return x.dump();
        return x.get<std::string>().empty() ? std::string("\"\"") : x.get<std::string>();
    };
    auto flat = [](const json& x) {
        return x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); });
    };
    if (v.is_object()) {
        for (const auto& [raw, x] : v.items()) {
            const std::string key = raw.empty() ? "\"\"" : raw;
            if (x.is_primitive()) {
                out << indent << key << ": " << scalar(x) << "\n";
            } else if (flat(x)) {
                out << indent << key << ":";
                if (x.empty())
                    out << " (none)";
                for (const json& y : x)
                    out << " " << scalar(y);
                out << "\n";
            } else {
                out << indent << key << ":\n";
                render_text(out, x, indent + "  ");
            }
        }
    } else if (v.is_array()) {
        for (const json& x : v) {
            if (x.is_primitive()) {
                out << indent << "- " << scalar(x) << "\n";
            } else {
                out << indent << "-\n";
                render_text(out, x, indent + "  ");
            }
        }
    } else {
        out << indent << scalar(v) << "\n";
    }
}

struct Outcome {
    json report;
    int status = 0;
};

Outcome run_lang(const Source& src, std::size_t length)
{
    SoficPresentation p = load_subshift(src);
    auto words = language_words(p, length);
    return {{{"length", length}, {"count", words.size()}, {"words", words_json(p.alphabet(), words)}}};
}

Outcome run_gamma(const Source& src, const std::string& word, std::size_t n, bool backward)
{
    SoficPresentation p = load_subshift(src);
    auto ext = extension_set(p, p.alphabet().parse(word), n, backward ? Direction::Backward : Direction::Forward);
    return {{{"word", word}, {"n", n}, {"direction", backward ? "backward" : "forward"},
             {"extensions", words_json(p.alphabet(), ext)}}};
}

Outcome run_omega(const Source& src, const std::string& word, std::size_t n)
{
    OmegaCalculus calc(load_subshift(src));
    const Alphabet& alpha = calc.presentation().alphabet();
    Word a = alpha.parse(word);
    auto omega = calc.omega_plus(a, n);
    auto gamma = extension_set(calc.presentation(), a, n, Direction::Forward);
    return {{{"word", word}, {"n", n}, {"omega", words_json(alpha, omega)}, {"gamma", words_json(alpha, gamma)}}};
}

Outcome run_omega_past(const Source& src, const std::string& cycle, const std::string& tail, std::size_t n,
                       const std::string& mode)
{
    OmegaCalculus calc(load_subshift(src));
    const Alphabet& alpha = calc.presentation().alphabet();
    EventuallyPeriodicPast past = normalize_past(EventuallyPeriodicPast(alpha.parse(cycle), alpha.parse(tail)));
    OmegaMode m = mode == "omega" ? OmegaMode::Omega : OmegaMode::OmegaInfinity;
    OmegaPastResult r = calc.omega_past(past, n, m);
    return {{{"past", past_json(alpha, past)},
             {"n", n},
             {"mode", mode},
             {"words", words_json(alpha, r.words)},
             {"suffix_depth", r.suffix_depth},
             {"stabilization", r.stabilization}}};
}

Outcome run_check_d(const Source& src, std::size_t limit)
{
    OmegaCalculus calc(load_subshift(src));
    const SoficPresentation& p = calc.presentation();
    const Alphabet& alpha = p.alphabet();
    PropertyDReport rep = calc.check_property_D(limit);
    json family = json::array();
    for (const LimitImage& li : calc.family())
        family.push_back({{"set", format_state_set(p, li.image)}, {"witness", past_json(alpha, li.witness)}});
    json certs = json::array();
    for (const DCertificate& c : rep.certificates)
        certs.push_back({{"b", alpha.format(c.b)}, {"sigma", alpha.name(c.sigma)}, {"a", alpha.format(c.a)}});
    json cex = nullptr;
    if (rep.counterexample)
        cex = {{"b", alpha.format(rep.counterexample->b)},
               {"sigma", alpha.name(rep.counterexample->sigma)},
               {"tracked_collections", rep.counterexample->tracked_collections}};
    return {{{"holds", rep.holds},
             {"family", family},
             {"collections", rep.collections},
             {"z_states", rep.z_states},
             {"certificates", certs},
             {"counterexample", cex}},
            rep.holds ? 0 : 1};
}

Outcome run_build_gd(const Source& src, std::size_t depth)
{
    SoficPresentation p = load_subshift(src);
    GDGraph gd = build_GD(p, depth);
    const SoficPresentation& g = gd.graph;
    json vertices = json::array();
    for (State v = 0; v < g.num_states(); ++v)
        vertices.push_back({{"name", g.state_name(v)},
                            {"set", format_state_set(p, gd.vertex_sets[v])},
                            {"language", words_json(p.alphabet(), gd.vertex_languages[v])}});
    json edges = json::array();
    for (const Edge& e : g.edges())
        edges.push_back({{"src", g.state_name(e.source)},
                         {"symbol", g.alphabet().name(e.symbol)},
                         {"dst", g.state_name(e.target)}});
    return {{{"depth", depth}, {"vertices", vertices}, {"edges", edges}}};
}

Outcome run_gmeasure(const Source& src, std::size_t depth)
{
    GFunction g = load_g(src);
    const SoficPresentation& p = g.presentation();
    json report = table_json(stationary_g_measure(g, depth));
    json pi = json::object();
    auto law = stationary_law(g);
    for (State q = 0; q < p.num_states(); ++q)
        pi[p.state_name(q)] = to_string(law[q]);
    report["stationary"] = pi;
    return {report};
}

Outcome run_verify(const Source& src, const std::string& table_path, std::size_t depth)
{
    GFunction g = load_g(src);
    const Alphabet& alpha = g.presentation().alphabet();
    ShiftMeasureTable table = io::parse_measure_table(io::read_file(table_path), table_path);
    GMeasureReport rep = verify_g_measure(g, table, depth);
    json violations = json::array();
    for (const GMeasureViolation& v : rep.violations)
        violations.push_back({{"a", alpha.format(v.a)},
                              {"sigma", alpha.name(v.alpha)},
                              {"expected", to_string(v.expected)},
                              {"actual", to_string(v.actual)}});
    return {{{"holds", rep.holds},
             {"depth", depth},
             {"checked", rep.checked},
             {"violations", violations},
             {"unresolved", words_json(alpha, rep.unresolved)}},
            rep.holds ? 0 : 1};
}

Outcome run_sample(const Source& src, const std::string& start, std::uint64_t seed, std::size_t length, bool path)
{
    GFunction g = load_g(src);
    const SoficPresentation& p = g.presentation();
    State q = 0;
    if (!start.empty()) {
        auto found = p.find_state(start);
        if (!found)
            throw Error(ErrorKind::InvalidArgument, "unknown start state '" + start + "'");
        q = *found;
    }
    Word w = sample_path(g, q, seed, length);
    std::vector<std::size_t> counts(p.alphabet().size(), 0);
    for (Symbol s : w)
        ++counts[s];
    json freq = json::object();
    for (Symbol s = 0; s < counts.size(); ++s)
        freq[p.alphabet().name(s)] = counts[s];
    json report = {{"seed", seed}, {"length", length}, {"start", p.state_name(q)}, {"counts", freq}};
    if (path)
        report["path"] = p.alphabet().format(w);
    return {report};
}

json report_json(const VertexSet& set, const ContractivityReport& rep)
{
    const Alphabet& alpha = set.alphabet();
    json wit = json::array();
    for (const ConditionIWitness& w : rep.cond_i_witnesses)
        wit.push_back({{"member", set.name(w.member)}, {"source", set.name(w.source)}, {"sigma", alpha.name(w.alpha)}});
    json fails = json::array();
    for (std::size_t m : rep.cond_i_failures)
        fails.push_back(set.name(m));
    json anchors = json::array();
    for (const auto& [m, past] : rep.anchors)
        anchors.push_back({{"member", set.name(m)}, {"past", past_json(alpha, past)}});
    json samples = json::array();
    for (const PastSample& s : rep.samples) {
        json limit = json::array();
        for (std::size_t m : s.limit_members)
            limit.push_back(set.name(m));
        json iii = json::array();
        for (const auto& [m, w] : s.iii_witnesses)
            iii.push_back({{"member", set.name(m)}, {"witness", w ? past_json(alpha, *w) : json(nullptr)}});
        samples.push_back({{"past", past_json(alpha, s.past)},
                           {"limit_members", limit},
                           {"marginal_counts", s.marginal_counts},
                           {"in_d_infinity", s.in_d_infinity},
                           {"ii_witness", s.ii_witness ? past_json(alpha, *s.ii_witness) : json(nullptr)},
                           {"iii_witnesses", iii}});
    }
    return {{"k", rep.k},
            {"epsilon", to_string(rep.epsilon)},
            {"condition_I", rep.cond_i},
            {"condition_II", rep.cond_ii},
            {"condition_III", rep.cond_iii},
            {"contractive", rep.contractive()},
            {"condition_I_witnesses", wit},
            {"condition_I_failures", fails},
            {"anchors", anchors},
            {"samples", samples}};
}

VertexSet load_vertices(const Source& src, const std::string& path)
{
    return io::parse_vertices(load_g(src), io::read_file(path), path);
}

Outcome run_mgraph_check(const Source& src, const std::string& vertices, std::size_t k, const std::string& eps)
{
    VertexSet set = load_vertices(src, vertices);
    Rational e = parse_rational(eps);
    if (k == 0 || e <= 0)
        throw Error(ErrorKind::InvalidArgument, "k and eps must be positive");
    ContractivityReport rep = check_residually_contractive(set, k, e, default_pasts(set));
    return {report_json(set, rep), rep.contractive() ? 0 : 1};
}

Outcome run_g_from_m(const Source& src, const std::string& vertices)
{
    return {g_json(g_from_M(load_vertices(src, vertices)))};
}

Outcome run_m_from_g(const Source& src)
{
    GFunction g = load_g(src);
    VertexSet set = M_from_g(g);
    const SoficPresentation& p = g.presentation();
    json members = json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        json initial = json::object();
        for (State q = 0; q < p.num_states(); ++q)
            if (set.member(i).initial()[q] != 0)
                initial[p.state_name(q)] = to_string(set.member(i).initial()[q]);
        members.push_back({{"name", set.name(i)}, {"initial", initial}});
    }
    return {{{"vertices", members}, {"g", g_json(g_from_M(set))}}};
}

Outcome run_transport(const Source& src, const std::string& coding_path, bool doubling, const std::string& table_path,
                      std::size_t depth)
{
    GFunction g = load_g(src);
    if (coding_path.empty() == !doubling)
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --coding, --doubling");
    BipartiteCoding coding = doubling ? doubling_coding(g.presentation())
                                      : io::parse_coding(g.presentation(), io::read_file(coding_path), coding_path);
    GFunction gt = transport_g(coding, g);
    auto violations = check_transport_identity(coding, g, gt);
    RangeInvariantReport before = range_invariants(g, depth), after = range_invariants(gt, depth);
    auto range_json = [](const RangeInvariantReport& r) {
        json values = json::array();
        for (const Rational& v : r.range)
            values.push_back(to_string(v));
        return json{{"range", values}, {"future_tables", r.future_tables}, {"depth", r.depth}};
    };
    json report = {{"coded", g_json(gt)},
                   {"identity_violations", violations.size()},
                   {"source_invariants", range_json(before)},
                   {"coded_invariants", range_json(after)}};
    int status = violations.empty() ? 0 : 1;
    if (!table_path.empty()) {
        ShiftMeasureTable table = io::parse_measure_table(io::read_file(table_path), table_path);
        ShiftMeasureTable moved = transport_measure(coding, table);
        report["table"] = table_json(moved);
        if (moved.depth >= 2) {
            GMeasureReport check = verify_g_measure(gt, moved, moved.depth - 1);
            report["table_verified"] = check.holds;
            if (!check.holds)
                status = 1;
        }
    }
    return {report, status};
}

Outcome run_eta(const std::string& path)
{
    io::FiltrationInput in = io::parse_filtration(io::read_file(path), path);
    const FiltrationModel& model = in.model;
    if (!in.weights && !in.chain)
        throw Error(ErrorKind::InvalidArgument, "the filtration file has neither `weights` nor `chain`");
    auto weights_json = [&](const std::vector<Rational>& w) {
        json out = json::object();
        for (std::size_t x = 0; x < w.size(); ++x)
            if (w[x] != 0)
                out[model.carrier()[x]] = to_string(w[x]);
        return out;
    };
    auto chain_json = [&](const NormalizedChain& c) {
        json out = json::array();
        for (int i = c.lo; i <= c.hi(); ++i)
            out.push_back({{"index", i}, {"measure", weights_json(c.at(i))}});
        return out;
    };
    json report = {{"window", {model.lo(), model.hi()}}};
    int status = 0;
    if (in.weights) {
        NormalizedChain c = eta(*in.weights, model);
        report["chain"] = chain_json(c);
        bool ok = scale_equivalent(eta_inverse(c, model), *in.weights);
        report["weights_round_trip"] = ok;
        status |= ok ? 0 : 1;
    }
    if (in.chain) {
        SigmaFiniteWeights w = eta_inverse(*in.chain, model);
        report["weights"] = weights_json(w);
        bool ok = eta(w, model) == *in.chain;
        report["chain_round_trip"] = ok;
        status |= ok ? 0 : 1;
    }
    return {report, status};
}

void add_source(CLI::App* cmd, Source& src, bool weights)
{
    cmd->add_option("--graph", src.graph, "presentation file (`src symbol dst` per line)");
    cmd->add_option("--sft", src.sft, "forbidden-word file");
    cmd->add_option("--example", src.example, "built-in example: golden, even, full, reducible");
    if (weights)
        cmd->add_option("--weights", src.weights, "weight file (`state symbol p/q` per line)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Residually defined g-functions on sofic shifts"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    Source src;
    std::size_t length = 3, n = 1, depth = 4, limit = 4096, k = default_resolution;
    std::string word, cycle, tail, mode = "omega-infinity", table, vertices, coding, start, eps = "1/1024", filtration;
    bool backward = false, doubling = false, path = false;
    std::uint64_t seed = 0;

    auto* lang = app.add_subcommand("lang", "admissible words of one length");
    add_source(lang, src, false);
    lang->add_option("--length", length, "word length");

    auto* gamma = app.add_subcommand("gamma", "extension set of a word");
    add_source(gamma, src, false);
    gamma->add_option("--word", word, "the word a")->required();
    gamma->add_option("-n", n, "extension length");
    gamma->add_flag("--backward", backward, "extend to the left");

    auto* omega = app.add_subcommand("omega", "forced future words after a");
    add_source(omega, src, false);
    omega->add_option("--word", word, "the word a")->required();
    omega->add_option("-n", n, "future length");

    auto* omega_past = app.add_subcommand("omega-past", "forced future words after an eventually periodic past");
    add_source(omega_past, src, false);
    omega_past->add_option("--cycle", cycle, "repeated block")->required();
    omega_past->add_option("--tail", tail, "block after the repetition");
    omega_past->add_option("-n", n, "future length");
    omega_past->add_option("--mode", mode, "omega or omega-infinity")
        ->check(CLI::IsMember({"omega", "omega-infinity"}));

    auto* check_d = app.add_subcommand("check-d", "decide property (D) with certificates");
    add_source(check_d, src, false);
    check_d->add_option("--limit", limit, "maximum number of certificates");

    auto* gd = app.add_subcommand("build-gd", "presenting graph of the forced language");
    add_source(gd, src, false);
    gd->add_option("--depth", depth, "label resolution");

    auto* gmeasure = app.add_subcommand("gmeasure", "stationary g-measure cylinder table");
    add_source(gmeasure, src, true);
    gmeasure->add_option("--depth", depth, "maximum word length");

    auto* verify = app.add_subcommand("verify-gmeasure", "check a table against g");
    add_source(verify, src, true);
    verify->add_option("--table", table, "measure table JSON")->required();
    verify->add_option("--depth", depth, "maximum conditioning length");

    auto* sample = app.add_subcommand("sample", "sample a path of the g-chain");
    add_source(sample, src, true);
    sample->add_option("--start", start, "start state (default: the first)");
    sample->add_option("--seed", seed, "generator seed");
    sample->add_option("--length", length, "number of symbols");
    sample->add_flag("--path", path, "print the sampled word");

    auto* mcheck = app.add_subcommand("mgraph-check", "conditions (I)-(III) for a vertex set");
    add_source(mcheck, src, true);
    mcheck->add_option("--vertices", vertices, "vertex file")->required();
    mcheck->add_option("-k", k, "cylinder resolution");
    mcheck->add_option("--eps", eps, "tolerance p/q");

    auto* gfm = app.add_subcommand("g-from-m", "g-function of a contractive vertex set");
    add_source(gfm, src, true);
    gfm->add_option("--vertices", vertices, "vertex file")->required();

    auto* mfg = app.add_subcommand("m-from-g", "vertex set of a g-function");
    add_source(mfg, src, true);

    auto* transport = app.add_subcommand("transport", "image of g under a bipartite coding");
    add_source(transport, src, true);
    transport->add_option("--coding", coding, "coding file");
    transport->add_flag("--doubling", doubling, "use the 2-block doubling coding");
    transport->add_option("--table", table, "measure table JSON to push forward");
    transport->add_option("--depth", depth, "resolution of the range report");

    auto* eta_cmd = app.add_subcommand("eta", "normalized chain of weights, or weights of a chain");
    eta_cmd->add_option("--filtration", filtration, "filtration JSON")->required();

    for (CLI::App* cmd : app.get_subcommands({}))
        cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Outcome out;
        if (*lang)
            out = run_lang(src, length);
        else if (*gamma)
            out = run_gamma(src, word, n, backward);
        else if (*omega)
            out = run_omega(src, word, n);
        else if (*omega_past)
            out = run_omega_past(src, cycle, tail, n, mode);
        else if (*check_d)
            out = run_check_d(src, limit);
        else if (*gd)
            out = run_build_gd(src, depth);
        else if (*gmeasure)
            out = run_gmeasure(src, depth);
        else if (*verify)
            out = run_verify(src, table, depth);
        else if (*sample)
            out = run_sample(src, start, seed, length, path);
        else if (*mcheck)
            out = run_mgraph_check(src, vertices, k, eps);
        else if (*gfm)
            out = run_g_from_m(src, vertices);
        else if (*mfg)
            out = run_m_from_g(src);
        else if (*transport)
            out = run_transport(src, coding, doubling, table, depth);
        else
            out = run_eta(filtration);
        if (format == "json")
            std::cout << out.report.dump(2) << "\n";
        else
            render_text(std::cout, out.report, "");
        return out.status;
    } catch (const Error& e) {
        if (format == "json")
            std::cout << json{{"error", std::string(kind_name(e.kind()))}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << "gshift: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "gshift: " << e.what() << "\n";
        return 2;
    }
}
