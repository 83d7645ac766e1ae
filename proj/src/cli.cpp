#include "cycont/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cycont/continuants.hpp"
#include "cycont/error.hpp"
#include "cycont/extremal.hpp"
#include "cycont/report.hpp"
#include "cycont/singular.hpp"
#include "cycont/words.hpp"

namespace cycont::cli {

namespace {

using report::Json;

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) names.push_back(item);
        if (!text.empty() && text.back() == ',') names.emplace_back();
    } else {
        for (char c : text) names.emplace_back(1, c);
    }
    return names;
}

// Alphabet from --alphabet, else the first k letters where k comes from
// --values, --vector, or the largest letter of --word, in that order.
Alphabet resolve_alphabet(const RunConfig& cfg) {
    if (cfg.alphabet) return Alphabet(split_names(*cfg.alphabet), cfg.values);
    std::size_t k = 0;
    if (cfg.values)
        k = cfg.values->size();
    else if (cfg.vector)
        k = cfg.vector->size();
    else if (cfg.word) {
        for (char c : *cfg.word) {
            if (c < 'a' || c > 'z') throw ParseError(std::string("unknown symbol '") + c + "'; pass --alphabet");
            k = std::max<std::size_t>(k, static_cast<std::size_t>(c - 'a') + 1);
        }
        if (cfg.letter && cfg.letter->size() == 1 && (*cfg.letter)[0] >= 'a' && (*cfg.letter)[0] <= 'z')
            k = std::max<std::size_t>(k, static_cast<std::size_t>((*cfg.letter)[0] - 'a') + 1);
        k = std::max<std::size_t>(k, 1);
    }
    if (k == 0) throw ParseError("cannot infer the alphabet; pass --alphabet");
    return Alphabet::letters(k, cfg.values);
}

ParikhVector resolve_vector(const RunConfig& cfg, const Alphabet& alphabet) {
    if (!cfg.vector) throw ParseError("--vector is required");
    if (cfg.vector->size() != alphabet.size())
        throw ParseError("--vector has " + std::to_string(cfg.vector->size()) + " entries but the alphabet has " +
                         std::to_string(alphabet.size()) + " symbols");
    ParikhVector v(*cfg.vector);
    if (v.is_zero()) throw DomainError("zero vector");
    return v;
}

void guard_size(const RunConfig& cfg, const ParikhVector& v) {
    if (v.total() > cfg.limit)
        throw DomainError("refusing to enumerate a class of total " + std::to_string(v.total()) +
                          " (> --limit " + std::to_string(cfg.limit) + "); raise --limit to override");
}

Symbol resolve_letter(const RunConfig& cfg, const Alphabet& alphabet) {
    if (!cfg.letter) throw ParseError("--letter is required");
    auto s = alphabet.find(*cfg.letter);
    if (!s) throw ParseError("unknown symbol '" + *cfg.letter + "'");
    return *s;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- commands ---------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.word) throw ParseError("--word is required");
    if (!cfg.values) throw ParseError("--values is required for evaluation");
    const Alphabet alphabet = resolve_alphabet(cfg);
    const Word x = alphabet.parse(*cfg.word);

    bool semi_ok = true;
    for (auto v : alphabet.values()) semi_ok = semi_ok && v >= 2;
    std::vector<std::string> kinds = cfg.eval_kinds;
    if (kinds.empty()) {
        kinds = {"regular", "cyclic-regular"};
        if (semi_ok) kinds.insert(kinds.end(), {"semiregular", "cyclic-semiregular"});
    }

    Json results = Json::array();
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& kind : kinds) {
        std::string value;
        if (kind == "regular")
            value = to_decimal(continuant_regular(x, alphabet));
        else if (kind == "semiregular")
            value = to_decimal(continuant_semiregular(x, alphabet));
        else if (kind == "cyclic-regular")
            value = to_decimal(cyclic_regular(canonicalize(x), alphabet));
        else if (kind == "cyclic-semiregular")
            value = to_decimal(cyclic_semiregular(canonicalize(x), alphabet));
        else if (kind == "cf-regular")
            value = to_string(cf_value(x, alphabet, ContinuantKind::Regular));
        else if (kind == "cf-semiregular")
            value = to_string(cf_value(x, alphabet, ContinuantKind::Semiregular));
        rows.emplace_back(kind, value);
        results.push_back(Json{{"kind", kind}, {"value", value}});
    }

    if (cfg.format == "text") {
        if (rows.size() == 1)
            out << rows[0].second << '\n';
        else
            for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
        return kOk;
    }
    Json values = Json::array();
    for (auto v : alphabet.values()) values.push_back(v);
    Json j{{"word", alphabet.format(x)},
           {"representative", x.empty() ? Json(nullptr) : Json(alphabet.format(canonicalize(x).canonical()))},
           {"alphabet", alphabet.names()},
           {"values", values},
           {"results", results}};
    emit(out, j);
    return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.word) throw ParseError("--word is required");
    const Alphabet alphabet = resolve_alphabet(cfg);
    const CyclicWord w = canonicalize(alphabet.parse(*cfg.word));
    const ClassMembership m = classify(w);
    if (cfg.format == "text") {
        out << "canonical\t" << alphabet.format(w.canonical()) << '\n'
            << "in_S\t" << m.in_S << "\nin_S_alt\t" << m.in_S_alt << "\nin_U\t" << m.in_U << "\nin_U_alt\t"
            << m.in_U_alt << '\n';
        return kOk;
    }
    Json j{{"word", *cfg.word},
           {"canonical", alphabet.format(w.canonical())},
           {"parikh", report::vector_json(parikh(w, alphabet.size()))},
           {"membership", report::membership_json(m)},
           {"singular", m.in_S},
           {"alt_singular", m.in_S_alt}};
    emit(out, j);
    return kOk;
}

int cmd_search(const RunConfig& cfg, std::ostream& out) {
    const Alphabet alphabet = resolve_alphabet(cfg);
    const ParikhVector v = resolve_vector(cfg, alphabet);
    guard_size(cfg, v);
    if (!cfg.values) throw ParseError("--values is required for search");
    const auto valuation = cfg.semiregular ? ContinuantKind::Semiregular : ContinuantKind::Regular;
    const auto direction = cfg.maximize ? Direction::Max : Direction::Min;
    const SearchReport r = search(v, alphabet, valuation, direction, cfg.jobs);

    if (cfg.format == "csv") {
        std::string vec, vals;
        for (std::size_t i = 0; i < v.letters(); ++i) vec += (i ? ";" : "") + std::to_string(v[static_cast<Symbol>(i)]);
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            vals += (i ? ";" : "") + std::to_string(alphabet.value(static_cast<Symbol>(i)));
        out << "vector,values,valuation,direction,value,optimum,in_S,in_S_alt,in_U,in_U_alt,unique_up_to_reversal\n";
        for (const auto& o : r.optima) {
            const auto& c = o.certificate;
            out << vec << ',' << vals << ',' << to_string(valuation) << ',' << to_string(direction) << ','
                << to_decimal(r.value) << ',' << alphabet.format(o.word.canonical()) << ',' << c.in_S << ','
                << c.in_S_alt << ',' << c.in_U << ',' << c.in_U_alt << ',' << r.unique_up_to_reversal << '\n';
        }
        return kOk;
    }
    if (cfg.format == "text") {
        out << "value\t" << to_decimal(r.value) << '\n';
        for (const auto& o : r.optima) out << "optimum\t" << alphabet.format(o.word.canonical()) << '\n';
        out << "unique_up_to_reversal\t" << r.unique_up_to_reversal << '\n';
        return kOk;
    }
    emit(out, report::search_json(r, alphabet));
    return kOk;
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    const Alphabet alphabet = resolve_alphabet(cfg);
    const ParikhVector v = resolve_vector(cfg, alphabet);
    const Construction c = construct_singular(v);
    if (cfg.format == "text") {
        for (const auto& s : c.trace.steps) {
            out << "step\t";
            for (std::size_t i = 0; i < s.vector.letters(); ++i) out << (i ? "," : "") << s.vector.counts()[i];
            out << '\t' << alphabet.name(s.letter) << '\t' << s.removed << '\n';
        }
        out << "terminal\t";
        for (std::size_t i = 0; i < c.trace.terminal.letters(); ++i)
            out << (i ? "," : "") << c.trace.terminal.counts()[i];
        out << '\t' << alphabet.name(c.trace.terminal_letter) << '\n';
        for (const auto& w : c.trace.words) out << "word\t" << alphabet.format(w.canonical()) << '\n';
        out << "outcome\t" << (c.outcome ? alphabet.format(c.outcome->canonical()) : std::string("FAILURE")) << '\n';
    } else {
        emit(out, report::construction_json(c, alphabet));
    }
    return c.outcome ? kOk : kFailure;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out) {
    const Alphabet alphabet = resolve_alphabet(cfg);
    const ParikhVector v = resolve_vector(cfg, alphabet);
    guard_size(cfg, v);
    const ExchangeGraph g = build_exchange_graph(v, cfg.alt ? SyncKind::Alt : SyncKind::Plain, cfg.jobs);
    if (cfg.format == "dot") {
        out << to_dot(g, alphabet);
        return kOk;
    }
    if (cfg.format == "text") {
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            out << alphabet.format(g.vertices[i].canonical()) << ':';
            for (auto t : g.out_edges[i]) out << ' ' << alphabet.format(g.vertices[t].canonical());
            out << '\n';
        }
        return kOk;
    }
    emit(out, report::graph_json(g, alphabet));
    return kOk;
}

int cmd_xi(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.word) throw ParseError("--word is required");
    const Alphabet alphabet = resolve_alphabet(cfg);
    const Symbol b = resolve_letter(cfg, alphabet);
    const Word x = alphabet.parse(*cfg.word);
    std::optional<std::string> result;
    if (cfg.cyclic) {
        const CyclicWord w = canonicalize(x);
        if (cfg.inverse) {
            if (auto pre = xi_preimage(b, w)) result = alphabet.format(pre->canonical());
        } else {
            result = alphabet.format(xi_cyclic(b, w).canonical());
        }
    } else if (cfg.inverse) {
        if (auto pre = xi_preimage(b, x)) result = alphabet.format(*pre);
    } else {
        result = alphabet.format(xi_linear(b, x));
    }
    if (cfg.format == "text") {
        out << (result ? *result : std::string("none")) << '\n';
        return kOk;
    }
    Json j{{"letter", alphabet.name(b)},
           {"word", alphabet.format(x)},
           {"cyclic", cfg.cyclic},
           {"inverse", cfg.inverse},
           {"result", result ? Json(*result) : Json(nullptr)}};
    emit(out, j);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact cyclic continuants, extremal arrangements and singular words", "cycont"};
    app.require_subcommand(1);

    std::vector<std::uint64_t> values;
    std::vector<std::size_t> vec;
    std::string alphabet, word, letter;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--alphabet", alphabet, "ordered symbols: 'abcde' or 'x1,x2,x3'");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text", "csv", "dot"}));
    };
    auto values_opt = [&](CLI::App* sub) {
        sub->add_option("--values", values, "strictly increasing positive integer per symbol")->delimiter(',');
    };
    auto vector_opt = [&](CLI::App* sub) {
        sub->add_option("--vector", vec, "Parikh vector aligned with the alphabet")->delimiter(',');
    };
    auto guard_opts = [&](CLI::App* sub) {
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--limit", cfg.limit, "largest class total enumerated");
    };

    auto* eval = app.add_subcommand("eval", "evaluate continuants of a word");
    common(eval);
    values_opt(eval);
    eval->add_option("--word", word, "linear word (cyclic kinds use its rotation class)");
    for (const char* kind : {"regular", "semiregular", "cyclic-regular", "cyclic-semiregular", "cf-regular", "cf-semiregular"}) {
        std::string k = kind;
        eval->add_flag_callback("--" + k, [&cfg, k] { cfg.eval_kinds.push_back(k); }, "report " + k);
    }

    auto* cls = app.add_subcommand("classify", "membership of a cyclic word in S, S_alt, U, U_alt");
    common(cls);
    cls->add_option("--word", word, "representative of the cyclic word");

    auto* srch = app.add_subcommand("search", "exhaustive extremal search over a cyclic Abelian class");
    common(srch);
    values_opt(srch);
    vector_opt(srch);
    guard_opts(srch);
    auto* reg = srch->add_flag_callback("--regular", [&] { cfg.semiregular = false; }, "cyclic regular continuant");
    auto* semi = srch->add_flag_callback("--semiregular", [&] { cfg.semiregular = true; }, "cyclic semi-regular continuant (default)");
    reg->excludes(semi);
    auto* mx = srch->add_flag_callback("--max", [&] { cfg.maximize = true; }, "maximize (default)");
    auto* mn = srch->add_flag_callback("--min", [&] { cfg.maximize = false; }, "minimize");
    mx->excludes(mn);

    auto* cons = app.add_subcommand("construct", "build the singular cyclic word by arithmetic descent");
    common(cons);
    vector_opt(cons);

    auto* graph = app.add_subcommand("graph", "directed exchange graph of a symmetric class");
    common(graph);
    vector_opt(graph);
    guard_opts(graph);
    auto* plain = graph->add_flag_callback("--plain", [&] { cfg.alt = false; }, "plain order (default)");
    auto* alt = graph->add_flag_callback("--alt", [&] { cfg.alt = true; }, "alternating order");
    plain->excludes(alt);

    auto* xi = app.add_subcommand("xi", "apply the insertion map xi_b or its inverse");
    common(xi);
    xi->add_option("--letter", letter, "the letter b")->required();
    xi->add_option("--word", word, "input word");
    xi->add_flag("--cyclic", cfg.cyclic, "treat the word as cyclic");
    xi->add_flag("--inverse", cfg.inverse, "compute the preimage");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    auto given = [&](const char* name) {
        auto* opt = chosen->get_option_no_throw(name);
        return opt != nullptr && opt->count() > 0;
    };
    if (given("--alphabet")) cfg.alphabet = alphabet;
    if (given("--values")) cfg.values = values;
    if (given("--vector")) cfg.vector = vec;
    if (given("--word")) cfg.word = word;
    if (given("--letter")) cfg.letter = letter;

    try {
        if (cfg.command == "eval") return cmd_eval(cfg, out);
        if (cfg.command == "classify") return cmd_classify(cfg, out);
        if (cfg.command == "search") return cmd_search(cfg, out);
        if (cfg.command == "construct") return cmd_construct(cfg, out);
        if (cfg.command == "graph") return cmd_graph(cfg, out);
        if (cfg.command == "xi") return cmd_xi(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    err << "error: unknown command\n";
    return kUsage;
}

}  // namespace cycont::cli
