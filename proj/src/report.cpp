#include "cycont/report.hpp"

#include "cycont/error.hpp"

namespace cycont::report {

Json vector_json(const ParikhVector& v) {
    Json out = Json::array();
    for (auto n : v.counts()) out.push_back(n);
    return out;
}

ParikhVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("Parikh vector must be a JSON array");
    std::vector<std::size_t> counts;
    for (const auto& e : j) {
        if (!e.is_number_unsigned()) throw ParseError("Parikh vector entries must be non-negative integers");
        counts.push_back(e.get<std::size_t>());
    }
    return ParikhVector(std::move(counts));
}

Json membership_json(const ClassMembership& m) {
    return Json{{"in_S", m.in_S}, {"in_S_alt", m.in_S_alt}, {"in_U", m.in_U}, {"in_U_alt", m.in_U_alt}};
}

Json search_json(const SearchReport& r, const Alphabet& alphabet) {
    Json optima = Json::array();
    for (const auto& o : r.optima)
        optima.push_back(Json{{"word", alphabet.format(o.word.canonical())},
                              {"reversal", alphabet.format(o.word.reversed().canonical())},
                              {"membership", membership_json(o.certificate)}});
    Json values = Json::array();
    for (auto v : alphabet.values()) values.push_back(v);
    return Json{{"vector", vector_json(r.parikh)},
                {"alphabet", alphabet.names()},
                {"values", values},
                {"valuation", to_string(r.valuation)},
                {"direction", to_string(r.direction)},
                {"class_size", r.class_size},
                {"value", to_decimal(r.value)},
                {"optima", optima},
                {"unique_up_to_reversal", r.unique_up_to_reversal}};
}

Json graph_json(const ExchangeGraph& g, const Alphabet& alphabet) {
    Json vertices = Json::array(), edges = Json::array(), adjacency = Json::object();
    auto name = [&](std::size_t i) { return alphabet.format(g.vertices[i].canonical()); };
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        vertices.push_back(name(i));
        Json targets = Json::array();
        for (auto t : g.out_edges[i]) {
            targets.push_back(name(t));
            edges.push_back(Json::array({name(i), name(t)}));
        }
        adjacency[name(i)] = targets;
    }
    Json sources = Json::array(), sinks = Json::array();
    for (auto i : g.sources()) sources.push_back(name(i));
    for (auto i : g.sinks()) sinks.push_back(name(i));
    return Json{{"vector", vector_json(g.parikh)},
                {"alphabet", alphabet.names()},
                {"kind", to_string(g.kind)},
                {"vertices", vertices},
                {"edges", edges},
                {"adjacency", adjacency},
                {"sources", sources},
                {"sinks", sinks},
                {"acyclic", g.acyclic()}};
}

Json construction_json(const Construction& c, const Alphabet& alphabet) {
    const auto& t = c.trace;
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back(Json{{"vector", vector_json(s.vector)}, {"letter", alphabet.name(s.letter)}, {"delta", s.removed}});
    Json words = Json::array();
    for (const auto& w : t.words) words.push_back(alphabet.format(w.canonical()));
    return Json{{"vector", vector_json(t.input)},
                {"alphabet", alphabet.names()},
                {"steps", steps},
                {"terminal", Json{{"vector", vector_json(t.terminal)}, {"letter", alphabet.name(t.terminal_letter)}}},
                {"words", words},
                {"outcome", c.outcome ? alphabet.format(c.outcome->canonical()) : std::string("FAILURE")}};
}

}  // namespace cycont::report
