#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycont/continuants.hpp"
#include "cycont/error.hpp"
#include "cycont/extremal.hpp"
#include "cycont/singular.hpp"

namespace py = pybind11;
using namespace cycont;

namespace {

using Values = std::optional<std::vector<std::uint64_t>>;

Alphabet make_alphabet(const std::optional<std::vector<std::string>>& names, std::size_t fallback, const Values& values) {
    if (names) return Alphabet(*names, values);
    return Alphabet::letters(values ? values->size() : fallback, values);
}

py::object to_int(const BigNat& n) { return py::module_::import("builtins").attr("int")(to_decimal(n)); }

py::object to_fraction(const Rational& q) {
    return py::module_::import("fractions")
        .attr("Fraction")(to_int(boost::multiprecision::numerator(q)), to_int(boost::multiprecision::denominator(q)));
}

ContinuantKind kind_of(const std::string& s) {
    if (s == "regular") return ContinuantKind::Regular;
    if (s == "semiregular") return ContinuantKind::Semiregular;
    throw ParseError("kind must be 'regular' or 'semiregular'");
}

SyncKind order_of(const std::string& s) {
    if (s == "plain") return SyncKind::Plain;
    if (s == "alt") return SyncKind::Alt;
    throw ParseError("order must be 'plain' or 'alt'");
}

std::size_t letters_in(const std::string& w) {
    std::size_t k = 1;
    for (char c : w)
        if (c >= 'a' && c <= 'z') k = std::max<std::size_t>(k, static_cast<std::size_t>(c - 'a') + 1);
    return k;
}

py::dict membership(const ClassMembership& m) {
    py::dict d;
    d["in_S"] = m.in_S;
    d["in_S_alt"] = m.in_S_alt;
    d["in_U"] = m.in_U;
    d["in_U_alt"] = m.in_U_alt;
    return d;
}

}  // namespace

PYBIND11_MODULE(_cycont, m) {
    m.doc() = "Exact cyclic continuants, extremal arrangements and singular cyclic words";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def(
        "continuant",
        [](const std::string& word, std::vector<std::uint64_t> values, const std::string& kind,
           std::optional<std::vector<std::string>> alphabet) {
            Alphabet a = make_alphabet(alphabet, 0, values);
            return to_int(continuant(a.parse(word), a, kind_of(kind)));
        },
        py::arg("word"), py::arg("values"), py::arg("kind") = "regular", py::arg("alphabet") = py::none());

    m.def(
        "cyclic_continuant",
        [](const std::string& word, std::vector<std::uint64_t> values, const std::string& kind,
           std::optional<std::vector<std::string>> alphabet) {
            Alphabet a = make_alphabet(alphabet, 0, values);
            return to_int(cyclic_continuant(canonicalize(a.parse(word)), a, kind_of(kind)));
        },
        py::arg("word"), py::arg("values"), py::arg("kind") = "semiregular", py::arg("alphabet") = py::none());

    m.def(
        "cf_value",
        [](const std::string& word, std::vector<std::uint64_t> values, const std::string& kind) {
            Alphabet a = Alphabet::letters(values.size(), values);
            return to_fraction(cf_value(a.parse(word), a, kind_of(kind)));
        },
        py::arg("word"), py::arg("values"), py::arg("kind") = "regular");

    m.def(
        "canonicalize",
        [](const std::string& word) {
            Alphabet a = Alphabet::letters(letters_in(word));
            return a.format(canonicalize(a.parse(word)).canonical());
        },
        py::arg("word"));

    m.def(
        "enumerate_class",
        [](std::vector<std::size_t> vector) {
            Alphabet a = Alphabet::letters(vector.size());
            std::vector<std::string> out;
            for (const auto& w : enumerate_class(ParikhVector(vector))) out.push_back(a.format(w.canonical()));
            return out;
        },
        py::arg("vector"));

    m.def(
        "classify",
        [](const std::string& word) {
            Alphabet a = Alphabet::letters(letters_in(word));
            return membership(classify(canonicalize(a.parse(word))));
        },
        py::arg("word"));

    m.def(
        "is_singular",
        [](const std::string& word, const std::string& order) {
            Alphabet a = Alphabet::letters(letters_in(word));
            return is_singular(canonicalize(a.parse(word)), order_of(order));
        },
        py::arg("word"), py::arg("order") = "plain");

    m.def(
        "search",
        [](std::vector<std::size_t> vector, std::vector<std::uint64_t> values, const std::string& kind,
           const std::string& direction, unsigned jobs) {
            Alphabet a = Alphabet::letters(values.size(), values);
            Direction d = direction == "max" ? Direction::Max : direction == "min" ? Direction::Min
                                                                                    : throw ParseError("direction must be 'max' or 'min'");
            SearchReport r;
            {
                py::gil_scoped_release release;
                r = search(ParikhVector(vector), a, kind_of(kind), d, jobs);
            }
            py::list optima;
            for (const auto& o : r.optima) {
                py::dict e;
                e["word"] = a.format(o.word.canonical());
                e["membership"] = membership(o.certificate);
                optima.append(e);
            }
            py::dict out;
            out["value"] = to_int(r.value);
            out["optima"] = optima;
            out["unique_up_to_reversal"] = r.unique_up_to_reversal;
            out["class_size"] = r.class_size;
            return out;
        },
        py::arg("vector"), py::arg("values"), py::arg("kind") = "semiregular", py::arg("direction") = "max",
        py::arg("jobs") = 1);

    m.def(
        "exchange_graph",
        [](std::vector<std::size_t> vector, const std::string& order) {
            Alphabet a = Alphabet::letters(vector.size());
            auto g = build_exchange_graph(ParikhVector(vector), order_of(order));
            auto name = [&](std::size_t i) { return a.format(g.vertices[i].canonical()); };
            py::dict adjacency;
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                std::vector<std::string> t;
                for (auto j : g.out_edges[i]) t.push_back(name(j));
                adjacency[py::str(name(i))] = t;
            }
            std::vector<std::string> sources, sinks;
            for (auto i : g.sources()) sources.push_back(name(i));
            for (auto i : g.sinks()) sinks.push_back(name(i));
            py::dict out;
            out["adjacency"] = adjacency;
            out["sources"] = sources;
            out["sinks"] = sinks;
            out["acyclic"] = g.acyclic();
            return out;
        },
        py::arg("vector"), py::arg("order") = "plain");

    m.def(
        "construct",
        [](std::vector<std::size_t> vector) {
            Alphabet a = Alphabet::letters(vector.size());
            auto c = construct_singular(ParikhVector(vector));
            py::list steps;
            for (const auto& s : c.trace.steps)
                steps.append(py::make_tuple(s.vector.counts(), a.name(s.letter), s.removed));
            std::vector<std::string> words;
            for (const auto& w : c.trace.words) words.push_back(a.format(w.canonical()));
            py::dict out;
            out["steps"] = steps;
            out["terminal"] = c.trace.terminal.counts();
            out["words"] = words;
            out["outcome"] = c.outcome ? py::object(py::str(a.format(c.outcome->canonical()))) : py::object(py::none());
            return out;
        },
        py::arg("vector"));

    m.def(
        "xi",
        [](const std::string& letter, const std::string& word, bool cyclic, bool inverse) -> std::optional<std::string> {
            std::size_t k = std::max(letters_in(word), letters_in(letter));
            Alphabet a = Alphabet::letters(k);
            auto b = a.find(letter);
            if (!b) throw ParseError("unknown letter '" + letter + "'");
            Word x = a.parse(word);
            if (cyclic) {
                auto w = canonicalize(x);
                if (!inverse) return a.format(xi_cyclic(*b, w).canonical());
                auto p = xi_preimage(*b, w);
                return p ? std::optional<std::string>(a.format(p->canonical())) : std::nullopt;
            }
            if (!inverse) return a.format(xi_linear(*b, x));
            auto p = xi_preimage(*b, x);
            return p ? std::optional<std::string>(a.format(*p)) : std::nullopt;
        },
        py::arg("letter"), py::arg("word"), py::arg("cyclic") = false, py::arg("inverse") = false);

    m.def(
        "christoffel",
        [](std::size_t p, std::size_t q) { return Alphabet::letters(2).format(christoffel(p, q).canonical()); },
        py::arg("p"), py::arg("q"));

    m.def(
        "is_balanced",
        [](const std::string& word) {
            Alphabet a = Alphabet::letters(std::max<std::size_t>(2, letters_in(word)));
            return is_balanced(canonicalize(a.parse(word)));
        },
        py::arg("word"));
}
