// io.hpp -- text and JSON formats for presentations, weights, codings, vertex
// sets, measure tables and filtrations. Every loader validates the object it
// builds; syntax errors carry `source:line:column`.

#ifndef GSHIFT_IO_HPP
#define GSHIFT_IO_HPP

#include <string>
#include <string_view>

#include "gshift/conjugacy.hpp"
#include "gshift/filtration.hpp"
#include "gshift/gmeasure.hpp"
#include "gshift/language.hpp"
#include "gshift/measure_graph.hpp"

namespace gshift::io {

/// Whole file as a string. Throws InvalidArgument if unreadable.
std::string read_file(const std::string& path);

/// Edges `src symbol dst`, `#` comments. Symbols and states are numbered in
/// order of first appearance unless an `alphabet: s1 s2 ...` line comes first.
SoficPresentation parse_presentation(std::string_view text, std::string_view source = "<input>");

/// `alphabet: s1 s2 ...` followed by one forbidden word per line.
SftSpec parse_forbidden(std::string_view text, std::string_view source = "<input>");

/// Lines `state symbol p/q`; absent pairs weigh 0. Sums must be exactly 1.
GFunction parse_weights(const SoficPresentation& pres, std::string_view text, std::string_view source = "<input>");

/// Lines `psi: s -> d dt` and `psitilde: st -> dt d`. Half-symbol and coded
/// alphabets are numbered by first appearance.
BipartiteCoding parse_coding(const SoficPresentation& domain, std::string_view text,
                             std::string_view source = "<input>");

/// Lines `name state:p/q,state:p/q,...` over the carrier of g.
VertexSet parse_vertices(const GFunction& g, std::string_view text, std::string_view source = "<input>");

/// {"alphabet": [...], "depth": n, "values": {"word": "p/q", ...}}; absent words are 0.
ShiftMeasureTable parse_measure_table(std::string_view text, std::string_view source = "<input>");
std::string format_measure_table(const ShiftMeasureTable& table);

/// {"carrier": [...], "window": [lo, hi], "sets": [[...], ...] from lo to hi,
///  optional "weights": {"x": "p/q"} and "chain": [{"x": "p/q"}, ...]}.
struct FiltrationInput {
    FiltrationModel model;
    std::optional<SigmaFiniteWeights> weights;
    std::optional<NormalizedChain> chain;
};
FiltrationInput parse_filtration(std::string_view text, std::string_view source = "<input>");

} // namespace gshift::io

#endif // GSHIFT_IO_HPP
