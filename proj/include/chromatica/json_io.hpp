#ifndef CHROMATICA_JSON_IO_HPP
#define CHROMATICA_JSON_IO_HPP

#include "chromatica/analysis.hpp"
#include "chromatica/graph.hpp"
#include "chromatica/symfunc.hpp"
#include "chromatica/tableaux.hpp"

#include "json.hpp"

namespace chromatica {

// Insertion-ordered objects keep serialized reports byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const TPoly& p);        // array of decimal strings, lowest t-power first
Json to_json(const SymFunc& f);      // {"basis","degree","terms":[...]}
Json to_json(const Graph& g);        // {"n","edges"}
Json to_json(const IntervalSeq& s);  // array of ints
Json to_json(const IntPoly& p);
Json to_json(const PTableau& t);
Json to_json(const PositivityReport& r);
Json to_json(const InjectionReport& r);
Json to_json(const UniquenessReport& r);

Graph graph_from_json(const Json& j);

} // namespace chromatica

#endif
