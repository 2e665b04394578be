#ifndef COXSTAR_JSON_IO_HPP_
#define COXSTAR_JSON_IO_HPP_

#include <json.hpp>

#include "coxstar/counterexamples.hpp"
#include "coxstar/h_invariant.hpp"
#include "coxstar/star_ops.hpp"
#include "coxstar/tl_algebra.hpp"

namespace coxstar::json_io {

using nlohmann::json;

json to_json(const CoxeterGraph& g);
CoxeterGraph graph_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);
/// Accepts "0 1 0", "0,1,0" or a JSON array.
Word parse_word(const std::string& text);

json to_json(const Trace& t);
Trace trace_from_json(const CoxeterGraph& g, const json& j);

json to_json(const FcElement& w);

/// {"exp": coeff}; coefficients that do not fit in 64 bits are strings.
json to_json(const LaurentInt& a);
LaurentInt laurent_from_json(const json& j);

json to_json(const TlElement& x);
TlElement tl_from_json(const CoxeterGraph& g, const json& j);

json to_json(const StarPath& p);
json to_json(const std::vector<HMove>& log);
json to_json(const ClassificationVerdict& v);
json to_json(const FcEnumeration& e);

}  // namespace coxstar::json_io

#endif  // COXSTAR_JSON_IO_HPP_
