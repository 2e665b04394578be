#include "coxstar/json_io.hpp"

#include <sstream>

#include "coxstar/errors.hpp"

namespace coxstar::json_io {

json to_json(const CoxeterGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.bonds()) {
    json label = e.label == kInfinity ? json("inf") : json(e.label);
    edges.push_back(json::array({e.i, e.j, label}));
  }
  return {{"rank", g.rank()}, {"edges", edges}};
}

CoxeterGraph graph_from_json(const json& j) {
  try {
    const int rank = j.at("rank").get<int>();
    std::vector<Edge> edges;
    for (const json& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 3) throw DomainError("edge must be [i, j, m]");
      Label m;
      if (e[2].is_string()) {
        if (e[2].get<std::string>() != "inf") throw DomainError("edge label must be an integer or \"inf\"");
        m = kInfinity;
      } else {
        const long long raw = e[2].get<long long>();
        if (raw < 2 || raw >= static_cast<long long>(kInfinity)) throw DomainError("edge label out of range");
        m = static_cast<Label>(raw);
      }
      edges.push_back({e[0].get<Generator>(), e[1].get<Generator>(), m});
    }
    return CoxeterGraph::from_edges(rank, edges);
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed graph JSON: ") + ex.what());
  }
}

json to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) {
  try {
    return j.get<Word>();
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed word: ") + ex.what());
  }
}

Word parse_word(const std::string& text) {
  std::string t = text;
  if (t.find('[') != std::string::npos) {
    try {
      return word_from_json(json::parse(t));
    } catch (const json::exception& ex) {
      throw DomainError(std::string("malformed word: ") + ex.what());
    }
  }
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  Word w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw DomainError("malformed word token '" + tok + "'");
    w.push_back(x);
  }
  return w;
}

json to_json(const Trace& t) { return json(t.blocks()); }

Trace trace_from_json(const CoxeterGraph& g, const json& j) {
  try {
    return Trace::from_blocks(g, j.get<std::vector<Block>>());
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed trace: ") + ex.what());
  }
}

json to_json(const FcElement& w) { return {{"trace", to_json(w.trace())}, {"length", w.length()}}; }

json to_json(const LaurentInt& a) {
  json out = json::object();
  for (const auto& [e, c] : a.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      out[std::to_string(e)] = static_cast<long long>(c);
    else
      out[std::to_string(e)] = c.str();
  }
  return out;
}

LaurentInt laurent_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("Laurent polynomial must be a JSON object");
  LaurentInt out;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw DomainError("bad exponent");
    } catch (const std::exception&) {
      throw DomainError("malformed exponent '" + k + "'");
    }
    Integer c = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long long>());
    out += LaurentInt::monomial(e, c);
  }
  return out;
}

json to_json(const TlElement& x) {
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) terms.push_back({{"trace", to_json(w.trace())}, {"coeff", to_json(c)}});
  return {{"basis", basis_name(x.basis())}, {"terms", terms}};
}

TlElement tl_from_json(const CoxeterGraph& g, const json& j) {
  try {
    TlElement x(g, parse_basis(j.at("basis").get<std::string>()));
    for (const json& t : j.at("terms")) x.add(FcElement::from_trace(trace_from_json(g, t.at("trace"))), laurent_from_json(t.at("coeff")));
    return x;
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed TL element: ") + ex.what());
  }
}

json to_json(const StarPath& p) {
  json out = json::array();
  for (const StarStep& s : p)
    out.push_back({{"pair", json::array({s.s, s.t})},
                   {"side", s.side == Side::Left ? "L" : "R"},
                   {"result", to_json(s.result.trace())}});
  return out;
}

json to_json(const std::vector<HMove>& log) {
  json out = json::array();
  for (const HMove& m : log) out.push_back({{"kind", move_kind_name(m.kind)}, {"pair", m.pair}, {"position", m.position}});
  return out;
}

json to_json(const ClassificationVerdict& v) {
  json comps = json::array();
  for (const ComponentVerdict& c : v.components)
    comps.push_back({{"vertices", c.vertices},
                     {"family", c.family ? json(c.family->to_string()) : json(nullptr)},
                     {"star_reducible", c.star_reducible}});
  return {{"star_reducible", v.star_reducible}, {"components", comps}};
}

json to_json(const FcEnumeration& e) {
  json elems = json::array();
  for (const FcElement& w : e.elements) elems.push_back(to_json(w));
  return {{"count", e.elements.size()}, {"exhaustive", e.exhaustive}, {"elements", elems}};
}

}  // namespace coxstar::json_io
