#include "coxstar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coxstar/cache.hpp"
#include "coxstar/errors.hpp"
#include "coxstar/json_io.hpp"

namespace coxstar {

namespace {

using nlohmann::json;

struct Options {
  std::string graph_file;
  std::string family;
  std::string format = "json";
  std::string cache_dir;
  std::string word;
  std::string table_file;
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultTitsCap;
  int max_len = 10;
  int jobs = 1;
};

CoxeterGraph load_graph(const Options& o) {
  if (o.graph_file.empty() == o.family.empty()) throw DomainError("give exactly one of --graph FILE or --family NAME");
  if (!o.family.empty()) return family_graph(o.family);
  std::ifstream in(o.graph_file);
  if (!in) throw DomainError("cannot read graph file " + o.graph_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw DomainError(std::string("graph file is not JSON: ") + ex.what());
  }
  return json_io::graph_from_json(j);
}

std::string word_text(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

std::string trace_text(const Trace& t) {
  std::string s;
  for (std::size_t i = 0; i < t.blocks().size(); ++i) s += (i ? "|" : "") + word_text(t.blocks()[i]);
  return s.empty() ? "e" : s;
}

Word require_word(const Options& o, const CoxeterGraph& g) {
  Word w = json_io::parse_word(o.word);
  check_word(g, w);
  return w;
}

bool tsv(const Options& o) { return o.format == "tsv"; }

FcEnumeration enumeration(const Options& o, const CoxeterGraph& g, Cache& cache) {
  if (o.max_len < 0) throw DomainError("--max-len must be non-negative");
  FcEnumeration e;
  if (auto hit = cache.enumeration(o.max_len)) {
    e = std::move(*hit);
  } else {
    e = enumerate_fc(g, o.max_len, o.jobs);
    cache.store_enumeration(e, o.max_len);
  }
  if (e.elements.size() > o.cap) throw CapExceeded("enumeration exceeds --cap");
  return e;
}

void cmd_classify(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  const ClassificationVerdict v = classify_star_reducible(g);
  if (!tsv(o)) {
    out << json_io::to_json(v).dump(2) << '\n';
    return;
  }
  out << "star_reducible\t" << (v.star_reducible ? "true" : "false") << '\n';
  for (const ComponentVerdict& c : v.components)
    out << "component\t" << word_text(c.vertices) << '\t' << (c.family ? c.family->to_string() : "-") << '\t'
        << (c.star_reducible ? "true" : "false") << '\n';
}

void cmd_enumerate(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  Cache cache(Cache::resolve_dir(o.cache_dir), g);
  const FcEnumeration e = enumeration(o, g, cache);
  cache.save();
  if (!tsv(o)) {
    out << json_io::to_json(e).dump(2) << '\n';
    return;
  }
  out << "# count " << e.elements.size() << " exhaustive " << (e.exhaustive ? "true" : "false") << '\n';
  for (const FcElement& w : e.elements) out << w.length() << '\t' << word_text(w.word()) << '\t' << trace_text(w.trace()) << '\n';
}

void cmd_star_reduce(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  const FcElement w = FcElement::from_word(g, require_word(o, g));
  const auto path = star_reduce_path(w);
  if (!tsv(o)) {
    json j = {{"element", json_io::to_json(w)}, {"star_reducible", path.has_value()}};
    j["path"] = path ? json_io::to_json(*path) : json(nullptr);
    if (!path) j["verdict"] = "irreducible";
    out << j.dump(2) << '\n';
    return;
  }
  if (!path) {
    out << "irreducible\n";
    return;
  }
  for (const StarStep& s : *path)
    out << s.s << ',' << s.t << '\t' << (s.side == Side::Left ? 'L' : 'R') << '\t' << word_text(s.result.word()) << '\n';
}

void cmd_cf(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  const Word w = require_word(o, g);
  const Trace t = cartier_foata(g, w);
  const Reducedness r = tits_is_reduced(g, w, o.cap);
  const char* reduced = r == Reducedness::Reduced ? "yes" : r == Reducedness::NotReduced ? "no" : "unknown";
  if (!tsv(o)) {
    out << json({{"trace", json_io::to_json(t)}, {"length", t.length()}, {"reduced", reduced},
                 {"fully_commutative", is_reduced_fc(t)}})
               .dump(2)
        << '\n';
    return;
  }
  out << trace_text(t) << '\t' << reduced << '\t' << (is_reduced_fc(t) ? "fc" : "not-fc") << '\n';
}

void cmd_h(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  const HResult r = h_value(g, require_word(o, g), o.seed);
  if (!tsv(o)) {
    out << json({{"h", r.h}, {"terminal", json_io::to_json(r.terminal)}, {"log", json_io::to_json(r.log)}}).dump(2) << '\n';
    return;
  }
  out << "h\t" << r.h << '\n';
  for (const HMove& m : r.log) out << move_kind_name(m.kind) << '\t' << word_text(m.pair) << '\t' << m.position << '\n';
}

void cmd_reduce(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  TlAlgebra algebra(g);
  const TlElement x = algebra.reduce_b_monomial(require_word(o, g));
  if (!tsv(o)) {
    out << json_io::to_json(x).dump(2) << '\n';
    return;
  }
  for (const auto& [w, c] : x.terms()) out << word_text(w.word()) << '\t' << c.to_string() << '\n';
}

void cmd_cbasis(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  Cache cache(Cache::resolve_dir(o.cache_dir), g);
  const FcEnumeration e = enumeration(o, g, cache);
  TlAlgebra algebra(g);
  cache.load_tables(algebra);
  std::vector<std::pair<FcElement, TlElement>> table;
  for (const FcElement& w : e.elements) table.emplace_back(w, algebra.c_of(w));
  cache.store_tables(algebra);
  cache.save();
  if (!tsv(o)) {
    json rows = json::array();
    for (const auto& [w, c] : table) rows.push_back({{"element", json_io::to_json(w.trace())}, {"c", json_io::to_json(c)}});
    out << json({{"count", table.size()}, {"exhaustive", e.exhaustive}, {"table", rows}}).dump(2) << '\n';
    return;
  }
  for (const auto& [w, c] : table)
    for (const auto& [y, a] : c.terms()) out << word_text(w.word()) << '\t' << word_text(y.word()) << '\t' << a.to_string() << '\n';
}

json violation_json(const PositivityViolation& v) {
  return {{"x", json_io::to_json(v.x.trace())}, {"y", json_io::to_json(v.y.trace())}, {"w", json_io::to_json(v.w.trace())},
          {"coeff", json_io::to_json(v.coeff)}, {"reason", v.reason}};
}

void write_structure_tsv(const PositivityReport& rep, std::ostream& out) {
  out << "x\ty\tw\tcoeff\n";
  for (const StructureRow& r : rep.rows)
    out << word_text(r.x.word()) << '\t' << word_text(r.y.word()) << '\t' << word_text(r.w.word()) << '\t' << r.coeff.to_string() << '\n';
}

bool cmd_positivity(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  Cache cache(Cache::resolve_dir(o.cache_dir), g);
  const FcEnumeration e = enumeration(o, g, cache);
  TlAlgebra algebra(g);
  cache.load_tables(algebra);
  const PositivityReport rep = algebra.positivity_report(e, o.jobs);
  cache.store_tables(algebra);
  cache.save();
  if (!o.table_file.empty()) {
    std::ofstream f(o.table_file);
    if (!f) throw DomainError("cannot write " + o.table_file);
    write_structure_tsv(rep, f);
  }
  if (tsv(o)) {
    write_structure_tsv(rep, out);
  } else {
    json viol = json::array();
    for (const auto& v : rep.violations) viol.push_back(violation_json(v));
    out << json({{"elements", rep.elements}, {"pairs", rep.pairs}, {"exhaustive", rep.exhaustive},
                 {"max_delta_power", rep.max_delta_power}, {"violations", viol}})
               .dump(2)
        << '\n';
  }
  return rep.violations.empty();
}

bool cmd_audit(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  Cache cache(Cache::resolve_dir(o.cache_dir), g);
  const FcEnumeration e = enumeration(o, g, cache);
  cache.save();
  StarReducer reducer;
  std::vector<FcElement> witnesses;
  for (const FcElement& w : e.elements)
    if (!reducer.reducible(w)) witnesses.push_back(w);
  const bool claimed = classify_star_reducible(g).star_reducible;
  if (tsv(o)) {
    out << "# checked " << e.elements.size() << " exhaustive " << (e.exhaustive ? "true" : "false") << '\n';
    for (const FcElement& w : witnesses) out << word_text(w.word()) << '\n';
  } else {
    json ws = json::array();
    for (const FcElement& w : witnesses) ws.push_back(json_io::to_json(w));
    out << json({{"checked", e.elements.size()}, {"exhaustive", e.exhaustive}, {"classified_star_reducible", claimed},
                 {"witnesses", ws}})
               .dump(2)
        << '\n';
  }
  // a witness on a graph classified star reducible contradicts the classification
  return !(claimed && !witnesses.empty());
}

void cmd_counterexample(const Options& o, const CoxeterGraph& g, std::ostream& out) {
  const auto c = find_counterexample(g);
  if (tsv(o)) {
    if (c) out << c->shape << '\t' << word_text(c->word) << '\n';
    else out << "none\n";
    return;
  }
  if (!c) {
    out << "null\n";
    return;
  }
  out << json({{"shape", c->shape}, {"vertices", c->vertices}, {"word", c->word}}).dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fully commutative elements, star reducibility and the generalized Temperley-Lieb algebra"};
  app.name("coxstar");
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool word, bool max_len) {
    sub->add_option("--graph", o.graph_file, "graph JSON file");
    sub->add_option("--family", o.family, "named graph, e.g. B3, I2(7), Ctilde3");
    sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--cache", o.cache_dir, "cache directory");
    sub->add_option("--seed", o.seed, "seed for randomized choices");
    sub->add_option("--cap", o.cap, "resource cap");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    if (word) sub->add_option("--word", o.word, "word as \"0 1 0\" or [0,1,0]")->required();
    if (max_len) sub->add_option("--max-len", o.max_len, "maximum length");
  };

  using Handler = std::function<bool(const CoxeterGraph&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const char* name, const char* help, bool word, bool max_len, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub, word, max_len);
    subs.emplace_back(sub, std::move(h));
  };
  auto always = [](auto f) { return [f](const CoxeterGraph& g, std::ostream& os) { f(g, os); return true; }; };

  add("classify", "star reducibility read off the graph", false, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_classify(o, g, os); }));
  add("enumerate", "fully commutative elements up to --max-len", false, true,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_enumerate(o, g, os); }));
  add("star-reduce", "star reduction path of a fully commutative word", true, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_star_reduce(o, g, os); }));
  add("cf", "Cartier-Foata normal form of a word", true, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_cf(o, g, os); }));
  add("h", "the h invariant of a word", true, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_h(o, g, os); }));
  add("reduce", "a b-monomial in the b-basis", true, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_reduce(o, g, os); }));
  add("cbasis", "c-basis in b-coordinates up to --max-len", false, true,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_cbasis(o, g, os); }));
  add("positivity", "structure constants of the c-basis", false, true,
      [&](const CoxeterGraph& g, std::ostream& os) { return cmd_positivity(o, g, os); });
  add("audit", "search for fully commutative elements without a star reduction", false, true,
      [&](const CoxeterGraph& g, std::ostream& os) { return cmd_audit(o, g, os); });
  add("counterexample", "obstruction word for a graph that is not star reducible", false, false,
      always([&](const CoxeterGraph& g, std::ostream& os) { cmd_counterexample(o, g, os); }));
  app.get_subcommand("positivity")->add_option("--table", o.table_file, "also write the TSV table here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "coxstar: " << e.what() << '\n';
    return kExitDomain;
  }

  std::ostringstream buffer;
  try {
    for (auto& [sub, handler] : subs) {
      if (!sub->parsed()) continue;
      const CoxeterGraph g = load_graph(o);
      const bool ok = handler(g, buffer);
      out << buffer.str();
      if (!ok) {
        err << "coxstar: verification failed\n";
        return kExitVerification;
      }
    }
  } catch (const DomainError& e) {
    err << "coxstar: " << e.what() << '\n';
    return kExitDomain;
  } catch (const VerificationError& e) {
    err << "coxstar: verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const CapExceeded& e) {
    err << "coxstar: cap exceeded: " << e.what() << '\n';
    return kExitCap;
  }
  return kExitOk;
}

}  // namespace coxstar
