#include "coxstar/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "coxstar/errors.hpp"
#include "coxstar/json_io.hpp"

namespace coxstar {

using nlohmann::json;

std::optional<std::filesystem::path> Cache::resolve_dir(const std::string& flag) {
  if (const char* env = std::getenv("COXSTAR_CACHE"); env && *env) return std::filesystem::path(env);
  if (flag.empty()) return std::nullopt;
  return std::filesystem::path(flag);
}

void Cache::reset() {
  doc_ = {{"version", kVersion}, {"fingerprint", graph_.fingerprint()}, {"graph", json_io::to_json(graph_)}};
  loaded_ = false;
}

Cache::Cache(std::optional<std::filesystem::path> dir, CoxeterGraph g) : graph_(std::move(g)) {
  reset();
  if (!dir) return;
  file_ = *dir / ("coxstar-" + graph_.fingerprint() + ".json");
  std::ifstream in(*file_);
  if (!in) return;
  try {
    json j = json::parse(in);
    if (j.value("version", 0) != kVersion) return;
    if (j.value("fingerprint", std::string()) != graph_.fingerprint()) return;
    if (json_io::graph_from_json(j.at("graph")) != graph_) return;
    doc_ = std::move(j);
    loaded_ = true;
  } catch (const std::exception&) {
    reset();  // unreadable cache is treated as absent
  }
}

std::optional<FcEnumeration> Cache::enumeration(int max_len) const {
  if (!doc_.contains("fc")) return std::nullopt;
  const json& fc = doc_["fc"];
  const int cached_len = fc.at("max_len").get<int>();
  const bool cached_exhaustive = fc.at("exhaustive").get<bool>();
  if (!cached_exhaustive && cached_len < max_len) return std::nullopt;
  FcEnumeration out;
  bool next_stratum_seen = false;
  for (const json& t : fc.at("elements")) {
    Trace tr = json_io::trace_from_json(graph_, t);
    if (tr.length() > static_cast<std::size_t>(max_len)) {
      if (tr.length() == static_cast<std::size_t>(max_len) + 1) next_stratum_seen = true;
      continue;
    }
    out.max_length_found = std::max(out.max_length_found, tr.length());
    out.elements.push_back(FcElement::unchecked(std::move(tr)));
  }
  out.exhaustive = !next_stratum_seen && (cached_exhaustive || max_len < cached_len);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

void Cache::store_enumeration(const FcEnumeration& e, int max_len) {
  if (doc_.contains("fc")) {
    const json& fc = doc_["fc"];
    if (fc.at("exhaustive").get<bool>() || fc.at("max_len").get<int>() >= max_len) return;
  }
  json elems = json::array();
  for (const FcElement& w : e.elements) elems.push_back(json_io::to_json(w.trace()));
  doc_["fc"] = {{"max_len", max_len}, {"exhaustive", e.exhaustive}, {"elements", elems}};
}

void Cache::load_tables(TlAlgebra& algebra) const {
  if (doc_.contains("ttilde"))
    for (const json& row : doc_["ttilde"])
      algebra.seed_ttilde(FcElement::from_trace(json_io::trace_from_json(graph_, row.at("element"))),
                          json_io::tl_from_json(graph_, row.at("value")));
  if (doc_.contains("c"))
    for (const json& row : doc_["c"])
      algebra.seed_c(FcElement::from_trace(json_io::trace_from_json(graph_, row.at("element"))),
                     json_io::tl_from_json(graph_, row.at("value")), false);
}

void Cache::store_tables(const TlAlgebra& algebra) {
  auto dump = [](const std::vector<std::pair<FcElement, TlElement>>& table) {
    json out = json::array();
    for (const auto& [w, x] : table) out.push_back({{"element", json_io::to_json(w.trace())}, {"value", json_io::to_json(x)}});
    return out;
  };
  doc_["ttilde"] = dump(algebra.ttilde_table());
  doc_["c"] = dump(algebra.c_table());
}

void Cache::save() const {
  if (!file_) return;
  std::error_code ec;
  std::filesystem::create_directories(file_->parent_path(), ec);
  const std::filesystem::path tmp = file_->string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot write cache file " + tmp.string());
    out << doc_.dump() << '\n';
  }
  std::filesystem::rename(tmp, *file_, ec);
  if (ec) throw DomainError("cannot move cache file into place: " + ec.message());
}

}  // namespace coxstar
