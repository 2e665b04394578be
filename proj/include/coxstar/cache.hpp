#ifndef COXSTAR_CACHE_HPP_
#define COXSTAR_CACHE_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "coxstar/tl_algebra.hpp"

namespace coxstar {

/// Per-graph JSON cache of the FC enumeration and the t~/c tables. A file
/// whose version or graph fingerprint does not match is ignored.
class Cache {
 public:
  static constexpr int kVersion = 1;

  /// COXSTAR_CACHE wins over the flag; empty means no cache.
  static std::optional<std::filesystem::path> resolve_dir(const std::string& flag);

  Cache(std::optional<std::filesystem::path> dir, CoxeterGraph g);

  bool enabled() const { return file_.has_value(); }
  bool loaded() const { return loaded_; }
  const std::optional<std::filesystem::path>& file() const { return file_; }

  std::optional<FcEnumeration> enumeration(int max_len) const;
  void store_enumeration(const FcEnumeration& e, int max_len);

  /// Table entries were verified when they were computed and are trusted.
  void load_tables(TlAlgebra& algebra) const;
  void store_tables(const TlAlgebra& algebra);

  void save() const;

 private:
  void reset();

  CoxeterGraph graph_;
  std::optional<std::filesystem::path> file_;
  nlohmann::json doc_;
  bool loaded_ = false;
};

}  // namespace coxstar

#endif  // COXSTAR_CACHE_HPP_
