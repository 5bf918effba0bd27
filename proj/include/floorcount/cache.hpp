#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include "floorcount/bigint.hpp"

namespace floorcount {

inline constexpr std::string_view engine_version = "floorcount-1.0.0";

enum class InvariantKind { N, W };

/// One cached result: `N|W <polygon line> <genus or r> <value> <version>`.
struct InvariantRecord {
  InvariantKind kind = InvariantKind::N;
  std::string polygon;  // the full `polygon dl=...` line
  int parameter = 0;
  BigInt value;
  std::string version{engine_version};

  std::string to_line() const;
  /// Throws ParseError on malformed lines.
  static InvariantRecord parse_line(std::string_view line);

  bool operator==(const InvariantRecord&) const = default;
};

/// Append-only result file. Only records written by the current engine
/// version are served.
class ResultCache {
 public:
  /// Loads the file if it exists. Throws ParseError naming the bad line.
  explicit ResultCache(std::filesystem::path path);

  std::optional<BigInt> find(InvariantKind kind, const std::string& polygon, int parameter) const;

  /// Appends the record unless an identical one is present. Throws Error if
  /// the cache already holds a different value for the same inputs.
  void store(const InvariantRecord& record);

  std::size_t size() const;

 private:
  using Key = std::tuple<InvariantKind, std::string, int>;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<Key, BigInt> records_;
};

}  // namespace floorcount
