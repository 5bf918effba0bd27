#include "floorcount/cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "floorcount/errors.hpp"

namespace floorcount {

std::string InvariantRecord::to_line() const {
  std::ostringstream out;
  out << (kind == InvariantKind::N ? "N" : "W") << " " << polygon << " " << parameter << " "
      << value.get_str() << " " << version;
  return out.str();
}

InvariantRecord InvariantRecord::parse_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> tokens;
  for (std::string token; in >> token;) tokens.push_back(token);
  if (tokens.size() != 9 || (tokens[0] != "N" && tokens[0] != "W") || tokens[1] != "polygon") {
    throw ParseError(0, "malformed cache record '" + std::string(line) + "'");
  }
  InvariantRecord record;
  record.kind = tokens[0] == "N" ? InvariantKind::N : InvariantKind::W;
  record.polygon = tokens[1] + " " + tokens[2] + " " + tokens[3] + " " + tokens[4] + " " + tokens[5];
  try {
    std::size_t used = 0;
    record.parameter = std::stoi(tokens[6], &used);
    if (used != tokens[6].size()) throw std::invalid_argument(tokens[6]);
    record.value = parse_bigint(tokens[7]);
  } catch (const std::exception&) {
    throw ParseError(0, "malformed number in cache record '" + std::string(line) + "'");
  }
  record.version = tokens[8];
  return record;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  int line_number = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const InvariantRecord record = InvariantRecord::parse_line(line);
      if (record.version == engine_version) {
        records_[{record.kind, record.polygon, record.parameter}] = record.value;
      }
    } catch (const ParseError& e) {
      throw ParseError(line_number, path_.string() + ": " + e.what());
    }
  }
}

std::optional<BigInt> ResultCache::find(InvariantKind kind, const std::string& polygon, int parameter) const {
  const std::lock_guard lock(mutex_);
  const auto it = records_.find({kind, polygon, parameter});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const InvariantRecord& record) {
  const std::lock_guard lock(mutex_);
  const Key key{record.kind, record.polygon, record.parameter};
  if (const auto it = records_.find(key); it != records_.end()) {
    if (it->second != record.value) {
      throw Error("cache conflict for '" + record.to_line() + "': stored value " + it->second.get_str());
    }
    return;
  }
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw Error("cannot append to cache " + path_.string());
  out << record.to_line() << '\n';
  if (!out) throw Error("failed writing cache " + path_.string());
  records_.emplace(key, record.value);
}

std::size_t ResultCache::size() const {
  const std::lock_guard lock(mutex_);
  return records_.size();
}

}  // namespace floorcount
