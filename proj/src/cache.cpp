#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pplab/lab.hpp"

namespace pplab::lab {

namespace {

using json = nlohmann::ordered_json;

constexpr int kCacheFormatVersion = 1;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string checksum_hex(const std::string& payload) {
  std::ostringstream out;
  out << std::hex << fnv1a64(payload);
  return out.str();
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError(CacheErrorKind::io, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw CacheError(CacheErrorKind::parse, "malformed cache file " + path + ": " + e.what());
  }
  return doc;
}

void check_header(const json& doc, const std::string& kind, const std::string& path) {
  if (!doc.contains("format_version") || !doc.contains("kind") ||
      !doc.contains("entries") || !doc.contains("checksum"))
    throw CacheError(CacheErrorKind::parse, "incomplete cache file " + path);
  if (doc["format_version"].get<int>() != kCacheFormatVersion)
    throw CacheError(CacheErrorKind::version_mismatch,
                     "cache format version " + doc["format_version"].dump() +
                         " unsupported");
  if (doc["kind"].get<std::string>() != kind)
    throw CacheError(CacheErrorKind::kind_mismatch,
                     "cache holds kind '" + doc["kind"].get<std::string>() +
                         "', requested '" + kind + "'");
}

void write_document(const std::string& path, json& doc, const std::string& payload) {
  doc["checksum"] = checksum_hex(payload);
  std::ofstream out(path);
  if (!out) throw CacheError(CacheErrorKind::io, "cannot write " + path);
  out << doc.dump(1) << '\n';
}

}  // namespace

void cache_store(const std::string& path, const series::BigIntSeries& s,
                 const std::string& kind) {
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["kind"] = kind;
  doc["truncation_order"] = s.truncation_order();
  std::string payload = kind;
  json entries = json::array();
  for (const auto& c : s.coeffs) {
    std::string v = c.str();
    payload += "," + v;
    entries.push_back(v);
  }
  doc["entries"] = entries;
  write_document(path, doc, payload);
}

series::BigIntSeries cache_load_series(const std::string& path, const std::string& kind) {
  json doc = load_document(path);
  check_header(doc, kind, path);
  series::BigIntSeries s;
  std::string payload = kind;
  for (const auto& e : doc["entries"]) {
    std::string v = e.get<std::string>();
    payload += "," + v;
    s.coeffs.emplace_back(v);
  }
  if (checksum_hex(payload) != doc["checksum"].get<std::string>())
    throw CacheError(CacheErrorKind::checksum, "checksum failure in " + path);
  if (doc.contains("truncation_order") &&
      doc["truncation_order"].get<int>() != s.truncation_order())
    throw CacheError(CacheErrorKind::parse, "entry count disagrees with header in " + path);
  return s;
}

void cache_store(const std::string& path, const series::BivariateTable& t,
                 const std::string& kind) {
  json doc;
  doc["format_version"] = kCacheFormatVersion;
  doc["kind"] = kind;
  doc["truncation_order"] = t.truncation_order;
  doc["threshold"] = t.threshold;
  std::string payload = kind + ";" + std::to_string(t.threshold);
  json entries = json::array();
  for (int n = 0; n <= t.truncation_order; ++n)
    for (int k = 0; k < static_cast<int>(t.rows[n].size()); ++k)
      if (t.rows[n][k] != 0) {
        std::string v = t.rows[n][k].str();
        payload += "," + std::to_string(n) + ":" + std::to_string(k) + ":" + v;
        entries.push_back(json::array({n, k, v}));
      }
  doc["entries"] = entries;
  write_document(path, doc, payload);
}

series::BivariateTable cache_load_table(const std::string& path, const std::string& kind) {
  json doc = load_document(path);
  check_header(doc, kind, path);
  if (!doc.contains("threshold") || !doc.contains("truncation_order"))
    throw CacheError(CacheErrorKind::parse, "incomplete cache file " + path);
  series::BivariateTable t;
  t.truncation_order = doc["truncation_order"].get<int>();
  t.threshold = doc["threshold"].get<int>();
  t.rows.resize(t.truncation_order + 1);
  std::string payload = kind + ";" + std::to_string(t.threshold);
  for (const auto& e : doc["entries"]) {
    int n = e.at(0).get<int>();
    int k = e.at(1).get<int>();
    std::string v = e.at(2).get<std::string>();
    payload += "," + std::to_string(n) + ":" + std::to_string(k) + ":" + v;
    if (n < 0 || n > t.truncation_order || k < 0)
      throw CacheError(CacheErrorKind::parse, "entry out of range in " + path);
    auto& row = t.rows[n];
    if (k >= static_cast<int>(row.size())) row.resize(k + 1, BigInt(0));
    row[k] = BigInt(v);
  }
  if (checksum_hex(payload) != doc["checksum"].get<std::string>())
    throw CacheError(CacheErrorKind::checksum, "checksum failure in " + path);
  return t;
}

}  // namespace pplab::lab
