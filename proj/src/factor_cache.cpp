#include "gaussrom/factor_cache.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

namespace gaussrom {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

unsigned long parse_ulong(std::string_view s, std::string_view line) {
  unsigned long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed cache line: " + std::string(line));
  }
  return v;
}

mpz_class parse_mpz(std::string_view s, std::string_view line) {
  mpz_class v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0) {
    throw std::invalid_argument("malformed cache line: " + std::string(line));
  }
  return v;
}

}  // namespace

std::string format_cache_line(const CacheRecord& record) {
  std::string out = std::to_string(record.exponent);
  out += ';';
  out += record.complete ? '1' : '0';
  out += ';';
  for (std::size_t k = 0; k < record.factors.size(); ++k) {
    if (k > 0) out += '|';
    const auto& [g, mult] = record.factors[k];
    out += g.re.get_str() + ',' + g.im.get_str() + ',' + std::to_string(mult);
  }
  return out;
}

CacheRecord parse_cache_line(std::string_view line) {
  auto fields = split(line, ';');
  if (fields.size() != 3) throw std::invalid_argument("malformed cache line: " + std::string(line));
  CacheRecord rec;
  rec.exponent = parse_ulong(fields[0], line);
  if (fields[1] != "0" && fields[1] != "1") throw std::invalid_argument("malformed cache line: " + std::string(line));
  rec.complete = fields[1] == "1";
  if (!fields[2].empty()) {
    for (std::string_view item : split(fields[2], '|')) {
      auto parts = split(item, ',');
      if (parts.size() != 3) throw std::invalid_argument("malformed cache line: " + std::string(line));
      GInt g(parse_mpz(parts[0], line), parse_mpz(parts[1], line));
      auto mult = static_cast<unsigned>(parse_ulong(parts[2], line));
      if (!is_canonical(g) || mult == 0) throw std::invalid_argument("malformed cache line: " + std::string(line));
      rec.factors.emplace_back(std::move(g), mult);
    }
  }
  return rec;
}

FactorCache::FactorCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(*path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheRecord rec = parse_cache_line(line);
    records_[rec.exponent] = std::move(rec);
  }
}

std::optional<CacheRecord> FactorCache::lookup(unsigned long exponent) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(exponent);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void FactorCache::append(const CacheRecord& record) {
  std::unique_lock lock(mutex_);
  if (path_) {
    std::ofstream out(*path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open factor cache " + path_->string());
    out << format_cache_line(record) << '\n';
  }
  records_[record.exponent] = record;
}

std::size_t FactorCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

std::optional<std::filesystem::path> FactorCache::default_path() {
  if (const char* env = std::getenv("GAUSSROM_CACHE"); env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

}  // namespace gaussrom
