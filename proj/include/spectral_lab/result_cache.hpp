#pragma once

// File cache for expensive outputs. Each entry `name` is stored next to
// `name.fnv1a`, the hex content hash; entries whose hash does not match are
// ignored. The directory comes from SPECTRAL_LAB_CACHE; caching is off when
// it is unset.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "spectral_lab/enumeration.hpp"

namespace spectral_lab {

class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::optional<ResultCache> from_environment() {
    const char* dir = std::getenv("SPECTRAL_LAB_CACHE");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return ResultCache(dir);
  }

  const std::filesystem::path& directory() const { return dir_; }

  std::optional<std::string> load(const std::string& name) const {
    auto content = read(dir_ / name);
    auto tag = read(dir_ / (name + ".fnv1a"));
    if (!content || !tag) return std::nullopt;
    if (hash_hex(content_hash(*content)) != trim(*tag)) return std::nullopt;
    return content;
  }

  void store(const std::string& name, const std::string& content) const {
    std::filesystem::create_directories(dir_);
    write(dir_ / name, content);
    write(dir_ / (name + ".fnv1a"), hash_hex(content_hash(content)) + "\n");
  }

private:
  static std::optional<std::string> read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static void write(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
  }

  static std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
  }

  std::filesystem::path dir_;
};

}  // namespace spectral_lab
