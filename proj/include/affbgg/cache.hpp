#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace affbgg {

/// Content-addressed JSON cache: entries keyed by the hash of a canonical
/// config string plus the module version, written with atomic rename.
/// Corrupt entries are dropped with a warning and recomputed by the caller.
class Cache {
  public:
    static constexpr const char* kVersion = "affbgg-cache-1";

    explicit Cache(std::filesystem::path dir);

    std::optional<nlohmann::json> get(const std::string& key_material) const;
    void put(const std::string& key_material, const nlohmann::json& payload) const;

    static std::string hash_key(const std::string& material);

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path entry_path(const std::string& key_material) const;
    std::filesystem::path dir_;
};

}  // namespace affbgg
