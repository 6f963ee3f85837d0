#include "affbgg/cache.hpp"

#include <fstream>
#include <iostream>

namespace affbgg {

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string Cache::hash_key(const std::string& material) {
    // FNV-1a, 64-bit
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : material) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::filesystem::path Cache::entry_path(const std::string& key_material) const {
    return dir_ / (hash_key(std::string(kVersion) + "\n" + key_material) + ".json");
}

std::optional<nlohmann::json> Cache::get(const std::string& key_material) const {
    auto path = entry_path(key_material);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version") != kVersion || j.at("key") != key_material)
            return std::nullopt;
        return j.at("payload");
    } catch (const std::exception&) {
        std::cerr << "warning: dropping corrupt cache entry " << path.string() << "\n";
        std::error_code ec;
        std::filesystem::remove(path, ec);
        return std::nullopt;
    }
}

void Cache::put(const std::string& key_material, const nlohmann::json& payload) const {
    nlohmann::json j;
    j["version"] = kVersion;
    j["key"] = key_material;
    j["payload"] = payload;
    auto path = entry_path(key_material);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(2);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace affbgg
