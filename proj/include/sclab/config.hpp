#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sclab {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nested key-value text config. One `key = value` per line, keys may be
// dotted (noise.sigma), `#` starts a comment. Values are plain text; typed
// accessors parse on demand. Big integers accept decimal or 0x hex.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;

    std::string get_str(const std::string& key) const;
    std::string get_str(const std::string& key, const std::string& dflt) const;
    int64_t get_i64(const std::string& key) const;
    int64_t get_i64(const std::string& key, int64_t dflt) const;
    uint64_t get_u64(const std::string& key) const;
    uint64_t get_u64(const std::string& key, uint64_t dflt) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double dflt) const;
    bool get_bool(const std::string& key) const;
    bool get_bool(const std::string& key, bool dflt) const;
    mpz_class get_mpz(const std::string& key) const;

    std::vector<std::string> keys() const;

    // Rejects any key that is neither in `known` nor under a prefix in
    // `known_prefixes` (prefix match up to a dot). Throws config_error
    // naming the offending field.
    void require_known(const std::vector<std::string>& known,
                       const std::vector<std::string>& known_prefixes = {}) const;

    // FNV-1a over the canonical sorted key=value rendering.
    uint64_t hash() const;

private:
    std::string origin_;
    std::map<std::string, std::string> entries_;
    const std::string& raw(const std::string& key) const;
};

mpz_class parse_mpz(const std::string& text);

}  // namespace sclab
