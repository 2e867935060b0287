#include "sclab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sclab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

mpz_class parse_mpz(const std::string& text) {
    std::string t = trim(text);
    bool neg = false;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
        neg = t[0] == '-';
        t = t.substr(1);
    }
    mpz_class v;
    int rc;
    if (t.rfind("0x", 0) == 0 || t.rfind("0X", 0) == 0)
        rc = mpz_set_str(v.get_mpz_t(), t.substr(2).c_str(), 16);
    else
        rc = mpz_set_str(v.get_mpz_t(), t.c_str(), 10);
    if (rc != 0) throw config_error("bad integer literal: " + text);
    return neg ? mpz_class(-v) : v;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config c;
    c.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        if (c.entries_.count(key))
            throw config_error(origin + ":" + std::to_string(lineno) + ": duplicate key " + key);
        c.entries_[key] = val;
    }
    return c;
}

bool Config::has(const std::string& key) const { return entries_.count(key) != 0; }

const std::string& Config::raw(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        throw config_error(origin_ + ": missing required field: " + key);
    return it->second;
}

std::string Config::get_str(const std::string& key) const { return raw(key); }
std::string Config::get_str(const std::string& key, const std::string& dflt) const {
    return has(key) ? raw(key) : dflt;
}

int64_t Config::get_i64(const std::string& key) const {
    try {
        return std::stoll(raw(key));
    } catch (const std::logic_error&) {
        throw config_error(origin_ + ": field " + key + " is not an integer");
    }
}
int64_t Config::get_i64(const std::string& key, int64_t dflt) const {
    return has(key) ? get_i64(key) : dflt;
}

uint64_t Config::get_u64(const std::string& key) const {
    try {
        return std::stoull(raw(key));
    } catch (const std::logic_error&) {
        throw config_error(origin_ + ": field " + key + " is not an unsigned integer");
    }
}
uint64_t Config::get_u64(const std::string& key, uint64_t dflt) const {
    return has(key) ? get_u64(key) : dflt;
}

double Config::get_double(const std::string& key) const {
    try {
        return std::stod(raw(key));
    } catch (const std::logic_error&) {
        throw config_error(origin_ + ": field " + key + " is not a number");
    }
}
double Config::get_double(const std::string& key, double dflt) const {
    return has(key) ? get_double(key) : dflt;
}

bool Config::get_bool(const std::string& key) const {
    std::string v = raw(key);
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw config_error(origin_ + ": field " + key + " is not a boolean");
}
bool Config::get_bool(const std::string& key, bool dflt) const {
    return has(key) ? get_bool(key) : dflt;
}

mpz_class Config::get_mpz(const std::string& key) const {
    try {
        return parse_mpz(raw(key));
    } catch (const config_error&) {
        throw config_error(origin_ + ": field " + key + " is not a big integer");
    }
}

std::vector<std::string> Config::keys() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

void Config::require_known(const std::vector<std::string>& known,
                           const std::vector<std::string>& known_prefixes) const {
    for (const auto& [k, v] : entries_) {
        if (std::find(known.begin(), known.end(), k) != known.end()) continue;
        bool ok = false;
        for (const auto& p : known_prefixes) {
            if (k.rfind(p + ".", 0) == 0) {
                ok = true;
                break;
            }
        }
        if (!ok) throw config_error(origin_ + ": unknown field: " + k);
    }
}

uint64_t Config::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& [k, v] : entries_) {
        mix(k);
        mix("=");
        mix(v);
        mix("\n");
    }
    return h;
}

}  // namespace sclab
