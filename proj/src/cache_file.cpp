#include "clfcong/sequences.hpp"

#include <json.hpp>

#include <fstream>
#include <mutex>
#include <random>

namespace clfcong {

namespace {

constexpr const char* kFormatTag = "clfcong-sequence-cache";
constexpr int kSpotChecks = 5;

template <typename T, typename Parse>
std::vector<T> read_table(const nlohmann::json& doc, const char* key, Parse parse) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw Error(Errc::CacheInvalid, std::string("cache file lacks array '") + key + "'");
    std::vector<T> out;
    out.reserve(doc[key].size());
    for (const auto& v : doc[key]) {
        if (!v.is_string())
            throw Error(Errc::CacheInvalid, std::string("non-string entry in '") + key + "'");
        try {
            out.push_back(parse(v.get<std::string>()));
        } catch (const Error& e) {
            throw Error(Errc::CacheInvalid, std::string("bad entry in '") + key + "': " + e.what());
        }
    }
    if (out.empty())
        throw Error(Errc::CacheInvalid, std::string("empty table '") + key + "'");
    return out;
}

// The last two entries (each recurrence touches every earlier entry of one
// parity) plus kSpotChecks pseudo-random ones.
std::vector<std::size_t> spot_indices(std::size_t size) {
    std::vector<std::size_t> idx{size - 1};
    if (size >= 2)
        idx.push_back(size - 2);
    std::mt19937_64 rng(0x5eedc0deULL ^ size);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (int i = 0; i < kSpotChecks; ++i)
        idx.push_back(pick(rng));
    return idx;
}

} // namespace

void SequenceCache::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::Io, "cannot open cache file " + path.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::CacheInvalid, std::string("cache file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != kFormatTag)
        throw Error(Errc::CacheInvalid, "cache file has the wrong format tag");

    auto bern = read_table<Rational>(doc, "bernoulli", [](const std::string& s) { return Rational::parse(s); });
    auto eul = read_table<Integer>(doc, "euler", [](const std::string& s) { return parse_integer(s); });

    if (bern[0] != Rational(1) || eul[0] != 1)
        throw Error(Errc::CacheInvalid, "cache file has B_0 or E_0 != 1");
    for (std::size_t n : spot_indices(bern.size()))
        if (n > 0 && !bernoulli_recurrence_sum(bern, n).is_zero())
            throw Error(Errc::CacheInvalid, "Bernoulli recurrence fails at n=" + std::to_string(n));
    for (std::size_t n : spot_indices(eul.size()))
        if (n > 0 && euler_recurrence_value(eul, n) != eul[n])
            throw Error(Errc::CacheInvalid, "Euler recurrence fails at n=" + std::to_string(n));

    std::unique_lock lock(mutex_);
    for (std::size_t i = 0; i < std::min(bern.size(), bernoulli_.size()); ++i)
        if (bern[i] != bernoulli_[i])
            throw Error(Errc::CacheInvalid, "cache file disagrees with computed B_" + std::to_string(i));
    for (std::size_t i = 0; i < std::min(eul.size(), euler_.size()); ++i)
        if (eul[i] != euler_[i])
            throw Error(Errc::CacheInvalid, "cache file disagrees with computed E_" + std::to_string(i));
    for (std::size_t i = bernoulli_.size(); i < bern.size(); ++i)
        bernoulli_.push_back(std::move(bern[i]));
    for (std::size_t i = euler_.size(); i < eul.size(); ++i)
        euler_.push_back(std::move(eul[i]));
}

void SequenceCache::save(const std::filesystem::path& path) const {
    nlohmann::json doc;
    doc["format"] = kFormatTag;
    auto& bern = doc["bernoulli"] = nlohmann::json::array();
    auto& eul = doc["euler"] = nlohmann::json::array();
    {
        std::shared_lock lock(mutex_);
        for (const auto& b : bernoulli_)
            bern.push_back(b.str());
        for (const auto& e : euler_)
            eul.push_back(to_string(e));
    }
    std::ofstream out(path);
    if (!out)
        throw Error(Errc::Io, "cannot write cache file " + path.string());
    out << doc.dump() << '\n';
    if (!out)
        throw Error(Errc::Io, "write to cache file " + path.string() + " failed");
}

} // namespace clfcong
