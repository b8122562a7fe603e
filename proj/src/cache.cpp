#include "lcert/cache.hpp"

#include <json.hpp>
#include <unistd.h>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "lcert/errors.hpp"
#include "lcert/version.hpp"

namespace lcert {

namespace {

constexpr long kErrExactWire = -1'000'000;

// filename-safe slug plus an fnv hash to keep distinct keys distinct
std::string slug(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  std::string out;
  for (char c : s) {
    h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.')
      out += c;
    else
      out += '_';
  }
  char hex[20];
  std::snprintf(hex, sizeof hex, "-%016llx", h);
  return out.substr(0, 80) + hex;
}

}  // namespace

ValueCache::ValueCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ValueCache::path_for(const std::string& key,
                                 const std::string& method) const {
  return dir_ + "/" + slug(key + "@" + method) + ".json";
}

void ValueCache::store(const std::string& key, const std::string& method,
                       long precision_bits, const Complex& value) const {
  nlohmann::ordered_json j;
  j["key"] = key;
  j["method"] = method;
  j["precision"] = precision_bits;
  j["library"] = kVersion;
  j["re"] = value.re.to_decimal();
  j["re_err"] = value.re.exact() ? kErrExactWire : value.re.err_exp();
  j["im"] = value.im.to_decimal();
  j["im_err"] = value.im.exact() ? kErrExactWire : value.im.err_exp();

  std::string final_path = path_for(key, method);
  std::string tmp = final_path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
    if (!out) fail(errc::corrupt_entry, "cannot write cache entry " + tmp);
  }
  std::filesystem::rename(tmp, final_path);
}

std::optional<Complex> ValueCache::lookup(const std::string& key,
                                          const std::string& method,
                                          long min_precision) const {
  return lookup(key, method, min_precision, std::cerr);
}

std::optional<Complex> ValueCache::lookup(const std::string& key,
                                          const std::string& method,
                                          long min_precision,
                                          std::ostream& diag) const {
  std::string path = path_for(key, method);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::ordered_json::parse(in);
    if (j.at("key") != key || j.at("method") != method)
      fail(errc::corrupt_entry, "key mismatch");
    long prec = j.at("precision");
    if (prec < min_precision) return std::nullopt;
    auto load = [&](const char* v, const char* e) {
      long err = j.at(e);
      Real r = Real::of_decimal(j.at(v), err <= kErrExactWire ? 0 : err,
                                prec + 32);
      if (err <= kErrExactWire) r.set_err_exp(Real::kExact);
      return r;
    };
    return Complex(load("re", "re_err"), load("im", "im_err"));
  } catch (const std::exception& e) {
    diag << "warning: discarding corrupt cache entry " << path << " ("
         << e.what() << ")\n";
    return std::nullopt;
  }
}

}  // namespace lcert
