#pragma once

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "stylochron/errors.hpp"
#include "stylochron/manifest.hpp"

#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include "httplib.h"

namespace stylochron {

inline std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw Error("sha256: failed to allocate digest context");
  bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
            EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
            EVP_DigestFinal_ex(ctx, digest, &len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw Error("sha256: digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0f]);
  }
  return out;
}

namespace fetch_detail {

inline bool is_url(const std::string& source) {
  return source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0;
}

struct SplitUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // /rest, at least "/"
};

inline SplitUrl split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

inline std::string http_get(const std::string& url) {
  SplitUrl parts = split_url(url);
  httplib::Client client(parts.origin);
  client.set_follow_location(true);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  auto res = client.Get(parts.path);
  if (!res) {
    throw FetchError("fetch failed for " + url + ": " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw FetchError("fetch failed for " + url + ": HTTP " + std::to_string(res->status));
  }
  return res->body;
}

inline std::optional<std::string> read_file_opt(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file_atomic(const std::filesystem::path& path,
                              std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FetchError("cannot write cache file " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FetchError("short write to cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace fetch_detail

// Returns the edition bytes, preferring a checksum-valid cache entry and
// otherwise fetching from the manifest source (URL or local path). Fetched
// bytes are verified against the manifest checksum when one is given, then
// cached alongside a .sha256 sidecar.
inline std::string fetch_source(const ManifestEntry& entry,
                                const std::filesystem::path& cache_dir) {
  namespace fs = std::filesystem;
  const fs::path cached = cache_dir / (entry.label + ".xml");
  const fs::path sidecar = cache_dir / (entry.label + ".sha256");

  if (auto bytes = fetch_detail::read_file_opt(cached)) {
    if (!entry.sha256 || sha256_hex(*bytes) == *entry.sha256) return *bytes;
  }

  std::string bytes;
  if (fetch_detail::is_url(entry.source)) {
    bytes = fetch_detail::http_get(entry.source);
  } else {
    auto local = fetch_detail::read_file_opt(entry.source);
    if (!local) throw FetchError("cannot read source file " + entry.source);
    bytes = std::move(*local);
  }

  std::string digest = sha256_hex(bytes);
  if (entry.sha256 && digest != *entry.sha256) {
    throw IntegrityError("edition '" + entry.label + "': sha256 mismatch (expected " +
                         *entry.sha256 + ", got " + digest + ")");
  }

  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  fetch_detail::write_file_atomic(cached, bytes);
  fetch_detail::write_file_atomic(sidecar, digest + "\n");
  return bytes;
}

}  // namespace stylochron
