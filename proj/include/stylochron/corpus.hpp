#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/fetch.hpp"
#include "stylochron/manifest.hpp"
#include "stylochron/model.hpp"
#include "stylochron/tei.hpp"

namespace stylochron {

// Fetches and parses every manifest edition, up to `jobs` in parallel.
// Editions come back sorted by ordinal; the first failure wins and is
// rethrown with the edition label attached.
inline std::vector<Edition> load_corpus(const CorpusManifest& manifest,
                                        const std::filesystem::path& cache_dir,
                                        unsigned jobs = 1) {
  manifest.validate();
  const std::size_t n = manifest.entries.size();
  std::vector<Edition> editions(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      const ManifestEntry& entry = manifest.entries[i];
      try {
        std::string bytes = fetch_source(entry, cache_dir);
        editions[i] = parse_edition(bytes, entry.label, entry.ordinal);
      } catch (const Error&) {
        failures[i] = std::current_exception();
      } catch (const std::exception& e) {
        failures[i] = std::make_exception_ptr(
            Error("edition '" + entry.label + "': " + e.what()));
      }
    }
  };

  unsigned thread_count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) std::rethrow_exception(failures[i]);
  }
  std::sort(editions.begin(), editions.end(),
            [](const Edition& a, const Edition& b) { return a.ordinal < b.ordinal; });
  return editions;
}

}  // namespace stylochron
