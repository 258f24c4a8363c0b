#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace csatm {

struct TokenizerConfig {
  int min_len = 2;
  std::unordered_set<std::string> stopwords;
};

/// Lowercases, splits on non-alphanumeric runs (ASCII), drops terms shorter
/// than min_len and terms in the stopword set. An empty result is valid.
std::vector<std::string> tokenize(const std::string& raw_text,
                                  const TokenizerConfig& config);

/// One term per line, UTF-8. Terms are lowercased on load.
std::unordered_set<std::string> load_stopwords(const std::string& path);

}  // namespace csatm
