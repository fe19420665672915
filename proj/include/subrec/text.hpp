#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "subrec/error.hpp"

namespace subrec {

// Porter's suffix-stripping algorithm (1980), matching the author's reference
// implementation, including its two departures from the published paper
// (bli->ble, logi->log) and the guard that leaves words of length <= 2
// unchanged. Expects lowercase input; tokens containing non-letters are
// returned unchanged.
std::string porter_stem(std::string_view word);

using StopwordSet = std::unordered_set<std::string>;

// Frozen default English stopword list (the classic 33-word set used by
// Lucene's StandardAnalyzer). Token identity feeds every downstream number,
// so the list is pinned in code rather than read from a mutable file.
const StopwordSet& default_stopwords();

// Loads a custom list: one lowercase word per line, '#' starts a comment.
StopwordSet load_stopwords(const std::string& path);

// Lowercased maximal [a-z0-9] runs of the input, in order. Bytes outside
// ASCII alphanumerics (including all multi-byte UTF-8) act as separators.
std::vector<std::string> split_alnum_lower(std::string_view text);

// Full normalization for one text field: split, drop stopwords, stem, and
// drop any stem that lands back in the stopword list (keeps the token stream
// free of stopwords by construction).
std::vector<std::string> normalize_text(std::string_view text, const StopwordSet& stop);

} // namespace subrec
