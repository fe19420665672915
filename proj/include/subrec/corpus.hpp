#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subrec/text.hpp"

namespace subrec {

// One article: the retrieval-side unit of text, owned by exactly one venue.
struct Document {
    std::string doc_id;
    std::string venue_id;
    int year = 0;
    std::string title;
    std::string abstract;
    std::vector<std::string> keywords;
};

struct Corpus {
    std::vector<Document> documents;
    std::vector<std::string> items; // distinct venue_ids, sorted
    int min_year = 0;
    int max_year = 0;

    size_t size() const { return documents.size(); }
};

struct LoadResult {
    Corpus corpus;
    size_t rejected = 0;                  // malformed records, counted not dropped silently
    std::vector<std::string> rejections;  // first few reasons, for reporting
};

// Reads line-delimited JSON records (doc_id, venue_id, year, title, abstract,
// keywords[]); unknown fields ignored. Malformed records are counted.
// Throws on: unreadable file, zero well-formed records, duplicate doc_id.
LoadResult load_corpus(const std::string& path);

// Drops venues with fewer than min_item_docs documents and any venue named in
// exclude_items, then rebuilds the item set. Both filters default to "off".
Corpus filter_corpus(Corpus corpus, size_t min_item_docs,
                     const std::vector<std::string>& exclude_items);

// train = year < cutoff_year, test = year >= cutoff_year.
// Throws if either side is empty or cutoff is outside the corpus year range.
std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus, int cutoff_year);

struct TokenizedDoc {
    std::string doc_id;
    std::vector<std::string> tokens;
};

// title, abstract and keywords concatenated into one normalized stream.
TokenizedDoc tokenize(const Document& doc, const StopwordSet& stop = default_stopwords());

// A corpus plus its token streams: the currency of the whole pipeline.
struct TokenizedCorpus {
    struct Doc {
        std::string doc_id;
        std::string venue_id;
        int year = 0;
        std::vector<std::string> tokens;
    };

    std::vector<Doc> docs;
    std::vector<std::string> items; // sorted distinct venue ids
    int min_year = 0;
    int max_year = 0;

    size_t size() const { return docs.size(); }
    std::optional<size_t> find(const std::string& doc_id) const;
    void rebuild_lookup();

private:
    std::unordered_map<std::string, size_t> by_id_;
};

TokenizedCorpus tokenize_corpus(const Corpus& corpus, const StopwordSet& stop = default_stopwords());

std::pair<TokenizedCorpus, TokenizedCorpus> split_train_test(const TokenizedCorpus& corpus,
                                                             int cutoff_year);

} // namespace subrec
