#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stylo {

struct Sentence {
  std::string text;  // NFC UTF-8, no leading/trailing whitespace
  int word_count = 0;
  int char_count = 0;  // Unicode scalar values
};

Sentence make_sentence(std::string text);

// Rule-based segmentation: split on {. ! ? ;} followed by whitespace or end
// of text, terminator kept with its sentence. Fragments with fewer than two
// words are merged into the previous sentence.
std::vector<Sentence> segment_sentences(const std::string& text);

struct AuthorTexts {
  std::string author_id;
  std::vector<std::string> texts;  // NFC-normalized file contents
  std::vector<std::filesystem::path> source_paths;
};

struct RawCorpus {
  std::vector<AuthorTexts> authors;  // sorted by author_id
};

struct IngestReport {
  std::vector<std::string> skipped_files;     // non-UTF-8, with reason
  std::vector<std::string> excluded_authors;  // below the min_docs threshold
};

// Layout: corpus_root/<author_id>/<doc>.txt, UTF-8. Authors with fewer than
// min_docs readable files are excluded (and reported).
RawCorpus ingest(const std::filesystem::path& corpus_root, int min_docs,
                 IngestReport* report = nullptr);

enum class SplitTag { alpha, omega };

struct SentencePool {
  std::string author_id;
  std::vector<Sentence> sentences;
  SplitTag split_tag = SplitTag::alpha;

  long total_words() const;
};

// Per author: shuffle documents with the seeded RNG, assign alternately to
// alpha and omega, concatenate each side's sentences in assignment order.
std::map<std::string, std::pair<SentencePool, SentencePool>> split_alpha_omega(
    const RawCorpus& corpus, std::uint64_t seed);

enum class Provenance { real_alpha, real_omega, synthetic };

std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct Document {
  std::string author_id;
  std::vector<Sentence> sentences;
  long word_count = 0;
  // Index of each sentence in the source pool; empty for synthetic documents.
  std::vector<std::size_t> source_indices;
};

struct DocumentSet {
  Provenance provenance = Provenance::real_alpha;
  std::vector<Document> documents;

  std::vector<std::string> author_roster() const;  // sorted unique author ids
  std::vector<const Document*> by_author(const std::string& author) const;
};

// Draws sentences uniformly without replacement from the pool. A document
// closes when its word count first reaches min_words; assembly stops after
// n_docs documents or when the pool is exhausted (a partial document is
// discarded). With replacement_across_docs the pool is restored between
// documents, so only within-document draws are unique.
DocumentSet assemble_documents(const SentencePool& pool, Provenance provenance,
                               int n_docs, int min_words, std::uint64_t seed,
                               bool replacement_across_docs = false);

// JSONL serialization. Pools: one object per sentence {"text":..,"words":n}.
// Document sets: one object per document
// {"author":..,"provenance":..,"sentences":[..]}.
void save_pool_jsonl(const SentencePool& pool, const std::filesystem::path& path);
SentencePool load_pool_jsonl(const std::filesystem::path& path,
                             const std::string& author_id, SplitTag tag);
void save_docs_jsonl(const DocumentSet& docs, const std::filesystem::path& path);
DocumentSet load_docs_jsonl(const std::filesystem::path& path);

}  // namespace stylo
