#include "stylo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "stylo/errors.hpp"
#include "stylo/rng.hpp"
#include "stylo/text.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace stylo {

Sentence make_sentence(std::string text) {
  Sentence s;
  std::string_view trimmed = trim(text);
  s.text = std::string(trimmed);
  s.word_count = count_words(s.text);
  s.char_count = static_cast<int>(count_chars(s.text));
  return s;
}

std::vector<Sentence> segment_sentences(const std::string& text) {
  std::vector<std::string> fragments;
  std::size_t start = 0;
  auto is_terminator = [](char c) {
    return c == '.' || c == '!' || c == '?' || c == ';';
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (is_terminator(text[i]) &&
        (i + 1 == text.size() || is_ascii_space(text[i + 1]))) {
      fragments.emplace_back(text.substr(start, i + 1 - start));
      start = i + 1;
    }
  }
  if (start < text.size()) fragments.emplace_back(text.substr(start));

  std::vector<Sentence> out;
  for (auto& frag : fragments) {
    Sentence s = make_sentence(std::move(frag));
    if (s.text.empty()) continue;
    if (s.word_count < 2 && !out.empty()) {
      // merge short fragment into the previous sentence
      Sentence merged = make_sentence(out.back().text + " " + s.text);
      out.back() = std::move(merged);
    } else {
      out.push_back(std::move(s));
    }
  }
  return out;
}

RawCorpus ingest(const fs::path& corpus_root, int min_docs, IngestReport* report) {
  std::error_code ec;
  if (!fs::is_directory(corpus_root, ec)) {
    throw IoError("corpus root is not a readable directory: " + corpus_root.string());
  }

  std::vector<fs::path> author_dirs;
  for (const auto& entry : fs::directory_iterator(corpus_root)) {
    if (entry.is_directory()) author_dirs.push_back(entry.path());
  }
  std::sort(author_dirs.begin(), author_dirs.end());
  if (author_dirs.empty()) throw IoError("no authors found under " + corpus_root.string());

  RawCorpus corpus;
  for (const auto& dir : author_dirs) {
    AuthorTexts author;
    author.author_id = dir.filename().string();

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw IoError("cannot open " + file.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      std::string raw = buf.str();
      if (!utf8_valid(raw)) {
        std::string msg = file.string() + ": not valid UTF-8, skipped";
        if (report) report->skipped_files.push_back(msg);
        std::cerr << "warning: " << msg << "\n";
        continue;
      }
      std::string normalized = nfc_normalize(raw);
      if (trim(normalized).empty()) continue;
      author.texts.push_back(std::move(normalized));
      author.source_paths.push_back(file);
    }

    if (static_cast<int>(author.texts.size()) >= min_docs) {
      corpus.authors.push_back(std::move(author));
    } else {
      std::string msg = author.author_id + " (" + std::to_string(author.texts.size()) +
                        " of " + std::to_string(min_docs) + " required documents)";
      if (report) report->excluded_authors.push_back(msg);
      std::cerr << "warning: excluding author " << msg << "\n";
    }
  }
  if (corpus.authors.empty()) {
    throw IoError("no authors found with at least " + std::to_string(min_docs) +
                  " documents under " + corpus_root.string());
  }
  return corpus;
}

long SentencePool::total_words() const {
  long total = 0;
  for (const auto& s : sentences) total += s.word_count;
  return total;
}

std::map<std::string, std::pair<SentencePool, SentencePool>> split_alpha_omega(
    const RawCorpus& corpus, std::uint64_t seed) {
  std::map<std::string, std::pair<SentencePool, SentencePool>> out;
  for (const auto& author : corpus.authors) {
    if (author.texts.size() < 2) {
      throw Error("author " + author.author_id +
                  " has fewer than 2 documents; cannot split");
    }
    std::vector<std::size_t> order(author.texts.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(seed, author.author_id));
    rng.shuffle(order);

    SentencePool alpha{author.author_id, {}, SplitTag::alpha};
    SentencePool omega{author.author_id, {}, SplitTag::omega};
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto sentences = segment_sentences(author.texts[order[k]]);
      auto& pool = (k % 2 == 0) ? alpha : omega;
      pool.sentences.insert(pool.sentences.end(), sentences.begin(), sentences.end());
    }
    out.emplace(author.author_id, std::make_pair(std::move(alpha), std::move(omega)));
  }
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::real_alpha: return "real_alpha";
    case Provenance::real_omega: return "real_omega";
    case Provenance::synthetic: return "synthetic";
  }
  throw Error("bad provenance");
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "real_alpha") return Provenance::real_alpha;
  if (name == "real_omega") return Provenance::real_omega;
  if (name == "synthetic") return Provenance::synthetic;
  throw Error("unknown provenance: " + name);
}

std::vector<std::string> DocumentSet::author_roster() const {
  std::set<std::string> roster;
  for (const auto& d : documents) roster.insert(d.author_id);
  return {roster.begin(), roster.end()};
}

std::vector<const Document*> DocumentSet::by_author(const std::string& author) const {
  std::vector<const Document*> out;
  for (const auto& d : documents) {
    if (d.author_id == author) out.push_back(&d);
  }
  return out;
}

DocumentSet assemble_documents(const SentencePool& pool, Provenance provenance,
                               int n_docs, int min_words, std::uint64_t seed,
                               bool replacement_across_docs) {
  if (pool.sentences.empty()) throw Error("empty sentence pool for " + pool.author_id);
  long available = pool.total_words();
  if (available < min_words) {
    throw Error("pool for " + pool.author_id + " has " + std::to_string(available) +
                " words; at least " + std::to_string(min_words) +
                " are needed for one document");
  }

  Rng rng(seed);
  DocumentSet set;
  set.provenance = provenance;

  std::vector<std::size_t> remaining(pool.sentences.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<std::size_t> full = remaining;

  for (int d = 0; d < n_docs; ++d) {
    if (replacement_across_docs) remaining = full;
    Document doc;
    doc.author_id = pool.author_id;
    while (doc.word_count < min_words && !remaining.empty()) {
      std::size_t pick = rng.uniform_index(remaining.size());
      std::size_t idx = remaining[pick];
      remaining[pick] = remaining.back();
      remaining.pop_back();
      doc.sentences.push_back(pool.sentences[idx]);
      doc.source_indices.push_back(idx);
      doc.word_count += pool.sentences[idx].word_count;
    }
    if (doc.word_count >= min_words) {
      set.documents.push_back(std::move(doc));
    } else {
      break;  // pool exhausted mid-document: discard the partial document
    }
  }
  return set;
}

void save_pool_jsonl(const SentencePool& pool, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& s : pool.sentences) {
    json j{{"text", s.text}, {"words", s.word_count}};
    out << j.dump() << "\n";
  }
}

SentencePool load_pool_jsonl(const fs::path& path, const std::string& author_id,
                             SplitTag tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  SentencePool pool{author_id, {}, tag};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    json j = json::parse(line);
    pool.sentences.push_back(make_sentence(j.at("text").get<std::string>()));
  }
  return pool;
}

void save_docs_jsonl(const DocumentSet& docs, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& d : docs.documents) {
    json sentences = json::array();
    for (const auto& s : d.sentences) sentences.push_back(s.text);
    json j{{"author", d.author_id},
           {"provenance", provenance_name(docs.provenance)},
           {"sentences", std::move(sentences)}};
    out << j.dump() << "\n";
  }
}

DocumentSet load_docs_jsonl(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  DocumentSet set;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    json j = json::parse(line);
    Document doc;
    doc.author_id = j.at("author").get<std::string>();
    Provenance prov = provenance_from_name(j.at("provenance").get<std::string>());
    if (first) {
      set.provenance = prov;
      first = false;
    } else if (prov != set.provenance) {
      throw Error("mixed provenance in " + path.string());
    }
    for (const auto& t : j.at("sentences")) {
      Sentence s = make_sentence(t.get<std::string>());
      doc.word_count += s.word_count;
      doc.sentences.push_back(std::move(s));
    }
    set.documents.push_back(std::move(doc));
  }
  return set;
}

}  // namespace stylo
