#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "stylo/corpus.hpp"

namespace stylo {

// Bijection between symbols and dense indices. Symbols are single Unicode
// scalars plus the reserved markers BOS, EOS and UNK, indexed by first
// occurrence in the training sentences, markers appended last.
class Vocabulary {
 public:
  static constexpr std::string_view kBosSymbol = "<BOS>";
  static constexpr std::string_view kEosSymbol = "<EOS>";
  static constexpr std::string_view kUnkSymbol = "<UNK>";

  // Characters with count >= min_count are included; rarer characters map to
  // UNK at encode time.
  static Vocabulary build(const std::vector<Sentence>& sentences, int min_count = 1);

  int size() const { return static_cast<int>(symbols_.size()); }
  int bos() const { return bos_; }
  int eos() const { return eos_; }
  int unk() const { return unk_; }

  int encode(char32_t c) const;
  std::vector<int> encode_text(std::string_view utf8) const;
  const std::string& symbol(int index) const { return symbols_.at(index); }
  bool is_marker(int index) const {
    return index == bos_ || index == eos_ || index == unk_;
  }

  nlohmann::json to_json() const;
  static Vocabulary from_json(const nlohmann::json& j);

  bool operator==(const Vocabulary& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;  // UTF-8 of one scalar, or a marker
  std::unordered_map<char32_t, int> index_;
  int bos_ = -1, eos_ = -1, unk_ = -1;

  void finalize_markers();
};

}  // namespace stylo
