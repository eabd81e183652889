#include "stylo/vocab.hpp"

#include <map>

#include "stylo/errors.hpp"
#include "stylo/text.hpp"

namespace stylo {

Vocabulary Vocabulary::build(const std::vector<Sentence>& sentences, int min_count) {
  if (sentences.empty()) throw Error("cannot build a vocabulary from no sentences");

  std::unordered_map<char32_t, long> counts;
  std::vector<char32_t> order;  // first-occurrence order
  for (const auto& s : sentences) {
    for (char32_t c : utf8_decode(s.text)) {
      auto [it, inserted] = counts.try_emplace(c, 0);
      if (inserted) order.push_back(c);
      ++it->second;
    }
  }

  Vocabulary v;
  for (char32_t c : order) {
    if (counts[c] >= min_count) {
      v.index_.emplace(c, static_cast<int>(v.symbols_.size()));
      v.symbols_.push_back(utf8_encode(c));
    }
  }
  v.finalize_markers();
  return v;
}

void Vocabulary::finalize_markers() {
  bos_ = static_cast<int>(symbols_.size());
  symbols_.emplace_back(kBosSymbol);
  eos_ = static_cast<int>(symbols_.size());
  symbols_.emplace_back(kEosSymbol);
  unk_ = static_cast<int>(symbols_.size());
  symbols_.emplace_back(kUnkSymbol);
}

int Vocabulary::encode(char32_t c) const {
  auto it = index_.find(c);
  return it == index_.end() ? unk_ : it->second;
}

std::vector<int> Vocabulary::encode_text(std::string_view utf8) const {
  std::vector<int> out;
  for (char32_t c : utf8_decode(utf8)) out.push_back(encode(c));
  return out;
}

nlohmann::json Vocabulary::to_json() const {
  return nlohmann::json{{"symbols", symbols_}};
}

Vocabulary Vocabulary::from_json(const nlohmann::json& j) {
  Vocabulary v;
  auto symbols = j.at("symbols").get<std::vector<std::string>>();
  for (const auto& sym : symbols) {
    if (sym == kBosSymbol) {
      v.bos_ = static_cast<int>(v.symbols_.size());
    } else if (sym == kEosSymbol) {
      v.eos_ = static_cast<int>(v.symbols_.size());
    } else if (sym == kUnkSymbol) {
      v.unk_ = static_cast<int>(v.symbols_.size());
    } else {
      std::u32string chars = utf8_decode(sym);
      if (chars.size() != 1) throw Error("vocabulary symbol is not a single scalar: " + sym);
      v.index_.emplace(chars[0], static_cast<int>(v.symbols_.size()));
    }
    v.symbols_.push_back(sym);
  }
  if (v.bos_ < 0 || v.eos_ < 0 || v.unk_ < 0) {
    throw Error("vocabulary is missing a reserved marker");
  }
  return v;
}

}  // namespace stylo
