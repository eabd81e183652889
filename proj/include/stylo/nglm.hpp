#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylo/lm.hpp"

namespace stylo {

// Unsmoothed character n-gram model. Each sentence contributes the windows of
// (n-1) x BOS ++ chars ++ EOS; only observed contexts exist in the table and
// unobserved continuations have probability exactly zero.
class NgramModel final : public LanguageModel {
 public:
  struct ContextEntry {
    std::vector<std::pair<int, std::uint64_t>> continuations;  // sorted by symbol
    std::uint64_t total = 0;
  };

  static NgramModel fit(const std::vector<Sentence>& sentences, Vocabulary vocab,
                        int order = 6);

  int order() const { return order_; }
  std::size_t context_count() const { return table_.size(); }

  // context must hold exactly order-1 symbol indices (BOS-padded by callers
  // with shorter history). Throws UnseenContextError for unknown contexts.
  CharDistribution next_distribution(std::span<const int> context) const;

  // LanguageModel contract.
  const Vocabulary& vocabulary() const override { return vocab_; }
  std::unique_ptr<LmState> initial_state() const override;
  void advance(LmState& state, int symbol) const override;
  CharDistribution next_distribution(const LmState& state) const override;
  bool carries_state_across_sentences() const override { return false; }

  // Deterministic iteration for serialization and table-wide checks.
  void for_each_context(
      const std::function<void(std::span<const int>, const ContextEntry&)>& fn) const;

  void save(const std::filesystem::path& path) const;
  static NgramModel load(const std::filesystem::path& path);

 private:
  NgramModel(int order, Vocabulary vocab) : order_(order), vocab_(std::move(vocab)) {}

  static std::string pack_key(std::span<const int> context);
  static std::vector<int> unpack_key(const std::string& key);

  int order_;
  Vocabulary vocab_;
  std::unordered_map<std::string, ContextEntry> table_;
};

}  // namespace stylo
