#pragma once

#include <memory>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/rng.hpp"
#include "stylo/vocab.hpp"

namespace stylo {

// Next-character distribution over the vocabulary. Entries are >= 0 and sum
// to 1 within 1e-9 (validated in tests, not on every construction).
struct CharDistribution {
  std::vector<double> probs;

  int size() const { return static_cast<int>(probs.size()); }
  bool valid(double tol = 1e-9) const;
};

struct GenParams {
  double temperature = 1.0;  // tau > 0
  int seed_reset = 10;       // redraw the seed sentence every s accepted sentences
  int max_chars = 1;         // reject sentences that reach m characters without EOS
};

// Power transform p_i^(1/tau) / sum_j p_j^(1/tau), computed in log space so
// that small probabilities survive extreme tau. Zero entries stay zero and
// the argmax set is preserved for every tau > 0. tau == 1 returns the input.
CharDistribution apply_temperature(const CharDistribution& dist, double tau);

enum class SampleMode { multinomial, argmax };

// multinomial: inverse-CDF walk with a single uniform variate.
// argmax: lowest index attaining the maximum.
int sample_symbol(const CharDistribution& dist, SampleMode mode, Rng& rng);

// Opaque per-model scoring/generation state.
class LmState {
 public:
  virtual ~LmState() = default;
  virtual std::unique_ptr<LmState> clone() const = 0;
};

// Shared contract of both LM families: advanceable state plus the
// next-character distribution given that state.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual const Vocabulary& vocabulary() const = 0;

  // State positioned before the first character of a fresh sentence.
  virtual std::unique_ptr<LmState> initial_state() const = 0;
  virtual void advance(LmState& state, int symbol) const = 0;

  // May throw UnseenContextError (unsmoothed n-gram tables).
  virtual CharDistribution next_distribution(const LmState& state) const = 0;

  // P(symbol | state); 0 instead of UnseenContextError.
  virtual double next_probability(const LmState& state, int symbol) const;

  // Whether generation may continue through an EOS into the next sentence
  // (recurrent state) or must be re-seeded per sentence (n-gram contexts).
  virtual bool carries_state_across_sentences() const = 0;
};

// exp of mean per-character negative log likelihood. Scored events are every
// character of each sentence plus its EOS; BOS never counts. Returns +inf if
// any scored probability is zero.
double perplexity(const LanguageModel& model, const std::vector<Sentence>& sentences,
                  const Vocabulary& vocab);

}  // namespace stylo
