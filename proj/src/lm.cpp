#include "stylo/lm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stylo/errors.hpp"

namespace stylo {

bool CharDistribution::valid(double tol) const {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= tol;
}

CharDistribution apply_temperature(const CharDistribution& dist, double tau) {
  if (!(tau > 0.0)) throw Error("temperature must be > 0 (argmax is a sampling mode)");
  if (tau == 1.0) return dist;

  const auto& p = dist.probs;
  double max_log = -std::numeric_limits<double>::infinity();
  for (double v : p) {
    if (v > 0.0) max_log = std::max(max_log, std::log(v) / tau);
  }
  CharDistribution out;
  out.probs.assign(p.size(), 0.0);
  if (!std::isfinite(max_log)) return out;  // all-zero input stays all-zero
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      out.probs[i] = std::exp(std::log(p[i]) / tau - max_log);
      sum += out.probs[i];
    }
  }
  for (double& v : out.probs) v /= sum;
  return out;
}

int sample_symbol(const CharDistribution& dist, SampleMode mode, Rng& rng) {
  const auto& p = dist.probs;
  if (p.empty()) throw Error("cannot sample from an empty distribution");
  if (mode == SampleMode::argmax) {
    int best = 0;
    for (int i = 1; i < dist.size(); ++i) {
      if (p[i] > p[best]) best = i;  // ties keep the lowest index
    }
    return best;
  }
  double u = rng.uniform_double();
  double cum = 0.0;
  int last_positive = -1;
  for (int i = 0; i < dist.size(); ++i) {
    if (p[i] <= 0.0) continue;
    cum += p[i];
    last_positive = i;
    if (u < cum) return i;
  }
  if (last_positive < 0) throw Error("cannot sample from an all-zero distribution");
  return last_positive;  // u fell into rounding slack past the last entry
}

double LanguageModel::next_probability(const LmState& state, int symbol) const {
  try {
    const CharDistribution dist = next_distribution(state);
    return dist.probs.at(symbol);
  } catch (const UnseenContextError&) {
    return 0.0;
  }
}

double perplexity(const LanguageModel& model, const std::vector<Sentence>& sentences,
                  const Vocabulary& vocab) {
  if (sentences.empty()) throw Error("perplexity needs a non-empty evaluation set");
  double log_sum = 0.0;
  long events = 0;
  for (const auto& sentence : sentences) {
    auto state = model.initial_state();
    std::vector<int> symbols = vocab.encode_text(sentence.text);
    symbols.push_back(vocab.eos());
    for (int sym : symbols) {
      double p = model.next_probability(*state, sym);
      if (p <= 0.0) return std::numeric_limits<double>::infinity();
      log_sum += std::log(p);
      ++events;
      model.advance(*state, sym);
    }
  }
  return std::exp(-log_sum / static_cast<double>(events));
}

}  // namespace stylo
