#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "stylo/lm.hpp"

namespace stylo {

enum class CellOutput { tanh, sigmoid };

struct TrainConfig {
  int embedding = 24;  // M
  int hidden = 200;    // H
  int layers = 2;
  int epochs = 50;
  double learning_rate = 0.001;
  int batch_size = 50;
  double clip_norm = 5.0;
  int tbptt_steps = 50;
  double dropout = 0.3;
  double validation_fraction = 0.1;
  std::uint64_t seed = 0;
  CellOutput cell_output = CellOutput::tanh;
  // Optional cap on the number of training characters per epoch (whole
  // sentences are kept until the budget is reached). 0 keeps everything.
  long max_train_chars = 0;

  void validate() const;
};

enum Gate { kGateInput = 0, kGateForget = 1, kGateOutput = 2, kGateCell = 3 };

struct LstmLayer {
  Eigen::MatrixXd w_ih[4];  // H x in  (in = M for layer 0, H above)
  Eigen::MatrixXd w_hh[4];  // H x H
  Eigen::VectorXd b[4];     // H
};

struct RnnlmParams {
  int vocab_size = 0;
  int embedding = 0;
  int hidden = 0;
  int layers = 0;
  CellOutput cell_output = CellOutput::tanh;

  Eigen::MatrixXd embed;  // M x V
  std::vector<LstmLayer> lstm;
  Eigen::MatrixXd w_out;  // V x H
  Eigen::VectorXd b_out;  // V

  static RnnlmParams zeros_like(const RnnlmParams& shape);
  std::size_t parameter_count() const;
};

// Flattened views over every tensor in a fixed order; shared by the clipper,
// the optimizer and the finite-difference checks.
std::vector<Eigen::Map<Eigen::VectorXd>> tensor_views(RnnlmParams& p);

// Weights ~ uniform(-a, a) with a = 1/sqrt(fan_in) per matrix; biases zero
// except the forget-gate bias, which starts at 1.
RnnlmParams init_params(int vocab_size, const TrainConfig& config, Rng& rng);

struct RnnState {
  std::vector<Eigen::VectorXd> h, c;  // per layer, H

  static RnnState zeros(const RnnlmParams& p);
};

// Consumes one symbol: updates the recurrent state in place. dropout_masks,
// when given, holds one inverted-dropout mask per layer (entries 0 or
// 1/(1-p)) applied to that layer's h output on the upward path.
void lstm_advance(const RnnlmParams& p, RnnState& state, int input,
                  const std::vector<Eigen::VectorXd>* dropout_masks = nullptr);

// Distribution over the next symbol from the current state.
CharDistribution output_distribution(const RnnlmParams& p, const RnnState& state);

// Convenience: advance + distribution in one call.
CharDistribution forward_step(const RnnlmParams& p, RnnState& state, int input,
                              const std::vector<Eigen::VectorXd>* dropout_masks = nullptr);

// ---- batched training internals (also exercised directly by tests) ----

struct BatchState {
  std::vector<Eigen::MatrixXd> h, c;  // per layer, H x B

  static BatchState zeros(const RnnlmParams& p, int batch);
};

// Cached activations of one truncated-BPTT window.
struct WindowCache {
  int steps = 0;
  int batch = 0;
  std::vector<std::vector<int>> inputs;   // steps x batch
  std::vector<std::vector<int>> targets;  // steps x batch
  struct LayerStep {
    Eigen::MatrixXd i, f, o, g;  // gate activations, H x B
    Eigen::MatrixXd act_c;       // cell output activation A(c_t)
    Eigen::MatrixXd c_prev, h_prev;
    Eigen::MatrixXd mask;     // empty when dropout is off
    Eigen::MatrixXd dropped;  // h after mask; input to the layer above
  };
  std::vector<std::vector<LayerStep>> layers;  // [step][layer]
  std::vector<Eigen::MatrixXd> probs;          // per step, V x B
};

// Runs the window forward, mutating state (carried, detached) and filling the
// cache. Returns the summed cross-entropy over all positions. Masks are
// sampled from rng when train_dropout > 0.
double forward_window(const RnnlmParams& p, BatchState& state,
                      const std::vector<std::vector<int>>& inputs,
                      const std::vector<std::vector<int>>& targets,
                      double train_dropout, Rng* rng, WindowCache* cache);

// Exact gradients of the mean cross-entropy of the cached window.
RnnlmParams backward_window(const RnnlmParams& p, const WindowCache& cache);

// Returns the pre-clip global L2 norm; rescales in place when it exceeds
// max_norm.
double clip_gradients(RnnlmParams& grads, double max_norm);

struct AdamState {
  RnnlmParams m, v;
  long t = 0;
  double beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8;

  static AdamState init(const RnnlmParams& shape);
};

void adam_update(RnnlmParams& params, const RnnlmParams& grads, AdamState& opt,
                 double lr);

struct EpochLog {
  int epoch = 0;
  double train_ppl = 0;
  double val_ppl = 0;
  double grad_norm_mean = 0;
  double seconds = 0;
};

struct TrainLog {
  std::vector<EpochLog> epochs;

  void save_csv(const std::filesystem::path& path) const;
};

class RnnLanguageModel final : public LanguageModel {
 public:
  RnnLanguageModel(RnnlmParams params, Vocabulary vocab);

  const RnnlmParams& params() const { return params_; }

  const Vocabulary& vocabulary() const override { return vocab_; }
  std::unique_ptr<LmState> initial_state() const override;
  void advance(LmState& state, int symbol) const override;
  CharDistribution next_distribution(const LmState& state) const override;
  bool carries_state_across_sentences() const override { return true; }

  void save(const std::filesystem::path& path, const TrainConfig& config) const;
  static RnnLanguageModel load(const std::filesystem::path& path,
                               TrainConfig* config = nullptr);

 private:
  RnnlmParams params_;
  Vocabulary vocab_;
};

// Full training loop: validation holdout, EOS-separated parallel streams,
// truncated BPTT with state carried across windows, gradient clipping and
// Adam updates, one log entry per epoch.
std::pair<RnnLanguageModel, TrainLog> train_rnnlm(const std::vector<Sentence>& sentences,
                                                  Vocabulary vocab,
                                                  const TrainConfig& config);

}  // namespace stylo
