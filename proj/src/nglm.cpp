#include "stylo/nglm.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>

#include "json.hpp"
#include "stylo/errors.hpp"

namespace stylo {

using json = nlohmann::json;

namespace {

class NgramState final : public LmState {
 public:
  explicit NgramState(std::vector<int> context) : context(std::move(context)) {}
  std::unique_ptr<LmState> clone() const override {
    return std::make_unique<NgramState>(context);
  }
  std::vector<int> context;  // exactly order-1 symbols, most recent last
};

}  // namespace

std::string NgramModel::pack_key(std::span<const int> context) {
  std::string key(context.size() * sizeof(int), '\0');
  std::memcpy(key.data(), context.data(), key.size());
  return key;
}

std::vector<int> NgramModel::unpack_key(const std::string& key) {
  std::vector<int> out(key.size() / sizeof(int));
  std::memcpy(out.data(), key.data(), key.size());
  return out;
}

NgramModel NgramModel::fit(const std::vector<Sentence>& sentences, Vocabulary vocab,
                           int order) {
  if (order < 1) throw Error("n-gram order must be >= 1");
  if (sentences.empty()) throw Error("cannot fit an n-gram model on no sentences");

  NgramModel model(order, std::move(vocab));
  const int ctx_len = order - 1;
  std::unordered_map<std::string, std::map<int, std::uint64_t>> counts;

  for (const auto& sentence : sentences) {
    std::vector<int> symbols(ctx_len, model.vocab_.bos());
    for (int s : model.vocab_.encode_text(sentence.text)) symbols.push_back(s);
    symbols.push_back(model.vocab_.eos());
    for (std::size_t t = ctx_len; t < symbols.size(); ++t) {
      std::span<const int> ctx(symbols.data() + t - ctx_len, ctx_len);
      counts[pack_key(ctx)][symbols[t]] += 1;
    }
  }

  for (auto& [key, conts] : counts) {
    ContextEntry entry;
    for (auto [sym, count] : conts) {
      entry.continuations.emplace_back(sym, count);
      entry.total += count;
    }
    model.table_.emplace(key, std::move(entry));
  }
  return model;
}

CharDistribution NgramModel::next_distribution(std::span<const int> context) const {
  if (static_cast<int>(context.size()) != order_ - 1) {
    throw Error("context length must be order-1");
  }
  auto it = table_.find(pack_key(context));
  if (it == table_.end()) {
    throw UnseenContextError(std::vector<int>(context.begin(), context.end()));
  }
  CharDistribution dist;
  dist.probs.assign(vocab_.size(), 0.0);
  const auto& entry = it->second;
  for (auto [sym, count] : entry.continuations) {
    dist.probs[sym] = static_cast<double>(count) / static_cast<double>(entry.total);
  }
  return dist;
}

std::unique_ptr<LmState> NgramModel::initial_state() const {
  return std::make_unique<NgramState>(std::vector<int>(order_ - 1, vocab_.bos()));
}

void NgramModel::advance(LmState& state, int symbol) const {
  auto& ctx = static_cast<NgramState&>(state).context;
  if (symbol == vocab_.eos()) {
    // sentence boundary: contexts never span it
    ctx.assign(order_ - 1, vocab_.bos());
    return;
  }
  if (!ctx.empty()) {
    ctx.erase(ctx.begin());
    ctx.push_back(symbol);
  }
}

CharDistribution NgramModel::next_distribution(const LmState& state) const {
  return next_distribution(std::span<const int>(static_cast<const NgramState&>(state).context));
}

void NgramModel::for_each_context(
    const std::function<void(std::span<const int>, const ContextEntry&)>& fn) const {
  std::vector<const std::string*> keys;
  keys.reserve(table_.size());
  for (const auto& [key, entry] : table_) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  for (const std::string* key : keys) {
    std::vector<int> ctx = unpack_key(*key);
    fn(std::span<const int>(ctx), table_.at(*key));
  }
}

namespace {
constexpr char kMagic[4] = {'S', 'F', 'N', 'G'};

template <typename T>
void write_pod(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::istream& in) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("truncated n-gram model file");
  return v;
}
}  // namespace

void NgramModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(kMagic, 4);
  write_pod<std::uint32_t>(out, 1);  // format version
  json header{{"order", order_}, {"vocabulary", vocab_.to_json()}};
  std::string header_str = header.dump();
  write_pod<std::uint64_t>(out, header_str.size());
  out.write(header_str.data(), static_cast<std::streamsize>(header_str.size()));
  write_pod<std::uint64_t>(out, table_.size());
  for_each_context([&](std::span<const int> ctx, const ContextEntry& entry) {
    for (int s : ctx) write_pod<std::int32_t>(out, s);
    write_pod<std::uint32_t>(out, static_cast<std::uint32_t>(entry.continuations.size()));
    for (auto [sym, count] : entry.continuations) {
      write_pod<std::int32_t>(out, sym);
      write_pod<std::uint64_t>(out, count);
    }
  });
  if (!out) throw IoError("failed writing " + path.string());
}

NgramModel NgramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError(path.string() + " is not an n-gram model file");
  }
  auto version = read_pod<std::uint32_t>(in);
  if (version != 1) throw IoError("unsupported n-gram model version");
  auto header_len = read_pod<std::uint64_t>(in);
  std::string header_str(header_len, '\0');
  in.read(header_str.data(), static_cast<std::streamsize>(header_len));
  if (!in) throw IoError("truncated n-gram model file");
  json header = json::parse(header_str);

  NgramModel model(header.at("order").get<int>(),
                   Vocabulary::from_json(header.at("vocabulary")));
  auto n_contexts = read_pod<std::uint64_t>(in);
  const int ctx_len = model.order_ - 1;
  for (std::uint64_t i = 0; i < n_contexts; ++i) {
    std::vector<int> ctx(ctx_len);
    for (int& s : ctx) s = read_pod<std::int32_t>(in);
    ContextEntry entry;
    auto n_conts = read_pod<std::uint32_t>(in);
    for (std::uint32_t k = 0; k < n_conts; ++k) {
      int sym = read_pod<std::int32_t>(in);
      auto count = read_pod<std::uint64_t>(in);
      entry.continuations.emplace_back(sym, count);
      entry.total += count;
    }
    model.table_.emplace(pack_key(ctx), std::move(entry));
  }
  return model;
}

}  // namespace stylo
