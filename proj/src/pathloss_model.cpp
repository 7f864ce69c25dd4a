#include "mlpl/pathloss_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mlpl/csv.hpp"
#include "mlpl/error.hpp"

namespace mlpl {

RegressionTree::RegressionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

double RegressionTree::evaluate(double distance) const {
  if (nodes_.empty()) return 0.0;
  std::size_t i = 0;
  while (!nodes_[i].is_leaf()) {
    i = static_cast<std::size_t>(distance <= nodes_[i].threshold ? nodes_[i].left
                                                                 : nodes_[i].right);
  }
  return nodes_[i].value;
}

std::size_t RegressionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<std::size_t> d(nodes_.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    best = std::max(best, d[i]);
    if (!nodes_[i].is_leaf()) {
      d[static_cast<std::size_t>(nodes_[i].left)] = d[i] + 1;
      d[static_cast<std::size_t>(nodes_[i].right)] = d[i] + 1;
    }
  }
  return best;
}

PathLossModel::PathLossModel(double base_score, double learning_rate, double range_min,
                             double range_max, std::vector<RegressionTree> trees)
    : base_score_(base_score),
      learning_rate_(learning_rate),
      range_min_(range_min),
      range_max_(range_max),
      trees_(std::move(trees)) {
  if (!(learning_rate > 0.0 && learning_rate <= 1.0)) {
    throw ValidationError("learning rate must be in (0, 1]");
  }
  if (!(range_min <= range_max)) throw ValidationError("invalid training range");
  if (!std::isfinite(base_score)) throw ValidationError("base score must be finite");
}

double PathLossModel::predict(double d) const {
  if (!(d > 0.0)) throw DomainError("predict: distance must be positive");
  double sum = 0.0;
  for (const auto& tree : trees_) sum += tree.evaluate(d);
  return base_score_ + learning_rate_ * sum;
}

namespace {

// Training data sorted by distance; every tree node owns a contiguous range
// [begin, end) of this order because the only feature is distance.
struct SortedData {
  std::vector<double> distance;
  std::vector<double> residual;
};

struct Split {
  std::size_t pos = 0;  // first index of the right child
  double gain = 0.0;
};

class TreeBuilder {
 public:
  TreeBuilder(const SortedData& data, const TrainConfig& cfg) : data_(data), cfg_(cfg) {
    prefix_.resize(data.residual.size() + 1, 0.0);
    for (std::size_t i = 0; i < data.residual.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + data.residual[i];
    }
  }

  RegressionTree build() {
    nodes_.clear();
    grow(0, data_.distance.size(), 0);
    return RegressionTree(std::move(nodes_));
  }

 private:
  double sum(std::size_t b, std::size_t e) const { return prefix_[e] - prefix_[b]; }

  // Reduction in the sum of squared residuals for splitting [b, e) at pos:
  //   S_L^2/n_L + S_R^2/n_R - S^2/n
  double gain(std::size_t b, std::size_t pos, std::size_t e) const {
    const double sl = sum(b, pos), sr = sum(pos, e), s = sum(b, e);
    const double nl = static_cast<double>(pos - b), nr = static_cast<double>(e - pos);
    return sl * sl / nl + sr * sr / nr - s * s / static_cast<double>(e - b);
  }

  Split best_split(std::size_t b, std::size_t e) const {
    Split best;
    const auto min_leaf = static_cast<std::size_t>(cfg_.min_samples_leaf);
    for (std::size_t pos = b + 1; pos < e; ++pos) {
      if (data_.distance[pos] == data_.distance[pos - 1]) continue;
      if (pos - b < min_leaf || e - pos < min_leaf) continue;
      const double g = gain(b, pos, e);
      if (g > best.gain) best = {pos, g};
    }
    return best;
  }

  std::int32_t grow(std::size_t b, std::size_t e, int depth) {
    const auto index = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    const Split split = depth < cfg_.max_depth ? best_split(b, e) : Split{};
    if (split.pos == 0) {
      nodes_[static_cast<std::size_t>(index)].value =
          sum(b, e) / static_cast<double>(e - b);
      return index;
    }
    const double threshold =
        0.5 * (data_.distance[split.pos - 1] + data_.distance[split.pos]);
    const auto left = grow(b, split.pos, depth + 1);
    const auto right = grow(split.pos, e, depth + 1);
    auto& node = nodes_[static_cast<std::size_t>(index)];
    node.threshold = threshold;
    node.left = left;
    node.right = right;
    return index;
  }

  const SortedData& data_;
  const TrainConfig& cfg_;
  std::vector<double> prefix_;
  std::vector<RegressionTree::Node> nodes_;
};

void validate(const TrainConfig& cfg) {
  if (cfg.n_trees < 1) throw ValidationError("n_trees must be >= 1");
  if (cfg.max_depth < 1) throw ValidationError("max_depth must be >= 1");
  if (cfg.min_samples_leaf < 1) throw ValidationError("min_samples_leaf must be >= 1");
  if (!(cfg.learning_rate > 0.0 && cfg.learning_rate <= 1.0)) {
    throw ValidationError("learning_rate must be in (0, 1]");
  }
}

double mean_square(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s / static_cast<double>(v.size());
}

}  // namespace

PathLossModel train(std::span<const PathLossSample> samples, const TrainConfig& cfg) {
  return train(samples, cfg, nullptr);
}

PathLossModel train(std::span<const PathLossSample> samples, const TrainConfig& cfg,
                    std::vector<double>* mse_trace) {
  validate(cfg);
  if (samples.empty()) throw ValidationError("train: no samples");

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].distance < samples[b].distance;
  });

  SortedData data;
  data.distance.reserve(samples.size());
  std::vector<double> target;
  target.reserve(samples.size());
  for (auto i : order) {
    if (!(samples[i].distance > 0.0) || !std::isfinite(samples[i].path_loss)) {
      throw ValidationError("train: invalid sample");
    }
    data.distance.push_back(samples[i].distance);
    target.push_back(samples[i].path_loss);
  }

  const double base = std::accumulate(target.begin(), target.end(), 0.0) /
                      static_cast<double>(target.size());
  data.residual.resize(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) data.residual[i] = target[i] - base;
  if (mse_trace) {
    mse_trace->clear();
    mse_trace->push_back(mean_square(data.residual));
  }

  const double range_min = data.distance.front();
  const double range_max = data.distance.back();
  std::vector<RegressionTree> trees;
  if (range_min == range_max) {
    return PathLossModel(base, cfg.learning_rate, range_min, range_max, {});
  }

  trees.reserve(static_cast<std::size_t>(cfg.n_trees));
  for (int round = 0; round < cfg.n_trees; ++round) {
    RegressionTree tree = TreeBuilder(data, cfg).build();
    for (std::size_t i = 0; i < data.residual.size(); ++i) {
      data.residual[i] -= cfg.learning_rate * tree.evaluate(data.distance[i]);
    }
    trees.push_back(std::move(tree));
    if (mse_trace) mse_trace->push_back(mean_square(data.residual));
  }
  return PathLossModel(base, cfg.learning_rate, range_min, range_max, std::move(trees));
}

namespace {

constexpr const char* kModelMagic = "mlplmodel v1";

void write_node(std::string& out, const RegressionTree& tree, std::size_t i) {
  const auto& node = tree.nodes()[i];
  if (node.is_leaf()) {
    out += "leaf " + csv::format(node.value) + "\n";
    return;
  }
  out += "split " + csv::format(node.threshold) + "\n";
  write_node(out, tree, static_cast<std::size_t>(node.left));
  write_node(out, tree, static_cast<std::size_t>(node.right));
}

class ModelReader {
 public:
  explicit ModelReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines_.push_back(line);
    }
  }

  PathLossModel read() {
    if (next() != kModelMagic) fail("missing or unsupported header, expected 'mlplmodel v1'");
    const double base = value("base");
    const double lr = value("lr");
    const auto range = fields("range");
    if (range.size() != 3) fail("malformed range line");
    const double lo = csv::parse_double(range[1]);
    const double hi = csv::parse_double(range[2]);
    const auto count = fields("trees");
    if (count.size() != 2) fail("malformed trees line");
    const auto n = static_cast<std::size_t>(csv::parse_double(count[1]));

    std::vector<RegressionTree> trees;
    trees.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto head = fields("tree");
      if (head.size() != 2 || csv::parse_double(head[1]) != static_cast<double>(k)) {
        fail("expected 'tree " + std::to_string(k) + "'");
      }
      std::vector<RegressionTree::Node> nodes;
      read_node(nodes, 0);
      trees.emplace_back(std::move(nodes));
    }
    if (pos_ != lines_.size()) fail("trailing content");
    try {
      return PathLossModel(base, lr, lo, hi, std::move(trees));
    } catch (const Error& e) {
      fail(e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("model line " + std::to_string(pos_) + ": " + msg);
  }

  const std::string& next() {
    if (pos_ >= lines_.size()) fail("unexpected end of file");
    return lines_[pos_++];
  }

  std::vector<std::string> fields(const std::string& key) {
    auto f = csv::split(next(), ' ');
    if (f.empty() || f[0] != key) fail("expected '" + key + "'");
    return f;
  }

  double value(const std::string& key) {
    const auto f = fields(key);
    if (f.size() != 2) fail("malformed '" + key + "' line");
    try {
      return csv::parse_double(f[1]);
    } catch (const ParseError& e) {
      fail(e.what());
    }
  }

  std::int32_t read_node(std::vector<RegressionTree::Node>& nodes, int depth) {
    if (depth > 64) fail("tree too deep");
    const auto f = csv::split(next(), ' ');
    if (f.size() != 2) fail("malformed node line");
    const auto index = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    double x = 0.0;
    try {
      x = csv::parse_double(f[1]);
    } catch (const ParseError& e) {
      fail(e.what());
    }
    if (!std::isfinite(x)) fail("non-finite node value");
    if (f[0] == "leaf") {
      nodes[static_cast<std::size_t>(index)].value = x;
    } else if (f[0] == "split") {
      const auto left = read_node(nodes, depth + 1);
      const auto right = read_node(nodes, depth + 1);
      auto& node = nodes[static_cast<std::size_t>(index)];
      node.threshold = x;
      node.left = left;
      node.right = right;
    } else {
      fail("unknown node kind '" + f[0] + "'");
    }
    return index;
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_model(const PathLossModel& model) {
  std::string out = std::string(kModelMagic) + "\n";
  out += "base " + csv::format(model.base_score()) + "\n";
  out += "lr " + csv::format(model.learning_rate()) + "\n";
  out += "range " + csv::format(model.range_min()) + " " + csv::format(model.range_max()) + "\n";
  out += "trees " + std::to_string(model.trees().size()) + "\n";
  for (std::size_t k = 0; k < model.trees().size(); ++k) {
    out += "tree " + std::to_string(k) + "\n";
    write_node(out, model.trees()[k], 0);
  }
  return out;
}

PathLossModel deserialize_model(const std::string& text) { return ModelReader(text).read(); }

void save_model(const PathLossModel& model, const std::filesystem::path& path) {
  csv::write_text(path, serialize_model(model));
}

PathLossModel load_model(const std::filesystem::path& path) {
  try {
    return deserialize_model(csv::read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace mlpl
