#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "mlpl/traces.hpp"

namespace mlpl {

/// A regression tree over the single feature distance, stored as a flat
/// pre-order node array. A sample goes left when distance <= threshold.
class RegressionTree {
 public:
  struct Node {
    double threshold = 0.0;  // split nodes only
    double value = 0.0;      // leaf nodes only
    std::int32_t left = -1;  // -1 marks a leaf
    std::int32_t right = -1;

    bool is_leaf() const { return left < 0; }
  };

  RegressionTree() = default;
  explicit RegressionTree(std::vector<Node> nodes);

  double evaluate(double distance) const;
  std::size_t depth() const;
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::vector<Node> nodes_;
};

struct TrainConfig {
  int n_trees = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  int min_samples_leaf = 5;
};

/// Gradient-boosted ensemble mapping distance to mean path loss (dB).
class PathLossModel {
 public:
  PathLossModel(double base_score, double learning_rate, double range_min,
                double range_max, std::vector<RegressionTree> trees);

  /// base_score + learning_rate * sum of tree outputs. Throws DomainError for
  /// d <= 0.
  double predict(double d) const;

  double base_score() const { return base_score_; }
  double learning_rate() const { return learning_rate_; }
  double range_min() const { return range_min_; }
  double range_max() const { return range_max_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }

 private:
  double base_score_;
  double learning_rate_;
  double range_min_;
  double range_max_;
  std::vector<RegressionTree> trees_;
};

/// Squared-error gradient boosting with exhaustive best-split search.
/// Deterministic: equal inputs give identical models.
PathLossModel train(std::span<const PathLossSample> samples, const TrainConfig& cfg = {});

/// Same as train() but reports the training mean squared error after every
/// boosting round (element 0 is the error of the base score alone).
PathLossModel train(std::span<const PathLossSample> samples, const TrainConfig& cfg,
                    std::vector<double>* mse_trace);

std::string serialize_model(const PathLossModel& model);
PathLossModel deserialize_model(const std::string& text);

void save_model(const PathLossModel& model, const std::filesystem::path& path);
PathLossModel load_model(const std::filesystem::path& path);

}  // namespace mlpl
