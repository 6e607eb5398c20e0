// Copyright 2026 The Pipeforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pipeforge/learners/tree.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pipeforge/core/errors.h"

namespace pipeforge::learners {
namespace {

struct Split {
  int feature = -1;
  double threshold = 0.0;
  double proxy = -1.0;  // sumL^2/nL + sumR^2/nR, larger is better
};

class Builder {
 public:
  Builder(const DenseMatrix& x, std::span<const double> y,
          const TreeParams& params, Rng& rng)
      : x_(x), y_(y), params_(params), rng_(rng) {
    features_.resize(x.cols());
    std::iota(features_.begin(), features_.end(), 0);
  }

  std::vector<TreeNode> Build(std::vector<size_t> samples) {
    samples_ = std::move(samples);
    Grow(0, samples_.size(), 0);
    return std::move(nodes_);
  }

 private:
  int Grow(size_t begin, size_t end, int depth) {
    double sum = 0.0, sum_sq = 0.0;
    for (size_t i = begin; i < end; ++i) {
      const double v = y_[samples_[i]];
      sum += v;
      sum_sq += v * v;
    }
    const double weight = static_cast<double>(end - begin);
    const int id = static_cast<int>(nodes_.size());
    TreeNode node;
    node.value = sum / weight;
    node.weight = weight;
    node.impurity = NodeImpurity(params_.impurity, sum, sum_sq, weight);
    nodes_.push_back(node);

    const size_t n = end - begin;
    if (depth >= params_.max_depth || n < 2 * params_.min_samples_leaf ||
        node.impurity <= 1e-15) {
      return id;
    }
    const Split split = FindSplit(begin, end, sum);
    if (split.feature < 0) return id;

    auto middle = std::partition(
        samples_.begin() + begin, samples_.begin() + end, [&](size_t s) {
          return x_.at(s, split.feature) <= split.threshold;
        });
    const size_t mid = static_cast<size_t>(middle - samples_.begin());
    const int left = Grow(begin, mid, depth + 1);
    const int right = Grow(mid, end, depth + 1);
    nodes_[id].feature = split.feature;
    nodes_[id].threshold = split.threshold;
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  Split FindSplit(size_t begin, size_t end, double total_sum) {
    const size_t p = features_.size();
    const size_t wanted = params_.max_features == 0
                              ? p
                              : std::min(params_.max_features, p);
    // Visit features in random order until `wanted` non-constant ones have
    // been examined.
    rng_.Shuffle(std::span<size_t>(features_));
    Split best;
    size_t examined = 0;
    for (size_t k = 0; k < p && examined < wanted; ++k) {
      const size_t f = features_[k];
      double lo = x_.at(samples_[begin], f), hi = lo;
      for (size_t i = begin + 1; i < end; ++i) {
        const double v = x_.at(samples_[i], f);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (!(hi > lo)) continue;
      ++examined;
      if (params_.random_splits) {
        RandomCut(begin, end, f, lo, hi, total_sum, &best);
      } else {
        BestCut(begin, end, f, total_sum, &best);
      }
    }
    return best;
  }

  void Consider(size_t f, double threshold, double left_sum, size_t left_n,
                double total_sum, size_t n, Split* best) const {
    const size_t right_n = n - left_n;
    if (left_n < params_.min_samples_leaf || right_n < params_.min_samples_leaf) {
      return;
    }
    const double right_sum = total_sum - left_sum;
    const double proxy = left_sum * left_sum / static_cast<double>(left_n) +
                         right_sum * right_sum / static_cast<double>(right_n);
    if (proxy > best->proxy + 1e-12) {
      best->feature = static_cast<int>(f);
      best->threshold = threshold;
      best->proxy = proxy;
    }
  }

  void BestCut(size_t begin, size_t end, size_t f, double total_sum, Split* best) {
    order_.assign(samples_.begin() + begin, samples_.begin() + end);
    std::stable_sort(order_.begin(), order_.end(), [&](size_t a, size_t b) {
      return x_.at(a, f) < x_.at(b, f);
    });
    const size_t n = order_.size();
    double left_sum = 0.0;
    for (size_t i = 0; i + 1 < n; ++i) {
      left_sum += y_[order_[i]];
      const double here = x_.at(order_[i], f);
      const double next = x_.at(order_[i + 1], f);
      if (!(next > here)) continue;
      double threshold = here + (next - here) / 2.0;
      if (!(threshold < next)) threshold = here;
      Consider(f, threshold, left_sum, i + 1, total_sum, n, best);
    }
  }

  void RandomCut(size_t begin, size_t end, size_t f, double lo, double hi,
                 double total_sum, Split* best) {
    double threshold = rng_.Uniform(lo, hi);
    if (!(threshold < hi)) threshold = lo;
    double left_sum = 0.0;
    size_t left_n = 0;
    for (size_t i = begin; i < end; ++i) {
      if (x_.at(samples_[i], f) <= threshold) {
        left_sum += y_[samples_[i]];
        ++left_n;
      }
    }
    Consider(f, threshold, left_sum, left_n, total_sum, end - begin, best);
  }

  const DenseMatrix& x_;
  std::span<const double> y_;
  const TreeParams& params_;
  Rng& rng_;
  std::vector<size_t> features_;
  std::vector<size_t> samples_;
  std::vector<size_t> order_;
  std::vector<TreeNode> nodes_;
};

}  // namespace

double NodeImpurity(Impurity kind, double sum, double sum_sq, double weight) {
  if (weight <= 0.0) return 0.0;
  const double mean = sum / weight;
  const double variance = std::max(0.0, sum_sq / weight - mean * mean);
  return kind == Impurity::kGini ? 2.0 * variance : variance;
}

Tree FitTree(const DenseMatrix& x, std::span<const double> y,
             std::vector<size_t> samples, const TreeParams& params, Rng& rng) {
  if (samples.empty()) throw RangeError("cannot fit a tree on zero samples");
  if (x.rows() != y.size()) throw DimensionError("tree: rows != labels");
  if (params.min_samples_leaf == 0) throw RangeError("min_samples_leaf must be >= 1");
  Builder builder(x, y, params, rng);
  Tree tree;
  tree.nodes_ = builder.Build(std::move(samples));
  return tree;
}

double Tree::Predict(std::span<const double> row) const {
  size_t id = 0;
  while (!nodes_[id].is_leaf()) {
    const TreeNode& node = nodes_[id];
    id = row[node.feature] <= node.threshold ? node.left : node.right;
  }
  return nodes_[id].value;
}

size_t Tree::internal_node_count() const {
  return static_cast<size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const TreeNode& n) { return !n.is_leaf(); }));
}

int Tree::depth() const {
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (!nodes_[i].is_leaf()) {
      depth[nodes_[i].left] = depth[i] + 1;
      depth[nodes_[i].right] = depth[i] + 1;
    }
  }
  return deepest;
}

nlohmann::json Tree::ToJson() const {
  std::vector<int> feature, left, right;
  std::vector<double> threshold, value, weight, impurity;
  for (const TreeNode& n : nodes_) {
    feature.push_back(n.feature);
    threshold.push_back(n.threshold);
    left.push_back(n.left);
    right.push_back(n.right);
    value.push_back(n.value);
    weight.push_back(n.weight);
    impurity.push_back(n.impurity);
  }
  return {{"feature", feature}, {"threshold", threshold}, {"left", left},
          {"right", right},     {"value", value},         {"weight", weight},
          {"impurity", impurity}};
}

Tree Tree::FromJson(const nlohmann::json& j) {
  const auto feature = j.at("feature").get<std::vector<int>>();
  const auto threshold = j.at("threshold").get<std::vector<double>>();
  const auto left = j.at("left").get<std::vector<int>>();
  const auto right = j.at("right").get<std::vector<int>>();
  const auto value = j.at("value").get<std::vector<double>>();
  const auto weight = j.at("weight").get<std::vector<double>>();
  const auto impurity = j.at("impurity").get<std::vector<double>>();
  const size_t n = feature.size();
  if (n == 0 || threshold.size() != n || left.size() != n || right.size() != n ||
      value.size() != n || weight.size() != n || impurity.size() != n) {
    throw ParseError("tree node arrays are empty or of unequal length");
  }
  Tree tree;
  for (size_t i = 0; i < n; ++i) {
    TreeNode node{feature[i], threshold[i], left[i], right[i],
                  value[i],   weight[i],    impurity[i]};
    if (!node.is_leaf() &&
        (node.left <= static_cast<int>(i) || node.right <= static_cast<int>(i) ||
         node.left >= static_cast<int>(n) || node.right >= static_cast<int>(n))) {
      throw ParseError("tree node " + std::to_string(i) + " has invalid children");
    }
    tree.nodes_.push_back(node);
  }
  return tree;
}

}  // namespace pipeforge::learners
