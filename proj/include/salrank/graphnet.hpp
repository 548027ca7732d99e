#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace salrank::graphnet {

/// Per-image inputs to the graph module. Rows are instances (or grid nodes
/// for the global context); columns are feature channels.
struct FeatureBundle {
  Eigen::MatrixXd f;         // N x D instance features
  Eigen::MatrixXd f_local;   // N x D local-context features
  Eigen::MatrixXd f_global;  // M^2 x D global-context grid, row-major
  Eigen::MatrixXd f_person;  // N x D person-prior features

  Eigen::Index instances() const { return f.rows(); }
  Eigen::Index feature_dim() const { return f.cols(); }
  Eigen::Index grid_nodes() const { return f_global.rows(); }
};

/// One attention-aggregation graph: a query/context embedding pair, the
/// edge-attention weight vector, the aggregation projection and the update
/// projection applied to the aggregated message.
struct AttentionGraphParams {
  Eigen::MatrixXd query_embed;    // C x D, embeds the receiving instance
  Eigen::MatrixXd context_embed;  // C x D, embeds the sending node
  Eigen::VectorXd edge_weight;    // 2C, scores the concatenated embeddings
  Eigen::MatrixXd aggregate_proj; // C x D, projects sender features
  Eigen::MatrixXd update_proj;    // C x C, maps the message into the update
};

/// Parameters of one of the K parallel subgraphs.
struct SubgraphParams {
  AttentionGraphParams relation;  // fully connected instance graph
  AttentionGraphParams local;     // one edge per instance, context -> instance
  AttentionGraphParams global;    // all grid nodes -> each instance
  Eigen::MatrixXd person_proj;    // C x D
  double person_weight = 1.0;     // static scalar gate on the person message
};

/// Which optional graphs contribute to the update (the relation graph is
/// always active). Used by the trainer's model ladder.
struct GraphSet {
  bool local = true;
  bool global = true;
  bool person = true;
};

struct GraphParams {
  int dim = 0;        // D, divisible by subgraphs
  int subgraphs = 1;  // K
  int grid = 1;       // M (global grid is M x M)
  GraphSet enabled;
  std::vector<SubgraphParams> sub;  // K entries
  Eigen::VectorXd score_weight;     // D
  double score_bias = 0.0;

  int message_dim() const { return dim / subgraphs; }  // C = D/K
};

/// Aggregated messages and attention weights of one subgraph.
struct AggregateOutputs {
  Eigen::MatrixXd h_relation;  // N x C
  Eigen::MatrixXd h_local;     // N x C
  Eigen::MatrixXd h_global;    // N x C
  Eigen::MatrixXd h_person;    // N x C
  Eigen::MatrixXd alpha_relation;  // N x N, receiver x sender
  Eigen::VectorXd alpha_local;     // N
  Eigen::MatrixXd alpha_global;    // N x M^2
};

struct ModuleOutput {
  Eigen::MatrixXd f_updated;  // N x D residual-updated instance features
  Eigen::VectorXd scores;     // N saliency scores
};

/// Gradients of a scalar objective with respect to every parameter and every
/// input feature; shapes mirror GraphParams / FeatureBundle.
struct BackwardResult {
  GraphParams param_grads;
  FeatureBundle feature_grads;
};

/// Attention-weighted aggregation over the fully connected instance graph
/// (self edges included, 1/N attention normalizer).
Eigen::MatrixXd relation_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k);

/// Single-edge aggregation from each instance's local context node.
Eigen::MatrixXd local_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k);

/// Aggregation over all M^2 global grid nodes with a 1/M^2 normalizer.
Eigen::MatrixXd global_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k);

/// Statically gated person-prior message (no dynamic attention).
Eigen::MatrixXd person_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k);

/// All four aggregations of subgraph k, with attention weights.
AggregateOutputs aggregate_subgraph(const FeatureBundle& bundle, const GraphParams& params, int k);

/// Full module: per-subgraph updates concatenated onto the residual stream,
/// then a linear scoring head.
ModuleOutput forward(const FeatureBundle& bundle, const GraphParams& params);

/// Exact gradients of sum_i score_grad_i * s_i (plus, optionally, an upstream
/// gradient on the updated features) with respect to all parameters and all
/// input features. ReLU subgradient at 0 is 0.
BackwardResult backward(const FeatureBundle& bundle, const GraphParams& params,
                        const Eigen::VectorXd& score_grad,
                        const Eigen::MatrixXd& f_updated_grad = Eigen::MatrixXd());

/// Dense per-pixel feature map (row-major, channel-last).
struct FeatureMap {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> values;  // height * width * channels

  double& at(int row, int col, int ch) {
    return values[(static_cast<size_t>(row) * width + col) * channels + ch];
  }
  double at(int row, int col, int ch) const {
    return values[(static_cast<size_t>(row) * width + col) * channels + ch];
  }
};

/// Non-overlapping average pooling onto an M x M grid; cell boundaries fall
/// at round(H*m/M) and round(W*m/M). Returns M^2 x D node features.
Eigen::MatrixXd pool_global_grid(const FeatureMap& feature_map, int grid);

/// Fresh parameters: uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights,
/// person gate 1, zero score bias.
GraphParams init_params(int dim, int subgraphs, int grid, const GraphSet& enabled,
                        uint64_t seed);

/// Same-shaped parameter container filled with zeros.
GraphParams zeros_like(const GraphParams& params);

/// Same-shaped bundle filled with zeros.
FeatureBundle zeros_like(const FeatureBundle& bundle);

/// Visit every parameter tensor as (key, data pointer, element count).
/// Keys are stable and name the graph and subgraph, e.g. "U_r_k0",
/// "w_alpha_g_k2", "W_a_p_k1", "alpha_p_k0", "w_s", "b_s".
void for_each_tensor(GraphParams& params,
                     const std::function<void(const std::string&, double*, size_t)>& fn);
void for_each_tensor(const GraphParams& params,
                     const std::function<void(const std::string&, const double*, size_t)>& fn);

/// Visit the four feature matrices of a bundle the same way.
void for_each_feature(FeatureBundle& bundle,
                      const std::function<void(const std::string&, double*, size_t)>& fn);

/// JSON checkpoint with D/K/M, the enabled graphs and every named tensor.
void save_checkpoint(const GraphParams& params, const std::string& path);
GraphParams load_checkpoint(const std::string& path);

}  // namespace salrank::graphnet
