#include "salrank/graphnet.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace salrank::graphnet {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

MatrixXd relu(const MatrixXd& x) { return x.cwiseMax(0.0); }

/// 1 where x > 0, else 0 (the subgradient at 0 is taken as 0).
MatrixXd relu_mask(const MatrixXd& x) {
  return (x.array() > 0.0).cast<double>().matrix();
}

void check_params(const GraphParams& params) {
  if (params.dim <= 0 || params.subgraphs <= 0 || params.grid <= 0)
    throw std::invalid_argument("graphnet: non-positive dimension, subgraph count or grid");
  if (params.dim % params.subgraphs != 0)
    throw std::invalid_argument("graphnet: feature dim must be divisible by the subgraph count");
  if (static_cast<int>(params.sub.size()) != params.subgraphs)
    throw std::invalid_argument("graphnet: subgraph parameter count mismatch");
  if (params.score_weight.size() != params.dim)
    throw std::invalid_argument("graphnet: scoring head size mismatch");
  const Index c = params.dim / params.subgraphs;
  const Index d = params.dim;
  for (const auto& sp : params.sub) {
    auto ok = [c, d](const AttentionGraphParams& g) {
      return g.query_embed.rows() == c && g.query_embed.cols() == d &&
             g.context_embed.rows() == c && g.context_embed.cols() == d &&
             g.edge_weight.size() == 2 * c && g.aggregate_proj.rows() == c &&
             g.aggregate_proj.cols() == d && g.update_proj.rows() == c &&
             g.update_proj.cols() == c;
    };
    if (!ok(sp.relation) || !ok(sp.local) || !ok(sp.global) ||
        sp.person_proj.rows() != c || sp.person_proj.cols() != d)
      throw std::invalid_argument("graphnet: subgraph tensor shape mismatch");
  }
}

void check_bundle(const FeatureBundle& bundle, const GraphParams& params) {
  const Index n = bundle.instances();
  const Index d = params.dim;
  if (n < 1) throw std::invalid_argument("graphnet: bundle needs at least one instance");
  if (bundle.f.cols() != d || bundle.f_local.cols() != d || bundle.f_global.cols() != d ||
      bundle.f_person.cols() != d)
    throw std::invalid_argument("graphnet: feature dimension mismatch");
  if (bundle.f_local.rows() != n || bundle.f_person.rows() != n)
    throw std::invalid_argument("graphnet: per-instance feature row mismatch");
  if (bundle.f_global.rows() != static_cast<Index>(params.grid) * params.grid)
    throw std::invalid_argument("graphnet: global grid node count mismatch");
  if (!bundle.f.allFinite() || !bundle.f_local.allFinite() || !bundle.f_global.allFinite() ||
      !bundle.f_person.allFinite())
    throw std::invalid_argument("graphnet: non-finite feature values");
}

void check_subgraph_index(const GraphParams& params, int k) {
  if (k < 0 || k >= params.subgraphs)
    throw std::invalid_argument("graphnet: subgraph index out of range");
}

/// Pairwise attention logits E(i,j) = w1 . (U f_i) + w2 . (V ctx_j).
MatrixXd edge_logits(const MatrixXd& a_query, const MatrixXd& b_context,
                     const VectorXd& edge_weight) {
  const Index c = a_query.cols();
  const VectorXd ea = a_query * edge_weight.head(c);
  const VectorXd eb = b_context * edge_weight.head(2 * c).tail(c);
  return ea.rowwise().replicate(eb.size()) + eb.transpose().colwise().replicate(ea.size());
}

struct RelationTrace {
  MatrixXd a, b, logits, alpha, msg, h;
};

/// Shared forward for the relation and global graphs: full bipartite
/// attention from every context row to every instance, normalized by the
/// context count.
RelationTrace dense_aggregate(const MatrixXd& f_inst, const MatrixXd& f_ctx,
                              const AttentionGraphParams& g) {
  RelationTrace t;
  t.a = f_inst * g.query_embed.transpose();
  t.b = f_ctx * g.context_embed.transpose();
  t.logits = edge_logits(t.a, t.b, g.edge_weight);
  t.alpha = relu(t.logits) / static_cast<double>(f_ctx.rows());
  t.msg = f_ctx * g.aggregate_proj.transpose();
  t.h = t.alpha * t.msg;
  return t;
}

struct LocalTrace {
  MatrixXd a, b, msg, h;
  VectorXd logits, alpha;
};

LocalTrace local_aggregate_trace(const MatrixXd& f_inst, const MatrixXd& f_ctx,
                                 const AttentionGraphParams& g) {
  LocalTrace t;
  const Index c = g.query_embed.rows();
  t.a = f_inst * g.query_embed.transpose();
  t.b = f_ctx * g.context_embed.transpose();
  t.logits = t.a * g.edge_weight.head(c) + t.b * g.edge_weight.tail(c);
  t.alpha = t.logits.cwiseMax(0.0);
  t.msg = f_ctx * g.aggregate_proj.transpose();
  t.h = t.alpha.asDiagonal() * t.msg;
  return t;
}

struct SubgraphTrace {
  RelationTrace rel;
  LocalTrace loc;
  RelationTrace glob;
  MatrixXd person;  // N x C projected person features (before the gate)
};

SubgraphTrace run_subgraph(const FeatureBundle& bundle, const GraphParams& params, int k) {
  const SubgraphParams& sp = params.sub[k];
  SubgraphTrace t;
  t.rel = dense_aggregate(bundle.f, bundle.f, sp.relation);
  if (params.enabled.local) t.loc = local_aggregate_trace(bundle.f, bundle.f_local, sp.local);
  if (params.enabled.global) t.glob = dense_aggregate(bundle.f, bundle.f_global, sp.global);
  if (params.enabled.person) t.person = bundle.f_person * sp.person_proj.transpose();
  return t;
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Eigen::MatrixXd relation_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k) {
  check_params(params);
  check_bundle(bundle, params);
  check_subgraph_index(params, k);
  return dense_aggregate(bundle.f, bundle.f, params.sub[k].relation).h;
}

Eigen::MatrixXd local_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k) {
  check_params(params);
  check_bundle(bundle, params);
  check_subgraph_index(params, k);
  return local_aggregate_trace(bundle.f, bundle.f_local, params.sub[k].local).h;
}

Eigen::MatrixXd global_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k) {
  check_params(params);
  check_bundle(bundle, params);
  check_subgraph_index(params, k);
  return dense_aggregate(bundle.f, bundle.f_global, params.sub[k].global).h;
}

Eigen::MatrixXd person_aggregate(const FeatureBundle& bundle, const GraphParams& params, int k) {
  check_params(params);
  check_bundle(bundle, params);
  check_subgraph_index(params, k);
  return params.sub[k].person_weight * (bundle.f_person * params.sub[k].person_proj.transpose());
}

AggregateOutputs aggregate_subgraph(const FeatureBundle& bundle, const GraphParams& params, int k) {
  check_params(params);
  check_bundle(bundle, params);
  check_subgraph_index(params, k);
  const Index n = bundle.instances();
  const Index c = params.message_dim();
  AggregateOutputs out;
  const auto rel = dense_aggregate(bundle.f, bundle.f, params.sub[k].relation);
  out.h_relation = rel.h;
  out.alpha_relation = rel.alpha;
  if (params.enabled.local) {
    const auto loc = local_aggregate_trace(bundle.f, bundle.f_local, params.sub[k].local);
    out.h_local = loc.h;
    out.alpha_local = loc.alpha;
  } else {
    out.h_local = MatrixXd::Zero(n, c);
    out.alpha_local = VectorXd::Zero(n);
  }
  if (params.enabled.global) {
    const auto glob = dense_aggregate(bundle.f, bundle.f_global, params.sub[k].global);
    out.h_global = glob.h;
    out.alpha_global = glob.alpha;
  } else {
    out.h_global = MatrixXd::Zero(n, c);
    out.alpha_global = MatrixXd::Zero(n, bundle.grid_nodes());
  }
  out.h_person = params.enabled.person
                     ? (params.sub[k].person_weight *
                        (bundle.f_person * params.sub[k].person_proj.transpose())).eval()
                     : MatrixXd::Zero(n, c);
  return out;
}

ModuleOutput forward(const FeatureBundle& bundle, const GraphParams& params) {
  check_params(params);
  check_bundle(bundle, params);
  const Index n = bundle.instances();
  const Index c = params.message_dim();

  ModuleOutput out;
  out.f_updated = bundle.f;
  for (int k = 0; k < params.subgraphs; ++k) {
    const SubgraphParams& sp = params.sub[k];
    const SubgraphTrace t = run_subgraph(bundle, params, k);
    MatrixXd update = t.rel.h * sp.relation.update_proj.transpose();
    if (params.enabled.local) update += t.loc.h * sp.local.update_proj.transpose();
    if (params.enabled.global) update += t.glob.h * sp.global.update_proj.transpose();
    if (params.enabled.person) update += sp.person_weight * t.person;
    out.f_updated.block(0, static_cast<Index>(k) * c, n, c) += update;
  }
  out.scores = out.f_updated * params.score_weight;
  out.scores.array() += params.score_bias;
  return out;
}

BackwardResult backward(const FeatureBundle& bundle, const GraphParams& params,
                        const Eigen::VectorXd& score_grad,
                        const Eigen::MatrixXd& f_updated_grad) {
  check_params(params);
  check_bundle(bundle, params);
  const Index n = bundle.instances();
  const Index c = params.message_dim();
  if (score_grad.size() != n)
    throw std::invalid_argument("graphnet backward: score gradient size mismatch");
  if (f_updated_grad.size() != 0 &&
      (f_updated_grad.rows() != n || f_updated_grad.cols() != params.dim))
    throw std::invalid_argument("graphnet backward: feature gradient shape mismatch");

  BackwardResult res{zeros_like(params), zeros_like(bundle)};
  GraphParams& gp = res.param_grads;
  FeatureBundle& gb = res.feature_grads;

  // Recompute the forward pass to obtain the updated features.
  std::vector<SubgraphTrace> traces(params.subgraphs);
  MatrixXd f_updated = bundle.f;
  for (int k = 0; k < params.subgraphs; ++k) {
    const SubgraphParams& sp = params.sub[k];
    traces[k] = run_subgraph(bundle, params, k);
    const SubgraphTrace& t = traces[k];
    MatrixXd update = t.rel.h * sp.relation.update_proj.transpose();
    if (params.enabled.local) update += t.loc.h * sp.local.update_proj.transpose();
    if (params.enabled.global) update += t.glob.h * sp.global.update_proj.transpose();
    if (params.enabled.person) update += sp.person_weight * t.person;
    f_updated.block(0, static_cast<Index>(k) * c, n, c) += update;
  }

  // Scoring head.
  gp.score_bias = score_grad.sum();
  gp.score_weight = f_updated.transpose() * score_grad;
  MatrixXd g_fu = score_grad * params.score_weight.transpose();
  if (f_updated_grad.size() != 0) g_fu += f_updated_grad;

  gb.f += g_fu;  // residual connection

  for (int k = 0; k < params.subgraphs; ++k) {
    const SubgraphParams& sp = params.sub[k];
    SubgraphParams& gsp = gp.sub[k];
    const SubgraphTrace& t = traces[k];
    const MatrixXd g_update = g_fu.block(0, static_cast<Index>(k) * c, n, c);

    // Relation graph.
    {
      gsp.relation.update_proj += g_update.transpose() * t.rel.h;
      const MatrixXd g_h = g_update * sp.relation.update_proj;
      const MatrixXd g_alpha = g_h * t.rel.msg.transpose();
      const MatrixXd g_msg = t.rel.alpha.transpose() * g_h;
      const MatrixXd g_logits =
          (relu_mask(t.rel.logits).array() * g_alpha.array()).matrix() / static_cast<double>(n);
      const VectorXd row_sum = g_logits.rowwise().sum();
      const VectorXd col_sum = g_logits.colwise().sum().transpose();
      gsp.relation.edge_weight.head(c) += t.rel.a.transpose() * row_sum;
      gsp.relation.edge_weight.tail(c) += t.rel.b.transpose() * col_sum;
      const MatrixXd g_a = row_sum * sp.relation.edge_weight.head(c).transpose();
      const MatrixXd g_b = col_sum * sp.relation.edge_weight.tail(c).transpose();
      gsp.relation.query_embed += g_a.transpose() * bundle.f;
      gsp.relation.context_embed += g_b.transpose() * bundle.f;
      gsp.relation.aggregate_proj += g_msg.transpose() * bundle.f;
      gb.f += g_a * sp.relation.query_embed + g_b * sp.relation.context_embed +
              g_msg * sp.relation.aggregate_proj;
    }

    // Local contrast graph.
    if (params.enabled.local) {
      gsp.local.update_proj += g_update.transpose() * t.loc.h;
      const MatrixXd g_h = g_update * sp.local.update_proj;
      const VectorXd g_alpha = (g_h.array() * t.loc.msg.array()).rowwise().sum();
      const MatrixXd g_msg = t.loc.alpha.asDiagonal() * g_h;
      const VectorXd g_logits =
          ((t.loc.logits.array() > 0.0).cast<double>() * g_alpha.array()).matrix();
      gsp.local.edge_weight.head(c) += t.loc.a.transpose() * g_logits;
      gsp.local.edge_weight.tail(c) += t.loc.b.transpose() * g_logits;
      const MatrixXd g_a = g_logits * sp.local.edge_weight.head(c).transpose();
      const MatrixXd g_b = g_logits * sp.local.edge_weight.tail(c).transpose();
      gsp.local.query_embed += g_a.transpose() * bundle.f;
      gsp.local.context_embed += g_b.transpose() * bundle.f_local;
      gsp.local.aggregate_proj += g_msg.transpose() * bundle.f_local;
      gb.f += g_a * sp.local.query_embed;
      gb.f_local += g_b * sp.local.context_embed + g_msg * sp.local.aggregate_proj;
    }

    // Global contrast graph.
    if (params.enabled.global) {
      const double grid_nodes = static_cast<double>(bundle.grid_nodes());
      gsp.global.update_proj += g_update.transpose() * t.glob.h;
      const MatrixXd g_h = g_update * sp.global.update_proj;
      const MatrixXd g_alpha = g_h * t.glob.msg.transpose();
      const MatrixXd g_msg = t.glob.alpha.transpose() * g_h;
      const MatrixXd g_logits =
          (relu_mask(t.glob.logits).array() * g_alpha.array()).matrix() / grid_nodes;
      const VectorXd row_sum = g_logits.rowwise().sum();
      const VectorXd col_sum = g_logits.colwise().sum().transpose();
      gsp.global.edge_weight.head(c) += t.glob.a.transpose() * row_sum;
      gsp.global.edge_weight.tail(c) += t.glob.b.transpose() * col_sum;
      const MatrixXd g_a = row_sum * sp.global.edge_weight.head(c).transpose();
      const MatrixXd g_b = col_sum * sp.global.edge_weight.tail(c).transpose();
      gsp.global.query_embed += g_a.transpose() * bundle.f;
      gsp.global.context_embed += g_b.transpose() * bundle.f_global;
      gsp.global.aggregate_proj += g_msg.transpose() * bundle.f_global;
      gb.f += g_a * sp.global.query_embed;
      gb.f_global += g_b * sp.global.context_embed + g_msg * sp.global.aggregate_proj;
    }

    // Person prior graph.
    if (params.enabled.person) {
      gsp.person_weight += (g_update.array() * t.person.array()).sum();
      gsp.person_proj += sp.person_weight * (g_update.transpose() * bundle.f_person);
      gb.f_person += sp.person_weight * (g_update * sp.person_proj);
    }
  }
  return res;
}

Eigen::MatrixXd pool_global_grid(const FeatureMap& feature_map, int grid) {
  if (grid < 1) throw std::invalid_argument("pool_global_grid: grid must be >= 1");
  if (feature_map.height < grid || feature_map.width < grid)
    throw std::invalid_argument("pool_global_grid: feature map smaller than the grid");
  const int m = grid;
  auto boundary = [](int extent, int m_, int idx) {
    return static_cast<int>(std::lround(static_cast<double>(extent) * idx / m_));
  };
  MatrixXd nodes(m * m, feature_map.channels);
  for (int gr = 0; gr < m; ++gr) {
    for (int gc = 0; gc < m; ++gc) {
      const int r0 = boundary(feature_map.height, m, gr);
      const int r1 = boundary(feature_map.height, m, gr + 1);
      const int c0 = boundary(feature_map.width, m, gc);
      const int c1 = boundary(feature_map.width, m, gc + 1);
      VectorXd acc = VectorXd::Zero(feature_map.channels);
      for (int r = r0; r < r1; ++r)
        for (int col = c0; col < c1; ++col)
          for (int ch = 0; ch < feature_map.channels; ++ch) acc[ch] += feature_map.at(r, col, ch);
      nodes.row(gr * m + gc) = acc.transpose() / static_cast<double>((r1 - r0) * (c1 - c0));
    }
  }
  return nodes;
}

GraphParams init_params(int dim, int subgraphs, int grid, const GraphSet& enabled,
                        uint64_t seed) {
  if (dim <= 0 || subgraphs <= 0 || grid <= 0 || dim % subgraphs != 0)
    throw std::invalid_argument("init_params: invalid dimensions");
  GraphParams params;
  params.dim = dim;
  params.subgraphs = subgraphs;
  params.grid = grid;
  params.enabled = enabled;
  const int c = dim / subgraphs;

  uint64_t state = seed;
  auto uniform = [&state](double bound) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return bound * (2.0 * u - 1.0);
  };
  auto fill = [&uniform](MatrixXd& mat, Index rows, Index cols, Index fan_in) {
    mat.resize(rows, cols);
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (Index r = 0; r < rows; ++r)
      for (Index col = 0; col < cols; ++col) mat(r, col) = uniform(bound);
  };
  auto fill_graph = [&](AttentionGraphParams& g) {
    fill(g.query_embed, c, dim, dim);
    fill(g.context_embed, c, dim, dim);
    g.edge_weight.resize(2 * c);
    const double bound = 1.0 / std::sqrt(2.0 * c);
    for (Index i = 0; i < 2 * c; ++i) g.edge_weight[i] = uniform(bound);
    fill(g.aggregate_proj, c, dim, dim);
    fill(g.update_proj, c, c, c);
  };

  params.sub.resize(subgraphs);
  for (auto& sp : params.sub) {
    fill_graph(sp.relation);
    fill_graph(sp.local);
    fill_graph(sp.global);
    fill(sp.person_proj, c, dim, dim);
    sp.person_weight = 1.0;
  }
  params.score_weight.resize(dim);
  const double bound = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Index i = 0; i < dim; ++i) params.score_weight[i] = uniform(bound);
  params.score_bias = 0.0;
  return params;
}

GraphParams zeros_like(const GraphParams& params) {
  GraphParams out;
  out.dim = params.dim;
  out.subgraphs = params.subgraphs;
  out.grid = params.grid;
  out.enabled = params.enabled;
  out.sub.resize(params.sub.size());
  for (size_t k = 0; k < params.sub.size(); ++k) {
    auto zero_graph = [](const AttentionGraphParams& g) {
      AttentionGraphParams z;
      z.query_embed = MatrixXd::Zero(g.query_embed.rows(), g.query_embed.cols());
      z.context_embed = MatrixXd::Zero(g.context_embed.rows(), g.context_embed.cols());
      z.edge_weight = VectorXd::Zero(g.edge_weight.size());
      z.aggregate_proj = MatrixXd::Zero(g.aggregate_proj.rows(), g.aggregate_proj.cols());
      z.update_proj = MatrixXd::Zero(g.update_proj.rows(), g.update_proj.cols());
      return z;
    };
    out.sub[k].relation = zero_graph(params.sub[k].relation);
    out.sub[k].local = zero_graph(params.sub[k].local);
    out.sub[k].global = zero_graph(params.sub[k].global);
    out.sub[k].person_proj =
        MatrixXd::Zero(params.sub[k].person_proj.rows(), params.sub[k].person_proj.cols());
    out.sub[k].person_weight = 0.0;
  }
  out.score_weight = VectorXd::Zero(params.score_weight.size());
  out.score_bias = 0.0;
  return out;
}

FeatureBundle zeros_like(const FeatureBundle& bundle) {
  FeatureBundle out;
  out.f = MatrixXd::Zero(bundle.f.rows(), bundle.f.cols());
  out.f_local = MatrixXd::Zero(bundle.f_local.rows(), bundle.f_local.cols());
  out.f_global = MatrixXd::Zero(bundle.f_global.rows(), bundle.f_global.cols());
  out.f_person = MatrixXd::Zero(bundle.f_person.rows(), bundle.f_person.cols());
  return out;
}

namespace {

template <typename Params, typename Fn>
void visit_tensors(Params& params, const Fn& fn) {
  for (size_t k = 0; k < params.sub.size(); ++k) {
    const std::string suffix = "_k" + std::to_string(k);
    auto& sp = params.sub[k];
    auto visit_graph = [&](auto& g, const std::string& letter) {
      fn("U_" + letter + suffix, g.query_embed.data(), static_cast<size_t>(g.query_embed.size()));
      fn("V_" + letter + suffix, g.context_embed.data(),
         static_cast<size_t>(g.context_embed.size()));
      fn("w_alpha_" + letter + suffix, g.edge_weight.data(),
         static_cast<size_t>(g.edge_weight.size()));
      fn("W_a_" + letter + suffix, g.aggregate_proj.data(),
         static_cast<size_t>(g.aggregate_proj.size()));
      fn("W_u_" + letter + suffix, g.update_proj.data(),
         static_cast<size_t>(g.update_proj.size()));
    };
    visit_graph(sp.relation, "r");
    visit_graph(sp.local, "l");
    visit_graph(sp.global, "g");
    fn("W_a_p" + suffix, sp.person_proj.data(), static_cast<size_t>(sp.person_proj.size()));
    fn("alpha_p" + suffix, &sp.person_weight, 1);
  }
  fn("w_s", params.score_weight.data(), static_cast<size_t>(params.score_weight.size()));
  fn("b_s", &params.score_bias, 1);
}

}  // namespace

void for_each_tensor(GraphParams& params,
                     const std::function<void(const std::string&, double*, size_t)>& fn) {
  visit_tensors(params, fn);
}

void for_each_tensor(const GraphParams& params,
                     const std::function<void(const std::string&, const double*, size_t)>& fn) {
  visit_tensors(params, fn);
}

void for_each_feature(FeatureBundle& bundle,
                      const std::function<void(const std::string&, double*, size_t)>& fn) {
  fn("f", bundle.f.data(), static_cast<size_t>(bundle.f.size()));
  fn("f_local", bundle.f_local.data(), static_cast<size_t>(bundle.f_local.size()));
  fn("f_global", bundle.f_global.data(), static_cast<size_t>(bundle.f_global.size()));
  fn("f_person", bundle.f_person.data(), static_cast<size_t>(bundle.f_person.size()));
}

void save_checkpoint(const GraphParams& params, const std::string& path) {
  nlohmann::json doc;
  doc["D"] = params.dim;
  doc["K"] = params.subgraphs;
  doc["M"] = params.grid;
  doc["graphs"] = {{"local", params.enabled.local},
                   {"global", params.enabled.global},
                   {"person", params.enabled.person}};
  nlohmann::json tensors = nlohmann::json::object();
  for_each_tensor(params, [&tensors](const std::string& key, const double* data, size_t count) {
    tensors[key] = std::vector<double>(data, data + count);
  });
  doc["tensors"] = std::move(tensors);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_checkpoint: cannot open " + path);
  out << doc.dump(1, '\t') << '\n';
}

GraphParams load_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_checkpoint: cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  GraphSet enabled;
  if (doc.contains("graphs")) {
    enabled.local = doc["graphs"].value("local", true);
    enabled.global = doc["graphs"].value("global", true);
    enabled.person = doc["graphs"].value("person", true);
  }
  GraphParams params = init_params(doc.at("D").get<int>(), doc.at("K").get<int>(),
                                   doc.at("M").get<int>(), enabled, 0);
  const auto& tensors = doc.at("tensors");
  for_each_tensor(params, [&tensors, &path](const std::string& key, double* data, size_t count) {
    const auto it = tensors.find(key);
    if (it == tensors.end())
      throw std::runtime_error("load_checkpoint: missing tensor " + key + " in " + path);
    const auto values = it->get<std::vector<double>>();
    if (values.size() != count)
      throw std::runtime_error("load_checkpoint: tensor " + key + " has wrong size in " + path);
    std::copy(values.begin(), values.end(), data);
  });
  return params;
}

}  // namespace salrank::graphnet
