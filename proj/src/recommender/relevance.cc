/*
 * Copyright 2026 The sttmrec Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "sttmrec/recommender/relevance.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "sttmrec/common/error.h"
#include "sttmrec/common/random.h"

namespace sttmrec::recommender {
namespace {

void Axpy(double a, const Vec& x, Vec& y) {
  for (size_t k = 0; k < y.size(); ++k) y[k] += a * x[k];
}

double Dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double SquaredNorm(const Vec& a) { return Dot(a, a); }

double MaxOrOne(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m > 0.0 ? m : 1.0;
}

// The two factor vectors of one (u, d) score and the implicit set used.
struct Factors {
  Vec x;
  Vec y;
  std::vector<int> implicit;
  double implicit_norm = 0.0;  // |N|^-1/2, 0 when N is empty
};

void CheckIndices(const RelevanceModel& m, int u, int d) {
  if (u < 0 || u >= m.inputs.num_users || d < 0 ||
      d >= m.inputs.num_discussions) {
    throw InputError("relevance: unknown user or discussion index");
  }
}

Factors ComputeFactors(const RelevanceModel& m, int u, int d) {
  CheckIndices(m, u, d);
  const auto& in = m.inputs;
  const auto& p = m.params;
  Factors f;
  f.x = p.P[u];
  Axpy(in.participated[u], p.Phi, f.x);
  Axpy(in.initiated[u], p.Theta, f.x);
  if (m.flags.goal) Axpy(in.goal[u], p.Lambda, f.x);
  if (m.flags.centrality) Axpy(in.centrality[u], p.Psi, f.x);
  Axpy(1.0, p.Gamma[in.week[u]], f.x);

  f.y = p.Q[d];
  Axpy(in.replies[d], p.Delta, f.y);
  Axpy(in.length[d], p.L, f.y);
  for (int v : in.members[d]) {
    if (v != u) f.implicit.push_back(v);
  }
  if (!f.implicit.empty()) {
    f.implicit_norm = 1.0 / std::sqrt(static_cast<double>(f.implicit.size()));
    for (int v : f.implicit) Axpy(f.implicit_norm, p.varphi[v], f.y);
  }
  return f;
}

// Calls add(block_pointer, grad) for every touched latent vector, where
// grad is d loss / d vector. Also returns d loss / d bias.
template <typename AddFn>
double VisitGradient(const RelevanceModel& m, const Example& ex, double reg,
                     AddFn&& add) {
  const auto& in = m.inputs;
  const auto& p = m.params;
  const Factors f = ComputeFactors(m, ex.user, ex.discussion);
  const double err = m.params.bias + Dot(f.x, f.y) - ex.target;
  const double g = 2.0 * err;
  const int u = ex.user, d = ex.discussion;
  const size_t K = f.x.size();

  auto grad = [&](const Vec& side, double feature, const Vec& param) {
    Vec out(K);
    for (size_t k = 0; k < K; ++k) {
      out[k] = g * feature * side[k] + 2.0 * reg * param[k];
    }
    return out;
  };
  add(&p.P[u], grad(f.y, 1.0, p.P[u]));
  add(&p.Phi, grad(f.y, in.participated[u], p.Phi));
  add(&p.Theta, grad(f.y, in.initiated[u], p.Theta));
  if (m.flags.goal) add(&p.Lambda, grad(f.y, in.goal[u], p.Lambda));
  if (m.flags.centrality) {
    add(&p.Psi, grad(f.y, in.centrality[u], p.Psi));
  }
  add(&p.Gamma[in.week[u]], grad(f.y, 1.0, p.Gamma[in.week[u]]));
  add(&p.Q[d], grad(f.x, 1.0, p.Q[d]));
  add(&p.Delta, grad(f.x, in.replies[d], p.Delta));
  add(&p.L, grad(f.x, in.length[d], p.L));
  for (int v : f.implicit) {
    add(&p.varphi[v], grad(f.x, f.implicit_norm, p.varphi[v]));
  }
  return g;
}

// Maps a pointer into `from` onto the same vector in `to`.
Vec* Corresponding(const RelevanceParams& from, RelevanceParams& to,
                   const Vec* v) {
  auto in_list = [&](const std::vector<Vec>& a,
                     std::vector<Vec>& b) -> Vec* {
    if (a.empty() || v < a.data() || v >= a.data() + a.size()) return nullptr;
    return &b[v - a.data()];
  };
  if (Vec* r = in_list(from.P, to.P)) return r;
  if (Vec* r = in_list(from.Q, to.Q)) return r;
  if (Vec* r = in_list(from.varphi, to.varphi)) return r;
  if (Vec* r = in_list(from.Gamma, to.Gamma)) return r;
  if (v == &from.Phi) return &to.Phi;
  if (v == &from.Theta) return &to.Theta;
  if (v == &from.Lambda) return &to.Lambda;
  if (v == &from.Psi) return &to.Psi;
  if (v == &from.Delta) return &to.Delta;
  if (v == &from.L) return &to.L;
  throw std::logic_error("relevance: gradient block not found");
}

void RandomFill(Vec& v, int dims, double scale, Rng& rng) {
  v.resize(dims);
  for (double& x : v) x = scale * rng.Normal();
}

}  // namespace

std::string FeatureFlags::Name() const {
  if (goal && centrality) return "CAMF_GC";
  if (goal) return "CAMF_G";
  if (centrality) return "CAMF_C";
  return "CAMF";
}

FeatureFlags FeatureFlags::Parse(const std::string& name) {
  if (name == "CAMF") return {false, false};
  if (name == "CAMF_G") return {true, false};
  if (name == "CAMF_C") return {false, true};
  if (name == "CAMF_GC") return {true, true};
  throw InputError("unknown feature set '" + name +
                   "' (expected CAMF, CAMF_G, CAMF_C or CAMF_GC)");
}

RelevanceInputs BuildRelevanceInputs(const RecDataset& data,
                                     const std::vector<IndexPair>& train) {
  RelevanceInputs in;
  in.num_users = data.num_users();
  in.num_discussions = data.num_discussions();
  in.participated.assign(in.num_users, 0.0);
  in.initiated.assign(in.num_users, 0.0);
  in.members.assign(in.num_discussions, {});
  for (const auto& [u, d] : train) {
    if (u < 0 || u >= in.num_users || d < 0 || d >= in.num_discussions) {
      throw InputError("relevance: training pair out of range");
    }
    in.participated[u] += 1.0;
    if (data.initiator[d] == u) in.initiated[u] += 1.0;
    in.members[d].push_back(u);
  }
  for (auto& m : in.members) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  int max_week = 0;
  for (const auto& a : data.attributes) {
    if (a.registration_week < 0) {
      throw InputError("relevance: negative registration week");
    }
    in.goal.push_back(a.goal_quality);
    in.centrality.push_back(a.centrality);
    in.week.push_back(a.registration_week);
    max_week = std::max(max_week, a.registration_week);
  }
  in.num_weeks = max_week + 1;
  in.replies = data.replies;
  in.length = data.length;

  in.scale_participated = MaxOrOne(in.participated);
  in.scale_initiated = MaxOrOne(in.initiated);
  in.scale_replies = MaxOrOne(in.replies);
  in.scale_length = MaxOrOne(in.length);
  for (double& x : in.participated) x /= in.scale_participated;
  for (double& x : in.initiated) x /= in.scale_initiated;
  for (double& x : in.replies) x /= in.scale_replies;
  for (double& x : in.length) x /= in.scale_length;
  return in;
}

RelevanceParams RelevanceParams::Zeros(int dims, int users, int discussions,
                                       int weeks) {
  RelevanceParams p;
  const Vec zero(dims, 0.0);
  p.P.assign(users, zero);
  p.Q.assign(discussions, zero);
  p.varphi.assign(users, zero);
  p.Gamma.assign(weeks, zero);
  p.Phi = p.Theta = p.Lambda = p.Psi = p.Delta = p.L = zero;
  return p;
}

double PredictRelevance(const RelevanceModel& model, int u, int d) {
  const Factors f = ComputeFactors(model, u, d);
  return model.params.bias + Dot(f.x, f.y);
}

double ExampleLoss(const RelevanceModel& m, const Example& ex, double reg) {
  const Factors f = ComputeFactors(m, ex.user, ex.discussion);
  const double err = m.params.bias + Dot(f.x, f.y) - ex.target;
  const auto& p = m.params;
  const auto& in = m.inputs;
  double norms = SquaredNorm(p.P[ex.user]) + SquaredNorm(p.Phi) +
                 SquaredNorm(p.Theta) + SquaredNorm(p.Gamma[in.week[ex.user]]) +
                 SquaredNorm(p.Q[ex.discussion]) + SquaredNorm(p.Delta) +
                 SquaredNorm(p.L);
  if (m.flags.goal) norms += SquaredNorm(p.Lambda);
  if (m.flags.centrality) norms += SquaredNorm(p.Psi);
  for (int v : f.implicit) norms += SquaredNorm(p.varphi[v]);
  return err * err + reg * norms;
}

RelevanceParams LossGradient(const RelevanceModel& model,
                             const std::vector<Example>& examples,
                             double reg) {
  const auto& p = model.params;
  RelevanceParams grad =
      RelevanceParams::Zeros(p.dims(), model.inputs.num_users,
                             model.inputs.num_discussions,
                             model.inputs.num_weeks);
  for (const auto& ex : examples) {
    grad.bias += VisitGradient(model, ex, reg, [&](const Vec* v, const Vec& g) {
      Axpy(1.0, g, *Corresponding(p, grad, v));
    });
  }
  return grad;
}

RelevanceModel TrainRelevance(const RecDataset& data,
                              const std::vector<IndexPair>& train,
                              const FeatureFlags& flags,
                              const TrainOptions& options) {
  if (train.empty()) throw InputError("relevance: no training positives");
  if (options.dims < 1 || options.epochs < 1 || options.negative_ratio < 0) {
    throw InputError("relevance: dims and epochs must be >= 1, ratio >= 0");
  }
  RelevanceModel model;
  model.inputs = BuildRelevanceInputs(data, train);
  model.flags = flags;
  model.options = options;
  const int K = options.dims;
  Rng rng(options.seed);
  auto& p = model.params;
  p = RelevanceParams::Zeros(K, model.inputs.num_users,
                             model.inputs.num_discussions,
                             model.inputs.num_weeks);
  for (auto* block : {&p.P, &p.Q, &p.varphi, &p.Gamma}) {
    for (Vec& v : *block) RandomFill(v, K, options.init_scale, rng);
  }
  for (Vec* v : {&p.Phi, &p.Theta, &p.Lambda, &p.Psi, &p.Delta, &p.L}) {
    RandomFill(*v, K, options.init_scale, rng);
  }

  const std::set<IndexPair> positive(train.begin(), train.end());
  const int D = model.inputs.num_discussions;
  std::vector<Example> epoch;
  for (int e = 0; e < options.epochs; ++e) {
    epoch.clear();
    for (const auto& [u, d] : train) {
      epoch.push_back({u, d, 1.0});
      for (int k = 0; k < options.negative_ratio; ++k) {
        // Bounded rejection sampling; a user active everywhere gets none.
        for (int attempt = 0; attempt < 50; ++attempt) {
          const int neg = static_cast<int>(rng.UniformInt(D));
          if (positive.count({u, neg}) == 0) {
            epoch.push_back({u, neg, 0.0});
            break;
          }
        }
      }
    }
    rng.Shuffle(epoch.begin(), epoch.end());
    double loss = 0.0;
    for (const auto& ex : epoch) {
      loss += ExampleLoss(model, ex, options.regularization);
      // Buffer the updates so every block's gradient sees the same
      // parameters.
      std::vector<std::pair<const Vec*, Vec>> updates;
      const double g_bias = VisitGradient(
          model, ex, options.regularization,
          [&](const Vec* v, const Vec& g) { updates.emplace_back(v, g); });
      for (const auto& [v, g] : updates) {
        Axpy(-options.learning_rate, g, *Corresponding(p, p, v));
      }
      p.bias -= options.learning_rate * g_bias;
    }
    model.epoch_loss.push_back(loss / epoch.size());
  }
  return model;
}

nlohmann::json RelevanceModelToJson(const RelevanceModel& m) {
  const auto& in = m.inputs;
  const auto& p = m.params;
  nlohmann::json j;
  j["features"] = m.flags.Name();
  j["options"] = {{"dims", m.options.dims},
                  {"learning_rate", m.options.learning_rate},
                  {"regularization", m.options.regularization},
                  {"epochs", m.options.epochs},
                  {"negative_ratio", m.options.negative_ratio},
                  {"seed", m.options.seed},
                  {"init_scale", m.options.init_scale}};
  j["inputs"] = {{"num_users", in.num_users},
                 {"num_discussions", in.num_discussions},
                 {"num_weeks", in.num_weeks},
                 {"participated", in.participated},
                 {"initiated", in.initiated},
                 {"goal", in.goal},
                 {"centrality", in.centrality},
                 {"week", in.week},
                 {"replies", in.replies},
                 {"length", in.length},
                 {"members", in.members},
                 {"scale_participated", in.scale_participated},
                 {"scale_initiated", in.scale_initiated},
                 {"scale_replies", in.scale_replies},
                 {"scale_length", in.scale_length}};
  j["params"] = {{"bias", p.bias},   {"P", p.P},         {"Q", p.Q},
                 {"varphi", p.varphi}, {"Gamma", p.Gamma}, {"Phi", p.Phi},
                 {"Theta", p.Theta}, {"Lambda", p.Lambda}, {"Psi", p.Psi},
                 {"Delta", p.Delta}, {"L", p.L}};
  j["epoch_loss"] = m.epoch_loss;
  return j;
}

RelevanceModel RelevanceModelFromJson(const nlohmann::json& j) {
  try {
    RelevanceModel m;
    m.flags = FeatureFlags::Parse(j.at("features").get<std::string>());
    const auto& o = j.at("options");
    m.options.dims = o.at("dims").get<int>();
    m.options.learning_rate = o.at("learning_rate").get<double>();
    m.options.regularization = o.at("regularization").get<double>();
    m.options.epochs = o.at("epochs").get<int>();
    m.options.negative_ratio = o.at("negative_ratio").get<int>();
    m.options.seed = o.at("seed").get<uint64_t>();
    m.options.init_scale = o.at("init_scale").get<double>();
    const auto& in = j.at("inputs");
    auto& r = m.inputs;
    r.num_users = in.at("num_users").get<int>();
    r.num_discussions = in.at("num_discussions").get<int>();
    r.num_weeks = in.at("num_weeks").get<int>();
    in.at("participated").get_to(r.participated);
    in.at("initiated").get_to(r.initiated);
    in.at("goal").get_to(r.goal);
    in.at("centrality").get_to(r.centrality);
    in.at("week").get_to(r.week);
    in.at("replies").get_to(r.replies);
    in.at("length").get_to(r.length);
    in.at("members").get_to(r.members);
    r.scale_participated = in.at("scale_participated").get<double>();
    r.scale_initiated = in.at("scale_initiated").get<double>();
    r.scale_replies = in.at("scale_replies").get<double>();
    r.scale_length = in.at("scale_length").get<double>();
    const auto& pj = j.at("params");
    auto& p = m.params;
    p.bias = pj.at("bias").get<double>();
    pj.at("P").get_to(p.P);
    pj.at("Q").get_to(p.Q);
    pj.at("varphi").get_to(p.varphi);
    pj.at("Gamma").get_to(p.Gamma);
    pj.at("Phi").get_to(p.Phi);
    pj.at("Theta").get_to(p.Theta);
    pj.at("Lambda").get_to(p.Lambda);
    pj.at("Psi").get_to(p.Psi);
    pj.at("Delta").get_to(p.Delta);
    pj.at("L").get_to(p.L);
    m.epoch_loss = j.value("epoch_loss", std::vector<double>{});

    const size_t U = r.num_users, D = r.num_discussions, K = p.Phi.size();
    bool ok = K > 0 && r.num_weeks >= 1 && p.P.size() == U &&
              p.varphi.size() == U && p.Q.size() == D &&
              p.Gamma.size() == static_cast<size_t>(r.num_weeks) &&
              r.participated.size() == U && r.initiated.size() == U &&
              r.goal.size() == U && r.centrality.size() == U &&
              r.week.size() == U && r.replies.size() == D &&
              r.length.size() == D && r.members.size() == D;
    for (const auto* block : {&p.P, &p.Q, &p.varphi, &p.Gamma}) {
      for (const Vec& v : *block) ok = ok && v.size() == K;
    }
    for (const Vec* v : {&p.Theta, &p.Lambda, &p.Psi, &p.Delta, &p.L}) {
      ok = ok && v->size() == K;
    }
    for (int w : r.week) ok = ok && w >= 0 && w < r.num_weeks;
    for (const auto& mem : r.members) {
      for (int v : mem) ok = ok && v >= 0 && static_cast<size_t>(v) < U;
    }
    if (!ok) throw InputError("relevance model: inconsistent shapes");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("relevance model: ") + e.what());
  }
}

}  // namespace sttmrec::recommender
