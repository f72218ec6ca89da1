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


#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <fstream>
#include <limits>
#include <sstream>

#include "sttmrec/common/error.h"
#include "sttmrec/common/random.h"
#include "sttmrec/recommender/constraint_filter.h"
#include "sttmrec/recommender/hits.h"
#include "sttmrec/recommender/metrics.h"
#include "sttmrec/recommender/min_cost_flow.h"
#include "sttmrec/recommender/planted.h"
#include "sttmrec/recommender/rec_data.h"
#include "sttmrec/recommender/relevance.h"

namespace sttmrec::recommender {
namespace {

int Between(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.UniformInt(hi - lo + 1));
}

// ---------------------------------------------------------------- HITS

TEST(HitsTest, TwoCycleIsSymmetric) {
  const auto c = HitsCentrality({{"a", "b"}, {"b", "a"}});
  EXPECT_NEAR(c.at("a").authority, c.at("b").authority, 1e-12);
  EXPECT_NEAR(c.at("a").hub, c.at("b").hub, 1e-12);
  EXPECT_NEAR(c.at("a").authority, c.at("a").hub, 1e-12);
  EXPECT_NEAR(c.at("a").authority, 1.0 / std::sqrt(2.0), 1e-9);
}

TEST(HitsTest, StarMatchesClosedForm) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const char* leaf : {"l1", "l2", "l3", "l4", "l5"}) {
    edges.emplace_back(leaf, "center");
  }
  const auto c = HitsCentrality(edges);
  // A = 5 x 1 column; authority is the center alone, hubs split evenly.
  EXPECT_NEAR(c.at("center").authority, 1.0, 1e-12);
  EXPECT_NEAR(c.at("center").hub, 0.0, 1e-12);
  for (const char* leaf : {"l1", "l2", "l3", "l4", "l5"}) {
    EXPECT_NEAR(c.at(leaf).authority, 0.0, 1e-12);
    EXPECT_NEAR(c.at(leaf).hub, 1.0 / std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(c.at(leaf).mean, 0.5 / std::sqrt(5.0), 1e-12);
  }
}

TEST(HitsTest, IsolatedAndEmpty) {
  EXPECT_TRUE(HitsCentrality({}).empty());
  const auto c = HitsCentrality({}, {"solo"});
  EXPECT_EQ(c.at("solo").authority, 0.0);
  EXPECT_EQ(c.at("solo").hub, 0.0);
  EXPECT_EQ(c.at("solo").mean, 0.0);
}

TEST(HitsTest, MatchesEigenvectorsOnRandomGraphs) {
  Rng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = Between(rng, 3, 7);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && rng.Uniform() < 0.4) {
          A(i, j) = 1.0;
          edges.emplace_back("n" + std::to_string(i), "n" + std::to_string(j));
        }
      }
    }
    if (edges.empty()) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A.transpose() * A);
    const auto& values = solver.eigenvalues();  // ascending
    if (values(n - 1) - values(n - 2) < 1e-3 * values(n - 1)) continue;
    Eigen::VectorXd auth = solver.eigenvectors().col(n - 1);
    if (auth.sum() < 0) auth = -auth;
    Eigen::VectorXd hub = A * auth;
    hub.normalize();
    const auto c = HitsCentrality(edges);
    for (int i = 0; i < n; ++i) {
      const std::string id = "n" + std::to_string(i);
      if (!c.count(id)) continue;
      EXPECT_NEAR(c.at(id).authority, auth(i), 1e-6) << "trial " << trial;
      EXPECT_NEAR(c.at(id).hub, hub(i), 1e-6) << "trial " << trial;
    }
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

// ------------------------------------------------------------- metrics

TEST(MetricsTest, AveragePrecisionByDefinition) {
  EXPECT_DOUBLE_EQ(AveragePrecision({true, true, false, false}), 1.0);
  EXPECT_DOUBLE_EQ(AveragePrecision({true, false, true}), 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(AveragePrecision({false, false}), 0.0);
}

TEST(MetricsTest, RankTiesById) {
  EXPECT_EQ(RankCandidates({0.5, 0.9, 0.5}, {"c", "a", "b"}),
            (std::vector<int>{1, 2, 0}));
}

TEST(MetricsTest, RandomExpectationMatchesEnumeration) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::vector<bool> flags(n, false);
      std::fill(flags.begin(), flags.begin() + k, true);
      std::sort(flags.begin(), flags.end());
      double sum = 0.0;
      int count = 0;
      do {
        sum += AveragePrecision(flags);
        ++count;
      } while (std::next_permutation(flags.begin(), flags.end()));
      EXPECT_NEAR(RandomRankingExpectedAp(n, k), sum / count, 1e-12)
          << n << " " << k;
    }
  }
}

TEST(MetricsTest, MapSkipsAndIsRankOnly) {
  std::vector<UserCandidates> users = {
      {"u1", {"d1", "d2", "d3"}, {true, false, true}},
      {"u2", {}, {}},
      {"u3", {"d1"}, {false}},
  };
  auto score = [](const std::string&, const std::string& d) {
    return d == "d1" ? 3.0 : d == "d2" ? 2.0 : 1.0;
  };
  const MapReport r = EvaluateMap(users, score);
  EXPECT_EQ(r.evaluated, 1);
  EXPECT_EQ(r.skipped_empty, 1);
  EXPECT_EQ(r.skipped_no_positive, 1);
  EXPECT_DOUBLE_EQ(r.map, 5.0 / 6.0);
  auto transformed = [&](const std::string& u, const std::string& d) {
    return std::exp(2.0 * score(u, d)) - 7.0;
  };
  EXPECT_DOUBLE_EQ(EvaluateMap(users, transformed).map, r.map);
}

// ------------------------------------------------------------ relevance

RelevanceModel FixtureModel(int K, uint64_t seed, FeatureFlags flags) {
  RelevanceModel m;
  auto& in = m.inputs;
  in.num_users = 4;
  in.num_discussions = 3;
  in.num_weeks = 2;
  in.participated = {0.5, 1.0, 0.25, 0.0};
  in.initiated = {0.0, 1.0, 0.5, 0.0};
  in.goal = {0, 1, 2, 1};
  in.centrality = {0.1, 0.7, 0.3, 0.0};
  in.week = {0, 1, 1, 0};
  in.replies = {0.2, 1.0, 0.6};
  in.length = {1.0, 0.3, 0.5};
  in.members = {{0, 1}, {1, 2, 3}, {}};
  m.flags = flags;
  m.params = RelevanceParams::Zeros(K, 4, 3, 2);
  Rng rng(seed);
  auto fill = [&](Vec& v) {
    for (double& x : v) x = rng.Normal();
  };
  for (auto* block : {&m.params.P, &m.params.Q, &m.params.varphi,
                      &m.params.Gamma}) {
    for (Vec& v : *block) fill(v);
  }
  for (Vec* v : {&m.params.Phi, &m.params.Theta, &m.params.Lambda,
                 &m.params.Psi, &m.params.Delta, &m.params.L}) {
    fill(*v);
  }
  m.params.bias = 0.3;
  return m;
}

// Independent evaluation of the scoring formula with explicit sums.
double SpreadsheetScore(const RelevanceModel& m, int u, int d) {
  const auto& in = m.inputs;
  const auto& p = m.params;
  double score = p.bias;
  std::vector<int> others;
  for (int v : in.members[d]) {
    if (v != u) others.push_back(v);
  }
  for (int k = 0; k < p.dims(); ++k) {
    double x = p.P[u][k] + in.participated[u] * p.Phi[k] +
               in.initiated[u] * p.Theta[k] + p.Gamma[in.week[u]][k];
    if (m.flags.goal) x += in.goal[u] * p.Lambda[k];
    if (m.flags.centrality) x += in.centrality[u] * p.Psi[k];
    double y = p.Q[d][k] + in.replies[d] * p.Delta[k] + in.length[d] * p.L[k];
    double implicit = 0.0;
    for (int v : others) implicit += p.varphi[v][k];
    if (!others.empty()) implicit /= std::sqrt(static_cast<double>(others.size()));
    score += x * (y + implicit);
  }
  return score;
}

TEST(RelevanceTest, ZeroParametersGiveBias) {
  RelevanceModel m = FixtureModel(3, 1, {true, true});
  m.params = RelevanceParams::Zeros(3, 4, 3, 2);
  m.params.bias = 0.42;
  for (int u = 0; u < 4; ++u) {
    for (int d = 0; d < 3; ++d) EXPECT_EQ(PredictRelevance(m, u, d), 0.42);
  }
}

TEST(RelevanceTest, HandSetK1) {
  RelevanceModel m = FixtureModel(1, 1, {false, false});
  m.params = RelevanceParams::Zeros(1, 4, 3, 2);
  m.inputs.participated[0] = 2.0;
  m.params.P[0] = {0.5};
  m.params.Phi = {0.1};
  m.params.Q[2] = {1.0};
  EXPECT_NEAR(PredictRelevance(m, 0, 2), 0.7, 1e-15);
}

TEST(RelevanceTest, MatchesSpreadsheetAndExcludesSelf) {
  for (FeatureFlags flags : {FeatureFlags{false, false}, FeatureFlags{true, false},
                             FeatureFlags{false, true}, FeatureFlags{true, true}}) {
    const RelevanceModel m = FixtureModel(3, 7, flags);
    for (int u = 0; u < 4; ++u) {
      for (int d = 0; d < 3; ++d) {
        EXPECT_NEAR(PredictRelevance(m, u, d), SpreadsheetScore(m, u, d),
                    1e-12);
      }
    }
  }
  // u = 1 belongs to discussion 0; its own varphi must not matter there.
  RelevanceModel m = FixtureModel(3, 7, {true, true});
  const double before = PredictRelevance(m, 1, 0);
  m.params.varphi[1] = {100.0, -100.0, 5.0};
  EXPECT_EQ(PredictRelevance(m, 1, 0), before);
  EXPECT_NE(PredictRelevance(m, 0, 0), SpreadsheetScore(FixtureModel(3, 7, {true, true}), 0, 0));
  EXPECT_THROW(PredictRelevance(m, 4, 0), InputError);
  EXPECT_THROW(PredictRelevance(m, 0, 3), InputError);
}

TEST(RelevanceTest, LinearInEachFeatureWeight) {
  RelevanceModel m = FixtureModel(2, 11, {true, true});
  for (Vec* block : {&m.params.Phi, &m.params.Theta, &m.params.Lambda,
                     &m.params.Psi, &m.params.Delta, &m.params.L}) {
    for (int k = 0; k < 2; ++k) {
      const double base = (*block)[k];
      std::vector<double> values;
      for (double t : {-1.0, 0.5, 2.0, 3.5}) {
        (*block)[k] = t;
        values.push_back(PredictRelevance(m, 2, 1));
      }
      (*block)[k] = base;
      const double s1 = (values[1] - values[0]) / 1.5;
      const double s2 = (values[2] - values[1]) / 1.5;
      const double s3 = (values[3] - values[2]) / 1.5;
      EXPECT_NEAR(s1, s2, 1e-8);
      EXPECT_NEAR(s2, s3, 1e-8);
    }
  }
}

double RelativeError(double a, double b) {
  return std::abs(a - b) / std::max({1e-8, std::abs(a), std::abs(b)});
}

TEST(RelevanceTest, GradientMatchesCentralDifferences) {
  const double reg = 0.05;
  RelevanceModel m = FixtureModel(2, 5, {true, true});
  const std::vector<Example> examples = {
      {0, 0, 1.0}, {1, 1, 0.0}, {2, 1, 1.0}, {3, 2, 0.0}, {1, 0, 1.0}};
  const RelevanceParams grad = LossGradient(m, examples, reg);
  auto total = [&] {
    double s = 0.0;
    for (const auto& ex : examples) s += ExampleLoss(m, ex, reg);
    return s;
  };
  const double h = 1e-5;
  auto check = [&](double& param, double analytic, const std::string& what) {
    const double saved = param;
    param = saved + h;
    const double up = total();
    param = saved - h;
    const double down = total();
    param = saved;
    const double numeric = (up - down) / (2 * h);
    EXPECT_LT(RelativeError(analytic, numeric), 1e-4)
        << what << " analytic " << analytic << " numeric " << numeric;
  };
  check(m.params.bias, grad.bias, "bias");
  auto& p = m.params;
  const std::vector<std::pair<std::vector<Vec>*, const std::vector<Vec>*>>
      lists = {{&p.P, &grad.P}, {&p.Q, &grad.Q}, {&p.varphi, &grad.varphi},
               {&p.Gamma, &grad.Gamma}};
  for (const auto& [param, g] : lists) {
    for (size_t r = 0; r < param->size(); ++r) {
      for (int k = 0; k < 2; ++k) check((*param)[r][k], (*g)[r][k], "row");
    }
  }
  const std::vector<std::pair<Vec*, const Vec*>> shared = {
      {&p.Phi, &grad.Phi},     {&p.Theta, &grad.Theta},
      {&p.Lambda, &grad.Lambda}, {&p.Psi, &grad.Psi},
      {&p.Delta, &grad.Delta}, {&p.L, &grad.L}};
  for (const auto& [param, g] : shared) {
    for (int k = 0; k < 2; ++k) check((*param)[k], (*g)[k], "shared");
  }
}

RecDataset TinyDataset() {
  std::vector<Discussion> discussions = {
      {"d1", 3, 40, {"a", "b"}}, {"d2", 0, 10, {"c"}}, {"d3", 5, 80, {"b"}}};
  std::vector<UserDiscussion> participation = {
      {"a", "d1"}, {"b", "d1"}, {"c", "d2"}, {"b", "d3"}};
  std::map<std::string, UserAttributes> attrs = {
      {"a", {2, 0.5, 0}}, {"b", {1, 0.2, 1}}, {"c", {0, 0.0, 2}}};
  return BuildRecDataset(discussions, participation, attrs);
}

TEST(RelevanceTest, TrainingBasics) {
  const RecDataset data = TinyDataset();
  EXPECT_THROW(TrainRelevance(data, {}, {}, {}), InputError);
  TrainOptions o;
  o.dims = 4;
  o.epochs = 50;
  o.seed = 9;
  const auto a = TrainRelevance(data, data.positives, {true, true}, o);
  const auto b = TrainRelevance(data, data.positives, {true, true}, o);
  EXPECT_EQ(RelevanceModelToJson(a).dump(), RelevanceModelToJson(b).dump());
  EXPECT_LE(a.epoch_loss.back(), a.epoch_loss.front());
  const auto c = RelevanceModelFromJson(RelevanceModelToJson(a));
  EXPECT_EQ(PredictRelevance(a, 1, 2), PredictRelevance(c, 1, 2));
  EXPECT_EQ(a.inputs.initiated[data.UserIndex("a")], 1.0);
  EXPECT_EQ(a.inputs.scale_length, 80.0);
}

TEST(RelevanceTest, MemorizesSinglePositive) {
  const RecDataset data = TinyDataset();
  TrainOptions o;
  o.dims = 2;
  o.epochs = 400;
  o.negative_ratio = 0;
  o.learning_rate = 0.05;
  const int u = data.UserIndex("c");
  const int d = data.DiscussionIndex("d3");
  const auto model = TrainRelevance(data, {{u, d}}, {false, false}, o);
  EXPECT_NEAR(PredictRelevance(model, u, d), 1.0, 0.1);
}

TEST(RelevanceTest, FlagNames) {
  for (const char* name : {"CAMF", "CAMF_G", "CAMF_C", "CAMF_GC"}) {
    EXPECT_EQ(FeatureFlags::Parse(name).Name(), name);
  }
  EXPECT_THROW(FeatureFlags::Parse("CAMF_X"), InputError);
}

// ------------------------------------------------------------- rec data

TEST(RecDataTest, BuildAndSplit) {
  const RecDataset data = TinyDataset();
  EXPECT_EQ(data.users, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(data.initiator, (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(data.positives.size(), 4u);
  EXPECT_THROW(BuildRecDataset({{"d1", 0, 0, {}}}, {{"a", "d9"}}, {}),
               InputError);
  EXPECT_THROW(BuildRecDataset({{"d1", 0, 0, {}}, {"d1", 0, 0, {}}}, {}, {}),
               InputError);

  std::vector<IndexPair> positives;
  for (int u = 0; u < 5; ++u) {
    for (int d = 0; d <= u; ++d) positives.emplace_back(u, d);
  }
  const PositiveSplit split = SplitPerUser(positives, 1.0 / 3, 4);
  std::map<int, int> held;
  for (const auto& [u, d] : split.test) ++held[u];
  EXPECT_EQ(held.count(0), 0u);  // single positive stays in training
  EXPECT_EQ(held[1], 1);
  EXPECT_EQ(held[2], 1);
  EXPECT_EQ(held[3], 1);
  EXPECT_EQ(held[4], 1);
  EXPECT_EQ(split.train.size() + split.test.size(), positives.size());
}

TEST(RecDataTest, FilesRoundTrip) {
  const std::string dir = ::testing::TempDir();
  const std::vector<Discussion> discussions = {{"d,1", 2, 5, {"x", "y"}},
                                               {"d2", 0, 1, {}}};
  {
    std::ofstream out(dir + "/disc.jsonl");
    WriteDiscussionsJsonl(out, discussions);
    std::ofstream part(dir + "/part.csv");
    WriteParticipationCsv(part, {{"x", "d,1"}, {"y", "d2"}});
  }
  const auto back = ReadDiscussionsJsonl(dir + "/disc.jsonl");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].id, "d,1");
  EXPECT_EQ(back[0].participants, (std::vector<std::string>{"x", "y"}));
  const auto pairs = ReadParticipationCsv(dir + "/part.csv");
  EXPECT_EQ(pairs[0], (UserDiscussion{"x", "d,1"}));
  {
    std::ofstream out(dir + "/bad.jsonl");
    out << "{\"discussion_id\":\"a\",\"n_replies\":1,\"length\":1}\n"
        << "{\"discussion_id\":\"b\",\"n_replies\":-1,\"length\":1}\n";
  }
  try {
    ReadDiscussionsJsonl(dir + "/bad.jsonl");
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.jsonl:2"), std::string::npos);
  }
  EXPECT_THROW(ReadParticipationCsv(dir + "/missing.csv"), InputError);
}

// ------------------------------------------------------- min cost flow

TEST(MinCostFlowTest, SmallAssignment) {
  // Two workers, two jobs; profit matrix [[3, 2], [2, 0.5]] as costs.
  MinCostFlow flow(6);
  flow.AddArc(0, 2, 1, 0);
  flow.AddArc(0, 3, 1, 0);
  const int a00 = flow.AddArc(2, 4, 1, -30);
  const int a01 = flow.AddArc(2, 5, 1, -20);
  const int a10 = flow.AddArc(3, 4, 1, -20);
  const int a11 = flow.AddArc(3, 5, 1, -5);
  flow.AddArc(4, 1, 1, 0);
  flow.AddArc(5, 1, 1, 0);
  const auto r = flow.Solve(0, 1);
  EXPECT_EQ(r.flow, 2);
  EXPECT_EQ(r.cost, -40);  // 20 + 20 beats 30 + 5
  EXPECT_EQ(flow.Flow(a00) + flow.Flow(a11), 0);
  EXPECT_EQ(flow.Flow(a01) + flow.Flow(a10), 2);
}

TEST(MinCostFlowTest, StopsAtNonNegativePaths) {
  MinCostFlow flow(3);
  flow.AddArc(0, 2, 5, -2);
  flow.AddArc(2, 1, 2, 0);
  flow.AddArc(2, 1, 5, 3);
  const auto r = flow.Solve(0, 1);
  EXPECT_EQ(r.flow, 2);
  EXPECT_EQ(r.cost, -4);
  MinCostFlow full(3);
  full.AddArc(0, 2, 5, -2);
  full.AddArc(2, 1, 2, 0);
  full.AddArc(2, 1, 5, 3);
  EXPECT_EQ(full.Solve(0, 1, true).flow, 5);
}

// ------------------------------------------------------ constraint filter

// Exhaustive optimum of EvaluateOb - WorkloadCost over assignments that meet
// caps and enabled constraints; -inf if none.
double BruteForceOptimum(const AssignmentProblem& p) {
  const size_t P = p.pairs.size();
  double best = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << P); ++mask) {
    Assignment f(P);
    for (size_t i = 0; i < P; ++i) f[i] = (mask >> i) & 1;
    try {
      CheckAssignment(p, f);
    } catch (const std::exception&) {
      continue;
    }
    best = std::max(best, EvaluateOb(p, f) - WorkloadCost(p, f));
  }
  return best;
}

// Random instance whose values are exact binary fractions, so objectives
// compare exactly.
AssignmentProblem RandomProblem(Rng& rng, int max_pairs) {
  AssignmentProblem p;
  p.num_users = Between(rng, 2, 5);
  p.num_discussions = Between(rng, 1, 4);
  for (int u = 0; u < p.num_users; ++u) {
    p.goal.push_back(Between(rng, 0, 2));
    p.centrality.push_back(Between(rng, 0, 8) / 16.0);
  }
  p.goal_threshold = 1.0;
  p.centrality_threshold = 0.125;
  p.alpha_pen = 0.125;
  p.cap = Between(rng, 1, 3);
  std::vector<IndexPair> all;
  for (int u = 0; u < p.num_users; ++u) {
    for (int d = 0; d < p.num_discussions; ++d) all.emplace_back(u, d);
  }
  rng.Shuffle(all.begin(), all.end());
  all.resize(std::min<size_t>(all.size(), Between(rng, 1, max_pairs)));
  for (const auto& [u, d] : all) {
    p.pairs.push_back({u, d, Between(rng, -8, 24) / 16.0});
  }
  return p;
}

TEST(ConstraintFilterTest, ForcedSinglePair) {
  AssignmentProblem p;
  p.num_users = 1;
  p.num_discussions = 1;
  p.goal = {2};
  p.centrality = {0.0};
  p.require_goal = true;
  p.pairs = {{0, 0, -1.0}};
  const FilterResult r = ConstraintFilter(p);
  EXPECT_EQ(r.f, (Assignment{1}));
}

TEST(ConstraintFilterTest, ThreeByThreeMatchesAllSubsets) {
  AssignmentProblem p;
  p.num_users = 3;
  p.num_discussions = 3;
  p.goal = {2, 0, 1};
  p.centrality = {0.0, 0.5, 0.25};
  p.alpha_pen = 0.125;
  p.cap = 2;
  const double scores[3][3] = {{0.5, 0.25, 1.0}, {0.75, 0.5, -0.25},
                               {0.125, 0.875, 0.375}};
  for (int u = 0; u < 3; ++u) {
    for (int d = 0; d < 3; ++d) p.pairs.push_back({u, d, scores[u][d]});
  }
  for (int mode = 0; mode < 4; ++mode) {
    p.require_goal = mode & 1;
    p.require_centrality = mode & 2;
    const FilterResult r = ConstraintFilter(p);
    EXPECT_EQ(r.objective, BruteForceOptimum(p)) << "mode " << mode;
    EXPECT_NO_THROW(CheckAssignment(p, r.f));
  }
}

TEST(ConstraintFilterTest, RandomInstancesMatchBruteForce) {
  Rng rng(2024);
  int solved = 0;
  for (int trial = 0; trial < 400; ++trial) {
    AssignmentProblem p = RandomProblem(rng, 12);
    p.require_goal = rng.Uniform() < 0.5;
    p.require_centrality = rng.Uniform() < 0.5;
    if (rng.Uniform() < 0.3) p.workload = 0.25;
    const double best = BruteForceOptimum(p);
    if (std::isinf(best)) {
      EXPECT_THROW(ConstraintFilter(p), InfeasibleError) << "trial " << trial;
      continue;
    }
    const FilterResult r = ConstraintFilter(p);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.objective, best) << "trial " << trial;
    EXPECT_EQ(r.objective, EvaluateOb(p, r.f) - WorkloadCost(p, r.f));
    EXPECT_NO_THROW(CheckAssignment(p, r.f));
    ++solved;
  }
  EXPECT_GT(solved, 100);
}

TEST(ConstraintFilterTest, RaisingCapNeverHurts) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    AssignmentProblem p = RandomProblem(rng, 12);
    p.require_goal = true;
    double previous = -std::numeric_limits<double>::infinity();
    for (int cap = 1; cap <= 4; ++cap) {
      p.cap = cap;
      try {
        const double obj = ConstraintFilter(p).objective;
        EXPECT_GE(obj, previous);
        previous = obj;
      } catch (const InfeasibleError&) {
        EXPECT_TRUE(std::isinf(previous));
      }
    }
  }
}

TEST(ConstraintFilterTest, InfeasibleNamesDiscussion) {
  AssignmentProblem p;
  p.num_users = 2;
  p.num_discussions = 2;
  p.discussion_ids = {"intro", "week3"};
  p.goal = {0, 2};
  p.centrality = {0.5, 0.5};
  p.require_goal = true;
  p.pairs = {{0, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}};
  try {
    ConstraintFilter(p);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.discussion_id(), "week3");
  }
  // Feasible per discussion but not within the cap.
  p.pairs = {{1, 0, 1.0}, {1, 1, 1.0}};
  p.cap = 1;
  EXPECT_THROW(ConstraintFilter(p), InfeasibleError);
}

TEST(ObTest, EmptyAndHandEvaluated) {
  AssignmentProblem p;
  p.num_users = 2;
  p.num_discussions = 2;
  p.goal = {2, 0};
  p.centrality = {0.5, 0.05};
  p.pairs = {{0, 0, 0.8}, {1, 0, 0.6}, {0, 1, 0.3}};
  EXPECT_EQ(EvaluateOb(p, {0, 0, 0}), 0.0);
  // Pair 0: 0.8 - 0.1 * (2 - 1) - 0.1 * (0.5 - 0.1) = 0.66.
  // Pair 1: 0.6, user 1 is below both thresholds.
  EXPECT_NEAR(EvaluateOb(p, {1, 1, 0}), 1.26, 1e-12);
  // With G <= 0 the goal indicator also fires for unassigned pairs.
  p.goal_threshold = 0.0;
  EXPECT_NEAR(EvaluateOb(p, {0, 0, 0}), -0.1 * 2 * 2, 1e-12);
}

TEST(BaselineTest, FiltersAfterTopN) {
  AssignmentProblem p;
  p.num_users = 3;
  p.num_discussions = 1;
  p.goal = {0, 1, 2};
  p.centrality = {0.9, 0.1, 0.05};
  p.pairs = {{0, 0, 0.9}, {1, 0, 0.8}, {2, 0, 0.7}};
  EXPECT_EQ(BaselineFilter(p, BaselineMode::kGoalPart, 2), (Assignment{0, 1, 0}));
  EXPECT_EQ(BaselineFilter(p, BaselineMode::kHighCent, 3), (Assignment{1, 0, 0}));
  EXPECT_EQ(BaselineFilter(p, BaselineMode::kGoalPartHighCent, 3),
            (Assignment{0, 0, 0}));
  p.goal = {0, 0, 0};
  EXPECT_EQ(BaselineFilter(p, BaselineMode::kGoalPart, 3), (Assignment{0, 0, 0}));
}

// ------------------------------------------------------------- planted

TEST(PlantedTest, GeneratorShapesAndDeterminism) {
  PlantedSpec spec;
  spec.num_users = 5;
  spec.num_discussions = 8;
  spec.positives_per_user = 3;
  const PlantedData planted = GeneratePlanted(spec, 3);
  const RecDataset data = BuildRecDataset(
      planted.discussions, planted.participation, planted.attributes);
  EXPECT_EQ(data.positives.size(), 15u);
  const PlantedData shuffled = ShuffleLabels(planted, 4);
  EXPECT_EQ(shuffled.participation.size(), planted.participation.size());
  EXPECT_EQ(GeneratePlanted(spec, 3).participation, planted.participation);
}

}  // namespace
}  // namespace sttmrec::recommender
