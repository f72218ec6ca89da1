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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "sttm_oracles.h"
#include "sttmrec/common/error.h"
#include "sttmrec/common/math_util.h"
#include "sttmrec/sttm/gibbs.h"
#include "sttmrec/sttm/model.h"
#include "sttmrec/sttm/model_io.h"
#include "sttmrec/sttm/synthetic.h"
#include "sttmrec/sttm/viterbi.h"

namespace sttmrec::sttm {
namespace {

using corpus::SeqDocument;
using corpus::Sequence;
using corpus::SequenceSet;
using corpus::TimePoint;

Hyperparams Small(int S, int Z, int D, int A) {
  Hyperparams h;
  h.num_states = S;
  h.num_topics = Z;
  h.num_doc_types = D;
  h.num_social = A;
  return h;
}

SequenceSet OneDoc(std::vector<int> tokens, int V, int D = 1, int A = 1) {
  SequenceSet set;
  for (int w = 0; w < V; ++w) set.vocabulary.push_back("w" + std::to_string(w));
  set.num_doc_types = D;
  set.num_social = A;
  Sequence seq;
  seq.user_id = "u";
  seq.steps.push_back(TimePoint{0, 0, {SeqDocument{0, std::move(tokens)}}});
  set.sequences.push_back(seq);
  return set;
}

std::vector<double> BruteTopic(SttmModel model, int m, int t, int i) {
  std::vector<double> lp;
  for (int j = 0; j < model.hyperparams().num_topics; ++j) {
    model.SetTopic(m, t, i, j);
    lp.push_back(model.JointLogProb());
  }
  NormalizeLogWeights(lp);
  return lp;
}

std::vector<double> BruteState(SttmModel model, int m, int t) {
  std::vector<double> lp;
  for (int c = 0; c < model.hyperparams().num_states; ++c) {
    model.SetState(m, t, c);
    lp.push_back(model.JointLogProb());
  }
  NormalizeLogWeights(lp);
  return lp;
}

TEST(SttmInitTest, TallyIdentity) {
  const auto set = OneDoc({0, 1, 2}, 3);
  const auto model = SttmModel::Init(set, Small(2, 2, 1, 1), 5);
  const auto& c = model.counts();
  EXPECT_EQ(std::accumulate(c.zw.begin(), c.zw.end(), 0), 3);
  EXPECT_EQ(std::accumulate(c.sd.begin(), c.sd.end(), 0), 1);
  EXPECT_TRUE(model.Audit());
}

TEST(SttmInitTest, SameSeedSameAssignments) {
  Rng rng(3);
  const auto set = testing::RandomTinySet(rng, 3, 4, 6, 2, 3);
  const auto h = Small(3, 2, 2, 3);
  const auto a = SttmModel::Init(set, h, 11);
  const auto b = SttmModel::Init(set, h, 11);
  EXPECT_EQ(a.topics(), b.topics());
  EXPECT_EQ(a.states(), b.states());
}

TEST(SttmInitTest, RejectsBadInput) {
  SequenceSet empty_vocab = OneDoc({0}, 1);
  empty_vocab.vocabulary.clear();
  EXPECT_THROW(SttmModel::Init(empty_vocab, Small(2, 2, 1, 1), 1), InputError);
  EXPECT_THROW(SttmModel::Init(SequenceSet{}, Small(2, 2, 1, 1), 1),
               InputError);
  // Document type 0 only, but D=0 is invalid.
  EXPECT_THROW(SttmModel::Init(OneDoc({0}, 1), Small(2, 2, 0, 1), 1),
               InputError);
}

TEST(SttmConditionalTest, DegenerateSizes) {
  auto model = SttmModel::Init(OneDoc({0, 1}, 2), Small(1, 1, 1, 1), 1);
  EXPECT_EQ(model.TopicConditional(0, 0, 0), std::vector<double>{1.0});
  EXPECT_EQ(model.StateConditional(0, 0), std::vector<double>{1.0});
}

TEST(SttmConditionalTest, PriorOnlyTopicConditionalIsUniform) {
  auto model = SttmModel::Init(OneDoc({2}, 4), Small(1, 3, 1, 1), 9);
  for (double p : model.TopicConditional(0, 0, 0)) EXPECT_NEAR(p, 1.0 / 3, 1e-12);
}

TEST(SttmConditionalTest, SymmetricStateConditionalIsUniform) {
  auto model = SttmModel::Init(OneDoc({0, 1, 1}, 2), Small(3, 2, 1, 1), 4);
  for (double p : model.StateConditional(0, 0)) EXPECT_NEAR(p, 1.0 / 3, 1e-12);
}

TEST(SttmConditionalTest, TwoTopicsTwoWordsHandRatio) {
  // Tokens w0 w0 w1 in one state; the last token's conditional by hand.
  SequenceSet set = OneDoc({0, 0, 1}, 2);
  auto h = Small(1, 2, 1, 1);
  auto model = SttmModel::FromAssignments(set, h, 1, {0, 0, 1}, {0});
  // Excluding token 2: topic 0 holds {w0, w0}, topic 1 is empty; the
  // state's topic counts are [2, 0].
  const double a = h.alpha, b = h.beta;
  const double p0 = (2 + a) * (0 + b) / (2 + 2 * b);
  const double p1 = (0 + a) * (0 + b) / (0 + 2 * b);
  const auto cond = model.TopicConditional(0, 0, 2);
  EXPECT_NEAR(cond[0], p0 / (p0 + p1), 1e-12);
  EXPECT_NEAR(cond[1], p1 / (p0 + p1), 1e-12);
}

TEST(SttmConditionalTest, LengthTwoStateConditionalMatchesEnumeration) {
  SequenceSet set;
  set.vocabulary = {"a", "b"};
  set.num_doc_types = 1;
  set.num_social = 1;
  set.sequences.push_back(
      {"u", {TimePoint{0, 0, {SeqDocument{0, {0, 1}}}},
             TimePoint{1, 0, {SeqDocument{0, {1}}}}}});
  const auto h = Small(2, 1, 1, 1);
  auto model = SttmModel::FromAssignments(set, h, 1, {0, 0, 0}, {0, 1});
  for (int t = 0; t < 2; ++t) {
    const auto got = model.StateConditional(0, t);
    const auto want = BruteState(model, 0, t);
    for (int c = 0; c < 2; ++c) EXPECT_NEAR(got[c], want[c], 1e-12);
  }
}

TEST(SttmConditionalTest, RandomTinyInstancesMatchJoint) {
  Rng rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int S = 1 + static_cast<int>(rng.UniformInt(3));
    const int Z = 1 + static_cast<int>(rng.UniformInt(2));
    const int V = 1 + static_cast<int>(rng.UniformInt(4));
    const auto set = testing::RandomTinySet(rng, 2, 3, V, 2, 2);
    auto model = SttmModel::Init(set, Small(S, Z, 2, 2), rng.UniformInt(1000));
    for (int m = 0; m < model.num_sequences(); ++m) {
      for (int t = 0; t < model.num_steps(m); ++t) {
        const auto got = model.StateConditional(m, t);
        const auto want = BruteState(model, m, t);
        double total = 0.0;
        for (int c = 0; c < S; ++c) {
          EXPECT_NEAR(got[c], want[c], 1e-9);
          total += got[c];
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
        for (int i = 0; i < model.num_tokens(m, t); ++i) {
          const auto gz = model.TopicConditional(m, t, i);
          const auto wz = BruteTopic(model, m, t, i);
          for (int j = 0; j < Z; ++j) EXPECT_NEAR(gz[j], wz[j], 1e-9);
        }
      }
    }
    EXPECT_TRUE(model.Audit());
  }
}

TEST(SttmConditionalTest, SelfTransitionCorrectionMatters) {
  // prev == c == next with the same social category on both transitions.
  SequenceSet set;
  set.vocabulary = {"a"};
  set.num_doc_types = 1;
  set.num_social = 1;
  Sequence seq{"u", {}};
  for (int t = 0; t < 3; ++t) seq.steps.push_back({t, 0, {SeqDocument{0, {0}}}});
  set.sequences.push_back(seq);
  auto model =
      SttmModel::FromAssignments(set, Small(2, 1, 1, 1), 1, {0, 0, 0}, {0, 0, 0});
  const auto got = model.StateConditional(0, 1);
  const auto want = BruteState(model, 0, 1);
  for (int c = 0; c < 2; ++c) EXPECT_NEAR(got[c], want[c], 1e-12);
}

TEST(SttmConditionalTest, ApproximateFormDeviatesFromJoint) {
  Rng rng(77);
  double max_gap = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto set = testing::RandomTinySet(rng, 2, 3, 3, 2, 2);
    auto model = SttmModel::Init(set, Small(3, 2, 2, 2), trial);
    for (int m = 0; m < model.num_sequences(); ++m) {
      for (int t = 0; t < model.num_steps(m); ++t) {
        const auto approx = model.StateConditional(m, t, ConditionalForm::kApproximate);
        const auto exact = BruteState(model, m, t);
        EXPECT_NEAR(std::accumulate(approx.begin(), approx.end(), 0.0), 1.0,
                    1e-9);
        for (int c = 0; c < 3; ++c) {
          max_gap = std::max(max_gap, std::abs(approx[c] - exact[c]));
        }
      }
    }
  }
  EXPECT_GT(max_gap, 1e-6);
}

TEST(SttmJointTest, EmptyModelIsZero) {
  SequenceSet set;
  set.vocabulary = {"a"};
  const auto model = SttmModel::FromAssignments(set, Small(2, 2, 6, 7), 0, {}, {});
  EXPECT_EQ(model.JointLogProb(), 0.0);
}

TEST(SttmJointTest, SingleTokenIsSmoothedEmission) {
  const auto model =
      SttmModel::FromAssignments(OneDoc({2}, 4), Small(1, 1, 1, 1), 0, {0}, {0});
  EXPECT_NEAR(model.JointLogProb(), std::log(0.25), 1e-12);
}

TEST(SttmJointTest, MatchesSequentialUrnOracle) {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto set = testing::RandomTinySet(rng, 3, 4, 5, 3, 3);
    const auto h = Small(3, 2, 3, 3);
    const auto model = SttmModel::Init(set, h, trial);
    EXPECT_NEAR(model.JointLogProb(),
                testing::UrnJointLogProb(set, h, model.topics(), model.states()),
                1e-9);
  }
}

TEST(SttmGibbsTest, AuditHoldsAfterSweeps) {
  Rng rng(5);
  const auto set = testing::RandomTinySet(rng, 4, 5, 8, 2, 3);
  auto model = SttmModel::Init(set, Small(3, 3, 2, 3), 1);
  Rng sampler(8);
  for (int s = 0; s < 20; ++s) {
    model.Sweep(sampler, s % 2 ? ScanOrder::kRandom : ScanOrder::kFixed);
    ASSERT_TRUE(model.Audit()) << "sweep " << s;
  }
  for (int s = 0; s < 5; ++s) {
    model.Sweep(sampler, ScanOrder::kFixed, ConditionalForm::kApproximate);
  }
  EXPECT_TRUE(model.Audit());
}

TEST(SttmGibbsTest, ZeroSweepsGivesSmoothedInitialCounts) {
  Rng rng(6);
  const auto set = testing::RandomTinySet(rng, 2, 3, 4, 2, 2);
  const auto h = Small(2, 2, 2, 2);
  auto model = SttmModel::Init(set, h, 3);
  GibbsOptions opt;
  opt.sweeps = 0;
  opt.burn_in = 0;
  const auto result = RunGibbs(model, opt);
  EXPECT_EQ(result.num_snapshots, 0);
  EXPECT_TRUE(result.log_prob.empty());
  const auto& n = model.counts();
  for (int j = 0; j < h.num_topics; ++j) {
    double total = 0.0;
    for (int w = 0; w < n.V; ++w) total += n.zw[n.ZW(j, w)] + h.beta;
    for (int w = 0; w < n.V; ++w) {
      EXPECT_DOUBLE_EQ(result.profiles.phi[j][w],
                       (n.zw[n.ZW(j, w)] + h.beta) / total);
    }
  }
}

TEST(SttmGibbsTest, SameSeedBitIdentical) {
  Rng rng(7);
  const auto set = testing::RandomTinySet(rng, 4, 4, 6, 2, 2);
  const auto h = Small(2, 3, 2, 2);
  GibbsOptions opt;
  opt.sweeps = 30;
  opt.burn_in = 10;
  opt.thin = 5;
  auto a = SttmModel::Init(set, h, 42);
  auto b = SttmModel::Init(set, h, 42);
  const auto ra = RunGibbs(a, opt);
  const auto rb = RunGibbs(b, opt);
  EXPECT_EQ(ra.num_snapshots, 4);
  EXPECT_EQ(ra.log_prob, rb.log_prob);
  EXPECT_EQ(nlohmann::json(ra.profiles).dump(), nlohmann::json(rb.profiles).dump());
}

TEST(SttmGibbsTest, ScheduleValidation) {
  auto model = SttmModel::Init(OneDoc({0}, 1), Small(1, 1, 1, 1), 1);
  GibbsOptions opt;
  opt.sweeps = 5;
  opt.burn_in = 6;
  EXPECT_THROW(RunGibbs(model, opt), InputError);
  opt.burn_in = 1;
  opt.thin = 0;
  EXPECT_THROW(RunGibbs(model, opt), InputError);
}

TEST(SttmGibbsTest, ChainsKeepBestFinalJoint) {
  Rng rng(8);
  const auto set = testing::RandomTinySet(rng, 4, 4, 6, 2, 2);
  const auto h = Small(2, 2, 2, 2);
  GibbsOptions opt;
  opt.sweeps = 10;
  opt.burn_in = 5;
  const auto best = RunChains(set, h, 100, 3, opt);
  for (int i = 0; i < 3; ++i) {
    auto model = SttmModel::Init(set, h, 100 + i);
    const auto r = RunGibbs(model, opt);
    EXPECT_LE(r.log_prob.back(), best.result.log_prob.back());
    if (i == best.chain_index) {
      EXPECT_EQ(r.log_prob, best.result.log_prob);
    }
  }
}

TEST(SttmProfilesTest, AllZeroCountsAreUniform) {
  CountTables<int> n;
  n.Resize(2, 3, 4, 5, 6, 1);
  const auto p = EstimateProfiles(n, Small(2, 4, 5, 3), {1}, {});
  for (const auto& row : p.phi) {
    for (double x : row) EXPECT_DOUBLE_EQ(x, 1.0 / 6);
  }
  for (const auto& row : p.psi) {
    for (double x : row) EXPECT_DOUBLE_EQ(x, 1.0 / 5);
  }
  for (const auto& row : p.init) {
    for (double x : row) EXPECT_DOUBLE_EQ(x, 1.0 / 2);
  }
  p.Validate();
}

TEST(SttmProfilesTest, PhiSmoothingArithmetic) {
  CountTables<int> n;
  n.Resize(1, 1, 1, 1, 2, 0);
  n.zw = {3, 1};
  Hyperparams h = Small(1, 1, 1, 1);
  h.beta = 1.0;
  const auto p = EstimateProfiles(n, h, {}, {});
  EXPECT_DOUBLE_EQ(p.phi[0][0], 4.0 / 6);
  EXPECT_DOUBLE_EQ(p.phi[0][1], 2.0 / 6);
}

TEST(SttmProfilesTest, FixtureCountsIndependentArithmetic) {
  // Two time points, states {0, 1}, social {0, 0}; words: t0 = w0(z0) w1(z1),
  // t1 = w1(z1). Doc types: t0 type 1, t1 type 0.
  SequenceSet set;
  set.vocabulary = {"x", "y"};
  set.num_doc_types = 2;
  set.num_social = 1;
  set.sequences.push_back({"u",
                           {TimePoint{0, 0, {SeqDocument{1, {0, 1}}}},
                            TimePoint{1, 0, {SeqDocument{0, {1}}}}}});
  Hyperparams h = Small(2, 2, 2, 1);
  h.alpha = 0.5;
  h.beta = 0.25;
  h.nu = 1.0;
  h.gamma = 2.0;
  const auto model = SttmModel::FromAssignments(set, h, 0, {0, 1, 1}, {0, 1});
  const auto p = EstimateProfiles(model);
  // phi[1] = (0 + .25, 2 + .25) / 2.5
  EXPECT_DOUBLE_EQ(p.phi[1][0], 0.1);
  EXPECT_DOUBLE_EQ(p.phi[1][1], 0.9);
  // theta[0] = (1.5, 1.5) / 3 ; theta[1] = (.5, 1.5) / 2
  EXPECT_DOUBLE_EQ(p.theta[0][0], 0.5);
  EXPECT_DOUBLE_EQ(p.theta[1][1], 0.75);
  // psi[0] = (0 + 1, 1 + 1) / 3
  EXPECT_DOUBLE_EQ(p.psi[0][1], 2.0 / 3);
  // pi[0][0] = (0 + 2, 1 + 2) / 5 ; init[0] = (1 + 2, 0 + 2) / 5
  EXPECT_DOUBLE_EQ(p.pi[0][0][1], 0.6);
  EXPECT_DOUBLE_EQ(p.init[0][0], 0.6);
  // theta_doc[0][1] = (0 + .5, 1 + .5) / 2
  EXPECT_DOUBLE_EQ(p.theta_doc[0][1][1], 0.75);
  p.Validate();
}

TEST(SttmProfilesTest, ValidateRejectsBadRows) {
  Rng rng(1);
  auto p = testing::RandomProfiles(rng, 2, 2, 2, 1, 3);
  p.Validate();
  p.psi[0][0] += 0.1;
  EXPECT_THROW(p.Validate(), InputError);
}

TEST(ViterbiTest, LengthOneIsEmissionArgmax) {
  Rng rng(10);
  const auto p = testing::RandomProfiles(rng, 4, 3, 2, 2, 5);
  Sequence seq{"u", {TimePoint{0, 1, {SeqDocument{1, {0, 4, 2}}}}}};
  const auto r = ViterbiDecode(p, seq);
  int best = 0;
  double best_score = -1e300;
  for (int c = 0; c < 4; ++c) {
    const double s = std::log(p.init[1][c]) + EmissionLogScore(p, seq.steps[0], c);
    if (s > best_score) {
      best_score = s;
      best = c;
    }
  }
  EXPECT_EQ(r.path, std::vector<int>{best});
}

TEST(ViterbiTest, MatchesExhaustiveEnumeration) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int S = 1 + static_cast<int>(rng.UniformInt(4));
    const auto p = testing::RandomProfiles(rng, S, 3, 2, 3, 5);
    const auto set = testing::RandomTinySet(rng, 1, 6, 5, 2, 3);
    const auto& seq = set.sequences[0];
    const auto r = ViterbiDecode(p, seq);
    const auto brute = testing::ExhaustiveDecode(p, seq);
    EXPECT_NEAR(r.log_score, brute.log_score, 1e-9);
    EXPECT_EQ(r.path, brute.path);
    EXPECT_NEAR(PathLogScore(p, seq, r.path), r.log_score, 1e-9);
  }
}

TEST(ViterbiTest, TiesGoToLowerStateIndex) {
  Rng rng(12);
  auto p = testing::RandomProfiles(rng, 3, 2, 1, 1, 2);
  for (auto& row : p.theta) row = {0.5, 0.5};
  for (auto& row : p.psi) row = {1.0};
  for (auto& rows : p.pi) rows[0] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  p.init[0] = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  Sequence seq{"u", {TimePoint{0, 0, {SeqDocument{0, {0}}}},
                     TimePoint{1, 0, {SeqDocument{0, {1}}}}}};
  EXPECT_EQ(ViterbiDecode(p, seq).path, (std::vector<int>{0, 0}));
}

TEST(ViterbiTest, DominantStateEverywhere) {
  Rng rng(13);
  auto p = testing::RandomProfiles(rng, 3, 2, 2, 1, 3);
  // Document type 1 is only emitted by state 2.
  p.psi = {{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  Sequence seq{"u", {}};
  for (int t = 0; t < 4; ++t) seq.steps.push_back({t, 0, {SeqDocument{1, {t % 3}}}});
  EXPECT_EQ(ViterbiDecode(p, seq).path, (std::vector<int>{2, 2, 2, 2}));
}

TEST(ViterbiTest, ErrorsAndOov) {
  Rng rng(14);
  const auto p = testing::RandomProfiles(rng, 2, 2, 2, 1, 3);
  EXPECT_THROW(ViterbiDecode(p, Sequence{"u", {}}), InputError);
  Sequence bad{"u", {TimePoint{0, 0, {SeqDocument{5, {0}}}}}};
  EXPECT_THROW(ViterbiDecode(p, bad), InputError);
  Sequence with_oov{"u", {TimePoint{0, 0, {SeqDocument{0, {1, 99}}}}}};
  Sequence without{"u", {TimePoint{0, 0, {SeqDocument{0, {1}}}}}};
  EXPECT_DOUBLE_EQ(ViterbiDecode(p, with_oov).log_score,
                   ViterbiDecode(p, without).log_score);
}

TEST(ViterbiTest, MaxLikelihoodMixtureOnDisjointTopics) {
  Matrix phi = {{0.5, 0.5, 0.0, 0.0}, {0.0, 0.0, 0.5, 0.5}};
  const auto mix = MaxLikelihoodMixture(phi, {0, 1, 2, 0}, {0.5, 0.5});
  EXPECT_NEAR(mix[0], 0.75, 1e-9);
  EXPECT_NEAR(mix[1], 0.25, 1e-9);
  EXPECT_EQ(MaxLikelihoodMixture(phi, {}, {0.3, 0.7}),
            (std::vector<double>{0.3, 0.7}));
}

StateProfiles OneHotTruth() {
  StateProfiles p;
  p.vocabulary = {"a", "b", "c"};
  p.phi = {{0, 1, 0}, {0, 0, 1}};
  p.theta = {{1, 0}, {0, 1}};
  p.psi = {{1, 0}, {0, 1}};
  p.pi = {{{0, 1}}, {{1, 0}}};
  p.init = {{1, 0}};
  return p;
}

TEST(SyntheticTest, OneHotProfilesAreDeterministic) {
  SyntheticSpec spec;
  spec.num_sequences = 2;
  spec.length = 3;
  spec.min_docs = spec.max_docs = 1;
  spec.min_tokens = spec.max_tokens = 2;
  const auto out = GenerateSynthetic(OneHotTruth(), spec, 1);
  for (const auto& seq : out.data.sequences) {
    ASSERT_EQ(seq.steps.size(), 3u);
    for (int t = 0; t < 3; ++t) {
      const int c = t % 2;
      EXPECT_EQ(seq.steps[t].docs[0].type, c);
      EXPECT_EQ(seq.steps[t].docs[0].tokens, (std::vector<int>{c + 1, c + 1}));
    }
  }
  EXPECT_EQ(out.truth.states[0], (std::vector<int>{0, 1, 0}));
}

TEST(SyntheticTest, DocTypeFrequenciesFollowPsi) {
  const auto h = Small(3, 5, 3, 7);
  const auto truth = WellSeparatedTruth(h, 50);
  SyntheticSpec spec;
  spec.num_sequences = 1000;
  spec.length = 4;
  spec.min_docs = spec.max_docs = 3;
  spec.min_tokens = spec.max_tokens = 1;
  const auto out = GenerateSynthetic(truth, spec, 5);
  std::vector<std::vector<double>> freq(3, std::vector<double>(3, 0.0));
  std::vector<double> total(3, 0.0);
  for (size_t m = 0; m < out.data.sequences.size(); ++m) {
    const auto& seq = out.data.sequences[m];
    for (size_t t = 0; t < seq.steps.size(); ++t) {
      const int c = out.truth.states[m][t];
      for (const auto& d : seq.steps[t].docs) {
        freq[c][d.type] += 1.0;
        total[c] += 1.0;
      }
    }
  }
  EXPECT_GE(std::accumulate(total.begin(), total.end(), 0.0), 10000.0);
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(freq[c][k] / total[c], truth.psi[c][k], 0.02);
    }
  }
}

TEST(SyntheticTest, SeedDeterminismAndTruthAssignments) {
  const auto h = Small(3, 5, 3, 7);
  const auto truth = WellSeparatedTruth(h, 50);
  SyntheticSpec spec;
  spec.num_sequences = 20;
  const auto a = GenerateSynthetic(truth, spec, 9);
  const auto b = GenerateSynthetic(truth, spec, 9);
  EXPECT_EQ(nlohmann::json(a.data).dump(), nlohmann::json(b.data).dump());
  // The truth record is a valid assignment for the generated corpus.
  std::vector<int> states;
  for (const auto& row : a.truth.states) states.insert(states.end(), row.begin(), row.end());
  const auto model = SttmModel::FromAssignments(a.data, h, 0, a.truth.topics, states);
  EXPECT_TRUE(model.Audit());
}

TEST(SyntheticTest, StateRelabelingLeavesDistributionInvariant) {
  const auto h = Small(3, 5, 3, 2);
  const auto truth = WellSeparatedTruth(h, 50);
  // Permute state labels 0 <-> 2.
  const std::vector<int> perm = {2, 1, 0};
  StateProfiles permuted = truth;
  for (int c = 0; c < 3; ++c) {
    permuted.theta[perm[c]] = truth.theta[c];
    permuted.psi[perm[c]] = truth.psi[c];
    for (int a = 0; a < 2; ++a) {
      for (int n = 0; n < 3; ++n) {
        permuted.pi[perm[c]][a][perm[n]] = truth.pi[c][a][n];
      }
    }
  }
  for (int a = 0; a < 2; ++a) {
    for (int c = 0; c < 3; ++c) permuted.init[a][perm[c]] = truth.init[a][c];
  }
  SyntheticSpec spec;
  spec.num_sequences = 1500;
  spec.length = 4;
  auto type_freq = [](const SyntheticData& d) {
    std::vector<double> f(3, 0.0);
    double n = 0.0;
    for (const auto& seq : d.data.sequences) {
      for (const auto& st : seq.steps) {
        for (const auto& doc : st.docs) {
          f[doc.type] += 1.0;
          n += 1.0;
        }
      }
    }
    for (double& x : f) x /= n;
    return f;
  };
  const auto fa = type_freq(GenerateSynthetic(truth, spec, 1));
  const auto fb = type_freq(GenerateSynthetic(permuted, spec, 2));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(fa[k], fb[k], 0.02);
}

TEST(SyntheticTest, RejectsInvalidTruth) {
  auto p = OneHotTruth();
  p.phi[0] = {0.5, 0.6, 0.0};
  EXPECT_THROW(GenerateSynthetic(p, SyntheticSpec{}, 1), InputError);
}

TEST(ModelIoTest, RoundTripAndCorruption) {
  Rng rng(15);
  const auto set = testing::RandomTinySet(rng, 3, 3, 5, 2, 2);
  const auto model = SttmModel::Init(set, Small(2, 2, 2, 2), 17);
  const auto j = ModelToJson(model, {{"seed", 17}});
  const auto back = ModelFromJson(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.topics(), model.topics());
  EXPECT_EQ(back.states(), model.states());
  EXPECT_EQ(back.seed(), 17u);
  EXPECT_EQ(back.JointLogProb(), model.JointLogProb());

  auto bad = j;
  bad["counts"]["zw"][0] = bad["counts"]["zw"][0].get<int>() + 1;
  EXPECT_THROW(ModelFromJson(bad), InputError);
  bad = j;
  bad["schema_version"] = 99;
  EXPECT_THROW(ModelFromJson(bad), InputError);
  bad = j;
  bad.erase("states");
  EXPECT_THROW(ModelFromJson(bad), InputError);
}

TEST(ModelIoTest, ProfilesRoundTrip) {
  Rng rng(16);
  const auto p = testing::RandomProfiles(rng, 3, 2, 2, 2, 4);
  const auto j = ProfilesToJson(p, {{"tool_version", "x"}});
  const auto back = ProfilesFromJson(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(nlohmann::json(back).dump(), nlohmann::json(p).dump());
  auto bad = j;
  bad["psi"][0][0] = 2.0;
  EXPECT_THROW(ProfilesFromJson(bad), InputError);
}

}  // namespace
}  // namespace sttmrec::sttm
