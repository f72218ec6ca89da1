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


#include "sttmrec/cli/commands.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "sttmrec/analysis/occupancy.h"
#include "sttmrec/analysis/state_summary.h"
#include "sttmrec/analysis/transition_graph.h"
#include "sttmrec/common/csv.h"
#include "sttmrec/common/error.h"
#include "sttmrec/common/math_util.h"
#include "sttmrec/common/random.h"
#include "sttmrec/corpus/corpus.h"
#include "sttmrec/corpus/sequence.h"
#include "sttmrec/corpus/types.h"
#include "sttmrec/recommender/constraint_filter.h"
#include "sttmrec/recommender/hits.h"
#include "sttmrec/recommender/metrics.h"
#include "sttmrec/recommender/planted.h"
#include "sttmrec/recommender/rec_data.h"
#include "sttmrec/recommender/relevance.h"
#include "sttmrec/sttm/gibbs.h"
#include "sttmrec/sttm/model_io.h"
#include "sttmrec/sttm/synthetic.h"
#include "sttmrec/sttm/viterbi.h"

#ifndef STTMREC_VERSION
#define STTMREC_VERSION "unknown"
#endif

namespace sttmrec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
namespace rec = recommender;

uint64_t Seed(const Config& c) {
  const int64_t seed = c.GetInt("seed", 1);
  if (seed < 0) throw InputError("seed must be >= 0");
  return static_cast<uint64_t>(seed);
}

int PositiveInt(const Config& c, const std::string& key, int fallback) {
  const int64_t v = c.GetInt(key, fallback);
  if (v < 1 || v > 1000000000) {
    throw InputError("config key '" + key + "' must be a positive integer");
  }
  return static_cast<int>(v);
}

fs::path OutDir(const Config& c) {
  const fs::path out = c.GetString("out", "out");
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) {
    throw InputError("cannot create output directory " + out.string() + ": " +
                     ec.message());
  }
  return out;
}

// Every configured input is checked up front so a run never starts with a
// missing file.
void RequireFiles(const Config& c, std::initializer_list<const char*> keys) {
  for (const char* key : keys) {
    auto path = c.Get(key);
    if (!path) continue;
    if (!fs::is_regular_file(*path)) {
      throw InputError("cannot open " + *path + " (config key '" + key + "')");
    }
  }
}

std::string RequireKey(const Config& c, const std::string& key) {
  auto v = c.Get(key);
  if (!v || v->empty()) throw InputError("missing config key '" + key + "'");
  return *v;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  f.close();
  if (!f) throw InputError("cannot write " + path.string());
}

// One '#' line ahead of the CSV header carries the artifact metadata.
std::string CsvMetaLine(const json& meta) {
  return "# " + meta.at("tool").get<std::string>() + " " +
         meta.at("version").get<std::string>() +
         " config_hash=" + meta.at("config_hash").get<std::string>() +
         " seed=" + std::to_string(meta.at("seed").get<uint64_t>()) + "\n";
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

json ReadJsonInput(const std::string& path) { return sttm::ReadJsonFile(path); }

template <typename T>
T Decode(const json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

corpus::SequenceSet LoadSequenceSet(const std::string& path) {
  auto set = Decode<corpus::SequenceSet>(ReadJsonInput(path), path);
  corpus::ValidateSequenceSet(set);
  return set;
}

json SequenceSetJson(const corpus::SequenceSet& set, const json& meta) {
  json j = set;
  j["meta"] = meta;
  return j;
}

bool HasCorpus(const Config& c) {
  return c.Has("documents") || c.Has("follows") || c.Has("goal_labels");
}

corpus::Corpus LoadCorpus(const Config& c) {
  corpus::CorpusOptions opts;
  opts.course_start = c.GetInt("course_start", 0);
  return corpus::Corpus::Load(RequireKey(c, "documents"),
                              RequireKey(c, "follows"),
                              RequireKey(c, "goal_labels"), opts);
}

// ---------------------------------------------------------------- train

sttm::Hyperparams TrainHyperparams(const Config& c,
                                   const corpus::SequenceSet& data) {
  sttm::Hyperparams h;
  h.num_states = PositiveInt(c, "states", 10);
  h.num_topics = PositiveInt(c, "topics", 20);
  h.num_social = data.num_social;
  h.num_doc_types = data.num_doc_types;
  h.alpha = c.GetDouble("alpha", h.alpha);
  h.beta = c.GetDouble("beta", h.beta);
  h.nu = c.GetDouble("nu", h.nu);
  h.gamma = c.GetDouble("gamma", h.gamma);
  h.Validate();
  return h;
}

sttm::GibbsOptions TrainGibbsOptions(const Config& c) {
  sttm::GibbsOptions g;
  g.sweeps = PositiveInt(c, "sweeps", g.sweeps);
  const int64_t burn = c.GetInt("burn_in", g.burn_in);
  if (burn < 0 || burn > g.sweeps) {
    throw InputError("burn_in must be in [0, sweeps]");
  }
  g.burn_in = static_cast<int>(burn);
  g.thin = PositiveInt(c, "thin", g.thin);
  return g;
}

// ---------------------------------------------------------------- analyze

// Re-indexes tokens from the data vocabulary into the profile vocabulary;
// words the profiles never saw are dropped.
void RemapVocabulary(corpus::SequenceSet& set,
                     const std::vector<std::string>& target) {
  if (target.empty() || set.vocabulary == target) return;
  std::map<std::string, int> index;
  for (size_t i = 0; i < target.size(); ++i) index.emplace(target[i], i);
  std::vector<int> remap(set.vocabulary.size(), -1);
  for (size_t i = 0; i < set.vocabulary.size(); ++i) {
    auto it = index.find(set.vocabulary[i]);
    if (it != index.end()) remap[i] = it->second;
  }
  for (auto& s : set.sequences) {
    for (auto& t : s.steps) {
      for (auto& d : t.docs) {
        std::vector<int> kept;
        for (int w : d.tokens) {
          if (remap[w] >= 0) kept.push_back(remap[w]);
        }
        d.tokens = std::move(kept);
      }
    }
  }
  set.vocabulary = target;
}

// ---------------------------------------------------------------- recommend

enum class Mode { kGoalPart, kHighCent, kGoalPartHighCent, kMccfG, kMccfC,
                  kMccfGC };

Mode ParseMode(const std::string& name) {
  static const std::map<std::string, Mode> kModes = {
      {"GoalPart", Mode::kGoalPart},
      {"HighCent", Mode::kHighCent},
      {"GoalPart_HighCent", Mode::kGoalPartHighCent},
      {"MCCF_G", Mode::kMccfG},
      {"MCCF_C", Mode::kMccfC},
      {"MCCF_GC", Mode::kMccfGC}};
  auto it = kModes.find(name);
  if (it == kModes.end()) {
    throw InputError("unknown mode '" + name +
                     "' (GoalPart, HighCent, GoalPart_HighCent, MCCF_G, "
                     "MCCF_C or MCCF_GC)");
  }
  return it->second;
}

std::map<std::string, rec::UserAttributes> AttributesFromCorpus(
    const corpus::Corpus& corpus) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : corpus.follows()) edges.emplace_back(e.follower, e.followee);
  const auto cent = rec::HitsCentrality(edges, corpus.users());
  const int week = std::max(corpus.MaxWeek(), 0);
  std::map<std::string, rec::UserAttributes> out;
  for (const auto& u : corpus.users()) {
    rec::UserAttributes a;
    a.goal_quality = static_cast<double>(corpus.GoalCategoryAt(u, week));
    a.centrality = cent.at(u).mean;
    a.registration_week = corpus.FirstActiveWeek(u);
    out.emplace(u, a);
  }
  return out;
}

rec::TrainOptions RelevanceOptions(const Config& c) {
  rec::TrainOptions o;
  o.dims = PositiveInt(c, "dims", o.dims);
  o.learning_rate = c.GetDouble("learning_rate", o.learning_rate);
  o.regularization = c.GetDouble("regularization", o.regularization);
  o.epochs = PositiveInt(c, "epochs", o.epochs);
  const int64_t neg = c.GetInt("negative_ratio", o.negative_ratio);
  if (neg < 0) throw InputError("negative_ratio must be >= 0");
  o.negative_ratio = static_cast<int>(neg);
  o.init_scale = c.GetDouble("init_scale", o.init_scale);
  o.seed = Seed(c);
  if (!(o.learning_rate > 0.0) || !(o.regularization >= 0.0) ||
      !(o.init_scale >= 0.0)) {
    throw InputError("learning_rate must be > 0; regularization and "
                     "init_scale must be >= 0");
  }
  return o;
}

// Per discussion: the top `k` users by predicted score plus the best
// goal-qualified and the best centrality-qualified user, never pairing a
// user with one of their training discussions.
std::vector<rec::CandidatePair> BuildCandidates(
    const rec::AssignmentProblem& p, const std::vector<std::vector<double>>& r,
    const std::set<rec::IndexPair>& train, int k) {
  std::vector<rec::CandidatePair> pairs;
  for (int d = 0; d < p.num_discussions; ++d) {
    std::vector<int> users;
    for (int u = 0; u < p.num_users; ++u) {
      if (!train.count({u, d})) users.push_back(u);
    }
    std::stable_sort(users.begin(), users.end(),
                     [&](int a, int b) { return r[a][d] > r[b][d]; });
    std::vector<int> chosen(users.begin(),
                            users.begin() + std::min<size_t>(k, users.size()));
    auto add_best = [&](auto qualified) {
      for (int u : users) {
        if (!qualified(u)) continue;
        if (std::find(chosen.begin(), chosen.end(), u) == chosen.end()) {
          chosen.push_back(u);
        }
        return;
      }
    };
    add_best([&](int u) { return p.GoalQualified(u); });
    add_best([&](int u) { return p.CentralityQualified(u); });
    for (int u : chosen) pairs.push_back({u, d, r[u][d]});
  }
  return pairs;
}

// ---------------------------------------------------------------- synth

constexpr std::array<corpus::DocType, corpus::kNumEffTypes> kRawSource = {
    corpus::DocType::kGoalNote, corpus::DocType::kGoalNote,
    corpus::DocType::kProsoloPost, corpus::DocType::kBlogPost,
    corpus::DocType::kTweet, corpus::DocType::kTweet};

// Raw documents for a six-type synthetic sequence set: goal notes carry a
// goal label, relevant tweets a course hashtag. Follow edges are random;
// social categories of the raw corpus are therefore recomputed by the
// corpus loader rather than copied from the sequences.
void WriteRawCorpus(const corpus::SequenceSet& set, const Config& c,
                    const fs::path& out, uint64_t seed) {
  const int64_t start = c.GetInt("course_start", 0);
  std::ostringstream docs, labels, follows;
  WriteCsvRow(labels, {"doc_id", "contains_goal"});
  for (const auto& s : set.sequences) {
    for (const auto& t : s.steps) {
      for (size_t k = 0; k < t.docs.size(); ++k) {
        const auto& d = t.docs[k];
        std::string text;
        for (int w : d.tokens) {
          if (!text.empty()) text += ' ';
          text += set.vocabulary[w];
        }
        if (d.type == static_cast<int>(corpus::EffType::kRelTweet)) {
          text += " #dalmooc";
        }
        const std::string id =
            s.user_id + "-w" + std::to_string(t.week) + "-" + std::to_string(k);
        nlohmann::ordered_json obj;
        obj["doc_id"] = id;
        obj["user_id"] = s.user_id;
        obj["timestamp"] = start + t.week * corpus::kSecondsPerWeek +
                           60 * static_cast<int64_t>(k + 1);
        obj["doc_type"] = corpus::DocTypeName(kRawSource[d.type]);
        obj["text"] = text;
        docs << obj.dump() << "\n";
        if (kRawSource[d.type] == corpus::DocType::kGoalNote) {
          const bool goal =
              d.type == static_cast<int>(corpus::EffType::kRelGoalNote);
          WriteCsvRow(labels, {id, goal ? "true" : "false"});
        }
      }
    }
  }
  WriteCsvRow(follows, {"follower", "followee", "week_index"});
  const int n = static_cast<int>(set.sequences.size());
  const int per_user = static_cast<int>(c.GetInt("follows_per_user", 2));
  int max_week = 0;
  for (const auto& s : set.sequences) {
    for (const auto& t : s.steps) max_week = std::max(max_week, t.week);
  }
  Rng rng(seed ^ 0x5f0110e5ULL);
  for (int i = 0; i < n && n > 1; ++i) {
    std::set<int> picked;
    const int want = std::min(per_user, n - 1);
    while (static_cast<int>(picked.size()) < want) {
      const int j = static_cast<int>(rng.UniformInt(n));
      if (j != i) picked.insert(j);
    }
    for (int j : picked) {
      WriteCsvRow(follows,
                  {set.sequences[i].user_id, set.sequences[j].user_id,
                   std::to_string(rng.UniformInt(max_week + 1))});
    }
  }
  WriteText(out / "documents.jsonl", docs.str());
  WriteText(out / "goal_labels.csv", labels.str());
  WriteText(out / "follows.csv", follows.str());
}

}  // namespace

const char* ToolVersion() { return STTMREC_VERSION; }

std::string ConfigHash(const Config& config) {
  Config copy;
  for (const auto& [k, v] : config.values()) {
    if (k != "out") copy.Set(k, v);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, Fnv1a64(copy.Canonical()));
  return buf;
}

json ArtifactMeta(const Config& config) {
  return {{"tool", "sttmrec"},
          {"version", ToolVersion()},
          {"config_hash", ConfigHash(config)},
          {"seed", Seed(config)}};
}

void CmdTrain(const Config& c, std::ostream& log) {
  RequireFiles(c, {"sequences", "documents", "follows", "goal_labels"});
  corpus::SequenceSet data;
  if (c.Has("sequences")) {
    data = LoadSequenceSet(*c.Get("sequences"));
  } else if (HasCorpus(c)) {
    data = corpus::BuildSequences(LoadCorpus(c));
  } else {
    throw InputError(
        "train needs 'sequences' or 'documents', 'follows' and 'goal_labels'");
  }
  const auto h = TrainHyperparams(c, data);
  const auto opts = TrainGibbsOptions(c);
  const int chains = PositiveInt(c, "chains", 1);
  const json meta = ArtifactMeta(c);
  const fs::path out = OutDir(c);

  auto outcome = sttm::RunChains(data, h, Seed(c), chains, opts);
  sttm::WriteJsonFile((out / "model.json").string(),
                      sttm::ModelToJson(outcome.model, meta));
  sttm::WriteJsonFile((out / "profiles.json").string(),
                      sttm::ProfilesToJson(outcome.result.profiles, meta));
  sttm::WriteJsonFile((out / "sequences.json").string(),
                      SequenceSetJson(data, meta));
  log << "train: " << data.sequences.size() << " sequences, "
      << data.NumTokens() << " tokens, S=" << h.num_states
      << " Z=" << h.num_topics << ", chain " << outcome.chain_index
      << ", final log p " << Fixed(outcome.result.log_prob.back(), 3) << "\n";
}

void CmdAnalyze(const Config& c, std::ostream& log) {
  const fs::path out = c.GetString("out", "out");
  const std::string profiles_path =
      c.GetString("profiles", (out / "profiles.json").string());
  const std::string sequences_path =
      c.GetString("sequences", (out / "sequences.json").string());
  for (const auto& p : {profiles_path, sequences_path}) {
    if (!fs::is_regular_file(p)) throw InputError("cannot open " + p);
  }
  const auto categories =
      c.GetList("categories", {"S1", "S2", "S3", "S7"});
  std::vector<int> category_index;
  for (const auto& name : categories) {
    auto cat = corpus::ParseSocialCategory(name);
    if (!cat) throw InputError("unknown social category '" + name + "'");
    category_index.push_back(static_cast<int>(*cat));
  }
  const int top_words = PositiveInt(c, "top_words", 10);
  const int top_topics = PositiveInt(c, "top_topics", 3);

  auto profiles = sttm::ProfilesFromJson(ReadJsonInput(profiles_path));
  profiles.Validate(1e-6);
  auto data = LoadSequenceSet(sequences_path);
  RemapVocabulary(data, profiles.vocabulary);
  const int S = profiles.num_states();
  const int A = profiles.num_social();
  for (int cat : category_index) {
    if (cat >= A) {
      throw InputError("profiles have only " + std::to_string(A) +
                       " social categories");
    }
  }

  std::vector<std::vector<int>> paths, social;
  for (const auto& s : data.sequences) {
    paths.push_back(sttm::ViterbiDecode(profiles, s).path);
    std::vector<int> a;
    for (const auto& t : s.steps) a.push_back(t.social);
    social.push_back(std::move(a));
  }

  const json meta = ArtifactMeta(c);
  OutDir(c);
  std::vector<std::string> type_names;
  if (profiles.num_doc_types() == corpus::kNumEffTypes) {
    for (auto n : corpus::EffTypeNames()) type_names.emplace_back(n);
  }
  const auto occupancy = analysis::BuildOccupancy(paths, social, S);
  std::ostringstream tables;
  tables << CsvMetaLine(meta);
  analysis::WriteStateSummaryCsv(
      tables, analysis::StateSummary(profiles, top_words, top_topics),
      type_names);
  tables << "\n";
  analysis::WriteOccupancyCsv(tables, occupancy,
                              analysis::PairwiseGroupTests(occupancy));
  WriteText(out / "tables.csv", tables.str());

  std::ostringstream decoded;
  decoded << CsvMetaLine(meta);
  WriteCsvRow(decoded, {"user_id", "week", "social", "state"});
  for (size_t m = 0; m < data.sequences.size(); ++m) {
    const auto& s = data.sequences[m];
    for (size_t t = 0; t < s.steps.size(); ++t) {
      WriteCsvRow(decoded,
                  {s.user_id, std::to_string(s.steps[t].week),
                   corpus::SocialCategoryName(
                       static_cast<corpus::SocialCategory>(social[m][t])),
                   std::to_string(paths[m][t] + 1)});
    }
  }
  WriteText(out / "decoded.csv", decoded.str());

  const fs::path graphs = out / "graphs";
  fs::create_directories(graphs);
  for (size_t i = 0; i < categories.size(); ++i) {
    const auto graph = analysis::BuildTransitionGraph(paths, social, S, A,
                                                      category_index[i]);
    const std::string title = corpus::SocialCategoryName(
        static_cast<corpus::SocialCategory>(category_index[i]));
    WriteText(graphs / (title + ".dot"),
              "// " + CsvMetaLine(meta).substr(2) +
                  analysis::ToDot(graph, title));
  }
  log << "analyze: decoded " << data.sequences.size() << " sequences, "
      << categories.size() << " graphs\n";
}

void CmdRecommend(const Config& c, std::ostream& log) {
  RequireFiles(c, {"participation", "discussions", "user_attributes",
                   "documents", "follows", "goal_labels"});
  const std::string participation_path = RequireKey(c, "participation");
  const std::string discussions_path = RequireKey(c, "discussions");
  const Mode mode = ParseMode(c.GetString("mode", "MCCF_GC"));
  const auto flags = rec::FeatureFlags::Parse(c.GetString("features", "CAMF_GC"));
  const auto train_opts = RelevanceOptions(c);
  const double test_fraction = c.GetDouble("test_fraction", 1.0 / 3.0);
  const int num_candidates = PositiveInt(c, "candidates", 20);
  const int top_n = PositiveInt(c, "top_n", 3);

  std::map<std::string, rec::UserAttributes> attributes;
  if (c.Has("user_attributes")) {
    attributes = rec::ReadUserAttributesCsv(*c.Get("user_attributes"));
  } else if (HasCorpus(c)) {
    attributes = AttributesFromCorpus(LoadCorpus(c));
  }
  const auto data = rec::BuildRecDataset(
      rec::ReadDiscussionsJsonl(discussions_path),
      rec::ReadParticipationCsv(participation_path), attributes);
  if (data.positives.empty()) throw InputError("no participation rows");

  const uint64_t seed = Seed(c);
  const auto split = rec::SplitPerUser(data.positives, test_fraction, seed);
  const auto model = rec::TrainRelevance(data, split.train, flags, train_opts);

  const std::set<rec::IndexPair> train(split.train.begin(), split.train.end());
  const std::set<rec::IndexPair> test(split.test.begin(), split.test.end());
  std::vector<std::vector<double>> r(data.num_users(),
                                     std::vector<double>(data.num_discussions()));
  for (int u = 0; u < data.num_users(); ++u) {
    for (int d = 0; d < data.num_discussions(); ++d) {
      r[u][d] = rec::PredictRelevance(model, u, d);
    }
  }

  std::vector<rec::UserCandidates> eval;
  for (int u = 0; u < data.num_users(); ++u) {
    rec::UserCandidates uc;
    uc.user = data.users[u];
    for (int d = 0; d < data.num_discussions(); ++d) {
      if (train.count({u, d})) continue;
      uc.candidates.push_back(data.discussions[d]);
      uc.relevant.push_back(test.count({u, d}) > 0);
    }
    eval.push_back(std::move(uc));
  }
  const auto map = rec::EvaluateMap(
      eval, [&](const std::string& u, const std::string& d) {
        return r[data.UserIndex(u)][data.DiscussionIndex(d)];
      });

  rec::AssignmentProblem problem;
  problem.num_users = data.num_users();
  problem.num_discussions = data.num_discussions();
  problem.discussion_ids = data.discussions;
  for (const auto& a : data.attributes) {
    problem.goal.push_back(a.goal_quality);
    problem.centrality.push_back(a.centrality);
  }
  problem.goal_threshold = c.GetDouble("goal_threshold", 1.0);
  problem.centrality_threshold = c.GetDouble("centrality_threshold", 0.1);
  problem.alpha_pen = c.GetDouble("alpha_pen", 0.1);
  problem.cap = PositiveInt(c, "cap", 5);
  problem.workload = c.GetDouble("workload", 0.0);
  if (problem.workload < 0.0) throw InputError("workload must be >= 0");
  problem.pairs = BuildCandidates(problem, r, train, num_candidates);
  problem.Validate();

  rec::Assignment f;
  bool exact = true;
  const rec::BaselineThresholds thresholds{problem.goal_threshold,
                                           problem.centrality_threshold};
  switch (mode) {
    case Mode::kGoalPart:
      f = rec::BaselineFilter(problem, rec::BaselineMode::kGoalPart, top_n,
                              thresholds);
      break;
    case Mode::kHighCent:
      f = rec::BaselineFilter(problem, rec::BaselineMode::kHighCent, top_n,
                              thresholds);
      break;
    case Mode::kGoalPartHighCent:
      f = rec::BaselineFilter(problem, rec::BaselineMode::kGoalPartHighCent,
                              top_n, thresholds);
      break;
    case Mode::kMccfG:
    case Mode::kMccfC:
    case Mode::kMccfGC: {
      problem.require_goal = mode != Mode::kMccfC;
      problem.require_centrality = mode != Mode::kMccfG;
      auto result = rec::ConstraintFilter(problem);
      f = std::move(result.f);
      exact = result.exact;
      break;
    }
  }
  const double ob = rec::EvaluateOb(problem, f);

  std::vector<size_t> chosen;
  for (size_t p = 0; p < f.size(); ++p) {
    if (f[p]) chosen.push_back(p);
  }
  std::stable_sort(chosen.begin(), chosen.end(), [&](size_t a, size_t b) {
    const auto& x = problem.pairs[a];
    const auto& y = problem.pairs[b];
    if (x.discussion != y.discussion) return x.discussion < y.discussion;
    if (x.score != y.score) return x.score > y.score;
    return x.user < y.user;
  });

  const json meta = ArtifactMeta(c);
  const fs::path out = OutDir(c);
  std::ostringstream csv;
  csv << CsvMetaLine(meta);
  WriteCsvRow(csv, {"user_id", "discussion_id", "score"});
  for (size_t p : chosen) {
    const auto& pair = problem.pairs[p];
    WriteCsvRow(csv, {data.users[pair.user], data.discussions[pair.discussion],
                      Fixed(pair.score, 6)});
  }
  WriteText(out / "recommendations.csv", csv.str());

  json config = json::object();
  for (const auto& [k, v] : c.values()) {
    if (k != "out") config[k] = v;
  }
  json report = {
      {"meta", meta},
      {"seed", seed},
      {"config", config},
      {"mode", c.GetString("mode", "MCCF_GC")},
      {"features", flags.Name()},
      {"map", map.map},
      {"map_detail",
       {{"random_expectation", map.random_expectation},
        {"evaluated", map.evaluated},
        {"skipped_empty", map.skipped_empty},
        {"skipped_no_positive", map.skipped_no_positive}}},
      {"ob", ob},
      {"workload_cost", rec::WorkloadCost(problem, f)},
      {"exact", exact},
      {"assigned", chosen.size()},
      {"candidate_pairs", problem.pairs.size()},
      {"train_positives", split.train.size()},
      {"test_positives", split.test.size()}};
  sttm::WriteJsonFile((out / "report.json").string(), report);
  json model_json = rec::RelevanceModelToJson(model);
  model_json["meta"] = meta;
  sttm::WriteJsonFile((out / "relevance_model.json").string(), model_json);
  log << "recommend: MAP " << Fixed(map.map, 4) << " (random "
      << Fixed(map.random_expectation, 4) << "), OB " << Fixed(ob, 4) << ", "
      << chosen.size() << " assignments\n";
}

void CmdSynth(const Config& c, std::ostream& log) {
  RequireFiles(c, {"truth"});
  const uint64_t seed = Seed(c);
  sttm::StateProfiles truth;
  if (c.Has("truth")) {
    const std::string path = *c.Get("truth");
    const json j = ReadJsonInput(path);
    truth = Decode<sttm::StateProfiles>(
        j.contains("profiles") ? j.at("profiles") : j, path);
    truth.theta_doc.clear();
    try {
      truth.Validate(1e-6);
    } catch (const InputError& e) {
      throw InputError(path + ": invalid distributions: " + e.what());
    }
    if (truth.vocabulary.empty()) {
      for (int w = 0; w < truth.vocab_size(); ++w) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "w%03d", w);
        truth.vocabulary.push_back(buf);
      }
    }
  } else {
    sttm::Hyperparams h;
    h.num_states = PositiveInt(c, "states", 3);
    h.num_topics = PositiveInt(c, "topics", 5);
    h.num_doc_types = PositiveInt(c, "doc_types", corpus::kNumEffTypes);
    h.num_social = PositiveInt(c, "social", corpus::kNumSocialCategories);
    truth = sttm::WellSeparatedTruth(h, PositiveInt(c, "vocab_size", 50));
  }
  sttm::SyntheticSpec spec;
  spec.num_sequences = PositiveInt(c, "num_sequences", spec.num_sequences);
  spec.length = PositiveInt(c, "length", spec.length);
  spec.min_docs = PositiveInt(c, "min_docs", spec.min_docs);
  spec.max_docs = PositiveInt(c, "max_docs", spec.max_docs);
  spec.min_tokens = PositiveInt(c, "min_tokens", spec.min_tokens);
  spec.max_tokens = PositiveInt(c, "max_tokens", spec.max_tokens);
  const auto synthetic = sttm::GenerateSynthetic(truth, spec, seed);

  const json meta = ArtifactMeta(c);
  const fs::path out = OutDir(c);
  json truth_json = synthetic.truth;
  truth_json["spec"] = spec;
  truth_json["meta"] = meta;
  sttm::WriteJsonFile((out / "truth.json").string(), truth_json);
  sttm::WriteJsonFile((out / "sequences.json").string(),
                      SequenceSetJson(synthetic.data, meta));
  const bool raw = truth.num_doc_types() == corpus::kNumEffTypes &&
                   truth.num_social() == corpus::kNumSocialCategories;
  if (raw) WriteRawCorpus(synthetic.data, c, out, seed);

  rec::PlantedSpec planted;
  planted.num_users = PositiveInt(c, "rec_users", planted.num_users);
  planted.num_discussions =
      PositiveInt(c, "rec_discussions", planted.num_discussions);
  planted.positives_per_user =
      PositiveInt(c, "rec_positives", planted.positives_per_user);
  if (planted.positives_per_user > planted.num_discussions) {
    throw InputError("rec_positives exceeds rec_discussions");
  }
  const auto rec_data = rec::GeneratePlanted(planted, seed);
  std::ostringstream part, disc, users;
  rec::WriteParticipationCsv(part, rec_data.participation);
  rec::WriteDiscussionsJsonl(disc, rec_data.discussions);
  rec::WriteUserAttributesCsv(users, rec_data.attributes);
  WriteText(out / "participation.csv", part.str());
  WriteText(out / "discussions.jsonl", disc.str());
  WriteText(out / "users.csv", users.str());
  log << "synth: " << synthetic.data.sequences.size() << " sequences, "
      << synthetic.data.NumTokens() << " tokens"
      << (raw ? ", raw corpus" : "") << ", " << rec_data.participation.size()
      << " participation rows\n";
}

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"sttmrec: state-transition topic model and discussion "
               "recommender"};
  app.set_version_flag("--version", std::string(ToolVersion()));
  app.require_subcommand(1);

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static const Flag kFlags[] = {
      {"--seed", "seed", "random seed"},
      {"--states", "states", "number of states S"},
      {"--topics", "topics", "number of topics Z"},
      {"--sweeps", "sweeps", "Gibbs sweeps"},
      {"--burn-in", "burn_in", "Gibbs burn-in sweeps"},
      {"--mode", "mode", "assignment mode"},
      {"--features", "features", "relevance feature set"},
      {"--chains", "chains", "independent Gibbs chains"},
      {"--out", "out", "output directory"},
  };
  std::string config_path;
  std::map<std::string, std::string> flag_values;
  std::vector<std::string> sets;
  using Handler = void (*)(const Config&, std::ostream&);
  const std::pair<const char*, Handler> kCommands[] = {
      {"train", CmdTrain},
      {"analyze", CmdAnalyze},
      {"recommend", CmdRecommend},
      {"synth", CmdSynth}};
  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, handler] : kCommands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "key=value config file");
    for (const auto& f : kFlags) {
      sub->add_option(f.name, flag_values[f.key], f.help);
    }
    sub->add_option("--set", sets, "extra key=value override (repeatable)");
    handlers[sub] = handler;
  }
  sttmrec::Config config;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!config_path.empty()) config = Config::Load(config_path);
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw InputError("--set expects key=value, got '" + s + "'");
      }
      config.Set(s.substr(0, eq), s.substr(eq + 1));
    }
    for (const auto& f : kFlags) {
      CLI::App* sub = app.get_subcommands().front();
      if (sub->count(f.name) > 0) config.Set(f.key, flag_values[f.key]);
    }
    handlers.at(app.get_subcommands().front())(config, out);
    return kExitOk;
  } catch (const InputError& e) {
    err << "sttmrec: error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InfeasibleError& e) {
    err << "sttmrec: infeasible: " << e.what();
    if (std::string(e.what()).find(e.discussion_id()) == std::string::npos) {
      err << " (discussion " << e.discussion_id() << ")";
    }
    err << "\n";
    return kExitInfeasible;
  } catch (const nlohmann::json::exception& e) {
    err << "sttmrec: error: malformed JSON input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "sttmrec: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace sttmrec::cli
