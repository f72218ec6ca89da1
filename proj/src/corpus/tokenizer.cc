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

#include "sttmrec/corpus/tokenizer.h"

#include <algorithm>
#include <iterator>

namespace sttmrec::corpus {
namespace {

// English function words plus a handful of social-media fillers. Sorted on
// first use for binary search; see docs/stopwords.md.
constexpr std::string_view kStopWords[] = {
    "a",       "about",   "above",   "after",   "again",   "against",
    "all",     "am",      "amp",     "an",      "and",     "any",
    "are",     "as",      "at",      "be",      "because", "been",
    "before",  "being",   "below",   "between", "both",    "but",
    "by",      "can",     "check",   "could",   "d",       "did",
    "do",      "does",    "doing",   "don",     "down",    "during",
    "each",    "few",     "for",     "from",    "further", "had",
    "has",     "have",    "having",  "he",      "her",     "here",
    "hers",    "herself", "him",     "himself", "his",     "how",
    "http",    "https",   "i",       "if",      "in",      "into",
    "is",      "it",      "its",     "itself",  "just",    "ll",
    "m",       "me",      "more",    "most",    "my",      "myself",
    "no",      "nor",     "not",     "now",     "of",      "off",
    "on",      "once",    "only",    "or",      "other",   "our",
    "ours",    "out",     "over",    "own",     "re",      "s",
    "same",    "she",     "should",  "so",      "some",    "such",
    "t",       "than",    "that",    "the",     "their",   "theirs",
    "them",    "then",    "there",   "these",   "they",    "this",
    "those",   "through", "to",      "too",     "under",   "until",
    "up",      "us",      "ve",      "very",    "via",     "was",
    "we",      "were",    "what",    "when",    "where",   "which",
    "while",   "who",     "whom",    "why",     "will",    "with",
    "would",   "www",     "you",     "your",    "yours",   "yourself",
    "yourselves", "let",  "get",     "got",     "also",    "im",
    "ourselves", "themselves", "whose", "within", "without", "yet",
};

const std::vector<std::string_view>& SortedStopWords() {
  static const std::vector<std::string_view> sorted = [] {
    std::vector<std::string_view> v(std::begin(kStopWords), std::end(kStopWords));
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }();
  return sorted;
}

bool IsWordByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool LooksLikeUrl(std::string_view chunk) {
  const std::string lower = Lower(chunk);
  return lower.find("://") != std::string::npos || lower.starts_with("www.");
}

bool IsRetweetMarker(std::string_view chunk) {
  const std::string lower = Lower(chunk);
  return lower == "rt" || lower == "rt:";
}

template <typename Fn>
void ForEachChunk(std::string_view text, Fn&& fn) {
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && IsSpace(text[i])) ++i;
    size_t j = i;
    while (j < text.size() && !IsSpace(text[j])) ++j;
    if (j > i) fn(text.substr(i, j - i));
    i = j;
  }
}

}  // namespace

const std::vector<std::string>& DefaultCourseHashtags() {
  static const std::vector<std::string> tags = {"prosolo", "dalmooc",
                                                "learninganalytics"};
  return tags;
}

std::span<const std::string_view> StopWords() { return SortedStopWords(); }

bool IsStopWord(std::string_view lowercase_word) {
  const auto& words = SortedStopWords();
  return std::binary_search(words.begin(), words.end(), lowercase_word);
}

std::vector<std::string> Tokenize(std::string_view text, DocType type) {
  std::vector<std::string> tokens;
  const bool tweet = type == DocType::kTweet;
  ForEachChunk(text, [&](std::string_view chunk) {
    if (LooksLikeUrl(chunk)) return;
    if (tweet && (chunk.front() == '@' || IsRetweetMarker(chunk))) return;
    const std::string lower = Lower(chunk);
    size_t i = 0;
    while (i < lower.size()) {
      while (i < lower.size() &&
             !IsWordByte(static_cast<unsigned char>(lower[i]))) {
        ++i;
      }
      size_t j = i;
      while (j < lower.size() &&
             IsWordByte(static_cast<unsigned char>(lower[j]))) {
        ++j;
      }
      if (j > i) {
        std::string word = lower.substr(i, j - i);
        if (!IsStopWord(word)) tokens.push_back(std::move(word));
      }
      i = j;
    }
  });
  return tokens;
}

TweetRelevance ClassifyTweetRelevance(std::string_view text,
                                      std::span<const std::string> hashtags) {
  const std::string lower = Lower(text);
  for (size_t pos = lower.find('#'); pos != std::string::npos;
       pos = lower.find('#', pos + 1)) {
    size_t end = pos + 1;
    while (end < lower.size() &&
           (IsWordByte(static_cast<unsigned char>(lower[end])) ||
            lower[end] == '_')) {
      ++end;
    }
    const std::string_view tag(lower.data() + pos + 1, end - pos - 1);
    for (const auto& wanted : hashtags) {
      if (tag == Lower(wanted)) return TweetRelevance::kRelevant;
    }
  }
  return TweetRelevance::kIrrelevant;
}

}  // namespace sttmrec::corpus
