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

#ifndef STTMREC_CORPUS_TOKENIZER_H_
#define STTMREC_CORPUS_TOKENIZER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sttmrec/corpus/types.h"

namespace sttmrec::corpus {

// Replaces the whole token list of an off-topic tweet.
inline constexpr std::string_view kIrrelevantToken = "<irrelevant>";

enum class TweetRelevance { kRelevant, kIrrelevant };

// Course hashtags, without the leading '#'.
const std::vector<std::string>& DefaultCourseHashtags();

// Lowercases, drops URLs, splits on whitespace and punctuation, and removes
// stop words. Tweets additionally lose @mentions and the retweet marker
// "RT". Bytes >= 0x80 count as word characters so UTF-8 text survives.
std::vector<std::string> Tokenize(std::string_view text, DocType type);

// Relevant iff the text carries one of `hashtags` (case-insensitive, whole
// tag: "#dalmooc2" does not match "dalmooc").
TweetRelevance ClassifyTweetRelevance(
    std::string_view text,
    std::span<const std::string> hashtags = DefaultCourseHashtags());

bool IsStopWord(std::string_view lowercase_word);

// The built-in stop-word list, sorted.
std::span<const std::string_view> StopWords();

}  // namespace sttmrec::corpus

#endif  // STTMREC_CORPUS_TOKENIZER_H_
