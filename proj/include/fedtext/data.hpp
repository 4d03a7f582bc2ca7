#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fedtext {

// One labeled text sample. `text` is stored in preprocessed form.
struct Example {
  int64_t id = 0;
  std::string text;
  int label = 0;
  std::string language;
};

struct Dataset {
  std::vector<Example> examples;
  int num_classes = 20;
  std::set<std::string> languages;

  size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }
};

std::set<std::string> collect_languages(const std::vector<Example>& examples);

using StopwordList = std::unordered_set<std::string>;

// Shipped stop-word list (lowercase, <= 50 entries) for a language code.
// Unknown codes get the empty list.
const StopwordList& stopwords_for(std::string_view language);

// Text cleaning, applied per whitespace-separated token:
//   1. tokens starting with http://, https:// or www. (case-insensitive) are
//      dropped,
//   2. runs of one repeated non-alphanumeric codepoint collapse to a single
//      occurrence,
//   3. tokens on the active stop-word list are dropped,
//   4. ASCII letters fold to lower case.
// Alphanumeric means ASCII [0-9A-Za-z]; other codepoints count as special
// characters for rule 2. The result is idempotent: preprocess(preprocess(x))
// == preprocess(x). Empty output is valid; callers drop such examples.
std::string preprocess(std::string_view text, const StopwordList& stopwords);
std::string preprocess(std::string_view text);  // empty stop-word list

struct SyntheticCorpusSpec {
  int num_classes = 20;
  std::vector<std::string> languages;
  int examples_per_language = 500;
  int vocab_size_per_class = 20;
  double class_signal_strength = 0.6;  // fraction of class-signature tokens
  uint64_t seed = 0;
  // Generator knobs beyond the core shape.
  int noise_vocab_per_language = 50;
  int tokens_per_example = 12;
  // When true, class-signature vocabularies are common to all languages and
  // only noise tokens are language-specific; this is what makes a held-out
  // language classifiable at all (zero-shot evaluation).
  bool shared_class_vocabulary = true;
};

// Loads `label<TAB>language<TAB>text` rows (UTF-8, no header), preprocessing
// each text with the language's stop-word list. Rows that preprocess to empty
// are dropped; malformed rows and out-of-range labels raise with the line
// number.
Dataset load_tsv(const std::filesystem::path& path, int num_classes);

// Deterministic synthetic multilingual corpus. Every class in every language
// draws from a class-signature vocabulary disjoint from all other classes;
// remaining tokens are language-common noise. Classes are balanced per
// language. Identical spec + seed gives a byte-identical corpus.
Dataset generate_synthetic(const SyntheticCorpusSpec& spec);

}  // namespace fedtext
