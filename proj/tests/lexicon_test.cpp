#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ontoquery/error.hpp"
#include "ontoquery/lexicon.hpp"
#include "support/oracles.hpp"

using namespace ontoquery;

using Tokens = std::vector<std::string>;

TEST(Stopwords, ShippedFileMatchesBuiltIn) {
  const auto file = StopwordList::load(oracle::data_path("stopwords.txt"));
  EXPECT_EQ(file.words(), StopwordList::defaults().words());
}

TEST(Preprocess, QuestionWithPunctuation) {
  EXPECT_EQ(preprocess("What are FishTopping and thermal ?", StopwordList::defaults()),
            (Tokens{"FishTopping", "thermal"}));
}

TEST(Preprocess, HyphenatedTokensSurvive) {
  EXPECT_EQ(preprocess("Sacrum MA-0001480 and Lobe-of-prostate", StopwordList::defaults()),
            (Tokens{"Sacrum", "MA-0001480", "Lobe-of-prostate"}));
}

TEST(Preprocess, OnlyStopwords) {
  try {
    preprocess("what are the ???", StopwordList::defaults());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyQuery);
  }
  EXPECT_THROW(preprocess("", StopwordList::defaults()), Error);
}

TEST(Preprocess, LemmatizesUnlessEntityName) {
  const auto stop = StopwordList::defaults();
  EXPECT_EQ(preprocess("toppings countries", stop), (Tokens{"topping", "country"}));
  const NameCheck names = [](std::string_view t) { return t == "Spices"; };
  EXPECT_EQ(preprocess("Spices toppings", stop, names), (Tokens{"Spices", "topping"}));
}

TEST(Preprocess, Idempotent) {
  const auto stop = StopwordList::defaults();
  std::mt19937 rng(5);
  const std::vector<std::string> words = {"What", "are",    "FishTopping", "thermal", "the",  "pizzas",
                                          "of",   "boxes",  "MA-0001480",  "?",       "and",  "hasBase",
                                          "glass", "ponies", "Lobe-of-prostate", ",", "status"};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int i = 0; i < 200; ++i) {
    std::string q;
    for (int w = 0; w < 6; ++w) q += words[pick(rng)] + " ";
    Tokens once;
    try {
      once = preprocess(q, stop);
    } catch (const Error&) {
      continue;
    }
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    EXPECT_EQ(preprocess(joined, stop), once) << q;
  }
}

TEST(Lemmatize, SuffixRules) {
  EXPECT_EQ(lemmatize("countries"), "country");
  EXPECT_EQ(lemmatize("boxes"), "box");
  EXPECT_EQ(lemmatize("toppings"), "topping");
  EXPECT_EQ(lemmatize("glass"), "glass");
  EXPECT_EQ(lemmatize("status"), "status");
  EXPECT_EQ(lemmatize("axis"), "axis");
  EXPECT_EQ(lemmatize("gas"), "gas");
}

TEST(SegmentName, Examples) {
  EXPECT_EQ(segment_name("VegetableTopping"), (Tokens{"vegetable", "topping"}));
  EXPECT_EQ(segment_name("MA-0001480"), (Tokens{"ma", "0001480"}));
  EXPECT_EQ(segment_name("hasBase"), (Tokens{"has", "base"}));
  EXPECT_EQ(segment_name("UNDEFINED_part_of"), (Tokens{"undefined", "part", "of"}));
  EXPECT_EQ(segment_name("HTTPServer2go"), (Tokens{"http", "server", "2", "go"}));
}

TEST(SegmentName, PartsConcatenateToName) {
  for (const char* name : {"VegetableTopping", "MA-0001480", "hasBase", "Lobe-of-prostate",
                           "ThinAndCrispyBase", "hasCalorificContentValue", "x", "ABC"}) {
    std::string stripped;
    for (const char c : std::string(name))
      if (c != '-' && c != '_') stripped += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::string joined;
    for (const auto& p : segment_name(name)) joined += p;
    EXPECT_EQ(joined, stripped) << name;
  }
}

TEST(SynonymLexicon, SymmetricAndCaseInsensitive) {
  std::istringstream in("hot\tthermal\ncountry\tnation, land\n");
  const auto lex = SynonymLexicon::parse(in);
  EXPECT_EQ(synonyms_of(lex, "thermal"), (std::set<std::string>{"hot"}));
  EXPECT_EQ(synonyms_of(lex, "HOT"), (std::set<std::string>{"thermal"}));
  EXPECT_TRUE(synonyms_of(lex, "zzz").empty());
  for (const auto& [word, syns] : lex.entries())
    for (const auto& s : syns) EXPECT_TRUE(lex.lookup(s).contains(word)) << word << " " << s;
}

TEST(SynonymLexicon, ShippedFileIsSymmetric) {
  const auto lex = SynonymLexicon::load(oracle::data_path("lexicon.tsv"));
  EXPECT_TRUE(lex.lookup("thermal").contains("hot"));
  for (const auto& [word, syns] : lex.entries())
    for (const auto& s : syns) EXPECT_TRUE(lex.lookup(s).contains(word));
}

TEST(SynonymLexicon, MalformedLine) {
  std::istringstream in("no tab here\n");
  EXPECT_THROW(SynonymLexicon::parse(in), Error);
}
