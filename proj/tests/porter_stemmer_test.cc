#include "swsum/porter_stemmer.h"

#include "doctest.h"

using swsum::porter_stem;

// Reference pairs from the published Porter vocabulary/output lists.
TEST_CASE("porter reference vectors") {
  const std::pair<const char*, const char*> cases[] = {
      {"caresses", "caress"},   {"ponies", "poni"},       {"ties", "ti"},
      {"caress", "caress"},     {"cats", "cat"},          {"feed", "feed"},
      {"agreed", "agre"},       {"plastered", "plaster"}, {"bled", "bled"},
      {"motoring", "motor"},    {"sing", "sing"},         {"conflated", "conflat"},
      {"troubled", "troubl"},   {"sized", "size"},        {"hopping", "hop"},
      {"tanned", "tan"},        {"falling", "fall"},      {"hissing", "hiss"},
      {"fizzed", "fizz"},       {"failing", "fail"},      {"filing", "file"},
      {"happy", "happi"},       {"sky", "sky"},           {"relational", "relat"},
      {"conditional", "condit"}, {"rational", "ration"},  {"valenci", "valenc"},
      {"digitizer", "digit"},   {"conformabli", "conform"}, {"radicalli", "radic"},
      {"differentli", "differ"}, {"vileli", "vile"},      {"analogousli", "analog"},
      {"vietnamization", "vietnam"}, {"predication", "predic"}, {"operator", "oper"},
      {"feudalism", "feudal"},  {"decisiveness", "decis"}, {"hopefulness", "hope"},
      {"callousness", "callous"}, {"formaliti", "formal"}, {"sensitiviti", "sensit"},
      {"sensibiliti", "sensibl"}, {"triplicate", "triplic"}, {"formative", "form"},
      {"formalize", "formal"},  {"electriciti", "electr"}, {"electrical", "electr"},
      {"hopeful", "hope"},      {"goodness", "good"},     {"revival", "reviv"},
      {"allowance", "allow"},   {"inference", "infer"},   {"airliner", "airlin"},
      {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"}, {"defensible", "defens"},
      {"irritant", "irrit"},    {"replacement", "replac"}, {"adjustment", "adjust"},
      {"dependent", "depend"},  {"adoption", "adopt"},    {"homologou", "homolog"},
      {"communism", "commun"},  {"activate", "activ"},    {"angulariti", "angular"},
      {"homologous", "homolog"}, {"effective", "effect"}, {"bowdlerize", "bowdler"},
      {"probate", "probat"},    {"rate", "rate"},         {"cease", "ceas"},
      {"controll", "control"},  {"roll", "roll"},         {"generalization", "gener"},
      {"running", "run"},       {"runs", "run"},          {"oscillators", "oscil"},
  };
  for (const auto& [word, stem] : cases) {
    CAPTURE(word);
    CHECK(porter_stem(word) == stem);
  }
}

TEST_CASE("short words are unchanged") {
  CHECK(porter_stem("") == "");
  CHECK(porter_stem("a") == "a");
  CHECK(porter_stem("is") == "is");
  CHECK(porter_stem("as") == "as");
}

TEST_CASE("stemming is stable on digits and repeated application terminates") {
  CHECK(porter_stem("2024") == "2024");
  for (const char* w : {"generalizations", "connections", "synaptic", "proteins"}) {
    const std::string once = porter_stem(w);
    CHECK(once.size() <= std::string(w).size());
  }
}
