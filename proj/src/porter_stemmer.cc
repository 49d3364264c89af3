#include "swsum/porter_stemmer.h"

#include <string_view>

namespace swsum {
namespace {

// b_ always holds the current word; stem_end_ marks the last index of the
// stem left after a successful ends() match.
class Stemmer {
 public:
  explicit Stemmer(std::string word) : b_(std::move(word)) {}

  std::string run() {
    step1ab();
    if (b_.size() > 1) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_;
  }

 private:
  int last() const { return static_cast<int>(b_.size()) - 1; }

  bool cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..stem_end_].
  int measure() const {
    int n = 0;
    int i = 0;
    const int j = stem_end_;
    while (true) {
      if (i > j) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= stem_end_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int j) const {
    if (j < 1) return false;
    if (b_[static_cast<std::size_t>(j)] != b_[static_cast<std::size_t>(j - 1)])
      return false;
    return cons(j);
  }

  // consonant-vowel-consonant ending at i, the last not w, x or y.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[static_cast<std::size_t>(i)];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    if (s.size() > b_.size()) return false;
    if (std::string_view(b_).substr(b_.size() - s.size()) != s) return false;
    stem_end_ = static_cast<int>(b_.size() - s.size()) - 1;
    return true;
  }

  void set_to(std::string_view s) {
    b_.resize(static_cast<std::size_t>(stem_end_ + 1));
    b_.append(s);
  }

  void replace_if_measured(std::string_view s) {
    if (measure() > 0) set_to(s);
  }

  void step1ab() {
    if (b_.back() == 's') {
      if (ends("sses")) {
        set_to("ss");
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_.size() >= 2 && b_[b_.size() - 2] != 's') {
        b_.pop_back();
      }
    }
    if (ends("eed")) {
      if (measure() > 0) b_.pop_back();
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      set_to("");
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(last())) {
        const char ch = b_.back();
        if (ch != 'l' && ch != 's' && ch != 'z') b_.pop_back();
      } else {
        stem_end_ = last();
        if (measure() == 1 && cvc(last())) b_.push_back('e');
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_.back() = 'i';
  }

  void step2() {
    static constexpr std::pair<std::string_view, std::string_view> kRules[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
        {"anci", "ance"},   {"izer", "ize"},    {"bli", "ble"},
        {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
        {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
        {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
        {"iviti", "ive"},   {"biliti", "ble"},  {"logi", "log"}};
    apply_first(kRules);
  }

  void step3() {
    static constexpr std::pair<std::string_view, std::string_view> kRules[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
    apply_first(kRules);
  }

  // The first rule whose suffix matches decides; its replacement applies
  // only when the remaining stem has measure > 0.
  template <std::size_t N>
  void apply_first(
      const std::pair<std::string_view, std::string_view> (&rules)[N]) {
    for (const auto& [suffix, replacement] : rules) {
      if (ends(suffix)) {
        replace_if_measured(replacement);
        return;
      }
    }
  }

  void step4() {
    static constexpr std::string_view kSuffixes[] = {
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant",
        "ement", "ment", "ent", "ion", "ou", "ism",  "ate",  "iti",
        "ous", "ive",  "ize"};
    for (std::string_view suffix : kSuffixes) {
      if (!ends(suffix)) continue;
      if (suffix == "ion") {
        const char before = stem_end_ >= 0 ? b_[static_cast<std::size_t>(stem_end_)] : '\0';
        if (before != 's' && before != 't') return;
      }
      if (measure() > 1) set_to("");
      return;
    }
  }

  void step5() {
    stem_end_ = last();
    if (b_.back() == 'e') {
      stem_end_ = last() - 1;
      const int a = measure();
      if (a > 1 || (a == 1 && !cvc(last() - 1))) b_.pop_back();
    }
    stem_end_ = last();
    if (b_.back() == 'l' && double_cons(last()) && measure() > 1) b_.pop_back();
  }

  std::string b_;
  int stem_end_ = 0;
};

}  // namespace

std::string porter_stem(std::string word) {
  if (word.size() <= 2) return word;
  return Stemmer(std::move(word)).run();
}

}  // namespace swsum
