// Porter stemming algorithm, ported from the reference ANSI C version.

#include "semrank/stem.hpp"

#include <stdexcept>

namespace semrank {
namespace {

// Works on a single lowercase word. k_ is the offset of the last letter of
// the current word; j_ marks the end of the stem while a suffix candidate is
// under consideration.
class Porter {
 public:
  explicit Porter(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string stem() {
    if (k_ > 1) {
      step1ab();
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    b_.resize(static_cast<std::size_t>(k_ + 1));
    return std::move(b_);
  }

 private:
  char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

  bool cons(int i) const {
    switch (at(i)) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of vowel-consonant sequences in [0, j_].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_cons(int j) const {
    if (j < 1) return false;
    if (at(j) != at(j - 1)) return false;
    return cons(j);
  }

  // consonant - vowel - consonant ending at i, where the final consonant is
  // not w, x or y. Signals a "short" stem like hop-, tan-.
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = at(i);
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ + 1 - len), static_cast<std::size_t>(len), s) != 0) {
      return false;
    }
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.erase(static_cast<std::size_t>(j_ + 1));
    b_.append(s);
    k_ = static_cast<int>(b_.size()) - 1;
  }

  void replace_if_m(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (at(k_) == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (at(k_ - 1) != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_cons(k_)) {
        const char ch = at(k_);
        if (ch != 'l' && ch != 's' && ch != 'z') --k_;
      } else {
        j_ = k_;
        if (m() == 1 && cvc(k_)) set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  void step2() {
    switch (at(k_ - 1)) {
      case 'a':
        if (ends("ational")) { replace_if_m("ate"); break; }
        if (ends("tional")) { replace_if_m("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { replace_if_m("ence"); break; }
        if (ends("anci")) { replace_if_m("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { replace_if_m("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { replace_if_m("ble"); break; }
        if (ends("alli")) { replace_if_m("al"); break; }
        if (ends("entli")) { replace_if_m("ent"); break; }
        if (ends("eli")) { replace_if_m("e"); break; }
        if (ends("ousli")) { replace_if_m("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { replace_if_m("ize"); break; }
        if (ends("ation")) { replace_if_m("ate"); break; }
        if (ends("ator")) { replace_if_m("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { replace_if_m("al"); break; }
        if (ends("iveness")) { replace_if_m("ive"); break; }
        if (ends("fulness")) { replace_if_m("ful"); break; }
        if (ends("ousness")) { replace_if_m("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { replace_if_m("al"); break; }
        if (ends("iviti")) { replace_if_m("ive"); break; }
        if (ends("biliti")) { replace_if_m("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { replace_if_m("log"); break; }
        break;
      default:
        break;
    }
  }

  void step3() {
    switch (at(k_)) {
      case 'e':
        if (ends("icate")) { replace_if_m("ic"); break; }
        if (ends("ative")) { replace_if_m(""); break; }
        if (ends("alize")) { replace_if_m("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { replace_if_m("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { replace_if_m("ic"); break; }
        if (ends("ful")) { replace_if_m(""); break; }
        break;
      case 's':
        if (ends("ness")) { replace_if_m(""); break; }
        break;
      default:
        break;
    }
  }

  void step4() {
    switch (at(k_ - 1)) {
      case 'a':
        if (ends("al")) break;
        return;
      case 'c':
        if (ends("ance")) break;
        if (ends("ence")) break;
        return;
      case 'e':
        if (ends("er")) break;
        return;
      case 'i':
        if (ends("ic")) break;
        return;
      case 'l':
        if (ends("able")) break;
        if (ends("ible")) break;
        return;
      case 'n':
        if (ends("ant")) break;
        if (ends("ement")) break;
        if (ends("ment")) break;
        if (ends("ent")) break;
        return;
      case 'o':
        if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) break;
        if (ends("ou")) break;
        return;
      case 's':
        if (ends("ism")) break;
        return;
      case 't':
        if (ends("ate")) break;
        if (ends("iti")) break;
        return;
      case 'u':
        if (ends("ous")) break;
        return;
      case 'v':
        if (ends("ive")) break;
        return;
      case 'z':
        if (ends("ize")) break;
        return;
      default:
        return;
    }
    if (m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (at(k_) == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (at(k_) == 'l' && double_cons(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("porter_stem: empty input");
  return Porter(word).stem();
}

}  // namespace semrank
