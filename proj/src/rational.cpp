#include "nilrigid/rational.hpp"

#include <cctype>

namespace nilrigid {

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return Int(t, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw Error("malformed rational: \"" + std::string(text) + "\"");
  Rat q;
  if (slash == std::string_view::npos) {
    q = Rat(parse_int(num));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!valid_integer(den) || den[0] == '-' || den[0] == '+') {
      throw Error("malformed rational: \"" + std::string(text) + "\"");
    }
    Int d = parse_int(den);
    if (d == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
    q = Rat(parse_int(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const GaussRat& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string im = to_string(abs(z.im));
  std::string unit = (im == "1") ? "i" : im + "*i";
  if (sgn(z.re) == 0) return sgn(z.im) < 0 ? "-" + unit : unit;
  return to_string(z.re) + (sgn(z.im) < 0 ? " - " : " + ") + unit;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace nilrigid
