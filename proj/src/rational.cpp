#include "dercalc/rational.hpp"

#include <stdexcept>

namespace dercalc {

Rational rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace dercalc
