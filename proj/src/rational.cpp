#include "conjcount/rational.hpp"

namespace conjcount {

Rational rational_from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(s));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

}  // namespace conjcount
