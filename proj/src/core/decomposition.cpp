#include "waring/decomposition.hpp"

#include <sstream>

namespace waring {

MultiForm PowerTerm::expand() const {
  MultiForm b = base;
  Scalar l = lambda;
  if (b.mode() != l.mode()) {
    b = b.promoted();
    l = l.promoted();
  }
  return b.pow(exponent).scaled(l);
}

bool Decomposition::is_exact() const {
  for (const auto& t : terms)
    if (!t.lambda.is_exact() || !t.base.is_exact()) return false;
  return true;
}

MultiForm Decomposition::expand(int num_vars, int degree) const {
  const bool exact = is_exact();
  MultiForm sum(num_vars, degree, exact ? Scalar::Mode::exact : Scalar::Mode::floating);
  for (const auto& t : terms) {
    MultiForm e = t.expand();
    sum += exact ? e : e.promoted();
  }
  return sum;
}

double Decomposition::residual(const MultiForm& target) const {
  MultiForm sum = expand(target.num_vars(), target.degree());
  if (sum.is_exact() && target.is_exact()) return sum == target ? 0.0 : MultiForm::relative_distance(sum, target);
  return MultiForm::relative_distance(sum, target);
}

bool Decomposition::verify(const MultiForm& target, double tol) const {
  MultiForm sum = expand(target.num_vars(), target.degree());
  if (sum.is_exact() && target.is_exact()) return sum == target;
  return MultiForm::relative_distance(sum, target) <= tol;
}

std::string Decomposition::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i) out << " + ";
    if (!t.lambda.is_one()) out << t.lambda.factor_str() << "*";
    out << "(" << t.base.str(names) << ")^" << t.exponent;
  }
  return out.str();
}

}  // namespace waring
