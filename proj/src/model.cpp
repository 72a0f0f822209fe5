#include "faithful/model.hpp"

#include <set>
#include <sstream>

#include "faithful/error.hpp"

namespace faithful {

Rational Decomposition::sum() const {
  Rational s;
  for (const Term& t : terms) s += t.value();
  return s;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::non_positive_target:
      return "non_positive_target";
    case ViolationKind::non_positive_term:
      return "non_positive_term";
    case ViolationKind::duplicate_denominator:
      return "duplicate_denominator";
    case ViolationKind::sum_mismatch:
      return "sum_mismatch";
  }
  return "unknown";
}

std::vector<Violation> validate(const Decomposition& d) {
  std::vector<Violation> out;
  if (d.target.sign() <= 0) {
    out.push_back({ViolationKind::non_positive_target, "target " + d.target.str() + " is not positive"});
  }
  bool terms_positive = true;
  std::set<Integer> seen;
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    const Term& t = d.terms[i];
    if (t.num < 1 || t.den < 1) {
      terms_positive = false;
      out.push_back({ViolationKind::non_positive_term,
                     "term " + std::to_string(i) + " (" + t.num.get_str() + "/" + t.den.get_str() +
                         ") needs a positive numerator and denominator"});
    }
    if (!seen.insert(t.den).second) {
      out.push_back({ViolationKind::duplicate_denominator, "denominator " + t.den.get_str() + " repeats"});
    }
  }
  if (terms_positive) {
    Rational s = d.sum();
    if (s != d.target) {
      out.push_back({ViolationKind::sum_mismatch, "terms sum to " + s.str() + ", target is " + d.target.str()});
    }
  }
  return out;
}

bool is_valid(const Decomposition& d) { return validate(d).empty(); }

void require_valid(const Decomposition& d, const char* context) {
  auto violations = validate(d);
  if (violations.empty()) return;
  std::string msg = std::string(context) + ": invalid decomposition:";
  for (const auto& v : violations) msg += " " + v.detail + ";";
  throw PreconditionError(msg);
}

Decomposition scale(const Decomposition& d, const Integer& factor) {
  if (factor < 1) throw PreconditionError("scale: factor must be a positive integer");
  Decomposition out;
  out.target = d.target / Rational(factor);
  out.terms.reserve(d.terms.size());
  for (const Term& t : d.terms) out.terms.push_back({t.num, t.den * factor});
  return out;
}

bool StructureReport::certifies_unfaithful() const {
  for (const auto& t : terms) {
    if (t.violated()) return true;
  }
  return false;
}

StructureReport necessary_conditions(const Decomposition& d) {
  StructureReport report;
  const Integer n = d.n();
  // Both conditions lean on a second positive term (m/n > a/b); a lone
  // term such as 1/n is faithful, so length one reports nothing.
  for (const Term& t : d.terms) {
    TermStructure s;
    if (d.terms.size() < 2) {
      report.terms.push_back(s);
      continue;
    }
    s.den_divides_n = mpz_divisible_p(n.get_mpz_t(), t.den.get_mpz_t()) != 0;
    // a ≥ b/(b, n)  ⇔  a·(b, n) ≥ b
    s.numerator_too_big = t.num * gcd(t.den, n) >= t.den;
    report.terms.push_back(s);
  }
  report.pairwise_coprime_shape = coprime_shape(d);
  return report;
}

bool coprime_shape(const Decomposition& d) {
  if (d.terms.empty()) return false;
  const Integer n = d.n();
  const Term& last = d.terms.back();
  Integer product = n;
  std::vector<Integer> moduli{n};
  for (std::size_t i = 0; i + 1 < d.terms.size(); ++i) {
    const Term& t = d.terms[i];
    if (t.num < 1 || t.num >= t.den) return false;
    product *= t.den;
    moduli.push_back(t.den);
  }
  if (last.num != 1 || last.den != product) return false;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (gcd(moduli[i], moduli[j]) != 1) return false;
    }
  }
  return true;
}

std::string to_string(const Decomposition& d) {
  std::ostringstream os;
  os << d.target << " =";
  for (std::size_t i = 0; i < d.terms.size(); ++i) {
    os << (i == 0 ? " " : " + ") << d.terms[i].num << "/" << d.terms[i].den;
  }
  return os.str();
}

}  // namespace faithful
