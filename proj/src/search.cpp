#include "faithful/search.hpp"

#include <algorithm>

#include "faithful/construct.hpp"
#include "faithful/error.hpp"

namespace faithful {

namespace {

struct Candidate {
  Integer den;
  Integer amax;
  Rational max_value;  // amax/den
  Rational min_value;  // 1/den
};

Integer ceil_of(const Rational& v) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v.num().get_mpz_t(), v.den().get_mpz_t());
  return q;
}

struct NodeBudget {
  std::uint64_t cap;
  std::uint64_t used = 0;
  bool exceeded = false;

  bool take() {
    if (++used > cap) exceeded = true;
    return !exceeded;
  }
};

class LengthSearch {
 public:
  LengthSearch(const Integer& m, const Integer& n, std::size_t length, const std::vector<Candidate>& pool,
               const SearchBudget& budget, const VerifyOptions& verify_options)
      : target_(m, n), length_(length), pool_(pool), budget_{budget.combo_cap}, verify_options_(verify_options) {
    // top[i][k]: sum of the k largest max_values among pool[0..i).
    // low[i]: sum of min_values over pool[0..i).
    const std::size_t size = pool_.size();
    top_.assign(size + 1, std::vector<Rational>(length_ + 1, Rational(0)));
    low_.assign(size + 1, Rational(0));
    std::vector<Rational> best;
    for (std::size_t i = 0; i < size; ++i) {
      low_[i + 1] = low_[i] + pool_[i].min_value;
      best.push_back(pool_[i].max_value);
      std::sort(best.begin(), best.end(), std::greater<>());
      if (best.size() > length_) best.pop_back();
      Rational running(0);
      for (std::size_t k = 1; k <= length_; ++k) {
        if (k <= best.size()) running += best[k - 1];
        top_[i + 1][k] = running;
      }
    }
  }

  LengthResult run() {
    LengthResult out;
    out.length = length_;
    chosen_.clear();
    choose(pool_.size(), Rational(0), Rational(0));
    out.found = found_;
    out.exhausted = found_.has_value() || !budget_.exceeded;
    out.nodes = budget_.used;
    out.candidates = candidates_;
    return out;
  }

 private:
  // Picks the next-largest denominator from pool[0..upper); sets come out in
  // colex order.
  void choose(std::size_t upper, const Rational& max_sum, const Rational& min_sum) {
    const std::size_t left = length_ - chosen_.size();
    if (left == 0) {
      assign_numerators();
      return;
    }
    for (std::size_t i = left - 1; i < upper; ++i) {
      if (found_ || budget_.exceeded) return;
      if (!budget_.take()) return;
      const Candidate& c = pool_[i];
      const Rational hi = max_sum + c.max_value + top_[i][left - 1];
      const Rational lo = min_sum + c.min_value + (low_[i] - low_[i - (left - 1)]);
      if (lo > target_ || hi < target_) continue;
      chosen_.push_back(i);
      choose(i, max_sum + c.max_value, min_sum + c.min_value);
      chosen_.pop_back();
    }
  }

  void assign_numerators() {
    terms_.clear();
    // chosen_ holds indices from largest to smallest denominator.
    std::vector<std::size_t> order(chosen_.rbegin(), chosen_.rend());
    max_rest_.assign(order.size() + 1, Rational(0));
    min_rest_.assign(order.size() + 1, Rational(0));
    for (std::size_t j = order.size(); j-- > 0;) {
      max_rest_[j] = max_rest_[j + 1] + pool_[order[j]].max_value;
      min_rest_[j] = min_rest_[j + 1] + pool_[order[j]].min_value;
    }
    order_ = std::move(order);
    numerator(0, target_);
  }

  void numerator(std::size_t j, const Rational& remaining) {
    if (found_ || budget_.exceeded) return;
    const Candidate& c = pool_[order_[j]];
    if (j + 1 == order_.size()) {
      const Rational a = remaining * Rational(c.den);
      if (!a.is_integer() || a.num() < 1 || a.num() > c.amax) return;
      if (!budget_.take()) return;
      terms_.push_back({a.num(), c.den});
      check();
      terms_.pop_back();
      return;
    }
    const Integer lo = std::max(Integer(1), ceil_of((remaining - max_rest_[j + 1]) * Rational(c.den)));
    const Integer hi = std::min(c.amax, ((remaining - min_rest_[j + 1]) * Rational(c.den)).floor());
    for (Integer a = lo; a <= hi; ++a) {
      if (!budget_.take()) return;
      terms_.push_back({a, c.den});
      numerator(j + 1, remaining - Rational(a, c.den));
      terms_.pop_back();
      if (found_ || budget_.exceeded) return;
    }
  }

  void check() {
    ++candidates_;
    Decomposition d{target_, terms_};
    if (verify(d, verify_options_).faithful) found_ = std::move(d);
  }

  Rational target_;
  std::size_t length_;
  const std::vector<Candidate>& pool_;
  NodeBudget budget_;
  VerifyOptions verify_options_;
  std::vector<std::vector<Rational>> top_;
  std::vector<Rational> low_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> order_;
  std::vector<Rational> max_rest_, min_rest_;
  std::vector<Term> terms_;
  std::optional<Decomposition> found_;
  std::uint64_t candidates_ = 0;
};

// A single term a/b = m/n: the necessary conditions need a second term, so
// every b ≤ B with n | b is tried.
LengthResult single_term(const Integer& m, const Integer& n, const SearchBudget& budget,
                         const VerifyOptions& verify_options) {
  LengthResult out;
  out.length = 1;
  NodeBudget nodes{budget.combo_cap};
  for (Integer b = n; b <= budget.max_denominator; b += n) {
    if (!nodes.take()) break;
    ++out.candidates;
    Decomposition d{Rational(m, n), {{m * (b / n), b}}};
    if (verify(d, verify_options).faithful) {
      out.found = std::move(d);
      break;
    }
  }
  out.nodes = nodes.used;
  out.exhausted = out.found.has_value() || !nodes.exceeded;
  return out;
}

}  // namespace

bool SearchResult::all_exhausted() const {
  return std::all_of(lengths.begin(), lengths.end(), [](const LengthResult& r) { return r.exhausted; });
}

SearchResult min_length_search(const Integer& m, const Integer& n, const SearchBudget& budget,
                               const VerifyOptions& verify_options) {
  if (m < 1 || n < 1) throw PreconditionError("min_length_search: m and n must be positive");
  if (gcd(m, n) != 1) throw PreconditionError("min_length_search: m/n must be irreducible");
  if (budget.max_length < 1 || budget.max_denominator < 1 || budget.combo_cap < 1) {
    throw PreconditionError("min_length_search: budget fields must be at least 1");
  }

  std::vector<Candidate> pool;
  for (std::uint64_t b = 2; b <= budget.max_denominator; ++b) {
    const Integer den(static_cast<unsigned long>(b));
    if (mpz_divisible_p(n.get_mpz_t(), den.get_mpz_t())) continue;
    const Integer amax = (den - 1) / gcd(den, n);  // a·(b, n) < b
    pool.push_back({den, amax, Rational(amax, den), Rational(1, den)});
  }

  SearchResult out;
  for (std::size_t length = 1; length <= budget.max_length; ++length) {
    if (length == 1) {
      out.lengths.push_back(single_term(m, n, budget, verify_options));
    } else {
      LengthSearch search(m, n, length, pool, budget, verify_options);
      out.lengths.push_back(search.run());
    }
  }
  return out;
}

Prop6Instance prop6_check(const Integer& m, const Integer& n, const Integer& y2, const Integer& y, const Integer& x,
                          const VerifyOptions& verify_options) {
  Prop6Instance out{m, n, y2, y, x, {}, false, {}};
  out.condition = prop6_condition(m, n, y2, y, x);
  const Rational middle = Rational(m, n) - Rational(1, y2) - Rational(x, y * n);
  if (middle.sign() <= 0 || middle.num() != 1) {
    throw PreconditionError("prop6_check: m/n - 1/y2 - x/(y*n) = " + middle.str() + " is not a positive unit fraction");
  }
  out.decomposition = Decomposition{Rational(m, n), {{1, y2}, {1, middle.den()}, {x, y * n}}};
  out.oracle = verify(out.decomposition, verify_options);
  return out;
}

Prop6ScanResult prop6_discrepancy_scan(const Prop6ScanConfig& config, const VerifyOptions& verify_options) {
  Prop6ScanResult out;
  auto record = [&](Prop6Instance inst) {
    ++out.instances_checked;
    if (!inst.agrees()) out.discrepancies.push_back(std::move(inst));
  };
  for (Integer m = config.m_min; m <= config.m_max; ++m) {
    for (Integer n = config.n_min; n <= config.n_max; ++n) {
      if (n < 1 || m < 1 || gcd(m, n) != 1) continue;
      if (config.filter == ShapeFilter::prop7_outputs) {
        if (m < 3 || n <= m) continue;
        const Prop7Result p = prop7(m, n);
        record(prop6_check(m, n, p.y2, p.y, p.x, verify_options));
        continue;
      }
      for (Integer y2 = 2; y2 <= config.y_max; ++y2) {
        for (Integer y = 1; y <= config.y_max; ++y) {
          for (Integer x = 1; x <= 2 * y; ++x) {
            try {
              record(prop6_check(m, n, y2, y, x, verify_options));
            } catch (const PreconditionError&) {
              // not of the required shape
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace faithful
