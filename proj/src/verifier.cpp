#include "faithful/verifier.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <utility>

#include "faithful/error.hpp"

namespace faithful {

std::string to_string(VerifyMethod method) {
  switch (method) {
    case VerifyMethod::naive:
      return "naive";
    case VerifyMethod::congruence:
      return "congruence";
    case VerifyMethod::meet_in_middle:
      return "meet_in_middle";
  }
  return "unknown";
}

Integer lattice_size(const Decomposition& d) {
  Integer size = 1;
  for (const Term& t : d.terms) size *= t.num + 1;
  return size;
}

namespace {

void require_positive_terms(const Decomposition& d, const char* context) {
  for (const Term& t : d.terms) {
    if (t.num < 1 || t.den < 1) {
      throw PreconditionError(std::string(context) + ": terms need positive numerators and denominators");
    }
  }
  if (d.target.den() < 1) throw PreconditionError(std::string(context) + ": bad target");
}

void check_cap(const Integer& needed, std::uint64_t cap, const char* what) {
  if (needed > Integer(std::to_string(cap))) {
    throw CapExceededError(std::string(what) + " needs " + needed.get_str() +
                           " enumerations, cap is " + std::to_string(cap));
  }
}

Rational value_of(const Decomposition& d, const std::vector<Integer>& x) {
  Rational v;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) v += Rational(x[i], d.terms[i].den);
  }
  return v;
}

bool all_zero(const std::vector<Integer>& x) {
  return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
}

bool is_full(const Decomposition& d, const std::vector<Integer>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != d.terms[i].num) return false;
  }
  return true;
}

Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---------------------------------------------------------------------------
// Residue system.
//
// Σ x_i/b_i ∈ (1/n)ℤ  ⇔  Σ x_i·(n_i/d_i) ∈ ℤ, where n/b_i = n_i/d_i in lowest
// terms. Multiplying through by D = lcm(d_i) gives Σ x_i·n_i·(D/d_i) ≡ 0
// (mod D). Splitting D over a coprime base {q_j} turns this into one
// congruence per Q_j = q_j^{e_j}, and a term only appears in the congruences
// of base elements dividing its d_i.

class CoprimeBase {
 public:
  void insert(Integer value) {
    std::vector<Integer> pending{std::move(value)};
    while (!pending.empty()) {
      Integer y = std::move(pending.back());
      pending.pop_back();
      if (y <= 1) continue;
      if (gcd(y, product_) == 1) {
        append(std::move(y));
        continue;
      }
      for (const Integer& b : elements_) {
        while (mpz_divisible_p(y.get_mpz_t(), b.get_mpz_t())) y = exact_div(y, b);
        if (y == 1) break;
      }
      if (y == 1) continue;
      if (gcd(y, product_) == 1) {
        append(std::move(y));
        continue;
      }
      for (std::size_t k = 0; k < elements_.size(); ++k) {
        Integer g = gcd(y, elements_[k]);
        if (g == 1) continue;
        Integer b = std::move(elements_[k]);
        elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(k));
        product_ = 1;
        for (const Integer& e : elements_) product_ *= e;
        pending.push_back(exact_div(b, g));
        pending.push_back(exact_div(y, g));
        pending.push_back(std::move(g));
        break;
      }
    }
  }

  const std::vector<Integer>& elements() const { return elements_; }

 private:
  void append(Integer y) {
    product_ *= y;
    elements_.push_back(std::move(y));
  }

  std::vector<Integer> elements_;
  Integer product_ = 1;
};

struct Entry {
  std::size_t var;
  Integer coeff;  // in [1, modulus)
};

struct Constraint {
  Integer modulus;
  std::vector<Entry> entries;
};

struct ResidueSystem {
  std::vector<Constraint> constraints;
  std::vector<Integer> reduced_num;  // n_i
  std::vector<Integer> reduced_den;  // d_i
  Integer lcm = 1;                   // D
};

ResidueSystem build_system(const Decomposition& d) {
  ResidueSystem sys;
  const Integer n = d.n();
  const std::size_t t = d.terms.size();
  sys.reduced_num.resize(t);
  sys.reduced_den.resize(t);
  CoprimeBase base;
  for (std::size_t i = 0; i < t; ++i) {
    Integer g = gcd(d.terms[i].den, n);
    sys.reduced_den[i] = exact_div(d.terms[i].den, g);
    sys.reduced_num[i] = exact_div(n, g);
    base.insert(sys.reduced_den[i]);
  }
  const auto& q = base.elements();
  std::unordered_map<Integer, std::size_t, IntegerHash> index;
  for (std::size_t j = 0; j < q.size(); ++j) index.emplace(q[j], j);

  // exponents[i] = {(j, v_{q_j}(d_i))}
  std::vector<std::vector<std::pair<std::size_t, unsigned long>>> exponents(t);
  std::vector<unsigned long> max_exp(q.size(), 0);
  for (std::size_t i = 0; i < t; ++i) {
    Integer r = sys.reduced_den[i];
    if (auto it = index.find(r); it != index.end()) {
      exponents[i].emplace_back(it->second, 1);
    } else {
      for (std::size_t j = 0; j < q.size() && r != 1; ++j) {
        unsigned long e = 0;
        while (mpz_divisible_p(r.get_mpz_t(), q[j].get_mpz_t())) {
          r = exact_div(r, q[j]);
          ++e;
        }
        if (e > 0) exponents[i].emplace_back(j, e);
      }
      if (r != 1) throw ConstructionError("coprime base does not cover a denominator");
    }
    for (const auto& [j, e] : exponents[i]) max_exp[j] = std::max(max_exp[j], e);
  }

  sys.constraints.resize(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    mpz_pow_ui(sys.constraints[j].modulus.get_mpz_t(), q[j].get_mpz_t(), max_exp[j]);
    sys.lcm *= sys.constraints[j].modulus;
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (exponents[i].empty()) continue;
    const Integer c = sys.reduced_num[i] * exact_div(sys.lcm, sys.reduced_den[i]);
    for (const auto& [j, e] : exponents[i]) {
      Constraint& con = sys.constraints[j];
      con.entries.push_back({i, mod(c, con.modulus)});
    }
  }
  return sys;
}

// ---------------------------------------------------------------------------
// Congruence elimination.
//
// The terms are split into an enumerated set E and a solved set F such that
// no congruence mentions two F terms. For each assignment of E, every F
// coefficient is then pinned to an arithmetic progression by CRT over the
// congruences it appears in.

struct Progression {
  Integer start;
  Integer step;
};

struct SolvedVar {
  std::size_t var = 0;
  struct Part {
    std::size_t constraint;
    Integer g;        // gcd(coeff, Q)
    Integer modulus;  // Q / g
    Integer inverse;  // (coeff/g)⁻¹ mod Q/g
    Integer crt;      // CRT basis element for this modulus
  };
  std::vector<Part> parts;
  Integer modulus = 1;
};

class CongruenceEngine {
 public:
  CongruenceEngine(const Decomposition& d, ResidueSystem sys) : d_(d), sys_(std::move(sys)) {
    partition_terms();
    plan_solved();
  }

  const std::vector<std::size_t>& enumerated() const { return enumerated_; }

  Integer enumeration_size() const {
    Integer size = 1;
    for (std::size_t i : enumerated_) size *= d_.terms[i].num + 1;
    return size;
  }

  /// Calls visit(x, progressions) for every assignment of the enumerated
  /// terms whose congruences admit a solution for every solved term. x holds
  /// the enumerated coefficients; solved slots are left at zero.
  template <typename Visit>
  std::uint64_t run(Visit&& visit) {
    const std::size_t t = d_.terms.size();
    std::vector<Integer> x(t, 0);
    std::vector<Integer> residue(sys_.constraints.size(), 0);
    std::vector<Progression> prog(solved_.size());
    std::uint64_t combos = 0;
    while (true) {
      ++combos;
      if (evaluate(residue, prog)) visit(x, prog);
      // Odometer over enumerated terms, last index fastest.
      std::size_t k = enumerated_.size();
      while (k > 0) {
        --k;
        const std::size_t var = enumerated_[k];
        if (x[var] < d_.terms[var].num) {
          ++x[var];
          for (const auto& u : updates_[k]) add_mod(residue[u.constraint], u.coeff, u.modulus);
          break;
        }
        x[var] = 0;
        for (const auto& u : updates_[k]) sub_mod(residue[u.constraint], u.wrap, u.modulus);
        if (k == 0) return combos;
      }
      if (enumerated_.empty()) return combos;
    }
  }

  const std::vector<SolvedVar>& solved() const { return solved_; }

 private:
  struct UpdateView {
    std::size_t constraint;
    Integer coeff;
    Integer wrap;  // a·coeff mod Q
    Integer modulus;
  };

  static void add_mod(Integer& r, const Integer& c, const Integer& m) {
    r += c;
    if (r >= m) r -= m;
  }
  static void sub_mod(Integer& r, const Integer& c, const Integer& m) {
    r -= c;
    if (r < 0) r += m;
  }

  void partition_terms() {
    const std::size_t t = d_.terms.size();
    std::vector<std::vector<std::size_t>> neighbours(t);
    for (const Constraint& c : sys_.constraints) {
      for (std::size_t a = 0; a < c.entries.size(); ++a) {
        for (std::size_t b = a + 1; b < c.entries.size(); ++b) {
          neighbours[c.entries[a].var].push_back(c.entries[b].var);
          neighbours[c.entries[b].var].push_back(c.entries[a].var);
        }
      }
    }
    // Greedy independent set: largest numerator first, then fewest
    // conflicts, then index. The max-numerator term is always solved.
    std::vector<std::size_t> order(t);
    for (std::size_t i = 0; i < t; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (d_.terms[a].num != d_.terms[b].num) return d_.terms[a].num > d_.terms[b].num;
      if (neighbours[a].size() != neighbours[b].size()) return neighbours[a].size() < neighbours[b].size();
      return a < b;
    });
    is_solved_.assign(t, false);
    std::vector<bool> blocked(t, false);
    for (std::size_t i : order) {
      if (blocked[i]) continue;
      is_solved_[i] = true;
      for (std::size_t nb : neighbours[i]) blocked[nb] = true;
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (!is_solved_[i]) enumerated_.push_back(i);
    }
    std::vector<std::size_t> position(t, 0);
    for (std::size_t k = 0; k < enumerated_.size(); ++k) position[enumerated_[k]] = k;
    updates_.resize(enumerated_.size());
    for (std::size_t j = 0; j < sys_.constraints.size(); ++j) {
      const Constraint& c = sys_.constraints[j];
      bool has_solved = false;
      for (const Entry& e : c.entries) {
        if (is_solved_[e.var]) {
          has_solved = true;
          continue;
        }
        updates_[position[e.var]].push_back(
            {j, e.coeff, mod(d_.terms[e.var].num * e.coeff, c.modulus), c.modulus});
      }
      if (!has_solved) closed_.push_back(j);
    }
  }

  void plan_solved() {
    const std::size_t t = d_.terms.size();
    std::vector<std::size_t> slot(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
      if (!is_solved_[i]) continue;
      slot[i] = solved_.size();
      solved_.push_back({});
      solved_.back().var = i;
    }
    for (std::size_t j = 0; j < sys_.constraints.size(); ++j) {
      const Constraint& c = sys_.constraints[j];
      for (const Entry& e : c.entries) {
        if (!is_solved_[e.var]) continue;
        SolvedVar::Part part;
        part.constraint = j;
        part.g = gcd(e.coeff, c.modulus);
        part.modulus = exact_div(c.modulus, part.g);
        part.inverse = part.modulus > 1 ? mod_inverse(exact_div(e.coeff, part.g), part.modulus) : Integer(0);
        solved_[slot[e.var]].parts.push_back(std::move(part));
      }
    }
    for (SolvedVar& s : solved_) {
      for (const auto& p : s.parts) s.modulus *= p.modulus;
      for (auto& p : s.parts) {
        if (p.modulus == 1) {
          p.crt = 0;
          continue;
        }
        Integer rest = exact_div(s.modulus, p.modulus);
        p.crt = rest * mod_inverse(mod(rest, p.modulus), p.modulus);
      }
    }
  }

  bool evaluate(const std::vector<Integer>& residue, std::vector<Progression>& prog) const {
    for (std::size_t j : closed_) {
      if (residue[j] != 0) return false;
    }
    for (std::size_t s = 0; s < solved_.size(); ++s) {
      const SolvedVar& sv = solved_[s];
      Integer acc = 0;
      for (const auto& p : sv.parts) {
        const Integer& q = sys_.constraints[p.constraint].modulus;
        // x·coeff ≡ −residue (mod Q)
        Integer rhs = residue[p.constraint] == 0 ? Integer(0) : Integer(q - residue[p.constraint]);
        if (!mpz_divisible_p(rhs.get_mpz_t(), p.g.get_mpz_t())) return false;
        if (p.modulus == 1) continue;
        acc += mod(exact_div(rhs, p.g) * p.inverse, p.modulus) * p.crt;
      }
      prog[s].start = sv.modulus == 1 ? Integer(0) : mod(acc, sv.modulus);
      prog[s].step = sv.modulus;
      if (prog[s].start > d_.terms[sv.var].num) return false;
    }
    return true;
  }

  const Decomposition& d_;
  ResidueSystem sys_;
  std::vector<bool> is_solved_;
  std::vector<std::size_t> enumerated_;
  std::vector<std::vector<UpdateView>> updates_;
  std::vector<std::size_t> closed_;
  std::vector<SolvedVar> solved_;
};

// Lexicographic successor inside the product of progressions (enumerated
// slots fixed).
bool advance(const Decomposition& d, const std::vector<SolvedVar>& solved, const std::vector<Progression>& prog,
             std::vector<Integer>& x) {
  for (std::size_t s = solved.size(); s-- > 0;) {
    const std::size_t var = solved[s].var;
    if (x[var] + prog[s].step <= d.terms[var].num) {
      x[var] += prog[s].step;
      for (std::size_t r = s + 1; r < solved.size(); ++r) x[solved[r].var] = prog[r].start;
      return true;
    }
  }
  return false;
}

void fill_starts(const std::vector<SolvedVar>& solved, const std::vector<Progression>& prog,
                 std::vector<Integer>& x) {
  for (std::size_t s = 0; s < solved.size(); ++s) x[solved[s].var] = prog[s].start;
}

FaithfulnessReport verify_congruence(const Decomposition& d, CongruenceEngine& engine) {
  FaithfulnessReport report;
  report.method = VerifyMethod::congruence;
  std::optional<std::vector<Integer>> best;
  report.combos_examined = engine.run([&](const std::vector<Integer>& fixed, const std::vector<Progression>& prog) {
    std::vector<Integer> x = fixed;
    fill_starts(engine.solved(), prog, x);
    // The two excluded vectors (zero and full) can each cost one step.
    for (int attempt = 0; attempt < 3; ++attempt) {
      if (!all_zero(x) && !is_full(d, x)) {
        if (!best || x < *best) best = x;
        return;
      }
      if (!advance(d, engine.solved(), prog, x)) return;
    }
  });
  if (best) {
    report.faithful = false;
    report.violation = FaithfulnessViolation{*best, value_of(d, *best)};
  }
  return report;
}

// ---------------------------------------------------------------------------
// Meet in the middle over a single residue modulo D. Suffix vectors are
// tabulated by residue (two lexicographically smallest per class, since at
// most one is excluded for any prefix); prefixes are scanned in order, so the
// first hit is the global minimum.

struct Split {
  std::size_t at = 0;
  Integer cost;
};

Split best_split(const Decomposition& d) {
  const std::size_t t = d.terms.size();
  std::vector<Integer> prefix(t + 1, 1);
  for (std::size_t i = 0; i < t; ++i) prefix[i + 1] = prefix[i] * (d.terms[i].num + 1);
  Split best{0, prefix[t] + 1};
  for (std::size_t h = 0; h <= t; ++h) {
    Integer cost = prefix[h] + exact_div(prefix[t], prefix[h]);
    if (cost < best.cost) best = {h, cost};
  }
  return best;
}

class MixedRadix {
 public:
  MixedRadix(const Decomposition& d, std::size_t begin, std::size_t end) : d_(d), begin_(begin), end_(end) {}

  std::vector<Integer> decode(std::uint64_t rank) const {
    std::vector<Integer> out(end_ - begin_);
    for (std::size_t i = end_; i-- > begin_;) {
      const std::uint64_t radix = d_.terms[i].num.get_ui() + 1;
      out[i - begin_] = static_cast<unsigned long>(rank % radix);
      rank /= radix;
    }
    return out;
  }

 private:
  const Decomposition& d_;
  std::size_t begin_;
  std::size_t end_;
};

FaithfulnessReport verify_meet_in_middle(const Decomposition& d, const ResidueSystem& sys, std::size_t split) {
  FaithfulnessReport report;
  report.method = VerifyMethod::meet_in_middle;
  const std::size_t t = d.terms.size();
  const Integer& modulus = sys.lcm;
  std::vector<Integer> coeff(t);
  for (std::size_t i = 0; i < t; ++i) {
    coeff[i] = mod(sys.reduced_num[i] * exact_div(modulus, sys.reduced_den[i]), modulus);
  }

  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<Integer, std::pair<std::uint64_t, std::uint64_t>, IntegerHash> table;

  // Lexicographic walk of terms [begin, end) with a running residue.
  auto walk = [&](std::size_t begin, std::size_t end, auto&& visit) {
    std::vector<Integer> x(end - begin, 0);
    Integer r = 0;
    std::uint64_t rank = 0;
    while (true) {
      ++report.combos_examined;
      if (!visit(x, r, rank)) return;
      ++rank;
      std::size_t k = end - begin;
      while (true) {
        if (k == 0) return;
        --k;
        const std::size_t i = begin + k;
        if (x[k] < d.terms[i].num) {
          ++x[k];
          r = mod(r + coeff[i], modulus);
          break;
        }
        r = mod(r - d.terms[i].num * coeff[i], modulus);
        x[k] = 0;
      }
    }
  };

  walk(split, t, [&](const std::vector<Integer>&, const Integer& r, std::uint64_t rank) {
    auto [it, inserted] = table.try_emplace(r, rank, kNone);
    if (!inserted && it->second.second == kNone) it->second.second = rank;
    return true;
  });

  const MixedRadix suffix_radix(d, split, t);
  const std::uint64_t suffix_zero = 0;
  // The full suffix is the last rank.
  std::uint64_t suffix_full = 0;
  {
    std::uint64_t size = 1;
    for (std::size_t i = split; i < t; ++i) size *= d.terms[i].num.get_ui() + 1;
    suffix_full = size - 1;
  }
  std::optional<std::vector<Integer>> found;
  walk(0, split, [&](const std::vector<Integer>& x, const Integer& r, std::uint64_t) {
    const Integer need = r == 0 ? Integer(0) : Integer(modulus - r);
    auto it = table.find(need);
    if (it == table.end()) return true;
    bool prefix_zero = all_zero(x);
    bool prefix_full = true;
    for (std::size_t i = 0; i < split; ++i) prefix_full = prefix_full && x[i] == d.terms[i].num;
    for (std::uint64_t rank : {it->second.first, it->second.second}) {
      if (rank == kNone) continue;
      if (prefix_zero && rank == suffix_zero) continue;
      if (prefix_full && rank == suffix_full) continue;
      std::vector<Integer> full = x;
      auto tail = suffix_radix.decode(rank);
      full.insert(full.end(), tail.begin(), tail.end());
      found = std::move(full);
      return false;
    }
    return true;
  });
  if (found) {
    report.faithful = false;
    report.violation = FaithfulnessViolation{*found, value_of(d, *found)};
  }
  return report;
}

// The engines below report the lexicographically smallest violation. The
// public order is colex (x_1 varies fastest), which is lex order on the
// reversed term list.
Decomposition reversed(const Decomposition& d) {
  return Decomposition{d.target, std::vector<Term>(d.terms.rbegin(), d.terms.rend())};
}

FaithfulnessReport unreversed(FaithfulnessReport r) {
  if (r.violation) std::reverse(r.violation->coefficients.begin(), r.violation->coefficients.end());
  return r;
}

FaithfulnessReport naive_lex(const Decomposition& d, const VerifyOptions& options) {
  check_cap(lattice_size(d), options.cap, "naive faithfulness oracle (too large for naive oracle)");
  FaithfulnessReport report;
  report.method = VerifyMethod::naive;
  const std::size_t t = d.terms.size();
  const Integer n = d.n();
  std::vector<Integer> x(t, 0);
  Rational v;
  while (true) {
    ++report.combos_examined;
    if (!v.is_zero() && v != d.target && in_ideal(v, n)) {
      report.faithful = false;
      report.violation = FaithfulnessViolation{x, v};
      return report;
    }
    std::size_t k = t;
    while (true) {
      if (k == 0) return report;
      --k;
      if (x[k] < d.terms[k].num) {
        ++x[k];
        v += Rational(1, d.terms[k].den);
        break;
      }
      v -= Rational(d.terms[k].num, d.terms[k].den);
      x[k] = 0;
    }
  }
}

FaithfulnessReport fast_lex(const Decomposition& d, const VerifyOptions& options) {
  ResidueSystem sys = build_system(d);
  CongruenceEngine engine(d, sys);
  const Integer congruence_cost = engine.enumeration_size();

  VerifyMethod method = VerifyMethod::congruence;
  Split split;
  if (options.method) {
    method = *options.method;
    if (method == VerifyMethod::meet_in_middle) split = best_split(d);
  } else if (engine.enumerated().size() > options.mitm_threshold) {
    split = best_split(d);
    if (split.cost < congruence_cost) method = VerifyMethod::meet_in_middle;
  }
  if (method == VerifyMethod::meet_in_middle) {
    check_cap(split.cost, options.cap, "meet-in-the-middle verification");
    return verify_meet_in_middle(d, sys, split.at);
  }
  check_cap(congruence_cost, options.cap, "congruence verification");
  return verify_congruence(d, engine);
}

}  // namespace

FaithfulnessReport verify_naive(const Decomposition& d, const VerifyOptions& options) {
  require_valid(d, "verify_naive");
  return unreversed(naive_lex(reversed(d), options));
}

FaithfulnessReport verify(const Decomposition& d, const VerifyOptions& options) {
  require_valid(d, "verify");
  if (options.method == VerifyMethod::naive) return verify_naive(d, options);
  return unreversed(fast_lex(reversed(d), options));
}

std::set<Rational> partial_sums_in_ideal(const Decomposition& d, const VerifyOptions& options) {
  require_positive_terms(d, "partial_sums_in_ideal");
  CongruenceEngine engine(d, build_system(d));
  check_cap(engine.enumeration_size(), options.cap, "partial sum enumeration");
  std::set<Rational> values;
  std::uint64_t produced = 0;
  engine.run([&](const std::vector<Integer>& fixed, const std::vector<Progression>& prog) {
    std::vector<Integer> x = fixed;
    fill_starts(engine.solved(), prog, x);
    do {
      if (++produced > options.cap) {
        throw CapExceededError("partial sum enumeration exceeded cap of " + std::to_string(options.cap));
      }
      values.insert(value_of(d, x));
    } while (advance(d, engine.solved(), prog, x));
  });
  return values;
}

}  // namespace faithful
