#include "permlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "permlab/basis.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/machines.hpp"
#include "permlab/patterns.hpp"
#include "permlab/rsk.hpp"
#include "permlab/series.hpp"
#include "permlab/symmetric_group.hpp"

namespace permlab {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects counterexamples for a sweep: how many, and the first few.
class Mismatches {
public:
  void add(const std::string& what) {
    if (examples_.size() < 5) examples_.push_back(what);
    ++count_;
  }
  void merge(const Mismatches& other) {
    for (const auto& e : other.examples_) {
      if (examples_.size() < 5) examples_.push_back(e);
    }
    count_ += other.count_;
  }
  Outcome outcome(const std::string& ok_detail) const {
    if (count_ == 0) return {true, ok_detail};
    std::string d = std::to_string(count_) + " mismatches, e.g.";
    for (const auto& e : examples_) d += " " + e;
    return {false, d};
  }

private:
  std::size_t count_ = 0;
  std::vector<std::string> examples_;
};

template <class Check>
Outcome sweep(unsigned nmax, unsigned jobs, Check check) {
  Mismatches all;
  for (unsigned n = 0; n <= nmax; ++n) {
    auto part = reduce_permutations<Mismatches>(
        n, jobs, {}, [&](Mismatches& m, const Permutation& p) { check(m, p); },
        [](Mismatches& a, const Mismatches& b) { a.merge(b); });
    all.merge(part);
  }
  return all.outcome("exhaustive n <= " + std::to_string(nmax));
}

const std::vector<Permutation> kB231{patterns::p231};
const std::vector<Permutation> kB321{patterns::p321};

struct Check {
  std::string suite;
  std::string name;
  std::function<Outcome(const VerifyOptions&)> run;
};

std::vector<Check> perm_core_checks() {
  std::vector<Check> c;
  c.push_back({"perm-core", "t=0 membership is plain avoidance", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   for (const auto* b : {&kB231, &kB321}) {
                     if (is_member_plus_t(p, *b, 0) != !contains(p, b->front())) m.add(p.to_string());
                   }
                 });
               }});
  c.push_back({"perm-core", "structural Av(321)+1 test = deletion membership", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (is_member_321p1_structural(p) != is_member_plus_t(p, kB321, 1)) m.add(p.to_string());
                 });
               }});
  c.push_back({"perm-core", "C^{+t} is closed under single deletions", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   for (const auto* b : {&kB231, &kB321}) {
                     if (!is_member_plus_t(p, *b, 1)) continue;
                     for (std::size_t i = 1; i <= p.size(); ++i) {
                       if (!is_member_plus_t(delete_entry(p, i), *b, 1)) m.add(p.to_string());
                     }
                   }
                 });
               }});
  c.push_back({"perm-core", "membership is monotone in t", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 7u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   for (const auto* b : {&kB231, &kB321}) {
                     for (unsigned t = 0; t < 3; ++t) {
                       if (is_member_plus_t(p, *b, t) && !is_member_plus_t(p, *b, t + 1)) m.add(p.to_string());
                     }
                   }
                 });
               }});
  c.push_back({"perm-core", "essential entries are minimum in all or no 231s", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (!contains(p, patterns::p231)) return;
                   for (auto pos : essential_positions(p)) {
                     const auto mp = minimum_participation_231(p, pos);
                     if (mp.as_minimum != 0 && mp.as_minimum != mp.total) m.add(p.to_string());
                   }
                 });
               }});
  c.push_back({"perm-core", "Av(321^{<=1}) is strictly inside Av(321)+1", [](const VerifyOptions& o) {
                 const unsigned top = std::min(o.nmax, 8u);
                 auto out = sweep(top, o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (count_occurrences(p, patterns::p321) <= 1 && !is_member_plus_t(p, kB321, 1)) {
                     m.add(p.to_string());
                   }
                 });
                 std::string witness;
                 for (unsigned n = 0; n <= std::min(top, 5u) && witness.empty(); ++n) {
                   for_each_permutation(n, [&](const Permutation& p) {
                     if (witness.empty() && count_occurrences(p, patterns::p321) >= 2 &&
                         is_member_plus_t(p, kB321, 1)) {
                       witness = p.to_string();
                     }
                   });
                 }
                 if (witness.empty()) return Outcome{false, "no strictness witness with n <= 5"};
                 if (out.passed) out.detail += "; strict, witness " + witness;
                 return out;
               }});
  c.push_back({"perm-core", "deletion never creates an occurrence", [](const VerifyOptions& o) {
                 std::vector<Permutation> small;
                 for (unsigned k = 1; k <= 3; ++k) for_each_permutation(k, [&](const Permutation& p) { small.push_back(p); });
                 return sweep(std::min(o.nmax, 7u), o.jobs, [&](Mismatches& m, const Permutation& p) {
                   for (std::size_t i = 1; i <= p.size(); ++i) {
                     const auto d = delete_entry(p, i);
                     for (const auto& s : small) {
                       if (contains(d, s) && !contains(p, s)) m.add(p.to_string());
                     }
                   }
                 });
               }});
  return c;
}

std::vector<Check> rsk_checks() {
  std::vector<Check> c;
  c.push_back({"rsk", "P and Q are standard of equal shape", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   const auto tp = rsk(p);
                   if (!tp.insertion.is_standard() || !tp.recording.is_standard() ||
                       tp.insertion.shape() != tp.recording.shape()) {
                     m.add(p.to_string());
                   }
                 });
               }});
  c.push_back({"rsk", "sum of (f^lambda)^2 over lambda |- n is n!", [](const VerifyOptions& o) {
                 Mismatches m;
                 for (unsigned n = 0; n <= std::min(o.nmax, 8u); ++n) {
                   Integer total = 0;
                   for (const auto& l : partitions_of(static_cast<int>(n))) {
                     const Integer f = enumerate_syt(l).size();
                     total += f * f;
                   }
                   if (total != factorial(n)) m.add("n=" + std::to_string(n));
                 }
                 return m.outcome("n <= " + std::to_string(std::min(o.nmax, 8u)));
               }});
  c.push_back({"rsk", "rows of the shape = longest decreasing", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (shape(p).rows() != longest_decreasing(p)) m.add(p.to_string());
                 });
               }});
  c.push_back({"rsk", "longest k..21-avoider = lambda_1 + ... + lambda_{k-1}", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   const auto lambda = shape(p);
                   for (unsigned k = 2; k <= 4; ++k) {
                     std::size_t sum = 0;
                     for (unsigned r = 0; r + 1 < k; ++r) sum += static_cast<std::size_t>(lambda.part(r));
                     if (longest_k21_avoiding(p, k) != sum) m.add(p.to_string() + "@k=" + std::to_string(k));
                   }
                 });
               }});
  c.push_back({"rsk", "shape (k),(k,l),(k,l,1) <=> Av(321)+1 membership", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (shape_membership_321p1(p) != is_member_plus_t(p, kB321, 1)) m.add(p.to_string());
                 });
               }});
  return c;
}

std::vector<Check> enumeration_checks() {
  std::vector<Check> c;
  c.push_back({"enumeration", "closed form = brute force for Av(321)+1", [](const VerifyOptions& o) {
                 Mismatches m;
                 const unsigned top = std::min(o.nmax, kBruteforceCap);
                 for (unsigned n = 0; n <= top; ++n) {
                   if (count_321p1_formula(n) != count_bruteforce(n, kB321, 1, o.jobs)) m.add("n=" + std::to_string(n));
                 }
                 return m.outcome("n <= " + std::to_string(top));
               }});
  c.push_back({"enumeration", "hook length formula = SYT enumeration", [](const VerifyOptions& o) {
                 Mismatches m;
                 const int top = static_cast<int>(std::min(o.nmax, 10u));
                 for (int w = 0; w <= top; ++w) {
                   for (const auto& l : partitions_of(w)) {
                     if (hook_length_count(l) != enumerate_syt(l).size()) m.add(l.to_string());
                     if (l.rows() == 3 && l.part(2) == 1 &&
                         hook_length_count_kl1(l.part(0), l.part(1)) != hook_length_count(l)) {
                       m.add(l.to_string() + "(closed form)");
                     }
                   }
                 }
                 return m.outcome("weight <= " + std::to_string(top));
               }});
  c.push_back({"enumeration", "brute force = sum over shapes of (f^lambda)^2", [](const VerifyOptions& o) {
                 Mismatches m;
                 const unsigned top = std::min(o.nmax, kBruteforceCap);
                 for (unsigned n = 0; n <= top; ++n) {
                   if (count_321p1_shape_sum(n) != count_bruteforce(n, kB321, 1, o.jobs)) m.add("n=" + std::to_string(n));
                 }
                 return m.outcome("n <= " + std::to_string(top));
               }});
  c.push_back({"enumeration", "structural counts = generating function terms", [](const VerifyOptions& o) {
                 Mismatches m;
                 const unsigned top = std::min(o.nmax, kStructuralCap);
                 for (auto id : kAllStructuralPredicates) {
                   const auto gf = structural_gf(id, top);
                   for (unsigned n = 0; n <= top; ++n) {
                     if (Rational(count_structural(n, id, o.jobs)) != gf[n]) {
                       m.add(std::string(to_string(id)) + "@n=" + std::to_string(n));
                     }
                   }
                 }
                 return m.outcome("7 predicates, n <= " + std::to_string(top));
               }});
  c.push_back({"enumeration", "Av(231)+1 = Av(231) + the four structural terms, disjointly", [](const VerifyOptions& o) {
                 using Id = StructuralPredicateId;
                 return sweep(std::min(o.nmax, kStructuralCap), o.jobs, [](Mismatches& m, const Permutation& p) {
                   int hits = !contains(p, patterns::p231);
                   for (auto id : {Id::NoGreatestIn231, Id::EssentialGreatest, Id::SmallEssentialCase, Id::LargeEssentialCase}) {
                     hits += structural_predicate(p, id);
                   }
                   if (hits != (is_member_plus_t(p, kB231, 1) ? 1 : 0)) m.add(p.to_string());
                 });
               }});
  c.push_back({"enumeration", "|Av_n(321)+1| < |Av_n(231)+1| for n >= 4", [](const VerifyOptions& o) {
                 Mismatches m;
                 const auto f = expand_algebraic(gf_231p1(), 10);
                 for (unsigned n = 4; n <= 10; ++n) {
                   if (!(Rational(count_321p1_formula(n)) < f[n])) m.add("formula@n=" + std::to_string(n));
                 }
                 const unsigned top = std::min(o.nmax, kBruteforceCap);
                 for (unsigned n = 4; n <= top; ++n) {
                   if (count_bruteforce(n, kB321, 1, o.jobs) >= count_bruteforce(n, kB231, 1, o.jobs)) {
                     m.add("bruteforce@n=" + std::to_string(n));
                   }
                 }
                 return m.outcome("closed forms n in [4,10], brute force n <= " + std::to_string(top));
               }});
  return c;
}

std::vector<Check> series_checks() {
  std::vector<Check> c;
  c.push_back({"series", "s^2 = 1 - 4x and 2xc = 1 - s", [](const VerifyOptions& o) {
                 const auto s = sqrt_1m4x(o.order);
                 const auto c = catalan_gf(o.order);
                 const auto target = TruncatedSeries::from_polynomial({1, -4}, o.order);
                 const auto two_xc = c.shifted(1).truncated(o.order) * Rational(2);
                 const bool ok = s * s == target && two_xc == TruncatedSeries::constant(1, o.order) - s;
                 return Outcome{ok, "order " + std::to_string(o.order)};
               }});
  c.push_back({"series", "closed form for Av(231)+1 = functional equation = brute force", [](const VerifyOptions& o) {
                 Mismatches m;
                 const auto closed = expand_algebraic(gf_231p1(), o.order);
                 const auto solved = solve_functional_equation_231(o.order);
                 if (closed != solved) m.add("closed form != functional equation");
                 const unsigned top = std::min(o.nmax, 9u);
                 for (unsigned n = 0; n <= top; ++n) {
                   if (Rational(count_bruteforce(n, kB231, 1, o.jobs)) != closed[n]) m.add("n=" + std::to_string(n));
                 }
                 return m.outcome("order " + std::to_string(o.order) + ", brute force n <= " + std::to_string(top));
               }});
  c.push_back({"series", "conjectured GF for Av(321)+1 = closed-form sum", [](const VerifyOptions&) {
                 Mismatches m;
                 const auto g = expand_algebraic(gf_321p1_conjectured(), 25);
                 for (unsigned n = 0; n <= 25; ++n) {
                   if (Rational(count_321p1_formula(n)) != g[n]) m.add("n=" + std::to_string(n));
                 }
                 return m.outcome("n <= 25");
               }});
  c.push_back({"series", "both closed forms have non-negative integer coefficients", [](const VerifyOptions& o) {
                 Mismatches m;
                 for (const auto& g : {gf_231p1(), gf_321p1_conjectured()}) {
                   const auto s = expand_algebraic(g, o.order);
                   for (std::size_t n = 0; n <= s.order(); ++n) {
                     if (denominator(s[n]) != 1 || s[n] < 0) m.add(g.to_string() + "@n=" + std::to_string(n));
                   }
                 }
                 return m.outcome("order " + std::to_string(o.order));
               }});
  c.push_back({"series", "c + structural terms = f", [](const VerifyOptions& o) {
                 using Id = StructuralPredicateId;
                 auto sum = catalan_gf(o.order);
                 for (auto id : {Id::NoGreatestIn231, Id::EssentialGreatest, Id::SmallEssentialCase, Id::LargeEssentialCase}) {
                   sum += structural_gf(id, o.order);
                 }
                 const bool ok = sum == expand_algebraic(gf_231p1(), o.order);
                 return Outcome{ok, "order " + std::to_string(o.order)};
               }});
  return c;
}

std::vector<Check> basis_checks() {
  std::vector<Check> c;
  c.push_back({"basis", "basis of Av(321)+1: minimal, antichain, lengths <= 6, cuts out the class", [](const VerifyOptions& o) {
                 Mismatches m;
                 const auto res = compute_basis(kB321, 1, 7, o.jobs);
                 for (const auto& e : res.elements) {
                   if (is_member_plus_t(e, kB321, 1)) m.add(e.to_string() + "(member)");
                   for (std::size_t i = 1; i <= e.size(); ++i) {
                     if (!is_member_plus_t(delete_entry(e, i), kB321, 1)) m.add(e.to_string() + "(not minimal)");
                   }
                   if (e.size() > 6) m.add(e.to_string() + "(too long)");
                 }
                 if (!verify_antichain(res.elements)) m.add("not an antichain");
                 if (std::find(res.elements.begin(), res.elements.end(), patterns::p4321) == res.elements.end()) {
                   m.add("4321 missing");
                 }
                 auto cut = sweep(std::min(o.nmax, 8u), o.jobs, [&](Mismatches& mm, const Permutation& p) {
                   if (avoids_all(p, res.elements) != is_member_plus_t(p, kB321, 1)) mm.add(p.to_string());
                 });
                 if (!cut.passed) m.add("class mismatch: " + cut.detail);
                 return m.outcome(std::to_string(res.elements.size()) + " elements");
               }});
  c.push_back({"basis", "one-point extensions reach every minimal non-member", [](const VerifyOptions& o) {
                 Mismatches m;
                 const unsigned top = std::min(o.nmax, 7u);
                 std::vector<Permutation> members{Permutation{}};
                 for (unsigned n = 1; n <= top; ++n) {
                   const auto cand = one_point_extensions(members);
                   std::unordered_set<Permutation> member_set(members.begin(), members.end());
                   for_each_permutation(n, [&](const Permutation& p) {
                     bool all_deletions_in = true;
                     for (std::size_t i = 1; i <= n && all_deletions_in; ++i) all_deletions_in = member_set.count(delete_entry(p, i));
                     if (all_deletions_in && !std::binary_search(cand.begin(), cand.end(), p)) m.add(p.to_string());
                   });
                   members = collect_permutations(n, o.jobs, [](const Permutation& p) { return is_member_plus_t(p, kB321, 1); });
                 }
                 return m.outcome("Av(321)+1, n <= " + std::to_string(top));
               }});
  return c;
}

std::vector<Check> machine_checks() {
  std::vector<Check> c;
  c.push_back({"machines", "stack sorts exactly Av(231)", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (sortable(p, MachineKind::Stack, 0) == contains(p, patterns::p231)) m.add(p.to_string());
                 });
               }});
  c.push_back({"machines", "two parallel queues sort exactly Av(321)", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 8u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   if (sortable(p, MachineKind::TwoParallelQueues, 0) == contains(p, patterns::p321)) m.add(p.to_string());
                 });
               }});
  for (auto machine : {MachineKind::Stack, MachineKind::TwoParallelQueues}) {
    const auto& basis = machine == MachineKind::Stack ? kB231 : kB321;
    const std::string name = std::string(to_string(machine)) + " + t buffers sorts exactly Av(" +
                             basis.front().to_compact_string() + ")+t, t in {1,2}";
    c.push_back({"machines", name, [machine, &basis](const VerifyOptions& o) {
                   const unsigned top = std::min(o.nmax, 7u);
                   Outcome out;
                   std::string details;
                   for (unsigned t = 1; t <= 2; ++t) {
                     auto r = sweep(top, o.jobs, [&](Mismatches& m, const Permutation& p) {
                       if (sortable(p, machine, t) != is_member_plus_t(p, basis, t)) m.add(p.to_compact_string());
                     });
                     out.passed &= r.passed;
                     details += (t > 1 ? "; t=" : "t=") + std::to_string(t) + ": " + r.detail;
                   }
                   out.detail = details;
                   return out;
                 }});
  }
  c.push_back({"machines", "more buffers never hurt", [](const VerifyOptions& o) {
                 return sweep(std::min(o.nmax, 7u), o.jobs, [](Mismatches& m, const Permutation& p) {
                   for (auto machine : {MachineKind::Stack, MachineKind::TwoParallelQueues}) {
                     for (unsigned t = 0; t < 2; ++t) {
                       if (sortable(p, machine, t) && !sortable(p, machine, t + 1)) m.add(p.to_string());
                     }
                   }
                 });
               }});
  return c;
}

std::vector<Check> all_checks() {
  std::vector<Check> all;
  for (auto part : {perm_core_checks(), rsk_checks(), enumeration_checks(), series_checks(), basis_checks(), machine_checks()}) {
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

} // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites{"perm-core", "rsk", "enumeration", "series", "basis", "machines"};
  return suites;
}

std::vector<CheckResult> run_verification(std::string_view suite, const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result) {
  if (suite != "all" && std::find(verify_suites().begin(), verify_suites().end(), suite) == verify_suites().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckResult> results;
  for (const auto& check : all_checks()) {
    if (suite != "all" && check.suite != suite) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check.run(options);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    CheckResult r{check.suite, check.name, o.passed, o.detail,
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

} // namespace permlab
