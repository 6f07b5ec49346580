#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "permlab/basis.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/machines.hpp"
#include "permlab/patterns.hpp"
#include "permlab/rsk.hpp"
#include "permlab/series.hpp"
#include "permlab/verify.hpp"

namespace permlab::cli {

namespace {

using nlohmann::json;

// Verification failures are reported, not thrown, but a sub-handler may
// bail out with this to pick the exit code.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Integer& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const Rational& v) {
  if (denominator(v) == 1) return to_json(numerator(v));
  return to_string(v);
}

json to_json(const StandardTableau& t) { return t.rows; }

std::string join(const std::vector<Permutation>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + ps[i].to_compact_string();
  return s;
}

struct Common {
  std::string pattern;
  std::string basis;
  unsigned t = 1;
  unsigned jobs = 0;
  std::string format = "json";

  std::vector<Permutation> class_basis() const {
    if (!basis.empty() && !pattern.empty()) throw UsageError("give either --pattern or --basis, not both");
    if (!basis.empty()) return parse_permutation_list(basis);
    if (!pattern.empty()) return {parse_permutation(pattern)};
    throw UsageError("a class is required: --pattern or --basis");
  }
};

bool is_single(const std::vector<Permutation>& b, const Permutation& p) { return b.size() == 1 && b.front() == p; }

class Driver {
public:
  Driver(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void emit(json j) { out_ << j.dump() << '\n'; }
  std::ostream& text() { return err_; }
  std::ostream& raw() { return out_; }

  int status = kOk;

private:
  std::ostream& out_;
  std::ostream& err_;
};

// ---------------------------------------------------------------------------

std::vector<Integer> count_table(const std::vector<Permutation>& basis, unsigned t, unsigned nmax,
                                 const std::string& method, unsigned jobs, unsigned cap,
                                 const std::optional<StructuralPredicateId>& structural, std::size_t order) {
  std::vector<Integer> out;
  const bool b231 = is_single(basis, patterns::p231);
  const bool b321 = is_single(basis, patterns::p321);
  const auto from_series = [&](const TruncatedSeries& s) {
    for (unsigned n = 0; n <= nmax; ++n) out.push_back(numerator(s[n]));
  };

  if (structural) {
    if (!b231 || t != 1) throw UsageError("--structural counts refer to Av(231)+1 (--pattern 231 --t 1)");
    if (method == "bruteforce") {
      for (unsigned n = 0; n <= nmax; ++n) out.push_back(count_structural(n, *structural, jobs, cap));
    } else if (method == "gf") {
      from_series(structural_gf(*structural, std::max<std::size_t>(nmax, order)));
    } else {
      throw UsageError("--structural supports --method bruteforce or gf");
    }
    return out;
  }

  if (method == "bruteforce") {
    for (unsigned n = 0; n <= nmax; ++n) out.push_back(count_bruteforce(n, basis, t, jobs, cap));
  } else if (method == "formula") {
    if (t == 0 && (b231 || b321)) {
      for (unsigned n = 0; n <= nmax; ++n) out.push_back(catalan(n));
    } else if (t == 1 && b321) {
      for (unsigned n = 0; n <= nmax; ++n) out.push_back(count_321p1_formula(n));
    } else {
      throw UsageError("no closed formula for this class; formulas exist for Av(231), Av(321), Av(321)+1");
    }
  } else if (method == "gf") {
    if (t == 0 && (b231 || b321)) from_series(catalan_gf(nmax));
    else if (t == 1 && b231) from_series(expand_algebraic(gf_231p1(), nmax));
    else if (t == 1 && b321) from_series(expand_algebraic(gf_321p1_conjectured(), nmax));
    else throw UsageError("no generating function for this class; try --method bruteforce");
  } else if (method == "functional-eq") {
    if (!(t == 1 && b231)) throw UsageError("the functional equation describes Av(231)+1 only");
    from_series(solve_functional_equation_231(nmax));
  } else {
    throw UsageError("unknown method '" + method + "'");
  }
  return out;
}

TruncatedSeries named_series(const std::string& name, std::size_t order) {
  if (name == "catalan") return catalan_gf(order);
  if (name == "sqrt") return sqrt_1m4x(order);
  if (name == "av231p1") return expand_algebraic(gf_231p1(), order);
  if (name == "av321p1") return expand_algebraic(gf_321p1_conjectured(), order);
  if (name == "functional-eq") return solve_functional_equation_231(order);
  if (name.rfind("structural:", 0) == 0) {
    const auto id = parse_structural_predicate(name.substr(11));
    if (!id) throw UsageError("unknown structural predicate '" + name.substr(11) + "'");
    return structural_gf(*id, order);
  }
  throw UsageError("unknown series '" + name + "'");
}

void write_fixture(const std::string& dir, const std::string& file, const std::string& contents, Driver& d) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / file;
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << contents;
  d.text() << "wrote " << path.string() << "\n";
}

std::string class_tag(const std::vector<Permutation>& basis, unsigned t) {
  std::string tag = "av";
  for (const auto& b : basis) tag += "_" + b.to_compact_string();
  return tag + "_t" + std::to_string(t);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"perm: permutation pattern laboratory for almost-avoidance classes"};
  app.require_subcommand(1);
  Driver d(out, err);
  Common common;

  const auto add_class = [&](CLI::App* sub) {
    sub->add_option("--pattern", common.pattern, "single pattern defining C = Av(pattern)");
    sub->add_option("--basis", common.basis, "comma-separated patterns (use ';' between long forms)");
    sub->add_option("--t", common.t, "number of allowed deletions / buffers")->capture_default_str();
  };
  const auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", common.jobs, "worker threads (0 = all cores)")->capture_default_str();
  };

  // contains / occurrences
  std::string host, perm_text;
  auto* contains_cmd = app.add_subcommand("contains", "does --host contain --pattern");
  contains_cmd->add_option("--host", host)->required();
  contains_cmd->add_option("--pattern", common.pattern)->required();
  contains_cmd->callback([&] {
    const auto h = parse_permutation(host);
    const auto p = parse_permutation(common.pattern);
    const bool r = contains(h, p);
    d.emit({{"command", "contains"}, {"host", h.to_string()}, {"pattern", p.to_string()}, {"result", r}});
    d.text() << h << (r ? " contains " : " avoids ") << p << "\n";
  });

  auto* occ_cmd = app.add_subcommand("occurrences", "list occurrences of --pattern in --host");
  occ_cmd->add_option("--host", host)->required();
  occ_cmd->add_option("--pattern", common.pattern)->required();
  occ_cmd->callback([&] {
    const auto h = parse_permutation(host);
    const auto p = parse_permutation(common.pattern);
    json list = json::array();
    for (const auto& o : occurrences(h, p)) list.push_back(o.indices);
    d.emit({{"command", "occurrences"}, {"host", h.to_string()}, {"pattern", p.to_string()},
            {"count", list.size()}, {"occurrences", list}});
    d.text() << list.size() << " occurrence(s)\n";
  });

  // member
  std::string member_method = "deletion";
  auto* member_cmd = app.add_subcommand("member", "is --perm in Av(basis)^{+t}");
  member_cmd->add_option("--perm", perm_text)->required();
  add_class(member_cmd);
  member_cmd->add_option("--method", member_method, "deletion | structural | shape (the last two for 321, t=1)")
      ->capture_default_str();
  member_cmd->callback([&] {
    const auto p = parse_permutation(perm_text);
    const auto basis = common.class_basis();
    bool r = false;
    if (member_method == "deletion") {
      r = is_member_plus_t(p, basis, common.t);
    } else if (member_method == "structural" || member_method == "shape") {
      if (!is_single(basis, patterns::p321) || common.t != 1) {
        throw UsageError("--method " + member_method + " applies to Av(321)+1 only");
      }
      r = member_method == "structural" ? is_member_321p1_structural(p) : shape_membership_321p1(p);
    } else {
      throw UsageError("unknown membership method '" + member_method + "'");
    }
    d.emit({{"command", "member"}, {"perm", p.to_string()}, {"basis", join(basis)}, {"t", common.t},
            {"method", member_method}, {"result", r}});
    d.text() << p << (r ? " is" : " is not") << " in Av(" << join(basis) << ")+" << common.t << "\n";
  });

  // essential
  auto* essential_cmd = app.add_subcommand("essential", "essential entries (w.r.t. 231) of --perm");
  essential_cmd->add_option("--perm", perm_text)->required();
  essential_cmd->callback([&] {
    const auto p = parse_permutation(perm_text);
    const auto ess = essential_positions(p);
    json classes = json::object();
    const bool has231 = contains(p, patterns::p231);
    if (has231) {
      for (auto pos : ess) classes[std::to_string(pos)] = to_string(classify_essential(p, pos));
    }
    d.emit({{"command", "essential"}, {"perm", p.to_string()}, {"positions", ess},
            {"contains_231", has231}, {"classes", classes}});
    d.text() << ess.size() << " essential entr" << (ess.size() == 1 ? "y" : "ies") << "\n";
  });

  // rsk
  auto* rsk_cmd = app.add_subcommand("rsk", "Robinson-Schensted tableaux of --perm");
  rsk_cmd->add_option("--perm", perm_text)->required();
  rsk_cmd->callback([&] {
    const auto p = parse_permutation(perm_text);
    const auto tp = rsk(p);
    const auto lambda = tp.insertion.shape();
    d.emit({{"command", "rsk"}, {"perm", p.to_string()}, {"shape", lambda.parts()},
            {"P", to_json(tp.insertion)}, {"Q", to_json(tp.recording)},
            {"longest_decreasing", longest_decreasing(p)}, {"in_av321p1", shape_membership_321p1(lambda)}});
    d.text() << "shape " << lambda.to_string() << "\nP:\n" << format_tableau(tp.insertion) << "Q:\n"
             << format_tableau(tp.recording);
  });

  // count
  std::optional<unsigned> count_n, count_nmax;
  std::string method = "bruteforce", structural_name, fixtures_dir;
  unsigned cap = 0;
  std::size_t order = kDefaultSeriesOrder;
  auto* count_cmd = app.add_subcommand("count", "count a class by formula, generating function or brute force");
  add_class(count_cmd);
  add_jobs(count_cmd);
  count_cmd->add_option("--n", count_n, "single length");
  count_cmd->add_option("--nmax", count_nmax, "table for lengths 0..nmax");
  count_cmd->add_option("--method", method, "formula | gf | bruteforce | functional-eq")->capture_default_str();
  count_cmd->add_option("--structural", structural_name, "count a structural subset of Av(231)+1 instead");
  count_cmd->add_option("--cap", cap, "brute-force cap (default 10, or 9 for --structural)");
  count_cmd->add_option("--format", common.format, "json | csv | bfile | text")->capture_default_str();
  count_cmd->add_option("--seed-fixtures", fixtures_dir, "also write the table as CSV into this directory");
  count_cmd->callback([&] {
    if (count_n.has_value() == count_nmax.has_value()) throw UsageError("give exactly one of --n or --nmax");
    const auto basis = common.class_basis();
    std::optional<StructuralPredicateId> structural;
    if (!structural_name.empty()) {
      structural = parse_structural_predicate(structural_name);
      if (!structural) throw UsageError("unknown structural predicate '" + structural_name + "'");
    }
    const unsigned top = count_n ? *count_n : *count_nmax;
    const unsigned effective_cap = cap ? cap : (structural ? kStructuralCap : kBruteforceCap);
    std::vector<Integer> table;
    if (count_n && method == "bruteforce") {
      // Only the requested length, not the whole table.
      const Integer v = structural ? Integer(count_structural(top, *structural, common.jobs, effective_cap))
                                   : Integer(count_bruteforce(top, basis, common.t, common.jobs, effective_cap));
      table.assign(top + 1, Integer(0));
      table[top] = v;
    } else {
      table = count_table(basis, common.t, top, method, common.jobs, effective_cap, structural, order);
    }
    CountTable ct{structural ? std::string(to_string(*structural)) : class_tag(basis, common.t), common.t, table};

    if (count_n) {
      d.emit({{"command", "count"}, {"class", ct.class_id}, {"t", common.t}, {"method", method}, {"n", top},
              {"count", to_json(table[top])}});
      if (common.format == "text") d.raw() << table[top] << "\n";
      d.text() << "|" << ct.class_id << " at n=" << top << "| = " << table[top] << "\n";
    } else {
      if (common.format == "json") {
        json counts = json::array();
        for (const auto& v : table) counts.push_back(to_json(v));
        d.emit({{"command", "count"}, {"class", ct.class_id}, {"t", common.t}, {"method", method}, {"counts", counts}});
      } else if (common.format == "csv") {
        d.raw() << ct.to_csv();
      } else if (common.format == "bfile") {
        d.raw() << ct.to_bfile();
      } else if (common.format == "text") {
        for (std::size_t n = 0; n < table.size(); ++n) d.raw() << n << ": " << table[n] << "\n";
      } else {
        throw UsageError("unknown format '" + common.format + "'");
      }
      if (!fixtures_dir.empty()) write_fixture(fixtures_dir, ct.class_id + "_" + method + ".csv", ct.to_csv(), d);
    }
  });

  // series
  std::string series_name = "av231p1", series_expr;
  auto* series_cmd = app.add_subcommand("series", "expand a generating function exactly");
  series_cmd->add_option("--gf", series_name,
                         "catalan | sqrt | av231p1 | av321p1 | functional-eq | structural:<id>")
      ->capture_default_str();
  series_cmd->add_option("--expr", series_expr, "custom (A; B; D) or (A; B; D; k) meaning (A + B s)/(D s^k)");
  series_cmd->add_option("--order", order)->capture_default_str();
  series_cmd->add_option("--format", common.format, "json | csv | text")->capture_default_str();
  series_cmd->callback([&] {
    TruncatedSeries s = series_expr.empty() ? named_series(series_name, order)
                                            : expand_algebraic(AlgebraicGF::parse(series_expr), order);
    const std::string label = series_expr.empty() ? series_name : series_expr;
    if (common.format == "json") {
      json coeffs = json::array();
      for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
      d.emit({{"command", "series"}, {"gf", label}, {"order", order}, {"coefficients", coeffs}});
    } else if (common.format == "csv") {
      d.raw() << s.to_csv();
    } else if (common.format == "text") {
      d.raw() << s.to_lines();
    } else {
      throw UsageError("unknown format '" + common.format + "'");
    }
    d.text() << label << " to order " << order << "\n";
  });

  // basis
  unsigned max_len = 0;
  auto* basis_cmd = app.add_subcommand("basis", "basis of Av(basis)^{+t} up to --max-len");
  add_class(basis_cmd);
  add_jobs(basis_cmd);
  basis_cmd->add_option("--max-len", max_len, "longest candidate (default 7; 9 for Av(231))");
  basis_cmd->add_option("--format", common.format, "json | text")->capture_default_str();
  basis_cmd->add_option("--seed-fixtures", fixtures_dir, "also write the sorted basis into this directory");
  basis_cmd->callback([&] {
    const auto basis = common.class_basis();
    if (common.t == 0) throw UsageError("--t must be positive for basis computation");
    const unsigned len = max_len ? max_len : (is_single(basis, patterns::p231) ? 9u : 7u);
    const auto res = compute_basis(basis, common.t, len, common.jobs);
    std::string listing;
    for (const auto& e : res.elements) listing += e.to_string() + "\n";
    if (common.format == "json") {
      json hist = json::object();
      for (auto [k, v] : res.length_histogram()) hist[std::to_string(k)] = v;
      json elements = json::array();
      for (const auto& e : res.elements) elements.push_back(e.to_string());
      d.emit({{"command", "basis"}, {"class", class_tag(basis, common.t)}, {"search_cap", res.search_cap},
              {"length_bound", res.length_bound}, {"complete_under_bound", res.complete_under_bound},
              {"size", res.elements.size()}, {"length_histogram", hist}, {"elements", elements},
              {"antichain", verify_antichain(res.elements)}});
    } else if (common.format == "text") {
      d.raw() << listing;
    } else {
      throw UsageError("unknown format '" + common.format + "'");
    }
    d.text() << res.elements.size() << " basis elements up to length " << len
             << (res.complete_under_bound ? " (complete)" : " (bound " + std::to_string(res.length_bound) +
                                                                " not reached; may be incomplete)")
             << "\n";
    if (!fixtures_dir.empty()) write_fixture(fixtures_dir, "basis_" + class_tag(basis, common.t) + ".txt", listing, d);
  });

  // sort
  std::string machine_name = "stack";
  unsigned buffers = 0;
  bool verbose = false;
  std::optional<unsigned> sort_n;
  auto* sort_cmd = app.add_subcommand("sort", "run a sorting machine with one-time-use buffers");
  sort_cmd->add_option("--perm", perm_text, "permutation to sort");
  sort_cmd->add_option("--n", sort_n, "count the sortable permutations of length n instead");
  sort_cmd->add_option("--machine", machine_name, "stack | queues2")->capture_default_str();
  sort_cmd->add_option("--buffers", buffers)->capture_default_str();
  sort_cmd->add_flag("--verbose,-v", verbose, "print a witnessing move sequence");
  add_jobs(sort_cmd);
  sort_cmd->callback([&] {
    const auto machine = parse_machine_kind(machine_name);
    if (!machine) throw UsageError("unknown machine '" + machine_name + "'");
    if (sort_n.has_value() == !perm_text.empty()) throw UsageError("give exactly one of --perm or --n");
    if (sort_n) {
      const auto count = sortability_class_count(*machine, buffers, *sort_n, common.jobs);
      d.emit({{"command", "sort"}, {"machine", machine_name}, {"buffers", buffers}, {"n", *sort_n}, {"count", count}});
      d.text() << count << " permutations of length " << *sort_n << " are sortable\n";
      return;
    }
    const auto p = parse_permutation(perm_text);
    const auto outcome = sort_with_machine(p, *machine, buffers);
    json j{{"command", "sort"}, {"perm", p.to_string()}, {"machine", machine_name}, {"buffers", buffers},
           {"sortable", outcome.sortable}};
    if (verbose) {
      json moves = json::array();
      for (const auto& m : outcome.witness) moves.push_back(m.to_string());
      j["moves"] = moves;
      for (const auto& m : outcome.witness) d.text() << m.to_string() << "\n";
    }
    d.emit(j);
    d.text() << p << (outcome.sortable ? " is" : " is not") << " sortable\n";
  });

  // verify
  std::string suite = "all";
  VerifyOptions vopts;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks");
  verify_cmd->add_option("--suite", suite, "all | perm-core | rsk | enumeration | series | basis | machines")
      ->capture_default_str();
  verify_cmd->add_option("--nmax", vopts.nmax, "largest n for exhaustive sweeps")->capture_default_str();
  verify_cmd->add_option("--order", vopts.order, "series truncation order")->capture_default_str();
  verify_cmd->add_option("--jobs", vopts.jobs)->capture_default_str();
  verify_cmd->callback([&] {
    std::size_t failed = 0, total = 0;
    run_verification(suite, vopts, [&](const CheckResult& r) {
      ++total;
      failed += !r.passed;
      d.emit({{"command", "verify"}, {"suite", r.suite}, {"check", r.name}, {"passed", r.passed},
              {"detail", r.detail}, {"seconds", r.seconds}});
      d.text() << (r.passed ? "PASS " : "FAIL ") << "[" << r.suite << "] " << r.name << " -- " << r.detail << "\n";
    });
    d.text() << (total - failed) << "/" << total << " checks passed\n";
    if (failed) d.status = kVerificationFailed;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  } catch (const std::invalid_argument& e) { // includes cap_exceeded and UsageError
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return d.status;
}

} // namespace permlab::cli
