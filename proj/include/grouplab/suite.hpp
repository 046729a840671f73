#ifndef GROUPLAB_SUITE_HPP_
#define GROUPLAB_SUITE_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "grouplab/corpus.hpp"
#include "grouplab/finite_group.hpp"
#include "grouplab/lattice.hpp"
#include "grouplab/msupp.hpp"
#include "grouplab/number_theory.hpp"
#include "grouplab/structure.hpp"

namespace grouplab {

// One verification per tag; see README for what each asserts.
enum class Check {
  char_forward,                 // G in M(p^k)  =>  scalar_semidirect_criterion
  char_backward,                // scalar_semidirect_criterion  =>  G in M(p^k)
  supersolvable_quotient,       // G in M(p^k), k >= 2  =>  supersolvable_quotient_criterion
  pgroup_frattini_criterion,    // p-group: G in M(p^k)  <=>  frattini_containment_criterion
  critical_classification,      // classify_critical never reports a contradiction
  supplement_in_intermediate,   // H M-supplemented in G  =>  in every M with H <= M <= G
  supplement_mod_normal,        // H M-supplemented, N normal in G, N <= H  =>  H/N in G/N
  supplement_coprime_quotient,  // N normal, (|H|,|N|) = 1: H in G  <=>  HN/N in G/N
  mclass_subgroup_closed,       // G in M(p^k), p^k | |H|  =>  H in M(p^k)
  mclass_quotient_by_normal_p,  // G in M(p^k), N normal of order p^s, s < k  =>  G/N in M(p^(k-s))
  mclass_mod_op_prime,          // G in M(p^k)  <=>  G/O_p'(G) in M(p^k)
  sylow_frattini_meet,          // P normal Sylow  =>  Phi(P) = P n Phi(G)
  pgroup_derived_is_frattini,   // p-group in M(p^k), |G| > p^k  =>  G' = Phi(G)
  pgroup_frattini_below,        // p-group in M(p^k)  =>  Phi(G) <= every U of order p^(k-1)
  prime_order_complement,       // |H| prime, H < G: complemented  <=>  M-supplemented
  recorded_fact,                // corpus-recorded verdicts
  build,                        // group or lattice could not be constructed
};

inline std::string to_string(Check c) {
  switch (c) {
    case Check::char_forward: return "char_forward";
    case Check::char_backward: return "char_backward";
    case Check::supersolvable_quotient: return "supersolvable_quotient";
    case Check::pgroup_frattini_criterion: return "pgroup_frattini_criterion";
    case Check::critical_classification: return "critical_classification";
    case Check::supplement_in_intermediate: return "supplement_in_intermediate";
    case Check::supplement_mod_normal: return "supplement_mod_normal";
    case Check::supplement_coprime_quotient: return "supplement_coprime_quotient";
    case Check::mclass_subgroup_closed: return "mclass_subgroup_closed";
    case Check::mclass_quotient_by_normal_p: return "mclass_quotient_by_normal_p";
    case Check::mclass_mod_op_prime: return "mclass_mod_op_prime";
    case Check::sylow_frattini_meet: return "sylow_frattini_meet";
    case Check::pgroup_derived_is_frattini: return "pgroup_derived_is_frattini";
    case Check::pgroup_frattini_below: return "pgroup_frattini_below";
    case Check::prime_order_complement: return "prime_order_complement";
    case Check::recorded_fact: return "recorded_fact";
    case Check::build: return "build";
  }
  return "?";
}

struct TheoremVerdict {
  Check check = Check::build;
  bool passed = false;
  std::string detail;
};

struct SuiteRow {
  std::string group;
  Check check = Check::build;
  std::uint64_t p = 0;
  unsigned k = 0;
  bool passed = false;
  std::string detail;
  double millis = 0;
};

struct SuiteInput {
  std::string name;
  std::optional<FiniteGroup> group;  // nullopt: failed to build, see error
  std::string error;
  std::vector<ExpectedFact> facts;
};

struct SuiteOptions {
  std::size_t max_order = 100;
  std::size_t general_suite_max_order = 48;  // subgroup/quotient inheritance suites
  std::size_t pgroup_suite_max_order = 64;   // p-group-only suites
  unsigned jobs = 1;
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  std::size_t groups = 0;
  std::size_t failed = 0;
  std::size_t build_errors = 0;
  std::map<std::string, double> group_millis;

  bool all_passed() const noexcept { return failed == 0 && build_errors == 0; }
};

namespace detail {

// Runs every applicable check on one group, caching lattice-level facts.
class GroupChecker {
 public:
  GroupChecker(std::string name, FiniteGroup g, std::vector<ExpectedFact> facts,
               const SuiteOptions& opt)
      : name_(std::move(name)), g_(std::move(g)), facts_(std::move(facts)), opt_(opt),
        lat_(all_subgroups(g_)), supp_(lat_.size()) {}

  std::vector<SuiteRow> run() {
    std::vector<SuiteRow> rows;
    const bool general = g_.order() <= opt_.general_suite_max_order;

    timed(rows, Check::prime_order_complement, 0, 0, [&] { return prime_order_complement(); });
    if (general) {
      timed(rows, Check::supplement_in_intermediate, 0, 0, [&] { return supplement_in_intermediate(); });
      timed(rows, Check::supplement_mod_normal, 0, 0, [&] { return supplement_mod_normal(); });
      timed(rows, Check::supplement_coprime_quotient, 0, 0, [&] { return supplement_coprime_quotient(); });
    }

    for (std::uint64_t p : prime_divisors(g_.order())) {
      const bool p_group = is_p_power(g_.order(), p);
      if (general) {
        timed(rows, Check::sylow_frattini_meet, p, 0, [&] { return sylow_frattini_meet(p); });
      }
      const unsigned max_k = static_cast<unsigned>(log_p(p_part(g_.order(), p), p));
      for (unsigned k = 1; k <= max_k; ++k) {
        const MClassQuery q{p, k};
        const bool holds = mclass(q);
        if (k >= 2) {
          bool rhs = false;
          std::string rhs_detail;
          timed(rows, Check::char_forward, p, k, [&] {
            const SubgroupRef opp = o_p_prime(g_, p);
            CriterionResult r;
            if (opp.is_trivial()) {
              r = scalar_semidirect_criterion(g_, q);
            } else {
              const Quotient quo = quotient(g_, opp);
              r = scalar_semidirect_criterion(quo.group, q);
              r.detail = "via G/O_p'(G): " + r.detail;
            }
            rhs = r.passed;
            rhs_detail = "in_m_class=" + bool_str(holds) + " criterion=" + bool_str(rhs) + " (" +
                         r.detail + ")";
            return verdict(!holds || rhs, rhs_detail);
          });
          timed(rows, Check::char_backward, p, k, [&] { return verdict(!rhs || holds, rhs_detail); });
          timed(rows, Check::critical_classification, p, k, [&] {
            const CriticalReport c = classify_critical(g_, q);
            return verdict(c.kind != CriticalClass::contradiction, to_string(c.kind) + ": " + c.detail);
          });
          timed(rows, Check::supersolvable_quotient, p, k, [&] {
            if (!holds) return vacuous();
            const CriterionResult r = supersolvable_quotient_criterion(g_, q);
            return verdict(r.passed, r.detail);
          });
        }
        if (p_group) {
          timed(rows, Check::pgroup_frattini_criterion, p, k, [&] {
            const CriterionResult r = frattini_containment_criterion(g_, q);
            return verdict(r.passed == holds,
                           "in_m_class=" + bool_str(holds) + " criterion=" + bool_str(r.passed));
          });
          if (g_.order() <= opt_.pgroup_suite_max_order) {
            timed(rows, Check::pgroup_derived_is_frattini, p, k, [&] {
              if (!holds || g_.order() <= q.prime_power()) return vacuous();
              const bool eq = derived_subgroup(g_) == frattini(g_);
              return verdict(eq, "|G'|=" + std::to_string(derived_subgroup(g_).order()) +
                                     " |Phi|=" + std::to_string(frattini(g_).order()));
            });
            timed(rows, Check::pgroup_frattini_below, p, k, [&] {
              if (!holds) return vacuous();
              auto u = frattini_escape(g_, q);
              return verdict(!u, u ? "Phi(G) escapes " + describe(g_, *u) : "ok");
            });
          }
        }
        timed(rows, Check::mclass_mod_op_prime, p, k, [&] {
          const Quotient quo = quotient(g_, o_p_prime(g_, p));
          const bool qh = holds_m_class(quo.group, q);
          return verdict(qh == holds, "G:" + bool_str(holds) + " G/O_p'(G):" + bool_str(qh));
        });
        if (general) {
          timed(rows, Check::mclass_subgroup_closed, p, k, [&] { return mclass_subgroup_closed(q, holds); });
          timed(rows, Check::mclass_quotient_by_normal_p, p, k,
                [&] { return mclass_quotient_by_normal_p(q, holds); });
        }
        for (const auto& f : facts_) {
          if (f.p != p || f.k != k) continue;
          timed(rows, Check::recorded_fact, p, k, [&] {
            return verdict(f.holds == holds, "expected " + bool_str(f.holds) + " (" + f.provenance +
                                                 "), computed " + bool_str(holds));
          });
        }
      }
    }
    return rows;
  }

 private:
  static std::string bool_str(bool b) { return b ? "true" : "false"; }
  static TheoremVerdict verdict(bool ok, std::string detail) { return {Check::build, ok, std::move(detail)}; }
  static TheoremVerdict vacuous() { return {Check::build, true, "vacuous"}; }

  template <typename F>
  void timed(std::vector<SuiteRow>& rows, Check c, std::uint64_t p, unsigned k, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    TheoremVerdict v = f();
    const auto t1 = std::chrono::steady_clock::now();
    rows.push_back({name_, c, p, k, v.passed, v.detail.empty() ? "ok" : v.detail,
                    std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  bool supplemented(std::size_t h) {
    if (!supp_[h]) supp_[h] = m_supplement_index(g_, h).has_value();
    return *supp_[h];
  }

  bool mclass(const MClassQuery& q) {
    const auto key = std::make_pair(q.p, q.k);
    if (auto it = mclass_.find(key); it != mclass_.end()) return it->second;
    bool holds = true;
    for (std::size_t h : lat_.indices_of_order(q.prime_power())) holds = holds && supplemented(h);
    mclass_.emplace(key, holds);
    return holds;
  }

  const Quotient& quotient_by(std::size_t n) {
    auto it = quotients_.find(n);
    if (it == quotients_.end()) it = quotients_.emplace(n, quotient(g_, lat_[n])).first;
    return it->second;
  }

  const Embedded& subgroup_as_group(std::size_t m) {
    auto it = embedded_.find(m);
    if (it == embedded_.end()) it = embedded_.emplace(m, as_group(g_, lat_[m])).first;
    return it->second;
  }

  TheoremVerdict prime_order_complement() {
    std::size_t checked = 0;
    for (std::size_t h = 0; h < lat_.size(); ++h) {
      if (!is_prime(lat_[h].order()) || lat_[h].order() == g_.order()) continue;
      ++checked;
      const bool comp = complement_index(g_, h).has_value();
      if (comp != supplemented(h)) {
        return verdict(false, describe(g_, lat_[h]) + ": complemented=" + bool_str(comp) +
                                  " m_supplemented=" + bool_str(!comp));
      }
    }
    return checked == 0 ? vacuous() : verdict(true, std::to_string(checked) + " subgroups");
  }

  TheoremVerdict supplement_in_intermediate() {
    std::size_t checked = 0;
    for (std::size_t h = 0; h < lat_.size(); ++h) {
      if (!supplemented(h)) continue;
      for (std::size_t m = h; m < lat_.size(); ++m) {
        if (m == lat_.whole_index() || !lat_[h].is_subgroup_of(lat_[m])) continue;
        const Embedded& e = subgroup_as_group(m);
        const auto& sub_lat = all_subgroups(e.group);
        const std::size_t h_in_m = sub_lat.find(e.restrict(lat_[h].members())).value();
        ++checked;
        if (!m_supplement_index(e.group, h_in_m)) {
          return verdict(false, describe(g_, lat_[h]) + " not M-supplemented in " + describe(g_, lat_[m]));
        }
      }
    }
    return verdict(true, std::to_string(checked) + " pairs");
  }

  TheoremVerdict supplement_mod_normal() {
    std::size_t checked = 0;
    for (std::size_t h = 0; h < lat_.size(); ++h) {
      if (!supplemented(h)) continue;
      for (std::size_t n = 0; n <= h; ++n) {
        if (!lat_.is_normal(n) || !lat_[n].is_subgroup_of(lat_[h])) continue;
        const Quotient& q = quotient_by(n);
        const std::size_t img = all_subgroups(q.group).find(q.image(lat_[h].members())).value();
        ++checked;
        if (!m_supplement_index(q.group, img)) {
          return verdict(false, describe(g_, lat_[h]) + "/" + describe(g_, lat_[n]) +
                                    " not M-supplemented in the quotient");
        }
      }
    }
    return verdict(true, std::to_string(checked) + " pairs");
  }

  TheoremVerdict supplement_coprime_quotient() {
    std::size_t checked = 0;
    for (std::size_t n = 1; n < lat_.size(); ++n) {
      if (!lat_.is_normal(n)) continue;
      const Quotient& q = quotient_by(n);
      const auto& q_lat = all_subgroups(q.group);
      for (std::size_t h = 0; h < lat_.size(); ++h) {
        if (std::gcd(lat_[h].order(), lat_[n].order()) != 1) continue;
        const std::size_t img = q_lat.find(q.image(lat_[h].members())).value();
        const bool below = m_supplement_index(q.group, img).has_value();
        ++checked;
        if (below != supplemented(h)) {
          return verdict(false, describe(g_, lat_[h]) + " mod " + describe(g_, lat_[n]) + ": G " +
                                    bool_str(supplemented(h)) + " vs G/N " + bool_str(below));
        }
      }
    }
    return checked == 0 ? vacuous() : verdict(true, std::to_string(checked) + " pairs");
  }

  TheoremVerdict sylow_frattini_meet(std::uint64_t p) {
    const SubgroupRef p_sub = sylow(g_, p);
    if (!is_normal(g_, p_sub)) return vacuous();
    const Embedded& e = subgroup_as_group(lat_.index_of(p_sub));
    const ElementSet phi_p = e.lift(g_, frattini(e.group).members());
    const ElementSet meet = p_sub.members() & frattini(g_).members();
    return verdict(phi_p == meet, "|Phi(P)|=" + std::to_string(phi_p.count()) +
                                      " |P n Phi(G)|=" + std::to_string(meet.count()));
  }

  TheoremVerdict mclass_subgroup_closed(const MClassQuery& q, bool holds) {
    if (!holds) return vacuous();
    std::size_t checked = 0;
    for (std::size_t h = 0; h < lat_.size(); ++h) {
      if (lat_[h].order() % q.prime_power() != 0) continue;
      ++checked;
      if (!holds_m_class(subgroup_as_group(h).group, q)) {
        return verdict(false, describe(g_, lat_[h]) + " not in M(p^k)");
      }
    }
    return verdict(true, std::to_string(checked) + " subgroups");
  }

  TheoremVerdict mclass_quotient_by_normal_p(const MClassQuery& q, bool holds) {
    if (!holds) return vacuous();
    std::size_t checked = 0;
    for (std::size_t n = 1; n < lat_.size(); ++n) {
      const int s = log_p(lat_[n].order(), q.p);
      if (!lat_.is_normal(n) || s < 1 || static_cast<unsigned>(s) >= q.k) continue;
      ++checked;
      const MClassQuery reduced{q.p, q.k - static_cast<unsigned>(s)};
      if (!holds_m_class(quotient_by(n).group, reduced)) {
        return verdict(false, "G/" + describe(g_, lat_[n]) + " not in M(p^" + std::to_string(reduced.k) + ")");
      }
    }
    return checked == 0 ? vacuous() : verdict(true, std::to_string(checked) + " quotients");
  }

  std::string name_;
  FiniteGroup g_;
  std::vector<ExpectedFact> facts_;
  const SuiteOptions& opt_;
  const SubgroupLattice& lat_;
  std::vector<std::optional<bool>> supp_;
  std::map<std::pair<std::uint64_t, unsigned>, bool> mclass_;
  std::map<std::size_t, Quotient> quotients_;
  std::map<std::size_t, Embedded> embedded_;
};

inline std::vector<SuiteRow> check_group(const SuiteInput& in, const SuiteOptions& opt) {
  if (!in.group) return {{in.name, Check::build, 0, 0, false, in.error, 0}};
  try {
    return GroupChecker(in.name, *in.group, in.facts, opt).run();
  } catch (const std::exception& e) {
    return {{in.name, Check::build, 0, 0, false, e.what(), 0}};
  }
}

}  // namespace detail

inline std::vector<SuiteInput> suite_inputs(const std::vector<CorpusEntry>& corpus) {
  std::vector<SuiteInput> out;
  for (const auto& e : corpus) out.push_back({e.name, e.group, {}, e.facts});
  return out;
}

// Checks every group (concurrently when opt.jobs > 1). Rows are ordered by
// group name, check tag, p, k regardless of scheduling.
inline SuiteReport run_suite(const std::vector<SuiteInput>& inputs, const SuiteOptions& opt) {
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!inputs[i].group || inputs[i].group->order() <= opt.max_order) selected.push_back(i);
  }
  std::vector<std::vector<SuiteRow>> results(selected.size());
  std::vector<double> millis(selected.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < selected.size(); j = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      results[j] = detail::check_group(inputs[selected[j]], opt);
      millis[j] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  const unsigned jobs = std::max(1U, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  report.groups = selected.size();
  for (std::size_t j = 0; j < selected.size(); ++j) {
    report.group_millis[inputs[selected[j]].name] = millis[j];
    for (auto& r : results[j]) report.rows.push_back(std::move(r));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SuiteRow& a, const SuiteRow& b) {
    const auto ta = to_string(a.check), tb = to_string(b.check);
    return std::tie(a.group, ta, a.p, a.k) < std::tie(b.group, tb, b.p, b.k);
  });
  for (const auto& r : report.rows) {
    if (r.check == Check::build) {
      ++report.build_errors;
    } else if (!r.passed) {
      ++report.failed;
    }
  }
  return report;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_csv(std::ostream& os, const SuiteReport& report, bool with_millis = true) {
  os << "group,theorem,p,k,passed,detail" << (with_millis ? ",millis" : "") << "\n";
  for (const auto& r : report.rows) {
    os << detail::csv_field(r.group) << ',' << to_string(r.check) << ',' << r.p << ',' << r.k << ','
       << (r.passed ? "true" : "false") << ',' << detail::csv_field(r.detail);
    if (with_millis) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.millis);
      os << ',' << buf;
    }
    os << "\n";
  }
}

}  // namespace grouplab

#endif  // GROUPLAB_SUITE_HPP_
