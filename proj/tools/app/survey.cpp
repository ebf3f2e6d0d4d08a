#include "survey.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "wedgelab/automorphisms.hpp"
#include "wedgelab/constructors.hpp"
#include "wedgelab/errors.hpp"
#include "wedgelab/functors.hpp"
#include "wedgelab/isoscope.hpp"
#include "wedgelab/wedge.hpp"

namespace wedgelab::app {

namespace {

struct Row {
  std::string descriptor;
  std::string params;
  std::int64_t a = 0, b = 0, c = 0;
};

std::vector<Row> holder_rows(const SurveyOptions& o) {
  std::vector<Row> rows;
  for (std::int64_t m = 1; static_cast<std::uint64_t>(m) <= o.max_order; ++m) {
    for (std::int64_t n = 1; static_cast<std::uint64_t>(n * m) <= o.max_order; ++n) {
      if (static_cast<std::uint64_t>(n * m) < o.min_order) continue;
      for (std::int64_t r = 0; r < m; ++r) {
        try {
          check_holder_parameters(n, m, r);
        } catch (const ParameterViolation&) {
          continue;
        }
        const std::string p = std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r);
        rows.push_back({"holder:" + p, "n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",r=" + std::to_string(r),
                        n, m, r});
      }
    }
  }
  return rows;
}

std::vector<Row> rank2_rows(const SurveyOptions& o) {
  std::vector<Row> rows;
  for (std::int64_t a = 1; static_cast<std::uint64_t>(a) <= o.max_order; ++a) {
    for (std::int64_t b = 1; b <= a && static_cast<std::uint64_t>(a * b) <= o.max_order; ++b) {
      if (a % b != 0 || static_cast<std::uint64_t>(a * b) < o.min_order) continue;
      const std::string d = b == 1 ? "cyclic:" + std::to_string(a) : "abelian:" + std::to_string(a) + "," + std::to_string(b);
      rows.push_back({d, "m=" + std::to_string(a) + ",n=" + std::to_string(b), a, b, 0});
    }
  }
  return rows;
}

Verdict unknown(const std::string& why) { return {"unknown", why}; }

void holder_row(const Row& row, const Budgets& budgets, ResultRecord& out) {
  const auto g = holder(row.a, row.b, row.c);
  const auto crit = holder_ai_criterion(row.a, row.b, row.c);
  const auto q = has_ai(g, AutSearchBudget::from(budgets, SearchMode::FindOne));
  const std::string expected = crit.has_ai ? "yes" : "no";
  if (q.answer == Answer::Unknown) {
    out.has_ai = unknown("criterion " + expected + ", search budget");
  } else {
    const bool agree = crit.has_ai == (q.answer == Answer::Yes);
    out.has_ai = Verdict{to_string(q.answer), agree ? "criterion+search" : "criterion " + expected + " disagrees"};
    if (!agree) out.note = "criterion and search disagree";
  }
  const auto t = tau(wedge(g, WedgeOptions{WedgeStrategy::Auto, budgets}), budgets);
  if (q.answer == Answer::Yes) {
    epi2_isomorphism(schur_cover(g, budgets.dense_cutoff), *q.witness, budgets);
    out.tau_iso_ktilde = Verdict{"yes", "epi2"};
  } else if (q.answer == Answer::No) {
    const auto k = k_group(g, 3, budgets);
    const auto dt = derived_action(t), dk = derived_action(k);
    out.tau_iso_ktilde = dt.same_invariants(dk) ? unknown("derived action equal") : Verdict{"no", "derived-action"};
  } else {
    out.tau_iso_ktilde = unknown("no AI answer");
  }
}

void rank2_row(const Row& row, const Budgets& budgets, ResultRecord& out) {
  const std::int64_t m = row.a, n = row.b;
  out.has_ai = Verdict{"yes", "inversion"};
  const bool sylow3_cyclic = n % 3 != 0;
  if (n == 1) {
    const auto g = cyclic(m);
    const auto t = tau(wedge_abelian(g), budgets);
    const auto k = ktilde_abelian(g, 3, budgets);
    const auto copies = [&](const FunctorGroup& f) {
      std::vector<Elem> v;
      for (Elem s : g->generators()) {
        const Elem first[2] = {s, kIdentity}, second[2] = {kIdentity, s};
        v.push_back(f.encode(first, kIdentity));
        v.push_back(f.encode(second, kIdentity));
      }
      return v;
    };
    const auto xs = copies(*t), ys = copies(*k);
    const bool ok = verify_explicit_iso(t, k, xs, ys).holds();
    out.tau_iso_ktilde = ok ? Verdict{"yes", "cyclic"} : unknown("cyclic map failed");
  } else if (sylow3_cyclic) {
    const auto g = abelian({m, n});
    const auto t = tau(wedge_abelian(g), budgets);
    const auto k = ktilde_abelian(g, 3, budgets);
    const auto gm = rank2_map(t, k, Rank2Form::Symmetric);
    const bool ok = verify_explicit_iso(t, k, gm.xs, gm.ys).holds();
    out.tau_iso_ktilde = ok ? Verdict{"yes", "rank2-map"} : unknown("rank-2 map failed");
  } else {
    const auto g = abelian({m, n});
    const auto d = staged_difference(tau(wedge_abelian(g), budgets), ktilde_abelian(g, 3, budgets), budgets);
    out.tau_iso_ktilde = d ? Verdict{"no", "fingerprint:" + d->name} : unknown("fingerprints equal");
  }
  const bool yes = out.tau_iso_ktilde->answer == "yes";
  const bool agrees = out.tau_iso_ktilde->answer != "unknown" && yes == sylow3_cyclic;
  out.note = std::string("sylow-3 ") + (sylow3_cyclic ? "cyclic" : "non-cyclic") + (agrees ? "" : "; does not match");
}

}  // namespace

const std::vector<std::string>& survey_families() {
  static const std::vector<std::string> f = {"holder", "abelian-rank2"};
  return f;
}

ResultRecord describe_group(const GroupPtr& g, const std::string& name, const Budgets& budgets) {
  ResultRecord r;
  r.group = name;
  r.order = g->order();
  try {
    const Fingerprint f = fingerprint(g, budgets);
    r.abelian_invariants = f.abelianization.factors;
    r.center_invariants = f.center.factors;
    r.fingerprint = f.hash();
  } catch (const BudgetExceeded&) {
    r.note = "invariants beyond the fingerprint budget";
  }
  return r;
}

std::vector<ResultRecord> run_survey(const SurveyOptions& opts) {
  std::vector<Row> rows;
  if (opts.family == "holder") {
    rows = holder_rows(opts);
  } else if (opts.family == "abelian-rank2") {
    rows = rank2_rows(opts);
  } else {
    throw ParameterViolation("unknown survey family '" + opts.family + "'");
  }
  std::vector<ResultRecord> out(rows.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      ResultRecord& r = out[i];
      try {
        r = describe_group(group_from_descriptor(rows[i].descriptor), rows[i].descriptor, opts.budgets);
        r.params = rows[i].params;
        if (opts.family == "holder") {
          holder_row(rows[i], opts.budgets, r);
        } else {
          rank2_row(rows[i], opts.budgets, r);
        }
      } catch (const BudgetExceeded& e) {
        if (!r.tau_iso_ktilde) r.tau_iso_ktilde = unknown("budget");
        r.note = std::string("budget: ") + e.what();
      } catch (const std::exception& e) {
        if (!r.tau_iso_ktilde) r.tau_iso_ktilde = unknown("error");
        r.note = std::string("error: ") + e.what();
      }
      r.group = rows[i].descriptor;
      r.params = rows[i].params;
      if (opts.timing) {
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(rows.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace wedgelab::app
