#include "scv/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "cases.hpp"
#include "scv/error.hpp"
#include "scv/hypergeometric.hpp"
#include "scv/primes.hpp"

namespace scv {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "skip";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::Skip: ++s.skip; break;
    }
  }
  return s;
}

namespace detail {

std::string residue_str(const Residue& r) { return std::to_string(r.value()); }

Record compare(std::uint64_t p, const Residue& lhs, const Residue& rhs) {
  Record r;
  r.p = p;
  r.lhs = residue_str(lhs);
  r.rhs = residue_str(rhs);
  r.modulus = lhs.ring().modulus();
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) r.reason = "sides differ mod " + std::to_string(r.modulus);
  return r;
}

Record compare_exact(std::uint64_t p, const BigInt& lhs, const BigInt& rhs) {
  Record r;
  r.p = p;
  r.lhs = lhs.get_str();
  r.rhs = rhs.get_str();
  r.modulus = 0;
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) r.reason = "sides differ";
  return r;
}

Record skip(std::uint64_t p, std::string reason) {
  Record r;
  r.p = p;
  r.status = Status::Skip;
  r.reason = std::move(reason);
  return r;
}

void Tally::check(bool ok, const std::function<std::string()>& describe) {
  ++run_;
  if (ok) {
    ++held_;
  } else if (first_failure_.empty()) {
    first_failure_ = describe();
  }
}

Record Tally::record(std::uint64_t p, std::uint64_t modulus) const {
  Record r;
  r.p = p;
  r.lhs = std::to_string(run_);
  r.rhs = std::to_string(held_);
  r.modulus = modulus;
  r.status = run_ == held_ ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) r.reason = first_failure_;
  return r;
}

Rational frac(std::int64_t a, std::int64_t b) {
  Rational r(to_bigint(a), to_bigint(b));
  r.canonicalize();
  return r;
}

std::optional<Record> gamma_cap_guard(const Context& ctx, unsigned k) {
  if (k >= 3 && ctx.p > ctx.options.gamma_cap) {
    return skip(ctx.p, "p exceeds the Gamma_p table cap " + std::to_string(ctx.options.gamma_cap));
  }
  return std::nullopt;
}

const std::vector<CaseDef>& registry() {
  static const std::vector<CaseDef> cases = [] {
    std::vector<CaseDef> v;
    add_main_cases(v);
    add_property_cases(v);
    add_identity_cases(v);
    return v;
  }();
  return cases;
}

}  // namespace detail

namespace {

using detail::CaseDef;

const CaseDef* lookup(const std::string& name) {
  for (const auto& c : detail::registry()) {
    if (c.info.name == name) return &c;
  }
  return nullptr;
}

Record run_one(const CaseDef& def, std::uint64_t value, unsigned k, const RunOptions& options,
               const detail::CaseData& data) {
  detail::Context ctx{value, k, options, data};
  try {
    return def.check(ctx);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::CapacityExceeded:
      case ErrorKind::HypothesisViolated:
      case ErrorKind::BadPrime:
        return detail::skip(value, e.what());
      default: {
        Record r = detail::skip(value, e.what());
        r.status = Status::Fail;
        return r;
      }
    }
  } catch (const std::exception& e) {
    Record r = detail::skip(value, e.what());
    r.status = Status::Fail;
    return r;
  }
}

struct Prepared {
  const CaseDef* def = nullptr;
  unsigned k = 0;
  std::vector<std::uint64_t> values;
  detail::CaseData data;
  Report report;
  std::atomic<std::int64_t> task_ns{0};
};

void prepare(const CaseSpec& spec, Prepared& out) {
  const CaseDef* def = lookup(spec.name);
  if (!def) throw Error(ErrorKind::UnknownCase, "no case named '" + spec.name + "'");
  const auto start = std::chrono::steady_clock::now();
  out.def = def;
  out.k = spec.options.mod_power ? spec.options.mod_power : def->info.default_k;
  if (out.k < def->min_k || out.k > def->max_k) {
    throw Error(ErrorKind::BadRange, spec.name + " accepts mod powers " + std::to_string(def->min_k) + ".." +
                                         std::to_string(def->max_k));
  }
  if (spec.lo > spec.hi) {
    throw Error(ErrorKind::BadRange, "empty range " + std::to_string(spec.lo) + ".." + std::to_string(spec.hi));
  }
  if (def->info.index_sweep) {
    for (std::uint64_t i = spec.lo; i <= spec.hi; ++i) out.values.push_back(i);
  } else {
    out.values = primes_in(spec.lo, spec.hi);
  }

  auto& params = out.report.params;
  params.emplace_back("statement", def->info.statement);
  params.emplace_back(def->info.index_sweep ? "indices" : "primes",
                      std::to_string(spec.lo) + ".." + std::to_string(spec.hi));
  params.emplace_back("mod_power", std::to_string(out.k));
  params.emplace_back("gamma_cap", std::to_string(spec.options.gamma_cap));
  params.emplace_back("enum_cap", std::to_string(spec.options.enum_cap));

  if (!out.values.empty()) {
    const std::size_t n = std::max<std::size_t>(static_cast<std::size_t>(out.values.back()) + 1, 100);
    if (def->needs & detail::kNeedGammaForm) out.data.gamma_form = modular_form(ModularForm::Gamma, n, spec.options.cache);
    if (def->needs & detail::kNeedAForm) out.data.a_form = modular_form(ModularForm::A, n, spec.options.cache);
    if (def->needs & detail::kNeedCForm) out.data.c_form = modular_form(ModularForm::C, n, spec.options.cache);
  }
  if (def->needs & detail::kNeedTwist) {
    out.data.twist = calibrate_d1_twist(def->twist_d);
    params.emplace_back("twist", std::to_string(out.data.twist));
  }
  out.report.case_name = spec.name;
  out.task_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<Report> run_cases(const std::vector<CaseSpec>& specs, unsigned threads) {
  std::vector<std::unique_ptr<Prepared>> prepared;
  for (const auto& spec : specs) {
    prepared.push_back(std::make_unique<Prepared>());
    prepare(spec, *prepared.back());
  }

  struct Task {
    std::size_t case_index;
    std::size_t slot;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < prepared.size(); ++c) {
    prepared[c]->report.records.resize(prepared[c]->values.size());
    for (std::size_t i = 0; i < prepared[c]->values.size(); ++i) tasks.push_back({c, i});
  }
  // Costly primes first so a long tail does not serialize at the end.
  std::stable_sort(tasks.begin(), tasks.end(), [&](const Task& a, const Task& b) {
    return prepared[a.case_index]->values[a.slot] > prepared[b.case_index]->values[b.slot];
  });

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      Prepared& pc = *prepared[tasks[t].case_index];
      const auto start = std::chrono::steady_clock::now();
      pc.report.records[tasks[t].slot] =
          run_one(*pc.def, pc.values[tasks[t].slot], pc.k, specs[tasks[t].case_index].options, pc.data);
      pc.task_ns +=
          std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<Report> reports;
  for (std::size_t c = 0; c < prepared.size(); ++c) {
    Report r = std::move(prepared[c]->report);
    r.elapsed_ms = specs[c].options.timing ? prepared[c]->task_ns.load() / 1'000'000 : 0;
    reports.push_back(std::move(r));
  }
  return reports;
}

Report run_case(const CaseSpec& spec) { return std::move(run_cases({spec}, spec.options.threads).front()); }

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto parse = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
      throw Error(ErrorKind::BadRange, "malformed range '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse(text);
    return {v, v};
  }
  return {parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
}

std::vector<CaseInfo> list_cases() {
  std::vector<CaseInfo> out;
  for (const auto& c : detail::registry()) out.push_back(c.info);
  return out;
}

std::optional<CaseInfo> find_case(const std::string& name) {
  if (const CaseDef* def = lookup(name)) return def->info;
  return std::nullopt;
}

int calibrate_d1_twist(std::uint64_t d, std::vector<std::uint64_t> primes) {
  if (d != 2 && d != 3 && d != 4 && d != 6) throw Error(ErrorKind::BadRange, "the twist family needs d in {2,3,4,6}");
  if (primes.empty()) {
    for (std::uint64_t p = next_prime(std::max<std::uint64_t>(d, 4)); primes.size() < 10; p = next_prime(p)) {
      primes.push_back(p);
    }
  }
  for (auto p : primes) {
    if (!is_prime(p) || p <= 3 || d % p == 0) {
      throw Error(ErrorKind::BadRange, "calibration prime " + std::to_string(p) + " must be prime, above 3 and prime to d");
    }
  }
  const int candidates[] = {1, 2, 3, 4};
  // 4 is a square, so t = 4 and t = 1 share a class
  auto square_class = [](int t) { return t == 4 ? 1 : t; };
  std::set<int> classes;
  int best = 0;
  for (int t : candidates) {
    bool fits = true;
    for (auto p : primes) {
      ResidueRing ring(p, 2);
      HypParams h{{detail::frac(1, static_cast<std::int64_t>(d)), detail::frac(static_cast<std::int64_t>(d) - 1,
                                                                             static_cast<std::int64_t>(d))},
                  {1},
                  1,
                  p - 1};
      if (!(trunc_hyp(h, ring) == ring(legendre(-t, p)))) {
        fits = false;
        break;
      }
    }
    if (fits) {
      if (classes.insert(square_class(t)).second && classes.size() == 1) best = t;
    }
  }
  if (classes.empty()) throw Error(ErrorKind::NoConsistentTwist, "no t in 1..4 fits d = " + std::to_string(d));
  if (classes.size() > 1) {
    throw Error(ErrorKind::AmbiguousTwist, "several square classes fit d = " + std::to_string(d) +
                                               "; enlarge the calibration set");
  }
  return best;
}

}  // namespace scv
