#include "cstq/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <future>
#include <numeric>
#include <sstream>

namespace cstq {

namespace {

struct Checker {
  ReductionReport& rep;

  template <class A, class B>
  void query(const A& got, const B& want, const std::function<std::string()>& describe) {
    ++rep.queries;
    if (got == want) return;
    ++rep.mismatches;
    if (!rep.first_failure) rep.first_failure = describe();
  }

  void structure(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    ++rep.structural_failures;
    if (!rep.first_failure) rep.first_failure = describe();
  }
};

std::string input_string(const GadgetInstance& g) {
  std::ostringstream os;
  if (g.kind == GadgetKind::phi_inverse) {
    for (Symbol c : g.source.symbols()) os << c;
    return os.str();
  }
  os << "[";
  for (std::size_t i = 0; i < g.input.size(); ++i) os << (i ? "," : "") << g.input[i];
  os << "]";
  return os.str();
}

PredAnswer pred_by_scan(const std::vector<Index>& a, Index x) {
  Index i = 0;
  while (i < static_cast<Index>(a.size()) && a[static_cast<std::size_t>(i)] < x) ++i;
  if (i == 0) return {0, std::nullopt};
  return {i, a[static_cast<std::size_t>(i - 1)]};
}

std::string show(const PredAnswer& p) {
  return p.value ? std::to_string(*p.value) + " (index " + std::to_string(p.index) + ")" : "-inf";
}

void check_queries(const GadgetInstance& g, Checker& c) {
  const std::string in = input_string(g);
  const Index n = g.size, m2 = g.size * g.size;
  switch (g.kind) {
    case GadgetKind::lcp_select:
      for (Index v = 0; v <= n; ++v) {
        for (Index r = 1; r <= n - std::max<Index>(v, 1) + 1; ++r) {
          const Index got = select_via_lcp(g, v, r);
          const auto want = range_select(g.input, r, v);
          c.query(std::optional<Index>(got), want, [&] {
            return "lcp-select " + in + " v=" + std::to_string(v) + " r=" + std::to_string(r) + ": got " +
                   std::to_string(got) + ", want " + (want ? std::to_string(*want) : "none");
          });
        }
      }
      break;
    case GadgetKind::isa_count:
      for (Index j = 0; j <= n; ++j) {
        for (Index v = 0; v <= n + 1; ++v) {
          const Index got = count_via_isa(g, j, v), want = range_count(g.input, j, v);
          c.query(got, want, [&] {
            return "isa-count " + in + " j=" + std::to_string(j) + " v=" + std::to_string(v) + ": got " +
                   std::to_string(got) + ", want " + std::to_string(want);
          });
        }
      }
      break;
    case GadgetKind::bwt_color:
      for (Index x = -1; x <= m2 + 1; ++x) {
        const int got = color_via_bwt(g, x);
        const int want = static_cast<int>(pred_by_scan(g.input, x).index % 2);
        c.query(got, want, [&] {
          return "bwt-color " + in + " x=" + std::to_string(x) + ": got " + std::to_string(got) + ", want " +
                 std::to_string(want);
        });
      }
      break;
    case GadgetKind::plcp_pred:
    case GadgetKind::phi_pred:
    case GadgetKind::ilf_pred:
      for (Index x = -1; x <= m2 + 1; ++x) {
        const PredAnswer got = g.kind == GadgetKind::plcp_pred ? pred_via_plcp(g, x)
                               : g.kind == GadgetKind::phi_pred ? pred_via_phi(g, x)
                                                                : pred_via_ilf(g, x);
        const PredAnswer want = pred_by_scan(g.input, x);
        c.query(got, want, [&] {
          return std::string(to_string(g.kind)) + " " + in + " x=" + std::to_string(x) + ": got " + show(got) +
                 ", want " + show(want);
        });
      }
      break;
    case GadgetKind::phi_inverse: {
      const auto oracle = build_bundle(g.source);
      for (Index j = 1; j <= n; ++j) {
        const Index got_phi = phi_via_invphi(g, j), got_inv = invphi_via_phi(g, j);
        c.query(got_phi, oracle.phi[j], [&] {
          return "phi-inverse " + in + " phi[" + std::to_string(j) + "]: got " + std::to_string(got_phi) +
                 ", want " + std::to_string(oracle.phi[j]);
        });
        c.query(got_inv, oracle.inv_phi[j], [&] {
          return "phi-inverse " + in + " inv_phi[" + std::to_string(j) + "]: got " + std::to_string(got_inv) +
                 ", want " + std::to_string(oracle.inv_phi[j]);
        });
      }
      break;
    }
  }
}

void check_anchors(const GadgetInstance& g, Checker& c) {
  const std::string in = input_string(g);
  auto check = [&](const std::string& name, Index stored, const std::vector<Symbol>& pattern) {
    const Index fresh = pattern_range(g.text, g.bundle->sa, pattern).range_beg;
    c.structure(fresh == stored, [&] {
      return std::string(to_string(g.kind)) + " " + in + ": anchor " + name + " stored " + std::to_string(stored) +
             ", recomputed " + std::to_string(fresh);
    });
  };
  auto ones_zero = [](Index ones) {
    std::vector<Symbol> p(static_cast<std::size_t>(ones), 1);
    p.push_back(0);
    return p;
  };
  for (std::size_t v = 1; v <= g.range_beg.size(); ++v) {
    std::vector<Symbol> p(v, 0);
    p.push_back(1);
    check("R[" + std::to_string(v) + "]", g.range_beg[v - 1], p);
  }
  switch (g.kind) {
    case GadgetKind::bwt_color: check("b", g.anchor("b"), ones_zero(g.anchor("k") + 1)); break;
    case GadgetKind::ilf_pred:
      check("alpha", g.anchor("alpha"), ones_zero(g.anchor("k") + 2));
      check("beta", g.anchor("beta"), ones_zero(g.anchor("k") + 1));
      break;
    case GadgetKind::phi_inverse: {
      const auto sa = suffix_array_naive(g.source);
      c.structure(sa[1] == g.anchor("j_lexfirst") && sa[sa.size()] == g.anchor("j_lexlast"),
                  [&] { return "phi-inverse " + in + ": boundary anchors disagree with the suffix order"; });
      break;
    }
    default: break;
  }
}

}  // namespace

void ReductionReport::merge(const ReductionReport& o) {
  instances += o.instances;
  queries += o.queries;
  mismatches += o.mismatches;
  structural_failures += o.structural_failures;
  max_text_length = std::max(max_text_length, o.max_text_length);
  max_runs = std::max(max_runs, o.max_runs);
  max_lz_phrases = std::max(max_lz_phrases, o.max_lz_phrases);
  max_certificate_phrases = std::max(max_certificate_phrases, o.max_certificate_phrases);
  max_certificate_bound = std::max(max_certificate_bound, o.max_certificate_bound);
  if (!first_failure) first_failure = o.first_failure;
}

ReductionReport verify_reduction(const GadgetInstance& g) {
  ReductionReport rep;
  rep.kind = g.kind;
  rep.instances = 1;
  Checker c{rep};
  const std::string in = input_string(g);

  rep.max_text_length = g.text.size();
  rep.max_runs = run_length_encode(g.text).size();
  if (auto len = expected_text_length(g)) {
    c.structure(*len == g.text.size(), [&] {
      return std::string(to_string(g.kind)) + " " + in + ": |T| = " + std::to_string(g.text.size()) +
             ", closed form " + std::to_string(*len);
    });
  }
  if (auto runs = expected_run_count(g)) {
    c.structure(*runs == rep.max_runs, [&] {
      return std::string(to_string(g.kind)) + " " + in + ": |RL| = " + std::to_string(rep.max_runs) +
             ", closed form " + std::to_string(*runs);
    });
  }
  check_anchors(g, c);

  const Certificate cert = gadget_certificate(g);
  rep.max_certificate_phrases = cert.factorization.size();
  rep.max_certificate_bound = cert.bound;
  rep.max_lz_phrases = lz77_factorize(g.text).size();
  try {
    validate_lz_like(g.text, cert.factorization);
    c.structure(cert.factorization.size() <= cert.bound, [&] {
      return std::string(to_string(g.kind)) + " " + in + ": certificate has " +
             std::to_string(cert.factorization.size()) + " phrases, bound " + std::to_string(cert.bound);
    });
  } catch (const std::exception& e) {
    c.structure(false, [&] { return std::string(to_string(g.kind)) + " " + in + ": certificate rejected: " + e.what(); });
  }

  try {
    check_queries(g, c);
  } catch (const std::exception& e) {
    // A mapping that reads outside its array is a wrong answer too.
    ++rep.mismatches;
    if (!rep.first_failure) rep.first_failure = std::string(to_string(g.kind)) + " " + in + ": query threw: " + e.what();
  }
  return rep;
}

GadgetInstance make_gadget(GadgetKind kind, const std::vector<Index>& input, Index size) {
  switch (kind) {
    case GadgetKind::lcp_select: return lcp_select_gadget(input);
    case GadgetKind::isa_count: return isa_count_gadget(input);
    case GadgetKind::bwt_color: return bwt_color_gadget(input, size);
    case GadgetKind::plcp_pred: return plcp_pred_gadget(input, size);
    case GadgetKind::phi_pred: return phi_pred_gadget(input, size);
    case GadgetKind::ilf_pred: return ilf_pred_gadget(input, size);
    case GadgetKind::phi_inverse: {
      std::vector<Symbol> s(input.begin(), input.end());
      return phi_inverse_transform(Text(std::move(s), 2), 2);
    }
  }
  throw std::invalid_argument("unknown gadget kind");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::vector<Index> random_permutation(std::mt19937_64& rng, Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = p.size(); i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

std::vector<Index> random_set(std::mt19937_64& rng, Index m) {
  // Floyd's sampling of m distinct values from [1..m^2].
  const Index u = m * m;
  std::vector<Index> chosen;
  for (Index j = u - m + 1; j <= u; ++j) {
    const Index t = 1 + static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(j)));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

bool is_set_kind(GadgetKind k) {
  return k == GadgetKind::bwt_color || k == GadgetKind::plcp_pred || k == GadgetKind::phi_pred ||
         k == GadgetKind::ilf_pred;
}

void all_subsets(Index m, std::vector<std::vector<Index>>& out) {
  std::vector<Index> cur;
  std::function<void(Index)> rec = [&](Index next) {
    if (static_cast<Index>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (Index x = next; x <= m * m - (m - static_cast<Index>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace

std::vector<std::vector<Index>> plan_inputs(const VerifyPlan& plan) {
  if (plan.size < 1) throw std::invalid_argument("size must be at least 1");
  std::vector<std::vector<Index>> inputs;
  const GadgetKind k = plan.kind;
  if (plan.exhaustive) {
    if (is_set_kind(k)) {
      all_subsets(plan.size, inputs);
    } else if (k == GadgetKind::phi_inverse) {
      if (plan.size > 20) throw std::invalid_argument("exhaustive phi-inverse is limited to n <= 20");
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << plan.size); ++bits) {
        std::vector<Index> t(static_cast<std::size_t>(plan.size));
        for (Index i = 0; i < plan.size; ++i) t[static_cast<std::size_t>(i)] = static_cast<Index>((bits >> i) & 1);
        inputs.push_back(std::move(t));
      }
    } else {
      std::vector<Index> p(static_cast<std::size_t>(plan.size));
      std::iota(p.begin(), p.end(), 1);
      do inputs.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    return inputs;
  }
  std::mt19937_64 rng(plan.seed);
  for (Index t = 0; t < plan.trials; ++t) {
    const Index size = 1 + static_cast<Index>(uniform_below(rng, static_cast<std::uint64_t>(plan.size)));
    if (is_set_kind(k)) {
      inputs.push_back(random_set(rng, size));
    } else if (k == GadgetKind::phi_inverse) {
      std::vector<Index> s(static_cast<std::size_t>(size));
      for (auto& c : s) c = static_cast<Index>(uniform_below(rng, 2));
      inputs.push_back(std::move(s));
    } else {
      inputs.push_back(random_permutation(rng, size));
    }
  }
  return inputs;
}

ReductionReport verify_plan(const VerifyPlan& plan) {
  const auto inputs = plan_inputs(plan);
  auto run = [&](std::size_t lo, std::size_t hi) {
    ReductionReport rep;
    rep.kind = plan.kind;
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& in = inputs[i];
      rep.merge(verify_reduction(make_gadget(plan.kind, in, static_cast<Index>(in.size()))));
    }
    return rep;
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(plan.workers, inputs.size()));
  ReductionReport total;
  total.kind = plan.kind;
  if (workers == 1) {
    total.merge(run(0, inputs.size()));
    return total;
  }
  // Contiguous shards merged in order keep the result independent of the worker count.
  std::vector<std::future<ReductionReport>> parts;
  const std::size_t chunk = (inputs.size() + workers - 1) / workers;
  for (std::size_t lo = 0; lo < inputs.size(); lo += chunk) {
    parts.push_back(std::async(std::launch::async, run, lo, std::min(inputs.size(), lo + chunk)));
  }
  for (auto& p : parts) total.merge(p.get());
  return total;
}

}  // namespace cstq
