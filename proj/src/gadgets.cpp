#include "cstq/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cstq {

namespace {

void append(std::vector<Symbol>& out, Symbol c, Index count) {
  out.insert(out.end(), static_cast<std::size_t>(count), c);
}

void append_power(std::vector<Symbol>& out, const std::vector<Symbol>& block, Index count) {
  for (Index t = 0; t < count; ++t) out.insert(out.end(), block.begin(), block.end());
}

std::vector<Symbol> zeros_then_one(Index v) {
  std::vector<Symbol> p(static_cast<std::size_t>(v), 0);
  p.push_back(1);
  return p;
}

std::vector<Symbol> ones_then_zero(Index v) {
  std::vector<Symbol> p(static_cast<std::size_t>(v), 1);
  p.push_back(0);
  return p;
}

void check_permutation(const std::vector<Index>& a) {
  if (a.empty()) throw std::invalid_argument("permutation must be nonempty");
  std::vector<bool> seen(a.size() + 1, false);
  for (Index x : a) {
    if (x < 1 || x > static_cast<Index>(a.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("input is not a permutation of 1.." + std::to_string(a.size()));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

void check_set(const std::vector<Index>& a, Index m) {
  if (m < 1) throw std::invalid_argument("set size m must be at least 1");
  if (static_cast<Index>(a.size()) != m) {
    throw std::invalid_argument("set has " + std::to_string(a.size()) + " elements, expected m=" + std::to_string(m));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > m * m) {
      throw std::invalid_argument("set element " + std::to_string(a[i]) + " outside [1.." + std::to_string(m * m) + "]");
    }
    if (i > 0 && a[i] <= a[i - 1]) throw std::invalid_argument("set elements must be strictly increasing");
  }
}

GadgetInstance finish(GadgetKind kind, std::vector<Index> input, Index size, std::vector<Symbol> symbols) {
  GadgetInstance g;
  g.kind = kind;
  g.input = std::move(input);
  g.size = size;
  g.text = Text(std::move(symbols), 2);
  g.bundle = std::make_shared<const SuffixArrayBundle>(build_bundle(g.text));
  return g;
}

std::vector<Symbol> select_text(const std::vector<Index>& a) {
  const auto n = static_cast<Index>(a.size());
  std::vector<Symbol> t;
  for (Index i = 1; i <= n; ++i) {
    append(t, 0, a[static_cast<std::size_t>(i - 1)]);
    append(t, 1, i);
  }
  append(t, 0, n + 1);
  append(t, 1, n + 1);
  return t;
}

void fill_range_beg(GadgetInstance& g) {
  for (Index v = 1; v <= g.size; ++v) g.range_beg.push_back(range_beg_by_scan(g.text, zeros_then_one(v)));
}

// Boundary values a_0 = 0, a_1..a_m, a_{m+1} = m^2.
std::vector<Index> padded(const std::vector<Index>& a, Index m) {
  std::vector<Index> p{0};
  p.insert(p.end(), a.begin(), a.end());
  p.push_back(m * m);
  return p;
}

PredAnswer answer(const GadgetInstance& g, Index i) {
  if (i <= 0) return {0, std::nullopt};
  return {i, g.input[static_cast<std::size_t>(i - 1)]};
}

// Shared out-of-band handling for the predecessor gadgets.
std::optional<PredAnswer> out_of_band(const GadgetInstance& g, Index x) {
  if (x < 1) return PredAnswer{0, std::nullopt};
  if (x > g.size * g.size) return answer(g, g.size);
  return std::nullopt;
}

Index ceil_div(Index a, Index b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require_kind(const GadgetInstance& g, GadgetKind kind) {
  if (g.kind != kind) {
    throw std::invalid_argument("expected a " + std::string(to_string(kind)) + " instance, got " +
                                std::string(to_string(g.kind)));
  }
}

}  // namespace

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::lcp_select: return "lcp-select";
    case GadgetKind::isa_count: return "isa-count";
    case GadgetKind::bwt_color: return "bwt-color";
    case GadgetKind::plcp_pred: return "plcp-pred";
    case GadgetKind::phi_pred: return "phi-pred";
    case GadgetKind::ilf_pred: return "ilf-pred";
    case GadgetKind::phi_inverse: return "phi-inverse";
  }
  return "?";
}

GadgetKind parse_gadget_kind(std::string_view name) {
  for (GadgetKind k : kAllGadgetKinds) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown gadget kind '" + std::string(name) + "'");
}

Index range_count(const std::vector<Index>& a, Index j, Index v) {
  Index c = 0;
  for (Index i = 1; i <= j && i <= static_cast<Index>(a.size()); ++i) c += a[static_cast<std::size_t>(i - 1)] >= v;
  return c;
}

std::optional<Index> range_select(const std::vector<Index>& a, Index r, Index v) {
  Index seen = 0;
  for (Index i = 1; i <= static_cast<Index>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i - 1)] >= v && ++seen == r) return i;
  }
  return std::nullopt;
}

Index GadgetInstance::anchor(const std::string& name) const {
  auto it = anchors.find(name);
  if (it == anchors.end()) throw std::out_of_range("gadget has no anchor '" + name + "'");
  return it->second;
}

int ebin_width(Index m) {
  if (m < 1) throw std::invalid_argument("ebin width needs m >= 1");
  return 1 + static_cast<int>(std::bit_width(static_cast<std::uint64_t>(m)) - 1);
}

std::vector<Symbol> bin(Index x, int k) {
  if (x < 0 || (k < 63 && x >= (Index{1} << k))) {
    throw std::out_of_range(std::to_string(x) + " does not fit in " + std::to_string(k) + " bits");
  }
  std::vector<Symbol> out(static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) out[static_cast<std::size_t>(k - 1 - b)] = static_cast<Symbol>((x >> b) & 1);
  return out;
}

std::vector<Symbol> ebin(Index x, int k) {
  std::vector<Symbol> out(static_cast<std::size_t>(k + 1), 1);
  out.push_back(0);
  const auto bits = bin(x, k);
  out.insert(out.end(), bits.begin(), bits.end());
  out.push_back(0);
  return out;
}

GadgetInstance lcp_select_gadget(const std::vector<Index>& a) {
  check_permutation(a);
  const auto n = static_cast<Index>(a.size());
  GadgetInstance g = finish(GadgetKind::lcp_select, a, n, select_text(a));
  g.anchors["n"] = n;
  fill_range_beg(g);
  return g;
}

Index select_via_lcp(const GadgetInstance& g, Index v, Index r) {
  require_kind(g, GadgetKind::lcp_select);
  const Index n = g.size;
  v = std::max<Index>(v, 1);
  // For a permutation, Count_A(n, v) = n - v + 1.
  if (v > n || r < 1 || r > n - v + 1) {
    throw std::out_of_range("select (v=" + std::to_string(v) + ", r=" + std::to_string(r) + ") out of contract");
  }
  const Index b = g.range_beg[static_cast<std::size_t>(v - 1)];
  return g.bundle->lcp[b + r + 1] - v;
}

GadgetInstance isa_count_gadget(const std::vector<Index>& a) {
  check_permutation(a);
  const auto n = static_cast<Index>(a.size());
  auto t = select_text(a);
  for (Index i = 1; i <= n + 1; ++i) {
    append(t, 0, n + 1);
    append(t, 1, i);
  }
  GadgetInstance g = finish(GadgetKind::isa_count, a, n, std::move(t));
  g.anchors["n"] = n;
  fill_range_beg(g);
  return g;
}

Index count_via_isa(const GadgetInstance& g, Index j, Index v) {
  require_kind(g, GadgetKind::isa_count);
  const Index n = g.size;
  if (j < 0 || j > n) throw std::out_of_range("count prefix j=" + std::to_string(j) + " outside [0.." + std::to_string(n) + "]");
  if (v < 1) return j;
  if (v > n) return 0;
  const Index jp = n * (n + 1) + 2 * (n + 1) + j * (n + 1) + j * (j + 1) / 2 + (n + 2 - v);
  const Index b = g.range_beg[static_cast<std::size_t>(v - 1)];
  return g.bundle->isa[jp] - (b + j + 1);
}

GadgetInstance bwt_color_gadget(const std::vector<Index>& a, Index m) {
  check_set(a, m);
  const int k = ebin_width(m);
  const auto bounds = padded(a, m);
  std::vector<Symbol> t;
  for (Index i = 0; i <= m; ++i) {
    std::vector<Symbol> block{static_cast<Symbol>(i % 2)};
    const auto e = ebin(i, k);
    block.insert(block.end(), e.begin(), e.end());
    append_power(t, block, bounds[static_cast<std::size_t>(i + 1)] - bounds[static_cast<std::size_t>(i)]);
  }
  GadgetInstance g = finish(GadgetKind::bwt_color, a, m, std::move(t));
  g.anchors["m"] = m;
  g.anchors["k"] = k;
  g.anchors["b"] = range_beg_by_scan(g.text, ones_then_zero(k + 1));
  return g;
}

int color_via_bwt(const GadgetInstance& g, Index x) {
  require_kind(g, GadgetKind::bwt_color);
  const Index m = g.size;
  if (x < 1) return 0;
  if (x > m * m) return static_cast<int>(m % 2);
  return static_cast<int>(g.bundle->bwt[g.anchor("b") + x]);
}

GadgetInstance plcp_pred_gadget(const std::vector<Index>& a, Index m) {
  check_set(a, m);
  std::vector<Symbol> t;
  for (Index i = 1; i <= m; ++i) {
    append(t, 0, a[static_cast<std::size_t>(i - 1)]);
    append(t, 1, m - i + 2);
  }
  append(t, 0, m * m + 1);
  append(t, 1, 1);
  append(t, 0, m * m);
  append(t, 1, m + 2);
  GadgetInstance g = finish(GadgetKind::plcp_pred, a, m, std::move(t));
  g.anchors["m"] = m;
  g.anchors["delta"] = g.text.size() - (m * m + m + 2);
  return g;
}

PredAnswer pred_via_plcp(const GadgetInstance& g, Index x) {
  require_kind(g, GadgetKind::plcp_pred);
  if (auto early = out_of_band(g, x)) return *early;
  const Index m = g.size;
  const Index j = g.anchor("delta") + m * m - x + 1;
  return answer(g, (x + m + 1) - g.bundle->plcp.at(j));
}

GadgetInstance phi_pred_gadget(const std::vector<Index>& a, Index m) {
  check_set(a, m);
  const Index m2 = m * m;
  std::vector<Symbol> t;
  for (Index ai : a) {
    append(t, 0, ai);
    append(t, 1, m2 - ai + 2);
  }
  append(t, 0, m2 + 1);
  append(t, 1, 1);
  append(t, 0, m2);
  append(t, 1, m2 + 2);
  GadgetInstance g = finish(GadgetKind::phi_pred, a, m, std::move(t));
  g.anchors["m"] = m;
  g.anchors["delta"] = g.text.size() - 2 * (m2 + 1);
  return g;
}

PredAnswer pred_via_phi(const GadgetInstance& g, Index x) {
  require_kind(g, GadgetKind::phi_pred);
  if (auto early = out_of_band(g, x)) return *early;
  const Index m2 = g.size * g.size;
  const Index j = g.anchor("delta") + m2 - x + 1;
  return answer(g, ceil_div(g.bundle->phi.at(j), m2 + 2) - 1);
}

GadgetInstance ilf_pred_gadget(const std::vector<Index>& a, Index m) {
  check_set(a, m);
  const int k = ebin_width(m);
  const auto bounds = padded(a, m);
  std::vector<Symbol> t;
  for (Index i = 0; i <= m; ++i) {
    const Index e = bounds[static_cast<std::size_t>(i + 1)] - bounds[static_cast<std::size_t>(i)];
    const auto code = ebin(i, k);
    std::vector<Symbol> marked{1};
    marked.insert(marked.end(), code.begin(), code.end());
    append_power(t, marked, e);
    append_power(t, code, m * m - e);
  }
  GadgetInstance g = finish(GadgetKind::ilf_pred, a, m, std::move(t));
  g.anchors["m"] = m;
  g.anchors["k"] = k;
  g.anchors["alpha"] = range_beg_by_scan(g.text, ones_then_zero(k + 2));
  g.anchors["beta"] = range_beg_by_scan(g.text, ones_then_zero(k + 1));
  return g;
}

PredAnswer pred_via_ilf(const GadgetInstance& g, Index x) {
  require_kind(g, GadgetKind::ilf_pred);
  if (auto early = out_of_band(g, x)) return *early;
  const Index m2 = g.size * g.size;
  const Index y = g.bundle->ilf.at(g.anchor("alpha") + x) - g.anchor("beta");
  // Index 0 is a_0 = 0 of A with 0 added, which is -infinity for A itself.
  return answer(g, ceil_div(y, m2) - 1);
}

GadgetInstance phi_inverse_transform(const Text& text, Symbol sigma) {
  require_nonempty(text, "phi_inverse_transform");
  if (sigma == 0) throw std::invalid_argument("sigma must be at least 1");
  for (Symbol c : text.symbols()) {
    if (c >= sigma) {
      throw std::invalid_argument("symbol " + std::to_string(c) + " is not below sigma=" + std::to_string(sigma));
    }
  }
  // Blocks use the symbol 1 even for a unary input alphabet.
  const Symbol out_sigma = std::max<Symbol>(sigma, 2);
  std::vector<std::vector<Symbol>> blocks;
  for (Symbol c = 0; c < std::max(sigma, text.sigma()); ++c) {
    blocks.push_back({0, 0, 1, c < sigma ? sigma - 1 - c : 0, 1});
  }
  auto image = morphism_expand(text, blocks, out_sigma).text;

  GadgetInstance g;
  g.kind = GadgetKind::phi_inverse;
  g.size = text.size();
  g.source = text;
  g.text = image.appended(1);
  g.bundle = std::make_shared<const SuffixArrayBundle>(build_bundle(g.text));
  const auto sa = suffix_array(text);
  g.anchors["n"] = text.size();
  g.anchors["sigma"] = sigma;
  g.anchors["j_lexfirst"] = sa[1];
  g.anchors["j_lexlast"] = sa[text.size()];
  return g;
}

Index phi_via_invphi(const GadgetInstance& g, Index j) {
  require_kind(g, GadgetKind::phi_inverse);
  if (j < 1 || j > g.size) throw std::out_of_range("position " + std::to_string(j) + " outside [1.." + std::to_string(g.size) + "]");
  if (j == g.anchor("j_lexfirst")) return g.anchor("j_lexlast");
  return (g.bundle->inv_phi[1 + 5 * (j - 1)] - 1) / 5 + 1;
}

Index invphi_via_phi(const GadgetInstance& g, Index j) {
  require_kind(g, GadgetKind::phi_inverse);
  if (j < 1 || j > g.size) throw std::out_of_range("position " + std::to_string(j) + " outside [1.." + std::to_string(g.size) + "]");
  if (j == g.anchor("j_lexlast")) return g.anchor("j_lexfirst");
  return (g.bundle->phi[1 + 5 * (j - 1)] - 1) / 5 + 1;
}

Certificate gadget_certificate(const GadgetInstance& g) {
  Certificate c;
  auto& ph = c.factorization.phrases;
  // Literals for one copy of the block, then a single self-overlapping copy for the rest.
  auto power = [&](const std::vector<Symbol>& block, Index count, Index& start) {
    if (count <= 0) return;
    for (Symbol s : block) ph.push_back(Phrase::literal(s));
    const auto len = static_cast<Index>(block.size());
    if (count > 1) ph.push_back(Phrase::copy(start, (count - 1) * len));
    start += count * len;
  };

  switch (g.kind) {
    case GadgetKind::bwt_color: {
      const Index m = g.size;
      const int k = static_cast<int>(g.anchor("k"));
      const auto bounds = padded(g.input, m);
      Index start = 1;
      for (Index i = 0; i <= m; ++i) {
        std::vector<Symbol> block{static_cast<Symbol>(i % 2)};
        const auto e = ebin(i, k);
        block.insert(block.end(), e.begin(), e.end());
        power(block, bounds[static_cast<std::size_t>(i + 1)] - bounds[static_cast<std::size_t>(i)], start);
      }
      c.bound = (m + 1) * (2 * k + 5);
      break;
    }
    case GadgetKind::ilf_pred: {
      const Index m = g.size;
      const int k = static_cast<int>(g.anchor("k"));
      const auto bounds = padded(g.input, m);
      Index start = 1;
      for (Index i = 0; i <= m; ++i) {
        const Index e = bounds[static_cast<std::size_t>(i + 1)] - bounds[static_cast<std::size_t>(i)];
        const auto code = ebin(i, k);
        std::vector<Symbol> marked{1};
        marked.insert(marked.end(), code.begin(), code.end());
        power(marked, e, start);
        power(code, m * m - e, start);
      }
      c.bound = (m + 1) * (4 * k + 9);
      break;
    }
    case GadgetKind::phi_inverse: {
      // Image of the greedy parse of the input under the 5-symbol morphism, plus the final 1.
      const Symbol sigma = static_cast<Symbol>(g.anchor("sigma"));
      std::vector<std::vector<Symbol>> blocks;
      for (Symbol s = 0; s < std::max(sigma, g.source.sigma()); ++s) {
        blocks.push_back({0, 0, 1, s < sigma ? sigma - 1 - s : 0, 1});
      }
      c.factorization = morphism_expand(g.source, blocks, std::max<Symbol>(sigma, 2)).factorization;
      ph.push_back(Phrase::literal(1));
      c.bound = 5 * lz77_factorize(g.source).size() + 1;
      break;
    }
    default:
      c.factorization = run_length_factorization(g.text);
      c.bound = 2 * run_length_encode(g.text).size();
      break;
  }
  return c;
}

std::optional<Index> expected_text_length(const GadgetInstance& g) {
  const Index n = g.size, m = g.size;
  switch (g.kind) {
    case GadgetKind::lcp_select: return (n + 2) * (n + 1);
    case GadgetKind::isa_count: return (5 * n + 8) * (n + 1) / 2;
    case GadgetKind::bwt_color: return (2 * g.anchor("k") + 4) * m * m;
    case GadgetKind::phi_pred: return m * m * m + 3 * m * m + 2 * m + 4;
    case GadgetKind::ilf_pred: return m * m + (2 * g.anchor("k") + 3) * (m + 1) * m * m;
    case GadgetKind::phi_inverse: return 5 * n + 1;
    case GadgetKind::plcp_pred: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Index> expected_run_count(const GadgetInstance& g) {
  switch (g.kind) {
    case GadgetKind::lcp_select: return 2 * (g.size + 1);
    case GadgetKind::isa_count: return 4 * (g.size + 1);
    case GadgetKind::plcp_pred:
    case GadgetKind::phi_pred: return 2 * (g.size + 2);
    default: return std::nullopt;
  }
}

}  // namespace cstq
