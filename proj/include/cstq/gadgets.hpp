#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cstq/measures.hpp"
#include "cstq/suffix_array.hpp"
#include "cstq/text.hpp"

namespace cstq {

enum class GadgetKind { lcp_select, isa_count, bwt_color, plcp_pred, phi_pred, ilf_pred, phi_inverse };

inline constexpr GadgetKind kAllGadgetKinds[] = {
    GadgetKind::lcp_select, GadgetKind::isa_count, GadgetKind::bwt_color, GadgetKind::plcp_pred,
    GadgetKind::phi_pred,   GadgetKind::ilf_pred,  GadgetKind::phi_inverse};

std::string_view to_string(GadgetKind kind);
// Throws std::invalid_argument on unknown names.
GadgetKind parse_gadget_kind(std::string_view name);

// Count_A(j, v) = #{i <= j : A[i] >= v}, by direct scan.
Index range_count(const std::vector<Index>& a, Index j, Index v);
// Select_A(r, v) = r-th smallest i with A[i] >= v, by direct scan; nullopt if fewer than r.
std::optional<Index> range_select(const std::vector<Index>& a, Index r, Index v);

// 1 + floor(log2 m): bits needed for 0..m.
int ebin_width(Index m);
// Big-endian, k bits with leading zeros.
std::vector<Symbol> bin(Index x, int k);
// 1^{k+1} 0 bin_k(x) 0, length 2k+3.
std::vector<Symbol> ebin(Index x, int k);

// A constructed reduction text with the constants its query mapping needs.
// The bundle of the gadget text supplies the array the mapping reads from.
struct GadgetInstance {
  GadgetKind kind{};
  std::vector<Index> input;  // permutation A[1..n] or set a_1 < ... < a_m
  Index size = 0;            // n for permutations and texts, m for sets
  Text source;               // input text (phi-inverse only)
  Text text;
  std::map<std::string, Index> anchors;
  std::vector<Index> range_beg;  // range_beg[v-1] = RangeBeg(0^v 1), v in [1..n]
  std::shared_ptr<const SuffixArrayBundle> bundle;

  // Throws std::out_of_range for unknown names.
  Index anchor(const std::string& name) const;
};

// Predecessor answer as an index into a_0..a_m; index 0 is -infinity.
struct PredAnswer {
  Index index = 0;
  std::optional<Index> value;
  friend bool operator==(const PredAnswer&, const PredAnswer&) = default;
};

// Throws std::invalid_argument unless `a` is a permutation of 1..n, n >= 1.
GadgetInstance lcp_select_gadget(const std::vector<Index>& a);
// v <= 0 is treated as 1. Throws std::out_of_range when r is not in [1..Count_A(n, v)].
Index select_via_lcp(const GadgetInstance& g, Index v, Index r);

GadgetInstance isa_count_gadget(const std::vector<Index>& a);
// Throws std::out_of_range unless 0 <= j <= n.
Index count_via_isa(const GadgetInstance& g, Index j, Index v);

// Set gadgets take a_1 < ... < a_m in [1..m^2]; they throw std::invalid_argument otherwise.
GadgetInstance bwt_color_gadget(const std::vector<Index>& a, Index m);
int color_via_bwt(const GadgetInstance& g, Index x);

GadgetInstance plcp_pred_gadget(const std::vector<Index>& a, Index m);
PredAnswer pred_via_plcp(const GadgetInstance& g, Index x);

GadgetInstance phi_pred_gadget(const std::vector<Index>& a, Index m);
PredAnswer pred_via_phi(const GadgetInstance& g, Index x);

GadgetInstance ilf_pred_gadget(const std::vector<Index>& a, Index m);
PredAnswer pred_via_ilf(const GadgetInstance& g, Index x);

// T' = s(T[1]) ... s(T[n]) 1 with s(a) = 0 0 1 (sigma-1-a) 1.
// Throws std::invalid_argument if a symbol of `text` is >= sigma.
GadgetInstance phi_inverse_transform(const Text& text, Symbol sigma);
// Throws std::out_of_range unless 1 <= j <= n.
Index phi_via_invphi(const GadgetInstance& g, Index j);
Index invphi_via_phi(const GadgetInstance& g, Index j);

// The LZ77-like factorization the construction suggests, and the phrase bound it certifies.
struct Certificate {
  LzFactorization factorization;
  Index bound = 0;
};
Certificate gadget_certificate(const GadgetInstance& g);

// Closed-form |T| and |RL(T)| of the construction; nullopt where there is none.
std::optional<Index> expected_text_length(const GadgetInstance& g);
std::optional<Index> expected_run_count(const GadgetInstance& g);

}  // namespace cstq
