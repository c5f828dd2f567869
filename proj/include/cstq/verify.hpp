#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cstq/gadgets.hpp"

namespace cstq {

// Outcome of checking gadget query mappings against definitional answers.
// Counts add up and the per-instance figures keep their maximum, so merging is
// associative; first_failure keeps the earliest instance's message.
struct ReductionReport {
  GadgetKind kind{};
  Index instances = 0;
  Index queries = 0;
  Index mismatches = 0;
  Index structural_failures = 0;  // closed forms, anchors, certificates
  Index max_text_length = 0;
  Index max_runs = 0;
  Index max_lz_phrases = 0;
  Index max_certificate_phrases = 0;
  Index max_certificate_bound = 0;
  std::optional<std::string> first_failure;

  bool passed() const { return mismatches == 0 && structural_failures == 0; }
  void merge(const ReductionReport& other);
};

// Runs every query of the instance's domain, plus a few out-of-band ones,
// through the gadget mapping and an independent oracle.
ReductionReport verify_reduction(const GadgetInstance& g);

// Builds the instance of `kind` for an input: a permutation, a set with m, or a text.
GadgetInstance make_gadget(GadgetKind kind, const std::vector<Index>& input, Index size);

struct VerifyPlan {
  GadgetKind kind{};
  Index size = 1;          // n or m
  bool exhaustive = false;  // all inputs of exactly this size
  Index trials = 100;       // otherwise: random inputs with size drawn from [1..size]
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

// Inputs as plain integer vectors; for phi-inverse a binary text.
std::vector<std::vector<Index>> plan_inputs(const VerifyPlan& plan);
ReductionReport verify_plan(const VerifyPlan& plan);

// Uniform draw from [0, bound) that does not depend on the standard library's
// distribution algorithms, so seeds reproduce across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
std::vector<Index> random_permutation(std::mt19937_64& rng, Index n);
// Sorted m-subset of [1..m^2].
std::vector<Index> random_set(std::mt19937_64& rng, Index m);

}  // namespace cstq
