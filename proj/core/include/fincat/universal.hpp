#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/finset.hpp"

namespace fincat {

enum class UniversalKind { Terminal, Initial, Product, Sum, Equalizer, Coequalizer, Exponential, PullbackSquare };

/// Accepts terminal, initial, product, sum, equalizer, coequalizer,
/// exponential, pullback-square; throws UnknownKind otherwise.
UniversalKind parse_universal_kind(std::string_view name);
std::string_view to_string(UniversalKind kind);

/// A claimed universal object in finite sets together with its structure
/// maps and the data it is universal for.
///
///   product / sum:        maps = {π1, π2} / {ι1, ι2},  factors = {A, B}
///   equalizer:            maps = {e},   inputs = {f, g}
///   coequalizer:          maps = {q},   inputs = {f, g}
///   exponential:          maps = {eval: E×A → B},  factors = {A, B}
///   pullback-square:      maps = {p1, p2},  inputs = {f: A→C, g: B→C}
struct UniversalCandidate {
  UniversalKind kind;
  FinSetObj object;
  std::vector<FinFn> maps;
  std::vector<FinFn> inputs;
  std::vector<FinSetObj> factors;
};

UniversalCandidate candidate(const ProductCone& p);
UniversalCandidate candidate(const SumCocone& s);
UniversalCandidate candidate(const EqualizerCone& e, const FinFn& f, const FinFn& g);
UniversalCandidate candidate(const CoequalizerCocone& q, const FinFn& f, const FinFn& g);
UniversalCandidate candidate(const ExponentialObject& e);
UniversalCandidate candidate(const PullbackCone& p, const FinFn& f, const FinFn& g);

struct UniversalReport {
  bool pass = true;
  std::string witness;
  /// Number of (test object, map family) instances examined.
  std::size_t instances = 0;
};

/// Checks existence and uniqueness of mediating maps against every test set
/// {0..k-1}, k ≤ bound, and every relevant family of maps out of / into it.
UniversalReport fs_verify_universal(const UniversalCandidate& c, std::size_t bound);

/// Universal property of a slice exponential against every slice object
/// Z → A with |Z| ≤ bound and every map Z ×_A Y → X over A.
UniversalReport verify_slice_exponential(const SliceExponential& s, std::size_t bound);

}  // namespace fincat
