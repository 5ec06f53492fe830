#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jep/graph.hpp"

namespace jep {

/// Raised when a search exhausts its node-expansion budget. A budget miss is
/// never reported as "no match".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

/// A forbidden configuration. The pattern graph carries the vertex colors and
/// the REQUIRED edges; `forbidden` lists pairs that must map to non-edges; all
/// other pairs are don't-care.
///
/// Injective patterns match by monomorphism. Non-injective patterns let any
/// two vertices share a host vertex except the pairs listed in `distinct`;
/// this is the implicit form of the pattern's quotient closure.
struct ConstraintPattern {
  std::string name;
  ColoredGraph graph;
  std::vector<Edge> forbidden;
  bool injective = true;
  std::vector<Edge> distinct;

  std::size_t size() const { return graph.size(); }
};

/// Throws std::invalid_argument when the pattern breaks its invariants.
void validate(const ConstraintPattern& p);

/// All non-edges of g listed as forbidden.
ConstraintPattern induced_pattern(const ColoredGraph& g, std::string name = {});

/// Pattern vertex -> host vertex.
using Embedding = std::vector<VertexId>;

enum class ColorMatch {
  kContain,  // pattern colors are a subset of host colors
  kExact,
};

struct MatchOptions {
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::uint64_t budget = kDefaultBudget;
  ColorMatch colors = ColorMatch::kContain;
};

/// Every map satisfying the pattern, sorted lexicographically by image tuple
/// (when `limit` truncates, the first ones found in search order).
std::vector<Embedding> match_pattern(const ConstraintPattern& p, const ColoredGraph& g,
                                     const MatchOptions& opts = {});

std::optional<Embedding> find_match(const ConstraintPattern& p, const ColoredGraph& g,
                                    const MatchOptions& opts = {});

/// Injective, color-respecting map of h into g preserving edges and non-edges.
bool contains_induced(const ColoredGraph& h, const ColoredGraph& g,
                      ColorMatch colors = ColorMatch::kContain);

std::optional<Embedding> find_induced(const ColoredGraph& h, const ColoredGraph& g,
                                      ColorMatch colors = ColorMatch::kContain);

/// Color-exact isomorphism test.
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// Keeps one representative per color-exact isomorphism class (first seen).
std::vector<ColoredGraph> dedupe_isomorphic(std::vector<ColoredGraph> graphs);

class ExpansionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Injective patterns equivalent to p: one per admissible identification of
/// vertices (all partitions that respect `distinct` and put no required edge
/// inside a class). Identity only for injective patterns.
std::vector<ConstraintPattern> quotients(const ConstraintPattern& p,
                                         std::size_t cap = 100'000);

/// Fully induced patterns obtained by deciding every don't-care pair, after
/// quotient expansion, deduplicated up to isomorphism. Throws
/// ExpansionCapExceeded when a pattern has more than `max_free_pairs`
/// don't-care pairs.
std::vector<ConstraintPattern> expand_noninduced(const ConstraintPattern& p,
                                                 std::size_t max_free_pairs = 16);

}  // namespace jep
