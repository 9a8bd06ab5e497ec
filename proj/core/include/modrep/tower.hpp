#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modrep/endo.hpp"
#include "modrep/relproj.hpp"

namespace modrep {

/// Finite truncation G_0 <- G_1 <- ... <- G_L of a profinite group,
/// coarsest level first. maps[i] : G_{i+1} -> G_i.
class Tower {
 public:
  /// Throws LevelMismatch when the maps do not connect consecutive levels.
  Tower(std::vector<GroupPtr> levels, std::vector<QuotientMap> maps);

  std::size_t size() const { return levels_.size(); }
  std::size_t top() const { return levels_.size() - 1; }
  const GroupPtr& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<GroupPtr>& levels() const { return levels_; }
  const QuotientMap& map(std::size_t i) const { return maps_.at(i); }
  /// G_L -> G_i.
  const QuotientMap& from_top(std::size_t i) const { return from_top_.at(i); }
  /// Every connecting kernel is a p-group.
  bool kernels_are_p_groups(unsigned p) const;

 private:
  std::vector<GroupPtr> levels_;
  std::vector<QuotientMap> maps_;
  std::vector<QuotientMap> from_top_;
};

/// H_i <= G_i with maps[i](H_{i+1}) = H_i. Throws IncompatibleSubgroupTower.
void validate_subgroup_tower(const Tower& t, const std::vector<Subgroup>& h);
/// The images of H_L at every level.
std::vector<Subgroup> image_tower(const Tower& t, const Subgroup& top);

struct ModuleTower {
  Tower tower;
  std::vector<Module> levels;        // U_i over G_i
  std::vector<Matrix> projections;   // projections[i] : U_{i+1} -> U_i
  std::vector<Matrix> sections;      // right inverses of projections
};

/// Iterated coinvariants of `base` (over the top level), checked against
/// the direct coinvariants from the top. Throws LevelMismatch.
ModuleTower build_module_tower(const Tower& t, const Module& base);

struct LevelSummary {
  std::size_t summand_count = 0;
  std::vector<std::size_t> summand_dims;       // sorted
  std::vector<std::size_t> field_degrees;      // [End(X)/Rad : k] per summand, sorted
  std::optional<std::size_t> vertex_order;     // indecomposable levels, when requested
};

struct TowerReport {
  std::vector<LevelSummary> levels;
  std::size_t stabilization_level = 0;
};

struct StabilizationOptions {
  std::uint64_t seed = 0;
  bool with_vertex = false;
};

/// When every connecting kernel is a p-group, a finer level never has more
/// summands than a coarser one; throws MonotonicityViolated otherwise.
TowerReport stabilization_report(const ModuleTower& mt, const StabilizationOptions& opt = {});

struct LevelwiseRelProj {
  std::vector<bool> verdicts;
  bool uniform = true;
};
LevelwiseRelProj levelwise_relproj(const ModuleTower& mt, const std::vector<Subgroup>& h, std::uint64_t seed = 0);

struct LevelHypothesis {
  bool holds = false;
  std::string reason;
};

/// G_i a p-group, or H_i subnormal in G_i of p-power index.
LevelHypothesis green_hypothesis(const Subgroup& h, unsigned p);

struct GreenReport {
  std::vector<LevelHypothesis> hypothesis;
  bool hypotheses_hold = true;
  bool v_absolutely_indecomposable = true;
  std::vector<std::size_t> summand_counts;
  std::vector<std::size_t> field_degrees;  // 0 at decomposable levels
  std::vector<bool> exchange_holds;        // (V|^G)_N = V_{H cap N}|^{G/N}
  /// Every level indecomposable with End/Rad = k.
  bool conclusion_holds = true;
};

/// V over standalone(h.back()). With `strict`, a failed hypothesis throws
/// HypothesisViolated naming the level. `iso_budget` caps the enumeration
/// in iso_test before the exact Krull-Schmidt comparison takes over.
GreenReport green_check(const Tower& t, const std::vector<Subgroup>& h, const Module& v, bool strict = false,
                        std::uint64_t seed = 0, std::uint64_t iso_budget = 1u << 16);

struct SummandsReport {
  std::vector<LevelHypothesis> hypothesis;
  bool hypotheses_hold = true;
  std::vector<std::size_t> summand_counts;
  std::vector<bool> all_isomorphic;
};

/// Whether the summands of V|^{G_i} are pairwise isomorphic at every level.
SummandsReport summands_isomorphic_check(const Tower& t, const std::vector<Subgroup>& h, const Module& v,
                                         bool strict = false, std::uint64_t seed = 0,
                                         std::uint64_t iso_budget = 1u << 16);

struct EndLevel {
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  std::size_t field_degree = 0;
};
struct EndTowerReport {
  std::vector<EndLevel> levels;
  /// Connecting maps send R_{i+1} into R_i.
  std::vector<bool> radical_into_radical;
  std::size_t stabilized_degree = 0;
};
/// Throws NotIndecomposableAtLevel.
EndTowerReport endo_tower(const ModuleTower& mt, std::uint64_t seed = 0);

/// From a certified splitting U_i | W_i at every level, a splitting
/// U_L | W_L whose coinvariant images split every level.
/// Throws HypothesisViolated when some level is not a summand.
struct LiftedSplitting {
  SplitCertificate top;
  std::vector<SplitCertificate> levels;
};
LiftedSplitting lift_splitting(const ModuleTower& u, const ModuleTower& w, std::uint64_t seed = 0);

/// Coinvariant identities at each level i, with N = ker(G_L -> G_i):
/// transitivity, additivity, induction exchange and restriction exchange.
struct CoinvariantLaws {
  std::vector<bool> transitivity;
  std::vector<bool> additivity;
  std::vector<bool> induction;
  std::vector<bool> restriction;
  bool all() const;
};
/// U, W over G_L; V over standalone(h) for h <= G_L.
CoinvariantLaws check_coinvariant_laws(const Tower& t, const Module& u, const Module& w, const Subgroup& h,
                                       const Module& v, std::uint64_t seed = 0);

}  // namespace modrep
