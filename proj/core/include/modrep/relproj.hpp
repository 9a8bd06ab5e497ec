#pragma once

#include <optional>
#include <vector>

#include "modrep/endo.hpp"
#include "modrep/module.hpp"

namespace modrep {

/// Tr_{H,G}(alpha) = sum over s in G/H of rho_W(s) alpha rho_U(s)^-1, for
/// alpha: U -> W commuting with H. Throws NotHEquivariant.
Matrix trace_map(const Matrix& alpha, const Module& u, const Module& w, const Subgroup& h);

/// Maps F: U -> U|_H|^G and G: U|_H|^G -> U with G F = 1.
struct SplitCertificate {
  Matrix into;
  Matrix back;
};

struct RelProjCertificate {
  bool verdict = false;
  /// H-endomorphism with trace identity, when the verdict is true.
  std::optional<Matrix> alpha;
  /// Summand criterion, computed independently.
  bool cross_check = false;
  std::optional<SplitCertificate> split;
};

/// Higman criterion (id in the image of the trace on End_H) together with
/// the summand criterion (U | U|_H|^G). Throws CriteriaDisagree if they
/// differ.
RelProjCertificate is_relatively_projective(const Module& u, const Subgroup& h, std::uint64_t seed = 0);

/// Only the Higman criterion.
bool higman_criterion(const Module& u, const Subgroup& h, Matrix* alpha = nullptr);
/// Only the summand criterion, with maps when it holds.
std::optional<SplitCertificate> summand_criterion(const Module& u, const Subgroup& h, std::uint64_t seed = 0);

/// For p not dividing |G:H|: checks that alpha = |G:H|^-1 id has trace id
/// and that the full test agrees. Throws IndexDivisibleByP.
bool sylow_implies_relproj_check(const Module& u, const Subgroup& h);

struct SourceEntry {
  Module module;  // over standalone(vertex).group
  std::size_t multiplicity = 0;
  SplitCertificate split;  // U -> S|^G -> U
};

struct VertexReport {
  Subgroup vertex;
  std::size_t class_id = 0;                  // index into classes
  std::vector<Subgroup> classes;             // p-subgroup classes
  std::vector<bool> relatively_projective;   // verdict per class
  std::vector<SourceEntry> sources;
};

/// Vertex and sources of an indecomposable module. Throws NotIndecomposable,
/// or SearchBudgetExceeded past `max_classes` p-subgroup classes.
VertexReport vertex(const Module& u, std::uint64_t seed = 0, std::size_t max_classes = 10000);

/// Summands S of U|_Q with U | S|^G, checked to form one N_G(Q)-orbit.
/// Throws NoSourceFound.
std::vector<SourceEntry> sources(const Module& u, const Subgroup& q, std::uint64_t seed = 0);

/// For indecomposable U: F: U -> W, G: W -> U with G F = 1, when U | W.
std::optional<SplitCertificate> indecomposable_summand_maps(const Module& u, const Module& w);

}  // namespace modrep
