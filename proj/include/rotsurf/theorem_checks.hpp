#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsurf/rotational_surfaces.hpp"

namespace rotsurf {

// Identifiers of the verifiable statements; these tokens are the CLI
// vocabulary. T1..T8 are the classification statements per kind, C1/C2 the
// two corollaries about minimal members of the elliptic/hyperbolic kinds.
enum class TheoremId { T1, T2, T3, T4, T5, T6, T7, T8, C1, C2 };

std::optional<TheoremId> theorem_id_from_string(const std::string& token);
std::string to_string(TheoremId id);
std::vector<TheoremId> all_theorem_ids();

struct CheckLine {
  std::string name;
  bool pass = false;
  double measured = 0.0;  // the quantity compared against tol
  double tol = 0.0;
  std::string note;
};

struct TheoremReport {
  TheoremId id = TheoremId::T1;
  std::string description;
  std::vector<CheckLine> lines;
  bool all_pass() const;
};

struct TheoremOptions {
  // When set, the checks run on this instance instead of the canonical ones
  // (the instance must be of the kind the statement is about).
  std::optional<SurfaceSpec> instance;
  int s_count = 25;
  double margin_fraction = 0.05;
};

TheoremReport verify_theorem(TheoremId id, const TheoremOptions& opts = {});

}  // namespace rotsurf
