#pragma once

// Plain-text file formats and report number formatting.
//
// Ray file:    `dim <d>` header, then `ray <label> <c1> ... <cd>` lines.
// State file:  either `matrix` followed by d rows of d entries, or
//              `spectrum <p1> ... <pd>` optionally followed by `basis` and
//              d basis-vector rows.
// Components are `<re>` or `<re>,<im>`; `#` starts a comment, blank lines
// are skipped.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ctx/linalg.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

struct RayFileOptions {
  Tolerances tol{};
  bool auto_normalize = false;
};

RaySet parse_ray_file(std::istream& in, const RayFileOptions& opt = {});
RaySet load_ray_file(const std::string& path, const RayFileOptions& opt = {});

// 17 significant digits per component, so a reparse restores the doubles
// exactly.
std::string emit_ray_file(const RaySet& rays);

DensityMatrix parse_state_file(std::istream& in, const Tolerances& tol = {});
DensityMatrix load_state_file(const std::string& path, const Tolerances& tol = {});

// One `<label> <label>` pair per line.
std::vector<std::pair<std::string, std::string>> parse_edge_list(std::istream& in);
std::vector<std::pair<std::string, std::string>> load_edge_list(const std::string& path);

// Canonical 12-significant-digit rounding used by every report format, so
// text, machine and csv renderings carry identical values.
double round_sig12(double x);
std::string format_sig12(double x);
std::string format_sig17(double x);

}  // namespace ctx
