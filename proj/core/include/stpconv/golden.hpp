#pragma once

#include <string>
#include <vector>

#include "stpconv/conv.hpp"
#include "stpconv/cubic.hpp"
#include "stpconv/grid.hpp"

namespace stpconv::golden {

inline constexpr double kTolerance = 1e-9;

/// Inputs of the bundled reference cases.
namespace fixtures {
MaskedGrid image_3x4();         // fully defined baseline image
Kernel2D kernel_2x2();          // shared 2x2 kernel
MaskedGrid irregular_4x4();     // irregularly shaped image on a 4x4 canvas
MaskedGrid damaged_3x4();       // one destroyed cell
MaskedGrid proportional_5x5();  // enlarged image, convolved with 3x3 fields
MaskedCube cube_3x4x2();
MaskedGrid cube_kernel();       // slice-stacked 6x2 form of the 2x2x3 kernel
}  // namespace fixtures

/// Recorded reference outputs, exactly as published with their worked
/// examples (prefactors already applied).
namespace reference {
MaskedGrid classical_s();     // 4x5
MaskedGrid stp_s();           // 4x5, published with a 1/4 prefactor
MaskedGrid irregular_s();     // 5x5, 1/12 prefactor, undefined corners
MaskedGrid damaged_s();       // 4x5, 1/12 prefactor
MaskedGrid proportional_s();  // 3x3, 1/36 prefactor
MaskedGrid cubic_s();         // 8x5, 1/6 prefactor
MaskedGrid cubic_psi();       // 48x10 receptive-field block matrix
SelectorMatrix xi_5_2_1();    // 6x10 window selector
}  // namespace reference

struct CaseResult {
  std::string name;
  bool shape_ok = false;
  bool pattern_ok = false;
  double max_deviation = 0;
  bool pass = false;
};

CaseResult compare_case(const std::string& name, const MaskedGrid& actual,
                        const MaskedGrid& expected);

/// Recomputes all six reference cases and compares each against its recorded
/// matrix at kTolerance.
std::vector<CaseResult> run_all();

/// Human-readable report; one line per case plus a summary line.
std::string format_report(const std::vector<CaseResult>& results);

}  // namespace stpconv::golden
