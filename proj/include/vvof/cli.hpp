#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vvof {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point behind the vvof executable. args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Output root: $VVOF_OUT when set, otherwise "vvof_out".
std::string default_output_dir();

}  // namespace vvof
