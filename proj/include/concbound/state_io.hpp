#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "concbound/states.hpp"

namespace concbound {

// Text state format (UTF-8):
//
//   dims d1 d2 ... dN
//   kind pure|mixed
//   i re im          (pure: nonzero amplitudes, 0-based index)
//   i j re im        (mixed: nonzero upper-triangle entries, i <= j)
//
// Blank lines and `#` comments are ignored. Mixed matrices are completed
// Hermitian from the upper triangle.
using AnyState = std::variant<PureState, DensityMatrix>;

AnyState parse_state(std::string_view text);
AnyState read_state_file(const std::string& path);

void write_state(std::ostream& out, const PureState& psi);
void write_state(std::ostream& out, const DensityMatrix& rho);

DensityMatrix as_density(const AnyState& state);

}  // namespace concbound
