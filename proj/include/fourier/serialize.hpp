#pragma once

#include <ostream>
#include <string>

#include "fourier/code.hpp"

namespace fourier {

/// Aligned, human-readable rendering of a code and its matrices.
void write_text(std::ostream& os, const FourierCode& code);

/// Single JSON document with keys
/// {p, n, k, lambda, alpha, sqrtN, j, H, G, d_bound, d_exact}.
std::string to_structured(const FourierCode& code, int indent = 2);

/// Rebuilds the code from its parameters and checks every stored field
/// against the reconstruction. Throws Parse on malformed or inconsistent input.
FourierCode from_structured(const std::string& document);

} // namespace fourier
