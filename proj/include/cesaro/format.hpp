#pragma once

#include <string>

#include "cesaro/types.hpp"

namespace cesaro {

// Parses "a+bi" / "a-bi" with optional parts: "3", "-2.5", "1e-3+2i", "i",
// "-i", "0.5-0.25i".  Throws DomainError on anything else.
Complex parse_complex(const std::string& text);

// "a+bi" rendering with the given significant digits; pure-real values are
// emitted without the imaginary part.
std::string format_complex(Complex value, int digits = 17);

std::string format_real(double value, int digits = 17);

}  // namespace cesaro
