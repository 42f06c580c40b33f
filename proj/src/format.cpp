#include "cesaro/format.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace cesaro {

namespace {

// number with optional sign: returns chars consumed, 0 if none
size_t scan_number(const std::string& s, size_t pos, double& out) {
  const char* start = s.c_str() + pos;
  char* end = nullptr;
  double v = std::strtod(start, &end);
  if (end == start) return 0;
  out = v;
  return static_cast<size_t>(end - start);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty complex literal");

  size_t pos = 0;
  double re = 0.0, im = 0.0;
  bool have_re = false, have_im = false;

  auto scan_part = [&](size_t p, double& value, bool& is_imag) -> size_t {
    double sign = 1.0;
    size_t q = p;
    if (q < s.size() && (s[q] == '+' || s[q] == '-')) {
      if (s[q] == '-') sign = -1.0;
      ++q;
    }
    if (q < s.size() && (s[q] == 'i' || s[q] == 'I') && q + 1 == s.size()) {
      value = sign;
      is_imag = true;
      return q + 1 - p;
    }
    double v;
    size_t used = scan_number(s, q, v);
    if (used == 0) return 0;
    q += used;
    is_imag = q < s.size() && (s[q] == 'i' || s[q] == 'I');
    if (is_imag) ++q;
    value = sign * v;
    return q - p;
  };

  while (pos < s.size()) {
    double v;
    bool is_imag = false;
    size_t used = scan_part(pos, v, is_imag);
    if (used == 0) throw ParseError("malformed complex literal: " + text);
    if (is_imag) {
      if (have_im) throw ParseError("duplicate imaginary part: " + text);
      im = v;
      have_im = true;
    } else {
      if (have_re) throw ParseError("duplicate real part: " + text);
      re = v;
      have_re = true;
    }
    pos += used;
  }
  if (!have_re && !have_im) throw ParseError("malformed complex literal: " + text);
  return {re, im};
}

std::string format_real(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_complex(Complex value, int digits) {
  if (value.imag() == 0.0) return format_real(value.real(), digits);
  std::string out = format_real(value.real(), digits);
  if (value.imag() >= 0.0) out += "+";
  out += format_real(value.imag(), digits);
  out += "i";
  return out;
}

}  // namespace cesaro
