#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "grass/code.hpp"
#include "grass/ferrers.hpp"

namespace grass {

/// `cdc v1 q= n= k= d= count=` then one block of k digit rows per codeword,
/// blocks separated by a blank line.
std::string format_cdc(const Cdc& c);
/// ParseError carries the 1-based line; non-RREF generators are rejected.
Cdc parse_cdc(std::string_view text);

/// `fdrm v1 q= m= n= delta= dim= F=[..]` then one m x n block per basis matrix.
std::string format_fdrm(const FdrmCode& c);
FdrmCode parse_fdrm(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace grass
