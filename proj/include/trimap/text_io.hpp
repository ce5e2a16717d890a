#pragma once

#include <string>
#include <string_view>

#include "trimap/dynamics.hpp"
#include "trimap/hofstadter.hpp"
#include "trimap/markov.hpp"

namespace trimap {

/// "a/b,c/d,e/f" (whitespace tolerated). Throws Error(ParseError); does not
/// check membership in A.
Vec3Q parse_shape(std::string_view text);

/// Nine entries row-major, separated by whitespace and/or commas, or a JSON
/// document {"matrix": [[..],[..],[..]]} whose entries are integers or
/// rational strings. Throws Error(ParseError).
Mat3Q parse_matrix(std::string_view text);

/// Header "cells=N" followed by one block per cell:
///   cell <i> unfold=<word>
///     <vertex>   (three lines, preimages of b, v2, v3)
std::string format_partition(const MarkovPartition& mp);

/// The same content as a JSON document.
std::string partition_to_json(const MarkovPartition& mp);

/// Symbols as digits when the alphabet has at most ten letters, otherwise
/// space separated; " boundary=i,j,..." appended when the orbit touched a
/// cell boundary.
std::string format_itinerary(const Itinerary& it, std::size_t alphabet);

/// One iterate per line ("<n> <shape>") then
/// "preperiod=.. period=.. flat=.. right=..".
std::string format_orbit(const OrbitRecord& rec);

/// "r=r1,r2,r3 antipedal=..." then one factor matrix per line.
std::string format_decomposition(const HofstadterDecomposition& d);

}  // namespace trimap
