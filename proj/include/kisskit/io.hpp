// Text formats: .kcfg point configurations, .kcol planar colorings, .kpak
// periodic packings and 18-line code files.  Writers emit canonical scalar
// tokens and readers reject anything else, so read followed by write
// reproduces the input bytes.

#pragma once

#include <string>

#include "kisskit/kiss9.hpp"
#include "kisskit/pack5.hpp"
#include "kisskit/pointset.hpp"

namespace kisskit {

std::string write_kcfg(const PointConfiguration& c);
PointConfiguration read_kcfg(const std::string& text, const std::string& name = "");

std::string write_kcol(const ColoredConfig2D& cc);
ColoredConfig2D read_kcol(const std::string& text, const std::string& name = "");

/// Basis rows may carry a radical (assembled packings do).
std::string write_kpak(const PeriodicPacking& p);
PeriodicPacking read_kpak(const std::string& text, const std::string& name = "");

std::string write_code(const BinaryCode& code);
BinaryCode read_code(const std::string& text);

/// Io on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
/// File stem, used as the default object name.
std::string stem(const std::string& path);

}  // namespace kisskit
