#pragma once

#include <string>

#include "relcx/io.hpp"

namespace relcx::testing {

inline std::string fixture_path(const std::string& name) { return std::string(RELCX_FIXTURES) + "/" + name; }

inline Document load_fixture(const std::string& name) { return parse(read_file(fixture_path(name))); }

}  // namespace relcx::testing
