#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "tautilt/algebra.hpp"

namespace tautilt::testing {

inline std::string algebra_path(const std::string& name) { return std::string(TAUTILT_ALGEBRA_DIR) + "/" + name + ".json"; }

inline std::shared_ptr<const Algebra> load_algebra(const std::string& name) {
  std::ifstream in(algebra_path(name));
  if (!in) throw std::runtime_error("cannot open " + algebra_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

}  // namespace tautilt::testing
