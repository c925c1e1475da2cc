#pragma once

#include <fstream>
#include <string>

#include "domcount/golden.hpp"
#include "json.hpp"

inline nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(domcount::default_data_dir() / name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return nlohmann::json::parse(in);
}
