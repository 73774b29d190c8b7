#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "eslab/event_structure.hpp"

namespace fixtures {

inline eslab::EventStructureSpec pair_conc() {
  return {{"a", "b"}, {}, {}};
}

inline eslab::EventStructureSpec pair_conf() {
  return {{"a", "b"}, {}, {{"a", "b"}}};
}

inline eslab::EventStructureSpec chain3() {
  return {{"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {}};
}

inline eslab::EventStructureSpec fork() {
  return {{"r", "x", "y", "u", "v"},
          {{"r", "x"}, {"r", "y"}, {"x", "u"}, {"x", "v"}},
          {{"x", "y"}, {"u", "v"}}};
}

inline eslab::EventStructureSpec fig1() {
  return {{"1", "2", "3", "4", "5", "6", "7", "8", "9"},
          {{"1", "3"},
           {"1", "4"},
           {"2", "4"},
           {"2", "5"},
           {"3", "6"},
           {"3", "7"},
           {"5", "8"},
           {"5", "9"}},
          {{"6", "7"}, {"8", "9"}, {"3", "5"}}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(ESLAB_FIXTURE_DIR) + "/" + name;
}

}  // namespace fixtures
