#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "probe/frontend/parser.hpp"
#include "probe/frontend/property.hpp"

namespace probe::testing {

inline std::string corpus_path(const std::string& name) { return std::string(PROBE_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream in(corpus_path(name));
  if (!in) throw std::runtime_error("missing corpus file " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::shared_ptr<const frontend::Program> program(std::string_view source) {
  return std::make_shared<const frontend::Program>(frontend::parse_program(source));
}

inline std::shared_ptr<const frontend::Program> corpus_program(const std::string& name) {
  return program(read_corpus(name + ".pgcl"));
}

inline frontend::Property bound(const std::string& text, const frontend::Program& p) {
  return frontend::bind(frontend::parse_property(text), p);
}

}  // namespace probe::testing
