#pragma once

#include <map>
#include <string>

namespace mf {

// Bundled fixture corpus: name -> JSON text (generated from fixtures/).
const std::map<std::string, std::string>& fixture_corpus();

}  // namespace mf
