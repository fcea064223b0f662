#include "centrality/parallel.hpp"

#include <cstdlib>
#include <string>

namespace centrality {

int default_workers() {
  if (const char* env = std::getenv("CENTRALITY_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (...) {
      // fall through to hardware concurrency
    }
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace centrality
