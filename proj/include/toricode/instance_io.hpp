#pragma once

#include <optional>
#include <string>

#include "toricode/toric.hpp"

namespace toricode {

// JSON instance file: {"q": int, "phi": [[int]], "Q": [[int]],
// "beta": [[int]]?, "alpha": [int]?, "guards": {"enumeration": int?,
// "distance": int?, "groebner": int?}?}.
struct InstanceFile {
  int q = 0;
  IntMat phi;
  IntMat qmat;
  std::optional<IntMat> beta;
  std::optional<IntVec> alpha;
  Guards guards;

  ToricInstance toInstance() const {
    return ToricInstance(q, phi, qmat, beta, guards);
  }
};

InstanceFile parseInstanceText(const std::string& text);
InstanceFile loadInstanceFile(const std::string& path);

}  // namespace toricode
