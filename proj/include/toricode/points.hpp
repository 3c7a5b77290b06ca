#pragma once

#include <vector>

#include "toricode/toric.hpp"

namespace toricode {

// One representative of a class [P] in T_X together with its canonical key:
// coords = (t^{q_1}, ..., t^{q_r}) for t = (eta^{h_1}, ..., eta^{h_s}), and
// key = h * (Q phi) mod (q-1), the discrete logs of the pi-image. Two
// parameter vectors hit the same torus class iff their keys agree.
struct TorusPoint {
  std::vector<Field::Elem> coords;  // length r, all nonzero
  std::vector<int> key;             // length n, entries in [0, q-2]
};

// All classes of Y_Q, deduplicated by key (first representative in
// lexicographic h-order wins), sorted by key.
std::vector<TorusPoint> enumeratePoints(const ToricInstance& inst);

// |P| = |{h in {0..q-2}^s : h Q phi = 0 mod q-1}| = |ker(phi_Q)|.
long long kernelSizeCount(const ToricInstance& inst);

// |Y_Q| = (q-1)^s / |P| with P = {h : h Q phi = 0 mod q-1}, by enumeration.
long long lengthCount(const ToricInstance& inst);

// |Y_Q| as the image size of Q phi over Z/(q-1), off the Smith normal form;
// no enumeration.
Int lengthSnf(const ToricInstance& inst);

}  // namespace toricode
