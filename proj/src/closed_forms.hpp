#pragma once

#include "engine.hpp"

namespace parity {

// Explicit formulas for PLi in depth two and three.  The compact forms keep
// Li(1/z) factors and reversed depth-two arguments; the canonical forms are
// rewritten with stuffle swaps and depth-one inversion only.
PliResult pli_depth2_closed(int n1, int n2, Form form = Form::Canonical);
PliResult pli_depth3_closed(int n1, int n2, int n3, Form form = Form::Canonical);

// Canonical PLi of depth <= 2 computed from the closed formulas alone.
LinComb closed_provider(const IndexVector& m);

}  // namespace parity
