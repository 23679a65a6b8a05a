#pragma once

// Umbrella header for the selfco decision-engine library.
//
// The library answers, from an audited fact base, three families of question
// about maps between spheres and sphere space forms:
//
//   * suspension behaviour — injectivity, surjectivity, and the kernel of
//     E: pi_{m-1}(S^{n-1}) -> pi_m(S^n), plus Hopf-invariant range checks;
//   * the Wecken condition WeC(m,n) for coincidence theory;
//   * self-coincidence invariants N#(f,f), MCC(f,f), MC(f,f), looseness and
//     looseness by small deformation for maps S^m -> S^n/G.
//
// Everything is header-only; the bundled fact files are embedded at build
// time and can be overridden at runtime (see kb.hpp).

#include "selfco/core.hpp"
#include "selfco/condition.hpp"
#include "selfco/fact_file.hpp"
#include "selfco/kb.hpp"
#include "selfco/homotopy.hpp"
#include "selfco/ehp.hpp"
#include "selfco/kervaire.hpp"
#include "selfco/wecken.hpp"
#include "selfco/analyzer.hpp"
#include "selfco/table_view.hpp"
#include "selfco/selftest.hpp"
#include "selfco/report.hpp"
