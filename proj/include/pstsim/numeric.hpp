#pragma once

namespace pst {

/// Global numeric tolerances. Defaults are double-precision-safe; tests and
/// callers with unusual needs may adjust the singleton.
struct NumericPolicy {
  double trace_tol = 1e-10;           // |Tr(rho) - 1| after channel application
  double herm_tol = 1e-10;            // max |rho - rho^dag|
  double psd_tol = 1e-8;              // -min eigenvalue allowed (test paths)
  double unitary_tol = 1e-12;         // max |U^dag U - I|
  double kraus_construct_tol = 1e-12; // completeness of freshly built channels
  double kraus_apply_tol = 1e-10;     // completeness required by apply_kraus
  double unitary_trace_tol = 1e-12;   // trace drift allowed in apply_unitary
  double imag_tol = 1e-10;            // imaginary residue allowed in expectation
};

NumericPolicy& numeric_policy();

}  // namespace pst
