#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_hahnfactor, m) {
  m.doc() = "exact factorisation machinery for generalised power series";
}
