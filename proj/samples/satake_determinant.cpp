// The intersection matrix for n = 3, its determinant after the Satake
// specialisation, and the q-deformed identity behind it.

#include <iostream>

#include "heckelab/matrix_m.hpp"
#include "heckelab/resultant.hpp"

int main() {
  using namespace heckelab;
  const int n = 3;
  std::cout << format_matrix(intersection_matrix_terms(n), MatrixFormat::Pretty) << "\n";

  const DetPi d = det_m_pi(n);
  std::cout << "det M_pi = (" << d.value.num.str() << ") * s_3^" << d.value.sn_power << "\n";
  std::cout << "sign relative to the closed form: " << d.sign << "\n";

  const AppendixCCheck c = verify_appendix_c(n);
  std::cout << "resultant product: " << c.resultant_product << ", reduction: " << c.reduction
            << ", closed form: " << c.closed_form << "\n";
}
