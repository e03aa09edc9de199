// Products of minuscule Hecke operators for GL_3, symbolically and by
// counting cosets at q = 2.

#include <iostream>

#include "heckelab/hecke.hpp"
#include "heckelab/hecke_oracle.hpp"

int main() {
  using namespace heckelab;
  const int n = 3;
  for (int r = 1; r <= n; ++r)
    for (int s = r; s <= n; ++s) {
      std::cout << "T^(" << r << ") T^(" << s << ") = " << minuscule_product(n, r, s).str() << "\n";
      std::cout << "  at q=2:";
      for (const auto& [w, m] : product_oracle(n, r, s, 2)) std::cout << " " << w.str() << ":" << m;
      std::cout << "\n";
    }
}
