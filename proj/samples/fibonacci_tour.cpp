// Walks through the golden-ratio hull: words, codings, factor classes and the symmetric points.

#include <iostream>

#include "sturmian/sturmian.hpp"

int main() {
  using namespace sturmian;
  Alpha g = Alpha::golden();

  for (int n = 1; n <= 6; ++n) std::cout << "s_" << n << " = " << build_sn(g, n).str() << "\n";

  HullPoint v0 = HullPoint::regular({});
  HullPoint v0p = HullPoint::prime(0);
  std::cout << "v_0(-10..10)  " << window(v0, g, -10, 10).letters.str() << "\n";
  std::cout << "v'_0(-10..10) " << window(v0p, g, -10, 10).letters.str() << "\n";
  std::cout << "Phi(v_0)  " << phi_prefix(v0, g, 12).str() << "\n";
  std::cout << "Phi(v'_0) " << phi_prefix(v0p, g, 12).str() << "\n";

  OpSeq ops = OpSeq::parse("RRLRL");
  std::cout << "theta interval of RRLRL " << theta_from_opseq(ops).str() << "\n";

  FactorClassification c = classify(g, 6);
  std::cout << "n = 6: |A| = " << c.A.size() << ", |B| = " << c.B.size() << ", |C| = " << c.C.size()
            << ", f(6) = " << exhausting_point(g, 6) << "\n";

  for (Symmetric s : {Symmetric::AA, Symmetric::A, Symmetric::B}) {
    SymmetricPoint p = symmetric_point(s);
    std::cout << "v_" << symmetric_name(s) << " " << p.window(8).letters.str() << "\n";
  }
}
