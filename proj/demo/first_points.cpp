// Prints the first points of the (1,1) LS-sequence exactly and in floating
// point, then checks them against the depth-4 partition reordering.

#include "lsseq/lsseq.hpp"

#include <iostream>

int main() {
  const lsseq::ParamsRef params = lsseq::make_params(1, 1);
  lsseq::PointGenerator<lsseq::QGammaElement> gen(params);
  for (int k = 1; k <= 8; ++k) {
    if (k > 1) gen.advance();
    std::cout << k << "  n=" << gen.integer() << "  digits=" << gen.digit_string().to_string() << "  "
              << gen.value().to_string() << "  ~ " << gen.value().to_double() << '\n';
  }
  const lsseq::EquivalenceReport rep = lsseq::verify_equivalence(4, params);
  std::cout << "depth 4: " << rep.points << (rep.equal() ? " points agree\n" : " points disagree\n");
  return rep.equal() ? 0 : 1;
}
