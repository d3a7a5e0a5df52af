// Prints dim S_lambda(n) next to the semistandard tableau count for all
// partitions of small degree.

#include <qpf/qpf.hpp>

#include <iostream>

int main() {
  for (int d = 1; d <= 4; ++d)
    for (const auto& lambda : qpf::partitions_of(d))
      for (int n = 1; n <= 3; ++n) {
        qpf::SchurData s = qpf::schur_functor(lambda, n);
        long oracle = lambda.length() > n ? 0 : qpf::ssyt_count(lambda, n);
        std::cout << "S_" << lambda.to_string() << "(" << n << ") = " << s.dim()
                  << "  ssyt = " << oracle << (s.dim() == oracle ? "" : "  MISMATCH") << "\n";
      }
  return 0;
}
