// Recomputes the spectra of the Yang-Baxter operators of small tensor-power
// spaces and prints them as a table.

#include <qpf/qpf.hpp>

#include <iostream>

int main() {
  struct Row {
    int n, d;
  };
  for (Row row : {Row{2, 2}, Row{3, 2}, Row{2, 3}}) {
    qpf::YBSpace s = qpf::tensor_power_space(qpf::standard_space(row.n), row.d);
    qpf::SpectrumReport rep = qpf::spectrum(s, qpf::default_max_exp(row.d));
    std::cout << "V_" << row.n << "^(x" << row.d << "): " << qpf::format_spectrum_row(rep)
              << "  (dim " << rep.dim << (rep.complete ? ", complete" : ", incomplete") << ")\n";
  }
  return 0;
}
