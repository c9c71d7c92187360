#include <fstream>
#include <iostream>

#include "cfdyn/experiment.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  cfdyn::ExperimentRequest req;
  try {
    req = cfdyn::parse_args(args);
  } catch (const cfdyn::HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const cfdyn::UsageError& e) {
    std::cerr << "cfdyn: " << e.what() << "\n";
    return 2;
  }

  try {
    const auto csv = cfdyn::run_experiment(req);
    if (!req.out) {
      std::cout << csv << std::flush;
      if (!std::cout) throw std::runtime_error("failed writing to standard output");
      return 0;
    }
    std::ofstream file(*req.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + *req.out + " for writing");
    file << csv;
    file.close();
    if (!file) throw std::runtime_error("failed writing " + *req.out);
  } catch (const std::exception& e) {
    std::cerr << "cfdyn: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
