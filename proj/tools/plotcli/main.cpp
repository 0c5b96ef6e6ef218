#include <iostream>
#include <string>
#include <vector>

#include "cornu/errors.hpp"
#include "plotcli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    plotcli::PlotJob job = plotcli::parse_cli(args);
    return plotcli::run(job, std::cout);
  } catch (const plotcli::HelpRequested& help) {
    std::cout << help.text();
    return 0;
  } catch (const plotcli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const plotcli::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const cornu::DomainError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
