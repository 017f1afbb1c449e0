#include "polyred/cli/jobs.hpp"
#include "polyred/error.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace polyred;
  std::vector<std::string> args(argv + 1, argv + argc);
  JobSpec job;
  try {
    job = parse_job(args);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return kExitOk;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitParse;
  }
  JobResult result;
  try {
    result = run_job(job);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  }
  std::string text = render(result, job.format);
  if (job.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(job.out);
    if (!f) {
      std::cerr << "cannot open " << job.out << '\n';
      return kExitOther;
    }
    f << text;
  }
  return result.exit_code;
}
