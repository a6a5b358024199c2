#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordgraph::cli {

// args excludes the program name. Returns 0 on success, 1 on analysis
// errors, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordgraph::cli
