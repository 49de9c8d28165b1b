#ifndef RTCOVER_CLI_HPP
#define RTCOVER_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rtcover {

// Exit codes: 0 success/verified, 1 verification failed, 2 resource-guard
// unknown, 64 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rtcover

#endif  // RTCOVER_CLI_HPP
