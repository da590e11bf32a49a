#pragma once

namespace apollo::cli {

/// Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.
int run(int argc, char** argv);

}  // namespace apollo::cli
