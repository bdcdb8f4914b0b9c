#pragma once

namespace superchar::cli {

/// Entry point of the superchar tool. Exit status: 0 success or a true
/// verdict, 1 a false verdict, 2 usage or input errors, 3 when the library
/// refuses (e.g. a base without (Pr1), an inconsistent system).
int run(int argc, char** argv);

}  // namespace superchar::cli
