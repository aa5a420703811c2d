// SPDX-License-Identifier: Apache-2.0
#include "leoscat/cli.hpp"

int main(int argc, char** argv) { return leoscat::cli::run(argc, argv); }
