// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "hardness/app/config.hpp"

namespace hardness::app {

// Each command reports problems on `err` and returns an ExitCode.
int cmd_gen(const RunConfig& config, std::ostream& err);
int cmd_measure(const RunConfig& config, std::ostream& err);
int cmd_ih(const RunConfig& config, std::ostream& err);
int cmd_report(const RunConfig& config, std::ostream& err);

int run(const RunConfig& config, std::ostream& err);

} // namespace hardness::app
