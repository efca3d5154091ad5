// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Worker count via argv[1] (default 2).

#include <cstdio>
#include <cstdlib>

#include "wsat/acceptance.hpp"

int main(int argc, char** argv) {
  wsat::AcceptanceOptions opts;
  if (argc > 1) opts.workers = std::atoi(argv[1]);
  bool all_pass = true;
  wsat::run_acceptance(opts, [&](const wsat::CriterionResult& r) {
    all_pass = all_pass && r.pass;
    std::printf("[%s] criterion %2d: %s (%s, %.1fs)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.details.c_str(), r.seconds);
    std::fflush(stdout);
  });
  return all_pass ? 0 : 1;
}
