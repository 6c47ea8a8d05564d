//  Copyright 2026 The aset Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Prints the outcome of every small-map axiom for a few classes of finite
// set maps, with the summary of each refutation.
//
//   demo_axiom_table [size-bound]

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "aset/smallmaps/axioms.hpp"

using namespace aset;

int main(int argc, char** argv) {
  Budget budget;
  budget.size_bound = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 3;
  FinSet sets;
  for (const auto& cls : {all_maps<FinSet>(), monos<FinSet>(), fibre_bound<FinSet>(3), even_domain<FinSet>()}) {
    std::cout << cls.label << "\n";
    for (const auto& [id, name] : kAxiomNames) {
      auto v = check_axiom(sets, cls, id, budget);
      std::cout << "  " << std::setw(9) << std::left << name << to_string(v.outcome);
      if (v.outcome == Outcome::kRefuted) std::cout << "  " << v.summary;
      std::cout << "\n";
    }
  }
}
