// Copyright 2026 The hta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Counts labelled structures for every shipped species file.

#include <filesystem>
#include <iostream>

#include "hta/hta.hpp"

int main(int argc, char** argv) {
  using namespace hta;
  std::filesystem::path data = argc > 1 ? argv[1] : HTA_DATA_DIR;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(data))
    if (e.path().extension() == ".spec") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    SpeciesSpec s = parse_species(read_file(f.string()));
    Automaton a = compile_species(s, "");
    std::cout << f.stem().string() << "  [" << s.defs[0].first << ", d = " << a.dimension() << "]\n   ";
    for (const auto& c : count_species(s, "", 10)) std::cout << " " << c.get_str();
    std::cout << "\n";
  }
}
