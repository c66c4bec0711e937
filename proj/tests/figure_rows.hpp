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


// The eleven worked species, each with its differential system and its
// normalized rational system as printed in the reference table. Initial
// values the table leaves open are the combinatorial ones (count of size-0
// structures, and the matching values of the auxiliaries).

#ifndef HTA_TESTS_FIGURE_ROWS_HPP
#define HTA_TESTS_FIGURE_ROWS_HPP

#include <string>
#include <vector>

namespace hta::testing {

struct FigureRow {
  std::string objects;
  std::string spec;      // species text
  std::string file;      // shipped .spec, without extension
  std::string system;    // differential system with initial values
  std::string rds;       // printed normalized system, first variable is the species
};

inline const std::vector<FigureRow>& figure_rows() {
  static const std::vector<FigureRow> rows = {
      {"non plane trees", "A = X*set(A)", "labelled_trees",
       "y_a = x*z ; y_a(0) = 0\n"
       "z' = z*y_a' ; z(0) = 1\n",
       "y_a' = z + x*z^2/(1-x*z) ; y_a(0) = 0\n"
       "z' = z^2/(1-x*z) ; z(0) = 1\n"},
      {"plane binary trees", "B = X + B*B", "binary_trees",
       "y_b = x + y_b^2 ; y_b(0) = 0\n",
       "y_b' = 1/(1-2*y_b) ; y_b(0) = 0\n"},
      {"plane general trees", "C = X*sequence(C)", "plane_trees",
       "y_c = x/(1-y_c) ; y_c(0) = 0\n",
       "y_c' = (1-y_c)^3/((1-y_c)^2-x) ; y_c(0) = 0\n"},
      {"permutations", "D = set(cycle(X))", "permutations",
       "y_d' = y_d*z' ; y_d(0) = 1\n"
       "z' = 1/(1-x) ; z(0) = 0\n",
       "y_d' = y_d/(1-x) ; y_d(0) = 1\n"},
      {"functional graphs", "E = set(cycle(A))\nA = X*set(A)", "functional_graphs",
       "y_e' = y_e*z_2' ; y_e(0) = 1\n"
       "z_2' = y_a'/(1-y_a) ; z_2(0) = 0\n"
       "y_a = x*z ; y_a(0) = 0\n"
       "z' = z*y_a' ; z(0) = 1\n",
       // the table writes y_A' on the second line for y_a'
       "y_e' = y_e*z/(1-y_a) + x*z^2/((1-x*z)*(1-y_a)) ; y_e(0) = 1\n"
       "y_a' = z + x*z^2/(1-x*z) ; y_a(0) = 0\n"
       "z' = z^2/(1-x*z) ; z(0) = 1\n"},
      {"set partitions", "F = set(set(X, card>=1))", "bell",
       "y_f' = y_f*z ; y_f(0) = 1\n"
       "z' = z ; z(0) = 1\n",
       "y_f' = y_f*z ; y_f(0) = 1\n"
       "z' = z ; z(0) = 1\n"},
      {"non plane ternary trees", "G = X + X*set(G, card=3)", "ternary_trees",
       "y_g = x + x*z_2 ; y_g(0) = 0\n"
       "z_2' = z_1*y_g' ; z_2(0) = 0\n"
       "z_1' = y_g*y_g' ; z_1(0) = 0\n",
       // the table writes y_1 for z_1 on the second line
       "y_g' = (1+z_2)/(1-x*z_1) ; y_g(0) = 0\n"
       "z_2' = z_1*(1+z_2)/(1-x*z_1) ; z_2(0) = 0\n"
       "z_1' = y_g*(1+z_2)/(1-x*z_1) ; z_1(0) = 0\n"},
      {"hierarchies", "H = X + set(H, card>=2)", "hierarchies",
       "y_h = x + z_2 ; y_h(0) = 0\n"
       "z_2' = z_1*y_h' ; z_2(0) = 0\n"
       "z_1' = z_0*y_h' ; z_1(0) = 0\n"
       "z_0' = z_0*y_h' ; z_0(0) = 1\n",
       "y_h' = 1 + z_1/(1-z_1) ; y_h(0) = 0\n"
       "z_2' = z_1/(1-z_1) ; z_2(0) = 0\n"
       "z_1' = z_0 + z_0*z_1/(1-z_1) ; z_1(0) = 0\n"
       "z_0' = z_0 + z_0*z_1/(1-z_1) ; z_0(0) = 1\n"},
      {"3-constrained functional graphs", "K = set(cycle(X*set(G, card=2)))\nG = X + X*set(G, card=3)",
       "constrained_functional_graphs",
       "y_k' = y_k*z_1' ; y_k(0) = 1\n"
       "z_1' = z_2'/(1-z_2) ; z_1(0) = 0\n"
       "z_2 = x*z_3 ; z_2(0) = 0\n"
       "z_3' = y_g*y_g' ; z_3(0) = 0\n"
       "y_g = x + x*z_4 ; y_g(0) = 0\n"
       "z_4' = z_5*y_g' ; z_4(0) = 0\n"
       "z_5' = y_g*y_g' ; z_5(0) = 0\n",
       "y_k' = y_k*z_3/(1-x*z_3) + y_k*x*y_g*(1+z_4)/((1-x*z_5)*(1-x*z_3)) ; y_k(0) = 1\n"
       "z_1' = z_3/(1-x*z_3) + x*y_g*(1+z_4)/((1-x*z_5)*(1-x*z_3)) ; z_1(0) = 0\n"
       "z_2' = z_3 + x*y_g*(1+z_4)/(1-x*z_5) ; z_2(0) = 0\n"
       "z_3' = y_g*(1+z_4)/(1-x*z_5) ; z_3(0) = 0\n"
       "y_g' = (1+z_4)/(1-x*z_5) ; y_g(0) = 0\n"
       "z_4' = z_5*(1+z_4)/(1-x*z_5) ; z_4(0) = 0\n"
       "z_5' = y_g*(1+z_4)/(1-x*z_5) ; z_5(0) = 0\n"},
      {"3-balanced hierarchies", "L = set(set(set(X, card>=1), card>=1))", "balanced_hierarchies",
       // the table writes y_3 for z_3 on the last line
       "y_l' = y_l*z_1*z_2' ; y_l(0) = 1\n"
       "z_1' = z_1*z_2' ; z_1(0) = 1\n"
       "z_2' = z_3 ; z_2(0) = 0\n"
       "z_3' = z_3 ; z_3(0) = 1\n",
       "y_l' = y_l*z_1*z_3 ; y_l(0) = 1\n"
       "z_1' = z_1*z_3 ; z_1(0) = 1\n"
       "z_3' = z_3 ; z_3(0) = 1\n"},
      {"surjections", "M = sequence(set(X, card>=1))", "surjections",
       "y_m = 1/(1-z_1) ; y_m(0) = 1\n"
       "z_1' = z_0 ; z_1(0) = 0\n"
       "z_0' = z_0 ; z_0(0) = 1\n",
       "y_m' = z_0/(1-z_1)^2 ; y_m(0) = 1\n"
       "z_1' = z_0 ; z_1(0) = 0\n"
       "z_0' = z_0 ; z_0(0) = 1\n"},
  };
  return rows;
}

}  // namespace hta::testing

#endif  // HTA_TESTS_FIGURE_ROWS_HPP
