/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "idealcount/golden_tables.hpp"

#include <algorithm>
#include <cctype>

#include "idealcount/errors.hpp"

namespace idealcount {

std::string to_string(TableId id) {
  switch (id) {
    case TableId::T1: return "T1";
    case TableId::T2: return "T2";
    case TableId::T3: return "T3";
    case TableId::T4: return "T4";
    case TableId::T5: return "T5";
  }
  return "T?";
}

TableId parse_table_id(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (t == "T1") return TableId::T1;
  if (t == "T2") return TableId::T2;
  if (t == "T3") return TableId::T3;
  if (t == "T4") return TableId::T4;
  if (t == "T5") return TableId::T5;
  throw ParseError("unknown table id '" + text + "' (expected T1..T5)");
}

namespace {

// Lambda_S (Sunley) against Lambda_K.
const GoldenTable kT1 = {
    TableId::T1,
    "Lambda_S vs Lambda_K",
    {"lambda_S", "lambda_K"},
    {
        {2, {"1.75425E+30", "8.80778E+11"}, 0, ""},
        {3, {"8.57799E+44", "4.61131E+12"}, 0, ""},
        {4, {"7.88887E+59", "4.31224E+14"}, 0, ""},
        {5, {"1.20023E+75", "1.40981E+17"}, 0, ""},
        {10, {"1.90904E+153", "5.52115E+32"}, 0, ""},
        {15, {"1.10367E+234", "2.23608E+50"}, 0, ""},
    }};

// Q1 against Sunley's a7.
const GoldenTable kT2 = {
    TableId::T2,
    "Q1 vs a7",
    {"q1", "a7"},
    {
        {2, {"1.35892E+01", "5.12000E+04"}, 0, ""},
        {3, {"6.64402E+00", "1.22880E+07"}, 0, ""},
        {4, {"4.38027E+00", "3.93216E+09"}, 0, ""},
        {5, {"3.26912E+00", "1.57286E+12"}, 0, ""},
        {10, {"1.44652E+00", "1.55856E+26"}, 0, ""},
        {25, {"9.52034E-01", "2.34399E+73"}, 0, ""},
        {50, {"4.79628E+11", "1.73634E+160"}, 0, ""},
        {75, {"2.33209E+29", "5.35082E+252"}, 0, ""},
    }};

// Smallest discriminant magnitudes by degree.
const GoldenTable kT3 = {TableId::T3,
                         "delta0(N0)",
                         {"delta0"},
                         {
                             {2, {"3"}, 0, ""},
                             {3, {"23"}, 0, ""},
                             {4, {"117"}, 0, ""},
                             {5, {"1607"}, 0, ""},
                             {6, {"9747"}, 0, ""},
                             {7, {"184607"}, 0, ""},
                         }};

// v1(0.45, min(n,7)), v2(n), v3(n, min(n,7)), their sum, and Q1.
// The n = 5 row was evidently computed with |disc| = 1609 (smallest
// quintic discriminant) rather than the 1607 listed for N0 = 5.
const GoldenTable kT4 = {
    TableId::T4,
    "v1 + v2 + v3 vs Q1",
    {"v1", "v2", "v3", "v_sum", "q1"},
    {
        {2, {"7.49564E+00", "3.62438E+00", "9.99112E-01", "1.21191E+01", "1.35892E+01"}, 0, ""},
        {3, {"8.96578E-01", "1.84726E+00", "1.38347E-01", "2.88219E+00", "6.64402E+00"}, 0, ""},
        {4, {"1.43003E-01", "5.95127E-01", "1.39366E-02", "7.52066E-01", "4.38027E+00"}, 0, ""},
        {5,
         {"6.92239E-03", "1.42183E-01", "6.07876E-04", "1.49713E-01", "3.26912E+00"},
         1609,
         "v1, v3 reproduce with |disc| = 1609, not delta0(5) = 1607"},
        {6, {"7.57999E-04", "2.71384E-02", "3.10290E-05", "2.79274E-02", "2.60935E+00"}, 0, ""},
        {7, {"2.47647E-05", "4.32344E-03", "7.32387E-07", "4.34894E-03", "2.17200E+00"}, 0, ""},
        {8, {"1.61412E-05", "5.91824E-04", "6.36329E-08", "6.08029E-04", "1.86062E+00"}, 0, ""},
        {9, {"1.18356E-05", "7.10716E-05", "4.79035E-09", "8.29120E-05", "1.62755E+00"}, 0, ""},
        {10, {"9.64279E-06", "7.60563E-06", "3.18144E-10", "1.72487E-05", "1.44652E+00"}, 0, ""},
        {25, {"1.90663E-03", "3.05551E-24", "5.64326E-32", "1.90663E-03", "9.52034E-01"}, 0, ""},
        {50, {"2.22843E+09", "2.26627E-63", "5.01165E-77", "2.22843E+09", "4.79628E+11"}, 0, ""},
        {75, {"1.08353E+27", "3.43472E-108", "6.90924E-128", "1.08353E+27", "2.33209E+29"}, 0, ""},
    }};

// Sunley's a12, a13 against Q2, Q3.
const GoldenTable kT5 = {
    TableId::T5,
    "a12, a13 vs Q2, Q3",
    {"a12", "a13", "q2", "q3"},
    {
        {2, {"7.87765E+02", "1.64781E+07", "7.16068E+02", "6.22672E+08"}, 0, ""},
        {3, {"9.12563E+04", "6.58325E+10", "2.70149E+04", "5.42992E+10"}, 0, ""},
        {4, {"1.24444E+07", "2.91905E+14", "9.60894E+05", "1.69360E+13"}, 0, ""},
        {5, {"1.98323E+09", "1.46460E+18", "3.30928E+07", "7.13802E+15"}, 0, ""},
        {10, {"1.27702E+21", "2.36138E+37", "1.29797E+15", "2.33456E+29"}, 0, ""},
        {15, {"7.30857E+33", "2.93058E+57", "4.40884E+22", "9.83335E+42"}, 0, ""},
        {30, {"3.49971E+75", "1.10152E+121", "1.33010E+45", "7.85588E+83"}, 0, ""},
        {50, {"8.32114E+135", "3.32277E+210", "1.01594E+75", "2.53056E+138"}, 0, ""},
    }};

}  // namespace

const GoldenTable& golden_table(TableId id) {
  switch (id) {
    case TableId::T1: return kT1;
    case TableId::T2: return kT2;
    case TableId::T3: return kT3;
    case TableId::T4: return kT4;
    case TableId::T5: return kT5;
  }
  throw ParseError("unknown table id");
}

}  // namespace idealcount
