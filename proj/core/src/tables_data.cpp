#include "agcodes/tables.hpp"

namespace agcodes {

// Reference rows for the shipped improvement tables over GF(49), GF(64),
// GF(81) and GF(256). Columns: q, n, k, d, shortening depth s, code tags.
const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = {
      {49, 91, 80, 9, 10, {"D2a", "D2b"}},
      {49, 91, 79, 10, 10, {"D2a", "D2b"}},
      {49, 91, 78, 11, 10, {"D2a", "D2b"}},
      {49, 91, 77, 12, 10, {"D2a", "D2b"}},
      {49, 91, 76, 13, 10, {"D2a", "D2b"}},
      {49, 91, 75, 14, 10, {"D2a", "D2b"}},
      {49, 91, 74, 15, 10, {"D2a", "D2b"}},
      {49, 91, 73, 16, 10, {"D2a", "D2b"}},
      {49, 91, 72, 17, 10, {"D2a", "D2b"}},
      {49, 91, 71, 18, 10, {"D2a", "D2b"}},
      {49, 91, 70, 19, 10, {"D2a", "D2b"}},
      {49, 91, 69, 20, 10, {"D2a", "D2b"}},
      {49, 91, 68, 21, 10, {"D2a", "D2b"}},
      {49, 91, 67, 22, 10, {"D2a", "D2b"}},
      {49, 91, 66, 23, 10, {"D2a", "D2b"}},
      {49, 91, 65, 24, 10, {"D2a", "D2b"}},
      {49, 91, 64, 25, 10, {"D2a", "D2b"}},
      {49, 91, 63, 26, 10, {"D2a", "D2b"}},
      {49, 91, 62, 27, 10, {"D2a", "D2b"}},
      {49, 91, 61, 28, 10, {"D2a", "D2b"}},
      {49, 91, 60, 29, 10, {"D2a", "D2b"}},
      {49, 91, 59, 30, 10, {"D2a", "D2b"}},
      {49, 91, 58, 31, 10, {"D2a", "D2b"}},
      {49, 91, 57, 32, 10, {"D2a", "D2b"}},
      {49, 91, 56, 33, 10, {"D2a", "D2b"}},
      {49, 91, 55, 34, 10, {"D2a", "D2b"}},
      {49, 91, 54, 35, 10, {"D2a", "D2b"}},
      {49, 91, 53, 36, 10, {"D2a", "D2b"}},
      {49, 91, 52, 37, 10, {"D2a", "D2b"}},
      {49, 91, 51, 38, 10, {"D2a", "D2b"}},
      {49, 91, 50, 39, 10, {"D2a", "D2b"}},
      {49, 91, 49, 40, 10, {"D2a", "D2b"}},
      {49, 91, 48, 41, 10, {"D2a", "D2b"}},
      {49, 91, 47, 42, 10, {"D2a", "D2b"}},
      {49, 91, 46, 43, 10, {"D2a", "D2b"}},
      {49, 91, 45, 44, 10, {"D2a", "D2b"}},
      {49, 91, 44, 45, 10, {"D2a", "D2b"}},
      {49, 91, 43, 46, 10, {"D2a", "D2b"}},
      {49, 91, 42, 47, 10, {"D2a", "D2b"}},
      {49, 91, 41, 48, 10, {"D2a", "D2b"}},
      {49, 91, 40, 49, 10, {"D2a", "D2b"}},
      {49, 91, 39, 50, 10, {"D2a", "D2b"}},
      {49, 91, 38, 51, 10, {"D2a", "D2b"}},
      {49, 91, 37, 52, 10, {"D2a", "D2b"}},
      {49, 91, 36, 53, 10, {"D2a", "D2b"}},
      {49, 147, 129, 12, 18, {"E1", nullptr}},
      {49, 147, 128, 13, 32, {"E1", nullptr}},
      {49, 147, 127, 14, 32, {"E1", nullptr}},
      {49, 147, 126, 15, 44, {"E1", nullptr}},
      {49, 147, 125, 16, 46, {"E1", nullptr}},
      {49, 147, 124, 17, 58, {"E1", nullptr}},
      {49, 147, 123, 18, 58, {"E1", nullptr}},
      {49, 147, 122, 19, 58, {"E1", nullptr}},
      {49, 147, 121, 20, 58, {"E1", nullptr}},
      {49, 147, 120, 21, 58, {"E1", nullptr}},
      {49, 147, 119, 22, 58, {"E1", nullptr}},
      {49, 147, 118, 23, 58, {"E1", nullptr}},
      {49, 147, 117, 24, 58, {"E1", nullptr}},
      {49, 147, 116, 25, 58, {"E1", nullptr}},
      {49, 147, 115, 26, 58, {"E1", nullptr}},
      {49, 147, 114, 27, 58, {"E1", nullptr}},
      {49, 147, 113, 28, 58, {"E1", nullptr}},
      {49, 147, 112, 29, 58, {"E1", nullptr}},
      {49, 147, 111, 30, 58, {"E1", nullptr}},
      {49, 147, 110, 31, 58, {"E1", nullptr}},
      {49, 147, 109, 32, 58, {"E1", nullptr}},
      {49, 147, 108, 33, 58, {"E1", nullptr}},
      {49, 147, 107, 34, 58, {"E1", nullptr}},
      {49, 147, 106, 35, 58, {"E1", nullptr}},
      {49, 147, 105, 36, 58, {"E1", nullptr}},
      {49, 147, 104, 37, 58, {"E1", nullptr}},
      {49, 147, 103, 38, 58, {"E1", nullptr}},
      {49, 147, 102, 39, 58, {"E1", nullptr}},
      {49, 147, 101, 40, 58, {"E1", nullptr}},
      {49, 147, 100, 41, 58, {"E1", nullptr}},
      {49, 147, 99, 42, 58, {"E1", nullptr}},
      {49, 147, 98, 43, 58, {"E1", nullptr}},
      {49, 147, 97, 44, 58, {"E1", nullptr}},
      {49, 147, 96, 45, 58, {"E1", nullptr}},
      {49, 147, 95, 46, 58, {"E1", nullptr}},
      {49, 147, 94, 47, 58, {"E1", nullptr}},
      {49, 147, 93, 48, 58, {"E1", nullptr}},
      {49, 147, 92, 49, 58, {"E1", nullptr}},
      {49, 175, 157, 12, 46, {"D1a", "D1b"}},
      {49, 175, 155, 13, 25, {"D1b", nullptr}},
      {49, 175, 154, 14, 24, {"D1a", nullptr}},
      {49, 175, 153, 15, 60, {"D1a", nullptr}},
      {49, 175, 152, 15, 22, {"D1b", nullptr}},
      {49, 175, 151, 16, 46, {"D1a", "D1b"}},
      {49, 175, 150, 18, 74, {"D1a", "D1b"}},
      {49, 175, 148, 19, 72, {"D1a", "D1b"}},
      {49, 175, 147, 20, 74, {"D1a", "D1b"}},
      {49, 175, 146, 21, 82, {"D1a", "D1b"}},
      {49, 175, 145, 22, 82, {"D1a", "D1b"}},
      {49, 175, 144, 23, 82, {"D1a", "D1b"}},
      {49, 175, 143, 24, 82, {"D1a", "D1b"}},
      {49, 175, 142, 25, 82, {"D1a", "D1b"}},
      {49, 175, 141, 26, 82, {"D1a", "D1b"}},
      {49, 175, 140, 27, 82, {"D1a", "D1b"}},
      {49, 175, 139, 28, 82, {"D1a", "D1b"}},
      {49, 175, 138, 29, 82, {"D1a", "D1b"}},
      {49, 175, 137, 30, 82, {"D1a", "D1b"}},
      {49, 175, 136, 31, 82, {"D1a", "D1b"}},
      {49, 175, 135, 32, 82, {"D1a", "D1b"}},
      {49, 175, 134, 33, 82, {"D1a", "D1b"}},
      {49, 175, 133, 34, 82, {"D1a", "D1b"}},
      {49, 175, 132, 35, 82, {"D1a", "D1b"}},
      {49, 175, 131, 36, 82, {"D1a", "D1b"}},
      {49, 175, 130, 37, 82, {"D1a", "D1b"}},
      {49, 175, 129, 38, 82, {"D1a", "D1b"}},
      {49, 175, 128, 39, 82, {"D1a", "D1b"}},
      {49, 175, 127, 40, 82, {"D1a", "D1b"}},
      {49, 175, 126, 41, 82, {"D1a", "D1b"}},
      {49, 175, 125, 42, 82, {"D1a", "D1b"}},
      {49, 175, 124, 43, 82, {"D1a", "D1b"}},
      {49, 175, 123, 44, 82, {"D1a", "D1b"}},
      {49, 175, 122, 45, 82, {"D1a", "D1b"}},
      {49, 175, 121, 46, 82, {"D1a", "D1b"}},
      {49, 175, 120, 47, 82, {"D1a", "D1b"}},
      {64, 176, 162, 10, 29, {"D3b", nullptr}},
      {64, 176, 159, 12, 14, {"D3a", nullptr}},
      {64, 176, 157, 14, 14, {"D3a", nullptr}},
      {64, 256, 232, 15, 30, {"C1a", nullptr}},
      {64, 256, 231, 16, 30, {"C1a", nullptr}},
      {64, 256, 230, 16, 19, {"C1b", nullptr}},
      {64, 256, 229, 18, 30, {"C1b", nullptr}},
      {64, 256, 228, 18, 28, {"C1a", nullptr}},
      {64, 256, 226, 20, 28, {"C1a", nullptr}},
      {64, 256, 225, 21, 28, {"C1a", nullptr}},
      {64, 256, 222, 24, 28, {"C1a", nullptr}},
      {81, 225, 207, 12, 24, {"B1", "E2"}},
      {81, 243, 225, 12, 42, {"C4", nullptr}},
      {81, 243, 223, 13, 16, {"C4", nullptr}},
      {81, 243, 222, 14, 16, {"C4", nullptr}},
      {81, 243, 221, 15, 16, {"C4", nullptr}},
      {81, 243, 220, 16, 16, {"C4", nullptr}},
      {81, 243, 218, 18, 16, {"C4", nullptr}},
      {81, 369, 339, 18, 25, {"D4a", "D4b"}},
      {81, 369, 337, 19, 4, {"D4a", nullptr}},
      {81, 369, 336, 20, 36, {"D4a", nullptr}},
      {81, 369, 334, 21, 28, {"D4a", nullptr}},
      {81, 369, 333, 23, 66, {"D4a", "D4b"}},
      {81, 369, 332, 24, 66, {"D4a", "D4b"}},
      {81, 369, 330, 25, 64, {"D4b", nullptr}},
      {81, 369, 328, 27, 64, {"D4a", nullptr}},
      {81, 369, 327, 28, 64, {"D4a", nullptr}},
      {81, 369, 323, 32, 64, {"D4a", "D4b"}},
      {256, 512, 495, 14, 186, {"C2", nullptr}},
      {256, 512, 494, 16, 188, {"C2", nullptr}},
      {256, 512, 493, 17, 188, {"C2", nullptr}},
      {256, 512, 492, 18, 188, {"C2", nullptr}},
      {256, 512, 491, 19, 188, {"C2", nullptr}},
      {256, 512, 490, 20, 188, {"C2", nullptr}},
      {256, 512, 489, 21, 188, {"C2", nullptr}},
      {256, 512, 488, 22, 188, {"C2", nullptr}},
      {256, 512, 487, 23, 188, {"C2", nullptr}},
      {256, 512, 486, 24, 188, {"C2", nullptr}},
      {256, 512, 485, 25, 188, {"C2", nullptr}},
      {256, 512, 484, 26, 188, {"C2", nullptr}},
      {256, 512, 483, 27, 188, {"C2", nullptr}},
      {256, 512, 482, 28, 188, {"C2", nullptr}},
      {256, 512, 481, 29, 188, {"C2", nullptr}},
      {256, 512, 480, 30, 188, {"C2", nullptr}},
      {256, 512, 479, 31, 188, {"C2", nullptr}},
      {256, 512, 478, 32, 188, {"C2", nullptr}},
      {256, 512, 477, 33, 188, {"C2", nullptr}},
      {256, 512, 476, 34, 188, {"C2", nullptr}},
      {256, 512, 475, 35, 188, {"C2", nullptr}},
      {256, 512, 474, 36, 188, {"C2", nullptr}},
      {256, 512, 473, 37, 188, {"C2", nullptr}},
      {256, 512, 472, 38, 188, {"C2", nullptr}},
      {256, 512, 471, 39, 188, {"C2", nullptr}},
      {256, 512, 470, 40, 188, {"C2", nullptr}},
      {256, 512, 469, 41, 188, {"C2", nullptr}},
      {256, 512, 468, 42, 188, {"C2", nullptr}},
      {256, 512, 467, 43, 188, {"C2", nullptr}},
      {256, 512, 466, 44, 188, {"C2", nullptr}},
      {256, 512, 465, 45, 188, {"C2", nullptr}},
      {256, 512, 464, 46, 188, {"C2", nullptr}},
      {256, 512, 463, 47, 188, {"C2", nullptr}},
      {256, 512, 462, 48, 188, {"C2", nullptr}},
      {256, 512, 461, 49, 188, {"C2", nullptr}},
      {256, 512, 460, 50, 188, {"C2", nullptr}},
      {256, 512, 459, 51, 188, {"C2", nullptr}},
      {256, 512, 458, 52, 188, {"C2", nullptr}},
      {256, 512, 457, 53, 188, {"C2", nullptr}},
      {256, 512, 456, 54, 188, {"C2", nullptr}},
      {256, 512, 455, 55, 188, {"C2", nullptr}},
      {256, 512, 454, 56, 188, {"C2", nullptr}},
      {256, 512, 453, 57, 188, {"C2", nullptr}},
      {256, 512, 452, 58, 188, {"C2", nullptr}},
      {256, 512, 451, 59, 188, {"C2", nullptr}},
      {256, 512, 450, 60, 188, {"C2", nullptr}},
      {256, 512, 449, 61, 188, {"C2", nullptr}},
      {256, 512, 448, 62, 188, {"C2", nullptr}},
      {256, 512, 447, 63, 188, {"C2", nullptr}},
      {256, 512, 446, 64, 188, {"C2", nullptr}},
      {256, 512, 445, 65, 188, {"C2", nullptr}},
      {256, 512, 444, 66, 188, {"C2", nullptr}},
      {256, 1024, 980, 27, 247, {"C3", nullptr}},
      {256, 1024, 979, 28, 248, {"C3", nullptr}},
      {256, 1024, 978, 30, 413, {"C3", nullptr}},
      {256, 1024, 976, 32, 445, {"C3", nullptr}},
      {256, 1024, 975, 33, 477, {"C3", nullptr}},
      {256, 1024, 974, 35, 494, {"C3", nullptr}},
      {256, 1024, 973, 36, 494, {"C3", nullptr}},
      {256, 1024, 972, 40, 500, {"C3", nullptr}},
      {256, 1024, 970, 41, 498, {"C3", nullptr}},
      {256, 1024, 969, 42, 498, {"C3", nullptr}},
      {256, 1024, 968, 43, 498, {"C3", nullptr}},
      {256, 1024, 967, 44, 498, {"C3", nullptr}},
      {256, 1024, 966, 45, 498, {"C3", nullptr}},
      {256, 1024, 965, 46, 498, {"C3", nullptr}},
      {256, 1024, 964, 47, 498, {"C3", nullptr}},
      {256, 1024, 963, 48, 498, {"C3", nullptr}},
      {256, 1024, 962, 49, 498, {"C3", nullptr}},
      {256, 1024, 961, 50, 498, {"C3", nullptr}},
      {256, 1024, 960, 51, 498, {"C3", nullptr}},
      {256, 1024, 959, 52, 498, {"C3", nullptr}},
      {256, 1024, 958, 53, 498, {"C3", nullptr}},
      {256, 1024, 957, 54, 498, {"C3", nullptr}},
      {256, 1024, 956, 55, 498, {"C3", nullptr}},
  };
  return rows;
}

}  // namespace agcodes
