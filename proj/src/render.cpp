// Copyright 2026 The c4learn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "c4learn/render.hpp"

#include <algorithm>

namespace c4learn {

std::string render_board(const Board& board, bool human_view,
                         const std::vector<CellCoord>& highlight) {
  std::string out;
  for (int r = kRows - 1; r >= 0; --r) {
    out += '|';
    for (int x = 0; x < kCols; ++x) {
      const int c = human_view ? kCols - 1 - x : x;
      const bool lit = std::find(highlight.begin(), highlight.end(), CellCoord{c, r}) != highlight.end();
      char glyph = '.';
      if (board.at(c, r) == Cell::kP1) glyph = lit ? 'y' : 'Y';
      if (board.at(c, r) == Cell::kP2) glyph = lit ? 'r' : 'R';
      out += ' ';
      out += glyph;
    }
    out += " |\n";
  }
  out += "+---------------+\n ";
  for (int x = 0; x < kCols; ++x) {
    out += ' ';
    out += static_cast<char>('0' + x);
  }
  out += '\n';
  return out;
}

}  // namespace c4learn
