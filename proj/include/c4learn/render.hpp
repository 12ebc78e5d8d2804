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

#pragma once

#include <string>
#include <vector>

#include "c4learn/board.hpp"

namespace c4learn {

// Text grid, top row first, with column numbers underneath. Yellow (P1) is
// 'Y', red (P2) is 'R'. In the human view the board is mirrored and the
// labels follow the mirrored columns; `highlight` cells (engine frame) are
// drawn in lower case.
std::string render_board(const Board& board, bool human_view,
                         const std::vector<CellCoord>& highlight = {});

}  // namespace c4learn
