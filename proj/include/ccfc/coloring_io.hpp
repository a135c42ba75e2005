#pragma once

#include <map>
#include <string>
#include <vector>

#include "ccfc/circular.hpp"
#include "ccfc/fractional.hpp"

namespace ccfc {

// Precoloring JSON, format tag "ccfc-precolor/1":
//   {"format":"ccfc-precolor/1","k":K,"mode":"circular",
//    "assignments":{"<vertexId>":<residue>}}
// or mode "fractional" with "assignments":{"<vertexId>":[c1,c2,...]}.
// Witness colorings are written in the same shape, so solver output can be
// fed back in as a precoloring.

struct PrecolorData {
    int k = 0;
    std::string mode;
    std::map<int, int> circular;
    std::map<int, std::vector<int>> fractional;
};

PrecolorData precolor_from_json(const std::string& text);
PrecolorData load_precolor_file(const std::string& path);

CircularColoring to_circular_precoloring(const PrecolorData& data, int n, int d);
FractionalColoring to_fractional_precoloring(const PrecolorData& data, int n);

std::string circular_coloring_to_json(const CircularColoring& col);
std::string fractional_coloring_to_json(const FractionalColoring& col);

}  // namespace ccfc
