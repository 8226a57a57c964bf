#pragma once

// Serialisation of functions and reports. Floats are written in the shortest
// decimal form that reads back to the same double.
//
// JSON:  {"schema": "membranekit/1", "grid": {"x_max", "n_half"},
//         "left": [...], "right": [...], "lim_minus", "lim_plus"}   (SharpFn)
//        with "values" instead of "left"/"right" for LineFn.
// CSV:   "# lim_minus=<v>" and "# lim_plus=<v>" comment lines, then a header.
//        SharpFn: x,branch,value with branch "left" rows (x <= 0) before "right".
//        LineFn:  x,value.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "membranekit/function_space.hpp"
#include "membranekit/limits.hpp"
#include "membranekit/montecarlo.hpp"

namespace membranekit::io {

inline constexpr const char* kSchema = "membranekit/1";

std::string format_double(double v);

nlohmann::json to_json(const Grid& g);
nlohmann::json to_json(const SharpFn& f);
nlohmann::json to_json(const LineFn& f);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const McEstimate& e);

SharpFn sharp_from_json(const nlohmann::json& j);
LineFn line_from_json(const nlohmann::json& j);

void write_csv(std::ostream& os, const SharpFn& f);
void write_csv(std::ostream& os, const LineFn& f);
/// n,error,bound[,cauchy]; bound is empty without a rate constant.
void write_csv(std::ostream& os, const ConvergenceReport& r);

SharpFn read_sharp_csv(std::istream& is);
LineFn read_line_csv(std::istream& is);

}  // namespace membranekit::io
