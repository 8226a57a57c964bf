#include "membranekit/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace membranekit::io {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

json to_json(const Grid& g) { return {{"x_max", g.x_max()}, {"n_half", g.n_half()}}; }

json to_json(const SharpFn& f) {
  return {{"schema", kSchema},
          {"grid", to_json(f.grid())},
          {"left", std::vector<double>(f.left().begin(), f.left().end())},
          {"right", std::vector<double>(f.right().begin(), f.right().end())},
          {"lim_minus", f.lim_minus()},
          {"lim_plus", f.lim_plus()}};
}

json to_json(const LineFn& f) {
  return {{"schema", kSchema},
          {"grid", to_json(f.grid())},
          {"values", std::vector<double>(f.values().begin(), f.values().end())},
          {"lim_minus", f.lim_minus()},
          {"lim_plus", f.lim_plus()}};
}

json to_json(const ConvergenceReport& r) {
  json j = {{"schema", kSchema},
            {"n_values", r.n_values},
            {"errors", r.errors},
            {"fitted_order", r.fitted_order},
            {"lipschitz", r.lipschitz}};
  if (r.k_theory) {
    j["k_theory"] = *r.k_theory;
    j["bounds"] = r.bounds();
  } else {
    j["k_theory"] = nullptr;
  }
  if (!r.cauchy.empty()) j["cauchy"] = r.cauchy;
  return j;
}

json to_json(const McEstimate& e) {
  return {{"schema", kSchema}, {"mean", e.mean}, {"std_error", e.std_error}, {"n_paths", e.n_paths}};
}

namespace {

Grid grid_from_json(const json& j) {
  return {j.at("grid").at("x_max").get<double>(), j.at("grid").at("n_half").get<int>()};
}

}  // namespace

SharpFn sharp_from_json(const json& j) {
  return {grid_from_json(j), j.at("left").get<std::vector<double>>(),
          j.at("right").get<std::vector<double>>(), j.at("lim_minus").get<double>(),
          j.at("lim_plus").get<double>()};
}

LineFn line_from_json(const json& j) {
  return {grid_from_json(j), j.at("values").get<std::vector<double>>(),
          j.at("lim_minus").get<double>(), j.at("lim_plus").get<double>()};
}

namespace {

void write_limits(std::ostream& os, double lm, double lp) {
  os << "# lim_minus=" << format_double(lm) << '\n';
  os << "# lim_plus=" << format_double(lp) << '\n';
}

struct CsvTable {
  double lim_minus = 0.0;
  double lim_plus = 0.0;
  std::vector<std::vector<std::string>> rows;
};

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number '" + s + "' in CSV");
  }
  return v;
}

CsvTable read_table(std::istream& is) {
  CsvTable t;
  bool seen_header = false;
  bool seen_minus = false;
  bool seen_plus = false;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# lim_minus=", 0) == 0) {
      t.lim_minus = parse_double(line.substr(12));
      seen_minus = true;
    } else if (line.rfind("# lim_plus=", 0) == 0) {
      t.lim_plus = parse_double(line.substr(11));
      seen_plus = true;
    } else if (line[0] == '#') {
      continue;
    } else if (!seen_header) {
      seen_header = true;
    } else {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      t.rows.push_back(std::move(cells));
    }
  }
  if (!seen_minus || !seen_plus) throw std::invalid_argument("CSV lacks lim_minus/lim_plus");
  return t;
}

// Recovers the grid from evenly spaced x values in [-X, X].
Grid grid_from_nodes(double x_first, double x_last, std::size_t count_half) {
  if (count_half < 1 || !(x_last > 0.0) || std::abs(x_first + x_last) > 1e-9 * x_last) {
    throw std::invalid_argument("CSV nodes do not form a symmetric grid");
  }
  return {x_last, static_cast<int>(count_half)};
}

}  // namespace

void write_csv(std::ostream& os, const SharpFn& f) {
  write_limits(os, f.lim_minus(), f.lim_plus());
  os << "x,branch,value\n";
  const int n = f.grid().n_half();
  for (int k = -n; k <= 0; ++k) {
    os << format_double(f.grid().node(k)) << ",left," << format_double(f.left_at(k)) << '\n';
  }
  for (int k = 0; k <= n; ++k) {
    os << format_double(f.grid().node(k)) << ",right," << format_double(f.right_at(k)) << '\n';
  }
}

void write_csv(std::ostream& os, const LineFn& f) {
  write_limits(os, f.lim_minus(), f.lim_plus());
  os << "x,value\n";
  const int n = f.grid().n_half();
  for (int k = -n; k <= n; ++k) {
    os << format_double(f.grid().node(k)) << ',' << format_double(f.at(k)) << '\n';
  }
}

void write_csv(std::ostream& os, const ConvergenceReport& r) {
  const auto b = r.bounds();
  const bool cauchy = !r.cauchy.empty();
  os << "n,error,bound" << (cauchy ? ",cauchy" : "") << '\n';
  for (std::size_t i = 0; i < r.n_values.size(); ++i) {
    os << r.n_values[i] << ',' << format_double(r.errors[i]) << ',';
    if (!b.empty()) os << format_double(b[i]);
    if (cauchy) {
      os << ',';
      if (i < r.cauchy.size()) os << format_double(r.cauchy[i]);
    }
    os << '\n';
  }
}

SharpFn read_sharp_csv(std::istream& is) {
  const CsvTable t = read_table(is);
  std::vector<double> xl, l, r;
  double x_last = 0.0;
  for (const auto& row : t.rows) {
    if (row.size() != 3) throw std::invalid_argument("SharpFn CSV rows need x,branch,value");
    if (row[1] == "left") {
      xl.push_back(parse_double(row[0]));
      l.push_back(parse_double(row[2]));
    } else if (row[1] == "right") {
      x_last = parse_double(row[0]);
      r.push_back(parse_double(row[2]));
    } else {
      throw std::invalid_argument("unknown branch '" + row[1] + "'");
    }
  }
  if (l.size() != r.size() || l.empty()) throw std::invalid_argument("branch sizes differ");
  const Grid g = grid_from_nodes(xl.front(), x_last, l.size() - 1);
  return {g, std::move(l), std::move(r), t.lim_minus, t.lim_plus};
}

LineFn read_line_csv(std::istream& is) {
  const CsvTable t = read_table(is);
  std::vector<double> v;
  double x_first = 0.0;
  double x_last = 0.0;
  for (const auto& row : t.rows) {
    if (row.size() != 2) throw std::invalid_argument("LineFn CSV rows need x,value");
    const double x = parse_double(row[0]);
    if (v.empty()) x_first = x;
    x_last = x;
    v.push_back(parse_double(row[1]));
  }
  if (v.size() < 3 || v.size() % 2 == 0) throw std::invalid_argument("LineFn CSV needs 2n+1 rows");
  const Grid g = grid_from_nodes(x_first, x_last, (v.size() - 1) / 2);
  return {g, std::move(v), t.lim_minus, t.lim_plus};
}

}  // namespace membranekit::io
