#include "gpssvs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gpssvs::io {

using nlohmann::ordered_json;

namespace {

ordered_json spec_json(const SqueezeSpec& spec) {
  return {{"r", spec.r()},
          {"theta", spec.theta()},
          {"m", spec.m()},
          {"parity", std::string(to_string(spec.parity()))}};
}

ordered_json nl_json(const Nonlinearity& nl) {
  ordered_json j{{"kind", std::string(to_string(nl.kind()))}};
  if (nl.kind() == NonlinearityKind::poschl_teller) {
    j["lambda"] = nl.pt_lambda();
    j["kappa"] = nl.pt_kappa();
  } else if (nl.kind() == NonlinearityKind::custom) {
    j["table"] = nl.custom_table();
  }
  return j;
}

ordered_json axis_json(const AxisRange& a) {
  return {{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}};
}

ordered_json grid_meta(const WignerGrid& g) {
  return {{"spec", spec_json(g.spec)},
          {"nonlinearity", nl_json(g.nl)},
          {"metrics",
           {{"min_value", g.metrics.min_value},
            {"negative_volume", g.metrics.negative_volume},
            {"integral", g.metrics.integral}}},
          {"resolution", {{"x", axis_json(g.x)}, {"p", axis_json(g.p)}}}};
}

double prob(const FockExpansion& s, std::size_t j) { return std::exp(2.0 * s.log_magnitudes()[j]); }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> read_custom_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open custom table '" + path.string() + "'");
  std::vector<double> table;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        throw std::invalid_argument("custom table: '" + tok + "' is not a number");
      table.push_back(v);
    }
  }
  if (table.empty()) throw std::invalid_argument("custom table '" + path.string() + "' is empty");
  return table;
}

void write_state_csv(std::ostream& out, const FockExpansion& state) {
  out << "photon_number,re,im,prob\n";
  const auto c = state.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j)
    out << state.photon_number(j) << ',' << format_double(c[j].real()) << ','
        << format_double(c[j].imag()) << ',' << format_double(prob(state, j)) << '\n';
}

void write_state_json(std::ostream& out, const FockExpansion& state) {
  ordered_json comps = ordered_json::array();
  const auto c = state.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j)
    comps.push_back({{"photon_number", state.photon_number(j)},
                     {"re", c[j].real()},
                     {"im", c[j].imag()},
                     {"prob", prob(state, j)}});
  const ordered_json doc{{"spec", spec_json(state.spec())},
                         {"nonlinearity", nl_json(state.nl())},
                         {"truncation", state.truncation()},
                         {"tail_bound", state.tail_bound()},
                         {"components", std::move(comps)}};
  out << doc.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "r,theta,m,parity,quantity,value,status\n";
  for (const SweepRow& row : rows)
    out << format_double(row.r) << ',' << format_double(row.theta) << ',' << row.m << ','
        << to_string(row.parity) << ',' << to_string(row.quantity) << ','
        << (row.value ? format_double(*row.value) : std::string()) << ',' << row.status << '\n';
}

void write_sweep_json(std::ostream& out, const Nonlinearity& nl,
                      const std::vector<SweepRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const SweepRow& row : rows) {
    ordered_json j{{"r", row.r},
                   {"theta", row.theta},
                   {"m", row.m},
                   {"parity", std::string(to_string(row.parity))},
                   {"quantity", std::string(to_string(row.quantity))},
                   {"value", nullptr},
                   {"status", row.status}};
    if (row.value) j["value"] = *row.value;
    arr.push_back(std::move(j));
  }
  out << ordered_json{{"nonlinearity", nl_json(nl)}, {"rows", std::move(arr)}}.dump(2) << '\n';
}

void write_wigner_csv(std::ostream& out, const WignerGrid& grid) {
  out << "x,p,w\n";
  for (std::size_t i = 0; i < grid.x.count; ++i) {
    const std::string x = format_double(grid.x.at(i));
    for (std::size_t k = 0; k < grid.p.count; ++k)
      out << x << ',' << format_double(grid.p.at(k)) << ',' << format_double(grid.at(i, k))
          << '\n';
  }
}

void write_wigner_matrix(std::ostream& out, const WignerGrid& grid) {
  out << grid.x.count;
  for (std::size_t i = 0; i < grid.x.count; ++i) out << ' ' << format_double(grid.x.at(i));
  out << '\n';
  for (std::size_t k = 0; k < grid.p.count; ++k) {
    out << format_double(grid.p.at(k));
    for (std::size_t i = 0; i < grid.x.count; ++i) out << ' ' << format_double(grid.at(i, k));
    out << '\n';
  }
}

void write_wigner_json(std::ostream& out, const WignerGrid& grid) {
  ordered_json doc = grid_meta(grid);
  doc["values"] = grid.values;
  out << doc.dump(2) << '\n';
}

void write_wigner_sidecar(std::ostream& out, const WignerGrid& grid) {
  out << grid_meta(grid).dump(2) << '\n';
}

}  // namespace gpssvs::io
