#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "gpssvs/observables.hpp"
#include "gpssvs/states.hpp"
#include "gpssvs/wigner.hpp"

namespace gpssvs::io {

/// %.17g, so every double round-trips.
std::string format_double(double v);

/// f(1), f(2), ... from a text file: numbers separated by whitespace or commas,
/// '#' starts a comment.
std::vector<double> read_custom_table(const std::filesystem::path& path);

// `photon_number,re,im,prob`, one row per retained component.
void write_state_csv(std::ostream& out, const FockExpansion& state);
void write_state_json(std::ostream& out, const FockExpansion& state);

// `r,theta,m,parity,quantity,value,status`; failed points leave value empty.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const Nonlinearity& nl,
                      const std::vector<SweepRow>& rows);

/// `x,p,w` with x outer and p inner.
void write_wigner_csv(std::ostream& out, const WignerGrid& grid);
/// gnuplot `nonuniform matrix`: first row holds the x count and x nodes, then
/// one row per p node starting with p.
void write_wigner_matrix(std::ostream& out, const WignerGrid& grid);
/// Metadata and values in one document.
void write_wigner_json(std::ostream& out, const WignerGrid& grid);
/// Metadata only: spec, nonlinearity, metrics and resolution.
void write_wigner_sidecar(std::ostream& out, const WignerGrid& grid);

}  // namespace gpssvs::io
