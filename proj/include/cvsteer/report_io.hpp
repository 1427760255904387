#ifndef CVSTEER_REPORT_IO_HPP
#define CVSTEER_REPORT_IO_HPP

#include <iosfwd>
#include <string>

#include "cvsteer/scan.hpp"

namespace cvsteer {

// Shortest round-trip decimal representation of a double.
std::string fmt_double(double v);

// ScanResult serialization. JSON uses insertion-ordered keys; missing cells
// are null in JSON and empty fields in CSV.
std::string scan_to_json(const ScanResult& scan);
void write_scan_csv(std::ostream& out, const ScanResult& scan);

void write_fig1_csv(std::ostream& out, const Fig1Scan& scan);

// Companion gnuplot scripts referencing the emitted data file by name.
std::string fig1_plot_script(const std::string& csv_name);
std::string scan_plot_script(const std::string& csv_name, const std::string& title);

}  // namespace cvsteer

#endif
