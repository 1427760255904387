#include "cvsteer/report_io.hpp"

#include <charconv>
#include <ostream>

#include "cvsteer/version.hpp"
#include "json.hpp"

namespace cvsteer {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

ordered_json meta_json(const ScanMeta& meta) {
  ordered_json m;
  m["schema_version"] = kSchemaVersion;
  m["tool_version"] = kToolVersion;
  m["dims"] = meta.dims;
  m["tail_tolerance"] = meta.tail_tolerance;
  m["bound_tolerance"] = meta.bound_tolerance;
  m["beta_min"] = meta.beta_min;
  m["seed"] = meta.seed;
  ordered_json cfg;
  for (const auto& [k, v] : meta.effective_config) cfg[k] = v;
  m["effective_config"] = std::move(cfg);
  return m;
}

}  // namespace

std::string scan_to_json(const ScanResult& scan) {
  ordered_json j;
  ordered_json axes = ordered_json::array();
  for (size_t i = 0; i < scan.axes.size(); ++i) {
    ordered_json axis;
    axis["name"] = scan.axis_names[i];
    axis["points"] = scan.axes[i];
    axes.push_back(std::move(axis));
  }
  j["axes"] = std::move(axes);

  ordered_json values = ordered_json::array();
  for (const auto& v : scan.values) {
    if (v.has_value())
      values.push_back(*v);
    else
      values.push_back(nullptr);
  }
  j["values"] = std::move(values);

  ordered_json extrema = ordered_json::array();
  for (const auto& e : scan.extrema) {
    ordered_json ex;
    ex["kind"] = e.kind;
    ex["value"] = e.value;
    ordered_json loc;
    for (size_t i = 0; i < e.location.size(); ++i) loc[scan.axis_names[i]] = e.location[i];
    ex["location"] = std::move(loc);
    ex["indices"] = e.indices;
    extrema.push_back(std::move(ex));
  }
  j["extremum"] = std::move(extrema);
  j["meta"] = meta_json(scan.meta);
  return j.dump(2) + "\n";
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
  for (size_t i = 0; i < scan.axis_names.size(); ++i) out << scan.axis_names[i] << ',';
  out << "value\n";
  // Row-major walk matching the values layout.
  std::vector<int64_t> idx(scan.axes.size(), 0);
  for (const auto& v : scan.values) {
    for (size_t a = 0; a < scan.axes.size(); ++a) out << fmt_double(scan.axes[a][idx[a]]) << ',';
    if (v.has_value()) out << fmt_double(*v);
    out << '\n';
    for (int a = static_cast<int>(idx.size()) - 1; a >= 0; --a) {
      if (++idx[a] < static_cast<int64_t>(scan.axes[a].size())) break;
      idx[a] = 0;
    }
  }
}

void write_fig1_csv(std::ostream& out, const Fig1Scan& scan) {
  out << "gamma,even_sup,even_argmax_beta,odd_inf,odd_argmin_beta,in_validity_region\n";
  for (const auto& r : scan.rows) {
    out << fmt_double(r.gamma) << ',' << fmt_double(r.even_sup) << ','
        << fmt_double(r.even_argmax_beta) << ',' << fmt_double(r.odd_inf) << ','
        << fmt_double(r.odd_argmin_beta) << ',' << (r.in_validity_region ? "true" : "false")
        << '\n';
  }
}

std::string fig1_plot_script(const std::string& csv_name) {
  std::string s;
  s += "set datafile separator ','\n";
  s += "set key top right\n";
  s += "set xlabel 'gamma'\n";
  s += "set ylabel 'average certainty'\n";
  s += "set yrange [0:1.05]\n";
  s += "plot '" + csv_name + "' using 1:2 skip 1 with lines title 'even sup', \\\n";
  s += "     '" + csv_name + "' using 1:4 skip 1 with lines dashtype 2 title 'odd inf', \\\n";
  s += "     0.75 with lines linecolor 'gray' notitle, 0.25 with lines linecolor 'gray' notitle\n";
  return s;
}

std::string scan_plot_script(const std::string& csv_name, const std::string& title) {
  std::string s;
  s += "set datafile separator ','\n";
  s += "set xlabel 'alpha'\n";
  s += "set ylabel 'beta'\n";
  s += "set zlabel 'value'\n";
  s += "set title '" + title + "'\n";
  s += "set dgrid3d\n";
  s += "splot '" + csv_name + "' using 1:2:3 skip 1 with lines notitle\n";
  return s;
}

}  // namespace cvsteer
