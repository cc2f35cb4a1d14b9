#include "solsta/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace solsta {

namespace fs = std::filesystem;
using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

ArtifactWriter::ArtifactWriter(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  if (!fs::exists(dir_)) {
    fs::create_directories(dir_, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir_.string() + "': " + ec.message());
    created_dir_ = true;
  } else if (!fs::is_directory(dir_)) {
    throw ConfigError("output path '" + dir_.string() + "' is not a directory");
  }
}

ArtifactWriter::~ArtifactWriter() {
  if (committed_) return;
  std::error_code ec;
  for (const auto& e : entries_) fs::remove(dir_ / e.name, ec);
  fs::remove(dir_ / "manifest.json", ec);
  if (created_dir_ && fs::is_empty(dir_, ec)) fs::remove(dir_, ec);
}

fs::path ArtifactWriter::write(const std::string& name, const std::string& text) {
  const fs::path path = dir_ / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
  out.close();
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
  entries_.push_back({name, sha256_hex(text), text.size()});
  return path;
}

void ArtifactWriter::commit(const std::string& scenario, const std::string& summary_json) {
  json manifest;
  manifest["scenario"] = scenario;
  manifest["files"] = json::array();
  for (const auto& e : entries_) manifest["files"].push_back({{"path", e.name}, {"sha256", e.sha256}, {"bytes", e.bytes}});
  manifest["summary"] = json::parse(summary_json);
  const fs::path path = dir_ / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << manifest.dump(2) << '\n';
  if (!out) throw ConfigError("write failed for '" + path.string() + "'");
  committed_ = true;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

template <class RowFn>
std::string table(const std::string& header, std::size_t n, std::size_t stride, RowFn&& row) {
  std::string out = header + "\n";
  stride = std::max<std::size_t>(1, stride);
  for (std::size_t i = 0; i < n; ++i) {
    if (i % stride != 0 && i + 1 != n) continue;
    row(out, i);
    out += '\n';
  }
  return out;
}

void cols(std::string& out, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out += ',';
    out += fmt17(v);
    first = false;
  }
}

}  // namespace

std::string trajectory_csv(const FullTrajectory& traj, const PhysicalConfig& config, std::size_t stride) {
  return table("t,a,adot,addot,b,c,zeta,g", traj.t.size(), stride, [&](std::string& out, std::size_t i) {
    const auto& s = traj.states[i];
    const double adot = 2.0 * s.a * s.b;
    cols(out, {traj.t[i], s.a, adot, width_acceleration(s.a, traj.g[i], config), s.b, s.c, s.zeta, traj.g[i]});
  });
}

std::string trajectory_csv(const WidthTrajectory& traj, const ProtocolCurve& g, std::size_t stride) {
  return table("t,a,adot,addot,b,c,zeta,g", traj.size(), stride, [&](std::string& out, std::size_t i) {
    cols(out, {traj.t[i], traj.a[i], traj.adot[i], traj.addot[i], traj.adot[i] / (2.0 * traj.a[i]), 0.0, 0.0, g(traj.t[i])});
  });
}

std::string protocol_csv(const DesignResult& d, std::size_t stride) {
  const auto gv = d.protocol.values();
  return table("t,g,a_design,adot_design,addot_design", gv.size(), stride, [&](std::string& out, std::size_t i) {
    cols(out, {d.trajectory.t[i], gv[i], d.trajectory.a[i], d.trajectory.adot[i], d.trajectory.addot[i]});
  });
}

std::string protocol_sidecar_json(const DesignResult& d, const SwitchingParams& p, ReferenceMethod method) {
  json j;
  j["switching"] = {{"g_base", p.g_base}, {"a_s_amp", p.a_s_amp}, {"s_rate", p.s_rate}, {"t_f", p.t_f}};
  j["method"] = to_string(method);
  j["min_g"] = d.min_g;
  j["max_g"] = d.max_g;
  j["sign_change"] = d.sign_change;
  j["boundary_conditions"] = {{"a0", d.bc.a0}, {"adot0", d.bc.adot0}, {"addot0", d.bc.addot0},
                              {"af", d.bc.af}, {"adotf", d.bc.adotf}, {"addotf", d.bc.addotf},
                              {"source", to_string(d.bc.source)}};
  if (d.trajectory.quintic) j["quintic_coefficients"] = d.trajectory.quintic->coeffs();
  return j.dump(2) + "\n";
}

std::string snapshot_csv(const WaveFunction& psi) {
  return table("x,re,im,density", psi.size(), 1, [&](std::string& out, std::size_t j) {
    const auto z = psi.values[j];
    cols(out, {psi.grid.x(j), z.real(), z.imag(), std::norm(z)});
  });
}

std::string snapshot_name(const std::string& prefix, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_t%012.6f.csv", prefix.c_str(), t);
  return buf;
}

std::string timeseries_csv(const std::vector<Observation>& obs) {
  const bool with_f = !obs.empty() && obs.front().fidelity.has_value();
  const std::string header = with_f ? "t,norm,width,peak_density,fidelity_running" : "t,norm,width,peak_density";
  return table(header, obs.size(), 1, [&](std::string& out, std::size_t i) {
    const auto& o = obs[i];
    cols(out, {o.t, o.norm, o.width, o.peak_density});
    if (with_f) out += "," + fmt17(o.fidelity.value_or(std::nan("")));
  });
}

std::string evolution_csv(const EvolutionTable& tab) {
  std::string out = "t,x,density\n";
  for (std::size_t k = 0; k < tab.t.size(); ++k)
    for (std::size_t j = 0; j < tab.x.size(); ++j) {
      cols(out, {tab.t[k], tab.x[j], tab.density[k][j]});
      out += '\n';
    }
  return out;
}

std::string sweep_csv(const SweepResult& sweep) {
  return table("A_s,F_sta,F_adiabatic,sta_feasible", sweep.rows.size(), 1, [&](std::string& out, std::size_t i) {
    const auto& r = sweep.rows[i];
    cols(out, {r.a_s_amp, r.fidelity_sta, r.fidelity_adiabatic});
    out += r.sta_feasible ? ",1" : ",0";
  });
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw ConfigError("csv: missing column '" + name + "'");
  return columns[static_cast<std::size_t>(it - header.begin())];
}

bool CsvTable::has(const std::string& name) const {
  return std::find(header.begin(), header.end(), name) != header.end();
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw ConfigError("csv '" + path.string() + "': empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  t.columns.resize(t.header.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::size_t col = 0;
    std::size_t start = 0;
    while (start <= line.size()) {
      const std::size_t end = std::min(line.find(',', start), line.size());
      if (col >= t.header.size()) throw ConfigError("csv '" + path.string() + "': too many fields on row " + std::to_string(row));
      double v = 0.0;
      const auto res = std::from_chars(line.data() + start, line.data() + end, v);
      if (res.ec != std::errc{} || res.ptr != line.data() + end)
        throw ConfigError("csv '" + path.string() + "': bad number on row " + std::to_string(row));
      t.columns[col++].push_back(v);
      start = end + 1;
    }
    if (col != t.header.size()) throw ConfigError("csv '" + path.string() + "': short row " + std::to_string(row));
  }
  return t;
}

}  // namespace solsta
