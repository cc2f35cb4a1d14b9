#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "solsta/analysis.hpp"
#include "solsta/gpe.hpp"
#include "solsta/sta.hpp"
#include "solsta/trajectory.hpp"
#include "solsta/variational.hpp"

namespace solsta {

std::string sha256_hex(const std::string& bytes);

/// Writes files under one output directory and keeps the list for the
/// manifest. Files written through a writer whose run was never committed
/// are removed on destruction.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir);
  ~ArtifactWriter();
  ArtifactWriter(const ArtifactWriter&) = delete;
  ArtifactWriter& operator=(const ArtifactWriter&) = delete;

  /// Writes text to dir/name and records its hash. Returns the full path.
  std::filesystem::path write(const std::string& name, const std::string& text);

  /// Writes manifest.json (files in write order plus a summary object) and
  /// keeps the outputs.
  void commit(const std::string& scenario, const std::string& summary_json);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  struct Entry {
    std::string name;
    std::string sha256;
    std::size_t bytes = 0;
  };
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::filesystem::path dir_;
  bool created_dir_ = false;
  bool committed_ = false;
  std::vector<Entry> entries_;
};

/// Full-precision decimal text (17 significant digits).
std::string fmt17(double v);

/// Header t,a,adot,addot,b,c,zeta,g. Every stride-th row plus the last one.
std::string trajectory_csv(const FullTrajectory& traj, const PhysicalConfig& config, std::size_t stride = 1);
/// Same schema for a width-only trajectory; b = adot / (2a), c = zeta = 0.
std::string trajectory_csv(const WidthTrajectory& traj, const ProtocolCurve& g, std::size_t stride = 1);

/// Header t,g,a_design,adot_design,addot_design.
std::string protocol_csv(const DesignResult& design, std::size_t stride = 1);
std::string protocol_sidecar_json(const DesignResult& design, const SwitchingParams& p, ReferenceMethod method);

/// Header x,re,im,density.
std::string snapshot_csv(const WaveFunction& psi);
/// Name like prefix_t00010.000000.csv.
std::string snapshot_name(const std::string& prefix, double t);

/// Header t,norm,width,peak_density[,fidelity_running].
std::string timeseries_csv(const std::vector<Observation>& obs);

/// Header t,x,density (long format).
std::string evolution_csv(const EvolutionTable& table);

/// Header A_s,F_sta,F_adiabatic,sta_feasible.
std::string sweep_csv(const SweepResult& sweep);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(const std::string& name) const;
  bool has(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace solsta
