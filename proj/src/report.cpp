// Copyright 2026 The hardyafd Authors.
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <json.hpp>
#include <set>

#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

namespace hardy {

namespace {

using nlohmann::json;

class CsvFile {
 public:
  explicit CsvFile(const std::string& path)
      : path_(path), fp_(std::fopen(path.c_str(), "wb")) {
    if (!fp_) {
      fail(ErrorCode::Io, "cannot open " + path + ": " + std::strerror(errno));
    }
  }
  ~CsvFile() {
    if (fp_) std::fclose(fp_);
  }
  CsvFile(const CsvFile&) = delete;
  CsvFile& operator=(const CsvFile&) = delete;

  std::FILE* get() { return fp_; }

  void close() {
    const bool bad = std::ferror(fp_) != 0;
    const int rc = std::fclose(fp_);
    fp_ = nullptr;
    if (bad || rc != 0) fail(ErrorCode::Io, "write failed: " + path_);
  }

 private:
  std::string path_;
  std::FILE* fp_;
};

json step_json(const Step& s) {
  json j = {{"n", s.param.n},
            {"a_re", s.param.a.real()},
            {"a_im", s.param.a.imag()},
            {"coeff_re", s.coefficient.real()},
            {"coeff_im", s.coefficient.imag()},
            {"residual_energy", s.residual_energy},
            {"relative_error", s.relative_error}};
  return j;
}

json grid_json(const ParamGrid& g) {
  return {{"radial", g.radial}, {"angular", g.angular}, {"n_max", g.n_max}};
}

std::string table_path(const std::string& dir, const std::string& id,
                       const std::string& table) {
  const std::string name =
      table.empty() ? id + "_table.csv" : id + "_table_" + table + ".csv";
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

std::string decomposition_json(const Decomposition& d) {
  json steps = json::array();
  for (const Step& s : d.steps) {
    json j = step_json(s);
    if (d.method == Method::Unwinding) {
      j["zeros_removed"] = s.zeros_removed;
      j["flagged"] = s.flagged;
    }
    steps.push_back(std::move(j));
  }
  json out = {{"method", method_name(d.method)},
              {"dict", dict_kind_name(d.dict)},
              {"grid", grid_json(d.grid)},
              {"samples", d.signal.size()},
              {"relative_error", d.final_relative_error()},
              {"steps", std::move(steps)}};
  return out.dump(2);
}

std::string nbest_json(const RefineResult& r, const Projection& p,
                       const ParamGrid& grid) {
  json params = json::array();
  for (std::size_t k = 0; k < r.tuple.params.size(); ++k) {
    const ParamPoint& q = r.tuple.params[k];
    params.push_back({{"n", q.n},
                      {"a_re", q.a.real()},
                      {"a_im", q.a.imag()},
                      {"coeff_re", p.coefficients[k].real()},
                      {"coeff_im", p.coefficients[k].imag()}});
  }
  json out = {{"method", "nbest"},
              {"dict", grid.n_max > 0 ? "complete" : "szego"},
              {"grid", grid_json(grid)},
              {"n", r.tuple.params.size()},
              {"cycles_run", r.cycles_run},
              {"cycle_errors", r.cycle_errors},
              {"relative_error", p.relative_error},
              {"params", std::move(params)}};
  return out.dump(2);
}

std::string report_json(const ExperimentReport& report,
                        const std::vector<std::string>& files) {
  json rows = json::array();
  for (const ReportRow& r : report.rows) {
    json j = {{"method", r.method},
              {"dict", r.dict},
              {"iters", r.iters},
              {"cycles", r.cycles},
              {"relative_error", r.relative_error}};
    if (!r.table.empty()) j["table"] = r.table;
    rows.push_back(std::move(j));
  }
  json names = json::array();
  for (const std::string& f : files) {
    names.push_back(std::filesystem::path(f).filename().string());
  }
  json out = {{"id", report.id},
              {"parameters", report.parameters},
              {"metrics", report.metrics},
              {"rows", std::move(rows)},
              {"files", std::move(names)}};
  return out.dump(2);
}

std::vector<std::string> emit_report(const ExperimentReport& report,
                                     const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) fail(ErrorCode::Io, "cannot create " + dir + ": " + ec.message());

  std::vector<std::string> written;
  // Tables in first-appearance order.
  std::vector<std::string> tables;
  std::set<std::string> seen;
  for (const ReportRow& r : report.rows) {
    if (seen.insert(r.table).second) tables.push_back(r.table);
  }
  for (const std::string& t : tables) {
    const std::string path = table_path(dir, report.id, t);
    CsvFile out(path);
    std::fputs("method,dict,iters,cycles,relative_error\n", out.get());
    for (const ReportRow& r : report.rows) {
      if (r.table != t) continue;
      std::fprintf(out.get(), "%s,%s,%d,%d,%.17g\n", r.method.c_str(),
                   r.dict.c_str(), r.iters, r.cycles, r.relative_error);
    }
    out.close();
    written.push_back(path);
  }
  for (const PlotSeries& p : report.plots) {
    const std::string path =
        (std::filesystem::path(dir) / (report.id + "_plot_" + p.name + ".csv"))
            .string();
    CsvFile out(path);
    std::fputs("t,re_f,im_f,re_s,im_s\n", out.get());
    const std::size_t n = p.f.size();
    for (std::size_t j = 0; j < n; ++j) {
      std::fprintf(out.get(), "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                   BoundarySignal::grid_angle(j, n), p.f[j].real(),
                   p.f[j].imag(), p.s[j].real(), p.s[j].imag());
    }
    out.close();
    written.push_back(path);
  }
  const std::string json_path =
      (std::filesystem::path(dir) / (report.id + "_report.json")).string();
  {
    CsvFile out(json_path);
    const std::string body = report_json(report, written) + "\n";
    std::fwrite(body.data(), 1, body.size(), out.get());
    out.close();
  }
  written.push_back(json_path);
  return written;
}

}  // namespace hardy
